"""
Integral closures from the Newton polyhedron
============================================

x^a is integral over I exactly when a lies in conv(G(I)) + R^n_+.  Every
minimal generator of the closure sits in the box below the componentwise
maximum of G(I), so the closure is found by scanning that box with an
exact LP.
"""

from monoreg import parse_ideal
from monoreg.betti import regularity
from monoreg.newton import delta, dim_quotient, integral_closure, power_membership, vertices

I = parse_ideal("x1^2, x2^2", 2)
print("closure of", I, "is", integral_closure(I))

# x1*x2 is integral: (x1 x2)^2 = x1^2 * x2^2 lies in I^2.
print("x1*x2 integral?", power_membership((1, 1), I))

# Newton vertices and delta, the largest vertex degree.
K = parse_ideal("x1^5, x1^3*x2, x1*x2^3, x2^6", 2)
print("vertices:", vertices(K).vertices, " delta =", delta(K))

# Regularity bounds for the closure: delta <= reg <= delta + dim S/I.
Kbar = integral_closure(K)
print("closure:", Kbar)
print(f"{delta(K)} <= reg(closure) = {regularity(Kbar)} <= {delta(K) + dim_quotient(K)}")

# Closing up never raises regularity here.
for text in ["x1^3, x2^3, x3^3", "x1^2*x2, x2^2*x3, x1*x3^2", "x1^4, x1*x2^3, x2^2*x3^2"]:
    J = parse_ideal(text, 3)
    print(f"reg({J}) = {regularity(J)},  reg(closure) = {regularity(integral_closure(J))}")
