"""
Linear quotients, polarization and splittings
=============================================

An ordering u1, ..., um of G(I) has linear quotients when every colon
(u1, ..., u_{i-1}) : u_i is generated by variables.  For equigenerated
ideals this is the same as a linear resolution.
"""

from monoreg import parse_ideal
from monoreg.betti import has_linear_resolution, multigraded_betti, regularity
from monoreg.quotients import (
    betti_splitting_report,
    induced_subideal,
    linear_quotients_order,
    polarize,
    split_by_variable,
    validate_certificate,
)

I = parse_ideal("x1^2, x1*x2, x2^2, x1*x3", 3)
cert = linear_quotients_order(I)
print(cert.format())
print("certificate re-validates:", validate_certificate(I, cert))
print("linear resolution:", has_linear_resolution(I))

# A gap in the x1 degrees leaves no ordering at all.
print("(x1^2, x2^2):", linear_quotients_order(parse_ideal("x1^2, x2^2", 2)))

# Polarization gives a squarefree ideal with the same graded Betti numbers.
P, names = polarize(parse_ideal("x1^2*x2, x2^3", 2))
print("polarized:", P, " variables:", names)
print("same Betti numbers:",
      multigraded_betti(P).graded == multigraded_betti(parse_ideal("x1^2*x2, x2^3", 2)).graded)

# Restricting to a set of variables never raises regularity.
print("reg(P) =", regularity(P), " reg on {x1, x2, x3} =", regularity(induced_subideal(P, [0, 1, 2])))

# Splitting off the generators divisible by x1.
J, K = split_by_variable(I, 0)
print("J =", J, " K =", K, " identity holds:", betti_splitting_report(I, J, K).holds)
