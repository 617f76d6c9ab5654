"""
Monomial ideals as exponent vectors
===================================

Ideals are stored by their minimal generators, sorted by degree and then
lexicographically with x1 > x2 > x3.  Text goes in and out through a
small grammar: ``x1^2*x3, x2``.
"""

from monoreg import colon, intersect, minimalize, parse_ideal, format_ideal

# Redundant generators disappear on construction.
I = parse_ideal("x1^2, x1^2*x2, x2^3, x1*x2", 2)
print("I      =", format_ideal(I))
print("gens   =", I.generators)

# Sums, products and powers use the usual operators.
J = parse_ideal("x1, x2^2", 2)
print("I + J  =", I + J)
print("I * J  =", I * J)
print("J^3    =", J ** 3)

# Intersections are generated by pairwise lcms, colons by quotients.
print("I cap J =", intersect(I, J))
print("I : x1  =", colon(I, (1, 0)))

# The ambient ring is explicit, so (x1, x2) in three variables differs
# from (x1, x2) in two.
print(parse_ideal("x1, x2", 3), "lives in", parse_ideal("x1, x2", 3).ambient_n, "variables")

# Exponent vectors can be used directly.
print(minimalize([(3, 0, 0), (1, 1, 1), (0, 0, 2)]))
