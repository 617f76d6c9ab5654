"""
Layers along x3
===============

An equigenerated ideal in three variables is a sum of layers
J_i * x3^{c_i}, each J_i a two-variable ideal.  Combinatorial conditions
on the layers decide whether reg(I) = d, and a linear quotients order can
be built layer by layer.
"""

from monoreg import parse_ideal
from monoreg.betti import regularity
from monoreg.layers import (
    check_condition_double_star,
    check_condition_star,
    constructive_lq_order,
    layer_decompose,
)

I = parse_ideal("x1^2, x1*x2, x2^2, x1*x3, x2*x3", 3)
D = layer_decompose(I)
for layer in D.layers:
    print(f"c = {layer.c}: (alpha, beta) pairs {layer.pairs}")

print("(*):")
print(check_condition_star(D).format())
print("(**):")
print(check_condition_double_star(I).format())
print("reg =", regularity(I))
print(constructive_lq_order(I).format())

# x1^2*x3 and x2^2*x3 leave a gap in the upper layer; the layer below
# shares neither the x1 degree 1 nor the x2 degree 2 needed to cover it.
bad = parse_ideal("x1^3, x1^2*x3, x2^2*x3", 3)
report = check_condition_double_star(bad)
print(report.format())
print("reg =", regularity(bad), "(degree 3)")
