"""Small worked examples for each operation, checked one by one."""

import pytest

from monoreg.betti import has_linear_resolution, regularity
from monoreg.harness import enumerate_equigenerated
from monoreg.ideal import (
    colon,
    ideal_sum,
    intersect,
    is_equigenerated,
    minimalize,
    power,
    product,
    unit_ideal,
)
from monoreg.layers import (
    check_condition_double_star,
    check_condition_star,
    check_two_variable_criterion,
    constructive_lq_order,
    layer_decompose,
)
from monoreg.newton import (
    delta,
    dim_quotient,
    hull_membership,
    integral_closure,
    max_gen_degree,
    power_membership,
)
from monoreg.quotients import (
    betti_splitting_verify,
    induced_subideal,
    linear_quotients_order,
    polarize,
    split_by_variable,
    validate_certificate,
)
from monoreg.textio import parse_ideal


def I2(text):
    return parse_ideal(text, 2)


def I3(text):
    return parse_ideal(text, 3)


def test_minimalize_examples():
    assert minimalize([(2, 0), (2, 1)]) == I2("x1^2")
    assert minimalize([(2, 0), (1, 1), (0, 2)]).generators == ((2, 0), (1, 1), (0, 2))
    assert minimalize([(1, 0), (1, 0)]) == I2("x1")


def test_arithmetic_examples():
    assert power(I2("x1, x2"), 2) == I2("x1^2, x1*x2, x2^2")
    assert product(I2("x1"), I2("x2")) == I2("x1*x2")
    assert ideal_sum(I2("x1^2"), I2("x1")) == I2("x1")


def test_colon_examples():
    assert colon(I2("x1^2, x2^2"), (1, 1)) == I2("x1, x2")
    assert colon(I2("x1^2"), (2, 0)).is_unit
    assert colon(I2("x1^2, x1*x2"), (0, 2)) == I2("x1")


def test_intersect_examples():
    assert intersect(I2("x1"), I2("x2")) == I2("x1*x2")
    assert intersect(I2("x1^2, x1*x2"), I2("x2^2")) == I2("x1*x2^2")
    I = I2("x1^3, x1*x2")
    assert intersect(I, unit_ideal(2)) == I


def test_equigenerated_examples():
    assert is_equigenerated(I2("x1^2, x1*x2, x2^2")) == 2
    assert is_equigenerated(I2("x1, x2^2")) is None
    assert is_equigenerated(I2("x1^3*x2")) == 4


def test_hull_and_power_examples():
    assert hull_membership((1, 1), I2("x1^2, x2^2"))
    assert not hull_membership((1, 0), I2("x1^2, x2^2"))
    assert hull_membership((1, 1, 1), I3("x1^3, x2^3, x3^3"))
    assert power_membership((1, 1), I2("x1^2, x2^2"), k_max=2)
    I = I3("x1^2*x3, x2^4, x1*x2*x3^2")
    assert all(power_membership(g, I, k_max=1) for g in I.generators)
    assert not power_membership((1, 0), I2("x1^2, x2^2"), k_max=6)


def test_closure_examples():
    assert integral_closure(I2("x1^2, x2^2")) == I2("x1^2, x1*x2, x2^2")
    assert integral_closure(I2("x1^5")) == I2("x1^5")
    assert integral_closure(I3("x1^3, x2^3, x3^3")).contains((1, 1, 1))


def test_delta_and_degree_examples():
    for I in enumerate_equigenerated(3, 3, (1, 4)):
        assert delta(I) == 3
    assert max_gen_degree(I2("x1^2, x2^2")) == 2
    assert max_gen_degree(integral_closure(I2("x1^2, x2^2"))) == 2
    assert max_gen_degree(I2("x1^3, x2")) == 3


def test_dim_examples():
    assert dim_quotient(I2("x1, x2")) == 0
    assert dim_quotient(I2("x1")) == 1
    assert dim_quotient(I3("x1*x2")) == 2


def test_linear_resolution_examples():
    assert has_linear_resolution(power(I2("x1, x2"), 2))
    assert not has_linear_resolution(I2("x1^2, x2^2"))
    assert has_linear_resolution(I3("x1*x2^2*x3"))


def test_polarization_examples():
    P, _ = polarize(I2("x1^2*x2"))
    assert P.generators == ((1, 1, 1),)
    P, mapping = polarize(I2("x1^2, x1*x2, x2^2"))
    assert mapping == ((1, 1), (1, 2), (2, 1), (2, 2))
    assert P == minimalize([(1, 1, 0, 0), (1, 0, 1, 0), (0, 0, 1, 1)])
    S = I3("x1*x2, x2*x3")
    assert polarize(S)[0] == S


def test_lq_examples():
    cert = linear_quotients_order(power(I2("x1, x2"), 2))
    assert cert.ordering == ((2, 0), (1, 1), (0, 2)) and cert.witnesses == ((0,), (0,))
    assert linear_quotients_order(I2("x1^2, x2^2")) is None
    cert = linear_quotients_order(I3("x1*x2^2"))
    assert cert.ordering == ((1, 2, 0),) and cert.witnesses == ()


def test_layer_examples():
    D = layer_decompose(I3("x1^2, x1*x2, x2^2, x1*x3"))
    assert [(L.c, L.inner) for L in D.layers] == [(0, I2("x1^2, x1*x2, x2^2")), (1, I2("x1"))]
    D = layer_decompose(I3("x1^3, x2^2*x3"))
    assert [(L.c, L.inner) for L in D.layers] == [(0, I2("x1^3")), (1, I2("x2^2"))]
    assert layer_decompose(I3("x1^2, x2^2")).t == 1


def test_two_variable_criterion_examples():
    assert check_two_variable_criterion(I2("x1^2, x1*x2, x2^2"))
    assert not check_two_variable_criterion(I2("x1^2, x2^2"))
    assert check_two_variable_criterion(I2("x1^5"))


def test_condition_examples():
    good = I3("x1^2, x1*x2, x2^2, x1*x3")
    star = check_condition_star(layer_decompose(good))
    assert star.holds and all(star.clauses.values()) and regularity(good) == 2
    bad = I3("x1^3, x2^2*x3")
    star = check_condition_star(layer_decompose(bad))
    assert not star.holds and not star.clauses["3*"]
    assert regularity(bad) == 5
    gap = I3("x1^2, x3^2")
    assert not check_condition_star(layer_decompose(gap)).clauses["1*"]
    dstar = check_condition_double_star(bad)
    assert not dstar.holds and not dstar.clauses["2**"]
    assert check_condition_double_star(good).holds


def test_constructive_examples():
    I = I3("x1^2, x1*x2, x2^2, x1*x3")
    assert validate_certificate(I, constructive_lq_order(I))
    single = I3("x1^3, x1^2*x2, x1*x2^2, x2^3")
    cert = constructive_lq_order(single)
    assert [u[0] for u in cert.ordering] == [0, 1, 2, 3]
    assert all(w == (1,) for w in cert.witnesses)


def test_splitting_examples():
    I = I2("x1^2, x1*x2, x2^2")
    J, K = split_by_variable(I, 0)
    assert (J, K) == (I2("x1^2, x1*x2"), I2("x2^2"))
    assert betti_splitting_verify(I, J, K)
    I = I3("x1^2, x1*x2, x3^3")
    J, K = split_by_variable(I, 0)
    assert betti_splitting_verify(I, J, K)


def test_induced_examples():
    P = minimalize([(1, 1, 0, 0), (1, 0, 1, 0), (0, 0, 1, 1)])
    assert induced_subideal(P, [0, 1, 2]) == minimalize([(1, 1, 0), (1, 0, 1)])
    assert induced_subideal(P, range(4)) == P
    assert induced_subideal(P, []).is_zero


@pytest.mark.parametrize("n,d,m_range,count", [(2, 2, (1, 3), 7), (3, 1, (1, 3), 7), (3, 2, None, 63)])
def test_enumeration_examples(n, d, m_range, count):
    assert len(list(enumerate_equigenerated(n, d, m_range))) == count


def test_closure_of_closed_ideal_is_itself():
    I = I2("x1^2, x1*x2, x2^2")
    assert integral_closure(I) == I
    assert regularity(integral_closure(I)) <= regularity(I)
