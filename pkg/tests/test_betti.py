from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from conftest import ideals
from monoreg.betti import (
    betti_table,
    has_linear_resolution,
    lcm_lattice,
    lcm_lattice_betti,
    lcm_lattice_elements,
    multigraded_betti,
    regularity,
    regularity_quotient,
    upper_koszul,
)
from monoreg.homology import reduced_homology_dims
from monoreg.ideal import (
    ResourceLimitError,
    UnitIdealError,
    ZeroIdealError,
    minimalize,
    mono_lcm,
    unit_ideal,
    zero_ideal,
)


def taylor_numerator(I):
    """sum over nonempty S of (-1)^(|S|+1) x^lcm(S), as a Counter."""
    out = Counter()
    gens = I.generators
    for r in range(1, len(gens) + 1):
        for S in combinations(gens, r):
            a = S[0]
            for g in S[1:]:
                a = mono_lcm(a, g)
            out[a] += (-1) ** (r + 1)
    return {k: v for k, v in out.items() if v}


def alternating(table):
    out = Counter()
    for (i, a), v in table.multigraded.items():
        out[a] += (-1) ** i * v
    return {k: v for k, v in out.items() if v}


def test_complete_intersection():
    t = multigraded_betti(minimalize([(2, 0), (0, 2)]))
    assert t.graded == {(0, 2): 2, (1, 4): 1}
    assert t.regularity() == 3 and t.projective_dimension() == 1


def test_koszul_complex_of_variables():
    t = betti_table(minimalize([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert t.graded == {(0, 1): 3, (1, 2): 3, (2, 3): 1}
    assert t.rows() == [(1, [3, 3, 1])]


def test_known_regularities():
    assert regularity(minimalize([(1, 1, 0), (1, 0, 1), (0, 1, 1)])) == 2
    assert regularity(minimalize([(3, 0, 0), (0, 3, 0), (0, 0, 3)])) == 7
    assert regularity_quotient(minimalize([(2, 0), (0, 2)])) == 2
    # (x1^2, x2^2) is not linear; (x1, x2)^2 is
    assert not has_linear_resolution(minimalize([(2, 0), (0, 2)]))
    assert has_linear_resolution(minimalize([(2, 0), (1, 1), (0, 2)]))


def test_errors():
    with pytest.raises(ZeroIdealError):
        regularity(zero_ideal(2))
    with pytest.raises(UnitIdealError):
        regularity(unit_ideal(2))
    with pytest.raises(ValueError):
        regularity(minimalize([(1, 0)]), p=4)
    with pytest.raises(ValueError):
        has_linear_resolution(minimalize([(2, 0), (0, 1)]))
    many = minimalize([(i, 21 - i) for i in range(22)])
    with pytest.raises(ResourceLimitError):
        regularity(many)
    assert regularity(many, cap=30) == 21


def test_upper_koszul_of_generator_is_a_point():
    I = minimalize([(2, 1)])
    C = upper_koszul(I, (2, 1))
    assert reduced_homology_dims(C) == (1,)


@given(ideals(max_gens=6))
def test_lcm_lattice_constructions_agree(I):
    assert lcm_lattice_elements(I) == lcm_lattice(I)


@given(ideals(max_gens=6), st.sampled_from([2, 3, 0]))
def test_engine_matches_lcm_oracle(I, p):
    assert multigraded_betti(I, p).multigraded == lcm_lattice_betti(I, p).multigraded


@given(ideals(max_gens=7))
def test_alternating_sums_match_taylor(I):
    assert alternating(multigraded_betti(I)) == taylor_numerator(I)


@given(ideals(max_gens=6))
def test_betti_numbers_live_on_lcm_lattice(I):
    lattice = set(lcm_lattice(I))
    t = multigraded_betti(I)
    assert {a for _, a in t.multigraded} <= lattice
    assert sum(v for (i, _), v in t.multigraded.items() if i == 0) == len(I)


def test_format_has_dots_for_zero():
    text = betti_table(minimalize([(2, 0), (0, 2)])).format()
    assert "." in text and "2" in text


def test_upper_koszul_examples():
    two_points = upper_koszul(minimalize([(1, 0), (0, 1)]), (1, 1))
    assert two_points.face_sets() == [(), (0,), (1,)]
    assert upper_koszul(minimalize([(2,)]), (2,)).face_sets() == [()]
    full = upper_koszul(unit_ideal(3), (1, 0, 2))
    assert full.face_sets() == [(), (0,), (1,), (0, 1)]
