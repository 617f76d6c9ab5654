import sys

from hypothesis import settings, strategies as st

from monoreg.ideal import box_points, minimalize

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def ideals(draw, n=None, max_gens=5, max_exp=4, allow_unit=False):
    """Nonzero monomial ideals in n (default 1..3) variables."""
    n = draw(st.integers(1, 3)) if n is None else n
    lo = 0 if allow_unit else 1
    gen = st.tuples(*[st.integers(0, max_exp)] * n).filter(lambda g: sum(g) >= lo)
    gens = draw(st.lists(gen, min_size=1, max_size=max_gens))
    return minimalize(gens, n)


def members_in_box(I, upper):
    """Brute-force membership of every box point (the oracle for ideal ops)."""
    return {a for a in box_points(upper) if any(all(g <= x for g, x in zip(gen, a)) for gen in I.generators)}


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
