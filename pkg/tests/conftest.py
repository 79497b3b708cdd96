from hypothesis import settings, strategies as st

from linksurgery.braid import BraidWord
from linksurgery.laurent import LaurentPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def t(nvars=1, i=0, power=1):
    return LaurentPoly.var(nvars, i, power)


@st.composite
def laurent_polys(draw, nvars=None, max_terms=4, exp_range=3, coeff_range=5, nonzero=False):
    n = nvars if nvars is not None else draw(st.integers(1, 3))
    exps = st.tuples(*[st.integers(-exp_range, exp_range)] * n)
    coeffs = st.integers(-coeff_range, coeff_range).filter(bool)
    terms = draw(st.dictionaries(exps, coeffs, min_size=1 if nonzero else 0, max_size=max_terms))
    return LaurentPoly(n, terms)


@st.composite
def braid_words(draw, min_strands=1, max_strands=4, max_len=10):
    k = draw(st.integers(min_strands, max_strands))
    if k == 1:
        return BraidWord(1)
    letter = st.integers(1, k - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return BraidWord(k, tuple(draw(st.lists(letter, max_size=max_len))))


# -- acceptance reporting -------------------------------------------------------

_acceptance: list = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
