import pytest
from hypothesis import strategies as st

from topcoh.groebner import Ideal
from topcoh.parser import parse_ideal, parse_polynomial
from topcoh.ring import Polynomial, Ring


@pytest.fixture
def R2():
    return Ring(("x", "y"))


@pytest.fixture
def R3():
    return Ring(("x", "y", "z"))


def P(text, ring):
    return parse_polynomial(text, ring)


def I(ring, *texts):
    return parse_ideal(texts, ring)


def polynomials(ring, max_exp=3, max_terms=4, coeffs=st.integers(-4, 4)):
    exps = st.tuples(*[st.integers(0, max_exp)] * ring.n)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: Polynomial(ring, d))


def monomial_lists(n, max_exp=4, max_gens=6, min_gens=1):
    def to_exp(indices):
        e = [0] * n
        for i in indices:
            e[i] += 1
        return tuple(e)

    exps = st.lists(st.integers(0, n - 1), min_size=1, max_size=max_exp).map(to_exp)
    return st.lists(exps, min_size=min_gens, max_size=max_gens)


def monomial_ideal(ring, exps):
    return Ideal.from_monomials(ring, exps)


# -- acceptance reporting --------------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    number, title = mark.args
    previous = _CRITERIA.get(number, (title, True))[1]
    _CRITERIA[number] = (title, previous and not rep.failed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}")
