import random
from itertools import product as cartesian

import pytest
from hypothesis import given, settings

from topcoh import cd
from topcoh.errors import HypothesisNotMet, InvalidArgument, TheoremViolation, Unsupported
from topcoh.groebner import Ideal, krull_dim, quotient
from topcoh.primdec import monomial_generators
from topcoh.ring import Ring

from conftest import I, monomial_lists

R1 = Ring(("x",))
R = Ring(("x", "y"))
R3 = Ring(("x", "y", "z"))


def setup(J, a=None):
    M = cd.CyclicModule(J)
    return M, (a if a is not None else Ideal.maximal(J.ring)), cd.decompose(J)


def test_top_prime_test_examples():
    assert cd.top_prime_test(I(R3, "x", "z"), I(R3, "y"), 2)
    assert not cd.top_prime_test(I(R3, "x", "z"), I(R3, "x"), 2)
    m = Ideal.maximal(R3)
    for p in (I(R3, "x"), I(R3, "y", "z"), Ideal.zero(R3)):
        assert cd.top_prime_test(m, p, krull_dim(p))
    with pytest.raises(Unsupported):
        cd.top_prime_test(I(R3, "x - 1"), I(R3, "y"), 2)


def test_attached_examples():
    M, a, dec = setup(I(R3, "x*y"), I(R3, "x", "z"))
    assert cd.attached_top(M, a, dec) == [I(R3, "y")]
    assert cd.h_top_nonzero(M, a, dec)
    M, a, dec = setup(I(R, "x^2", "x*y"))
    assert cd.attached_top(M, a, dec) == [I(R, "x")]
    M, a, dec = setup(Ideal.zero(R1), I(R1, "x"))
    assert cd.attached_top(M, a, dec) == [Ideal.zero(R1)]
    M, a, dec = setup(I(R, "x"), I(R, "x"))
    assert not cd.h_top_nonzero(M, a, dec)


@given(monomial_lists(3, max_exp=3, max_gens=4))
@settings(max_examples=40, deadline=None)
def test_monomial_ideal_with_maximal_a_is_nonvanishing(gens):
    M, a, dec = setup(Ideal.from_monomials(R3, gens))
    assert cd.h_top_nonzero(M, a, dec)


def test_cd_table_examples():
    M, a, dec = setup(I(R, "x^2", "x*y"))
    table = cd.cd_table(M, a, dec)
    assert dict(zip(map(str, dec.primes()), table.values)) == {"(x)": 1, "(x, y)": 0}
    M, a, dec = setup(I(R3, "x*y"), I(R3, "x", "z"))
    table = cd.cd_table(M, a, dec, oracle="topsplit")
    assert dict(zip(map(str, dec.primes()), table.values)) == {"(x)": False, "(y)": True}
    M, a, dec = setup(I(R3, "x", "y"))
    assert cd.cd_table(M, a, dec).values == (1,)


def test_dim_oracle_needs_maximal_a():
    M, _, dec = setup(I(R, "x*y"))
    with pytest.raises(InvalidArgument):
        cd.cd_table(M, I(R, "x"), dec)


def test_user_table_checks():
    M, _, dec = setup(I(R3, "x*y"))
    a = I(R3, "x", "z")
    # primes (x), (y); only (y) is top
    table = cd.cd_table(M, a, dec, oracle="user", values=[1, 2])
    assert table.c == 2
    for bad in ([2, 2], [1, 1], [3, 2], [-1, 2], [1], [1.0, 2]):
        with pytest.raises(InvalidArgument):
            cd.cd_table(M, a, dec, oracle="user", values=bad)
    M, a, dec = setup(I(R, "x^2", "x*y"))
    with pytest.raises(InvalidArgument):
        # (x) ⊆ (x, y) forces cd(R/(x, y)) <= cd(R/(x))
        cd.cd_table(M, I(R, "y"), dec, oracle="user", values=[0, 1])


def test_filtration_examples():
    M, a, dec = setup(I(R, "x^2", "x*y"))
    F = cd.filtration(M, a, cd.cd_table(M, a, dec))
    assert F.levels == (I(R, "x"), Ideal.unit(R))
    assert F.saturation_forms == F.intersection_forms
    assert F.a_products == (I(R, "x", "y"), I(R, "x^2", "x*y"))

    p = I(R3, "x", "y")
    M, a, dec = setup(p)
    F = cd.filtration(M, a, cd.cd_table(M, a, dec))
    assert F.levels == (p, Ideal.unit(R3))

    M, a, dec = setup(I(R3, "x*y"))
    F = cd.filtration(M, a, cd.cd_table(M, a, dec))
    assert F.levels == (I(R3, "x*y"), I(R3, "x*y"), Ideal.unit(R3))
    assert F.a_products[0].is_unit() and F.a_products[1].is_unit()


def test_filtration_needs_exact_table():
    M, a, dec = setup(I(R, "x*y"))
    with pytest.raises(InvalidArgument):
        cd.filtration(M, a, cd.cd_table(M, a, dec, oracle="topsplit"))


def test_filtration_reports_disagreement(monkeypatch):
    M, a, dec = setup(I(R, "x^2", "x*y"))
    table = cd.cd_table(M, a, dec)
    monkeypatch.setattr(cd, "intersect_all", lambda ideals, ring: Ideal.unit(ring))
    with pytest.raises(TheoremViolation):
        cd.filtration(M, a, table)


def test_t_submodule_examples():
    M, a, dec = setup(I(R, "x^2", "x*y"))
    assert cd.t_submodule(M, a, cd.cd_table(M, a, dec)) == I(R, "x")
    M, a, dec = setup(I(R3, "x*y"), I(R3, "x", "z"))
    assert cd.t_submodule(M, a, cd.cd_table(M, a, dec, oracle="topsplit")) == I(R3, "y")
    M, a, dec = setup(I(R3, "x", "z"))
    assert cd.t_submodule(M, a, cd.cd_table(M, a, dec)) == I(R3, "x", "z")
    M, a, dec = setup(I(R, "x"), I(R, "x"))
    with pytest.raises(HypothesisNotMet):
        cd.t_submodule(M, a, cd.cd_table(M, a, dec, oracle="topsplit"))


def test_ann_top_examples():
    M, a, dec = setup(I(R, "x^2", "x*y"))
    rep = cd.ann_top(M, a, dec)
    assert rep.nonvanishing and rep.d == 1
    assert rep.annihilator == I(R, "x") and rep.radical_ann == I(R, "x")
    assert rep.supp_bound == (I(R, "x", "y"),)

    M, a, dec = setup(I(R3, "x*y"), I(R3, "x", "z"))
    rep = cd.ann_top(M, a, dec)
    assert rep.attached == (I(R3, "y"),) and rep.annihilator == I(R3, "y")
    assert rep.supp_bound == (I(R3, "x", "y", "z"),)

    M, a, dec = setup(Ideal.zero(R1), I(R1, "x"))
    assert cd.ann_top(M, a, dec).annihilator.is_zero()

    M, a, dec = setup(I(R, "x"), I(R, "x"))
    rep = cd.ann_top(M, a, dec)
    assert not rep.nonvanishing and rep.annihilator is None


def test_ass_report_examples():
    M, a, dec = setup(I(R, "x^2", "x*y"))
    rep = cd.ass_filtration_report(cd.filtration(M, a, cd.cd_table(M, a, dec)))
    x, m = I(R, "x"), I(R, "x", "y")
    assert (rep[0].ass_sub, rep[0].ass_quotient, rep[0].ass_layer) == ((m,), (x,), (m,))
    assert (set(rep[1].ass_sub), rep[1].ass_quotient, rep[1].ass_layer) == ({x, m}, (), (x,))

    p = I(R3, "x")
    M, a, dec = setup(p)
    rep = cd.ass_filtration_report(cd.filtration(M, a, cd.cd_table(M, a, dec)))
    assert all(level.ass_sub == () for level in rep[:2])
    assert rep[-1].ass_quotient == ()


def test_equivalence_examples():
    M, a, dec = setup(I(R, "x^2", "x*y"))
    rep = cd.ann_equivalences(M, a, dec, battery=[R.var("x"), R.var("y")])
    assert rep.passed, rep.failures
    assert quotient(I(R, "x^2", "x*y"), I(R, "x")) == I(R, "x", "y")

    M, a, dec = setup(I(R3, "x*y"), I(R3, "x", "z"))
    rep = cd.ann_equivalences(M, a, dec, battery=[R3.var("y"), R3.var("x")])
    assert rep.passed, rep.failures
    assert not cd.top_nonzero_at(I(R3, "x"), I(R3, "x", "z"), 2)

    M, a, dec = setup(Ideal.zero(R1), I(R1, "x"))
    rep = cd.ann_equivalences(M, a, dec, rng=random.Random(0))
    assert rep.passed and len(rep.checks) >= 3

    M, a, dec = setup(I(R, "x"), I(R, "x"))
    with pytest.raises(HypothesisNotMet):
        cd.ann_equivalences(M, a, dec)


def test_non_monomial_input_needs_user_decomposition():
    J = I(R3, "x*y - z^2")
    with pytest.raises(Unsupported):
        cd.decompose(J)
    dec = cd.decompose(J, [(J, J)])
    M = cd.CyclicModule(J)
    rep = cd.ann_top(M, Ideal.maximal(R3), dec)
    assert rep.annihilator == J and rep.attached == (J,)
    F = cd.filtration(M, Ideal.maximal(R3), cd.cd_table(M, Ideal.maximal(R3), dec))
    assert F.levels == (J, J, Ideal.unit(R3))


def test_non_homogeneous_a_is_unsupported():
    M, _, dec = setup(I(R, "x*y"))
    with pytest.raises(Unsupported):
        cd.attached_top(M, I(R, "x - 1"), dec)


def test_unit_ideal_rejected():
    with pytest.raises(InvalidArgument):
        cd.CyclicModule(Ideal.unit(R))


def level_oracle(n, gens, i, box=3):
    """Monomials m of a box with m in K_i, i.e. dim R/(I : m) <= i (or I : m = (1))."""
    from itertools import combinations

    def dim(colon):
        if any(sum(c) == 0 for c in colon):
            return -1
        supports = [{k for k, e in enumerate(c) if e} for c in colon]
        for k in range(n + 1):
            if any(all(s & set(T) for s in supports) for T in combinations(range(n), k)):
                return n - k

    out = set()
    for m in cartesian(range(box), repeat=n):
        colon = [tuple(max(a - b, 0) for a, b in zip(g, m)) for g in gens]
        if dim(colon) <= i:
            out.add(m)
    return out


@given(monomial_lists(3, max_exp=3, max_gens=4))
@settings(max_examples=60, deadline=None)
def test_filtration_levels_match_dimension_oracle(gens):
    J = Ideal.from_monomials(R3, gens)
    M, a, dec = setup(J)
    F = cd.filtration(M, a, cd.cd_table(M, a, dec))
    for i, K in enumerate(F.levels):
        inside = {m for m in cartesian(range(3), repeat=3) if R3.monomial(m) in K}
        assert inside == level_oracle(3, monomial_generators(J), i)
