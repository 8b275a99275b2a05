"""Cohomological dimension filtration and the top local cohomology module.

Everything here works with a cyclic module M = R/I over a standard graded
polynomial ring. A submodule K/I of M is represented by the ideal K, and
then Ann(M / (K/I)) = K. The maximal ideal of the local theory is replaced
by the irrelevant ideal m, so general ideals ``a`` must be homogeneous:
Rad(a + p) = m becomes dim R/(a + p) = 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import HypothesisNotMet, InvalidArgument, TheoremViolation, Unsupported
from .groebner import Ideal, intersect_all, krull_dim, product, quotient, saturate
from .primdec import (
    PrimaryDecomposition,
    associated_primes,
    ideal_key,
    monomial_radical,
    primary_decomposition,
)
from .ring import Polynomial

EXACT = "exact"
TOPSPLIT = "topsplit"


@dataclass(frozen=True)
class CyclicModule:
    """M = R/I for a proper ideal I; ``d`` is dim M."""

    ideal: Ideal
    d: int = field(init=False)

    def __post_init__(self):
        if self.ideal.is_unit():
            raise InvalidArgument("R/I is the zero module for the unit ideal")
        object.__setattr__(self, "d", krull_dim(self.ideal))

    @property
    def ring(self):
        return self.ideal.ring


def decompose(I: Ideal, user_pairs: Optional[Sequence] = None) -> PrimaryDecomposition:
    """Primary decomposition of I: computed for monomial ideals, validated if user-supplied."""
    if user_pairs is not None:
        return PrimaryDecomposition.from_user(I, user_pairs)
    if I.is_zero() or I.is_monomial():
        return primary_decomposition(I)
    raise Unsupported(f"{I} is not monomial; supply its primary decomposition")


def _require_decomposition_of(M: CyclicModule, dec: PrimaryDecomposition):
    if dec.source.ring != M.ring or dec.source != M.ideal:
        raise InvalidArgument("decomposition does not belong to the module's defining ideal")


def top_prime_test(a: Ideal, p: Ideal, d: int) -> bool:
    """Whether p is an attached prime of H^d_a: dim R/p = d and dim R/(a + p) = 0."""
    if not a.is_homogeneous():
        raise Unsupported(f"{a} is not homogeneous")
    if not p.is_homogeneous():
        raise Unsupported(f"{p} is not homogeneous")
    return krull_dim(p) == d and krull_dim(a + p) == 0


def attached_top(M: CyclicModule, a: Ideal, dec: PrimaryDecomposition) -> list:
    """Attached primes of H^d_a(M): top-dimensional associated primes p with a + p m-primary."""
    _require_decomposition_of(M, dec)
    return sorted((p for p in dec.primes() if top_prime_test(a, p, M.d)), key=ideal_key)


def h_top_nonzero(M: CyclicModule, a: Ideal, dec: PrimaryDecomposition) -> bool:
    return bool(attached_top(M, a, dec))


@dataclass(frozen=True)
class CdTable:
    """Per-component cohomological dimension data, aligned with ``decomposition``.

    In exact mode ``values[j]`` is cd(a, R/p_j). In topsplit mode it is a
    bool telling whether cd(a, R/p_j) = d.
    """

    decomposition: PrimaryDecomposition
    mode: str
    values: tuple
    d: int

    @property
    def c(self) -> Optional[int]:
        if self.mode == EXACT:
            return max(self.values)
        return self.d if any(self.values) else None

    def is_top(self, j: int) -> bool:
        if self.mode == EXACT:
            return self.values[j] == self.c
        return bool(self.values[j])

    def top_components(self) -> list:
        return [comp for j, comp in enumerate(self.decomposition.components) if self.is_top(j)]

    def lower_components(self) -> list:
        return [comp for j, comp in enumerate(self.decomposition.components) if not self.is_top(j)]


def cd_table(M: CyclicModule, a: Ideal, dec: PrimaryDecomposition, oracle="dim", values=None) -> CdTable:
    """Classify the components of ``dec`` by cd(a, R/p_j).

    ``oracle`` is ``"dim"`` (a must be m; cd = dim), ``"user"`` (``values``
    given by the caller, checked for consistency) or ``"topsplit"`` (only
    whether each cd equals d).
    """
    _require_decomposition_of(M, dec)
    ring = M.ring
    primes = dec.primes()
    if oracle == "dim":
        if a != Ideal.maximal(ring):
            raise InvalidArgument(f"the dimension oracle needs a = m, got {a}")
        return CdTable(dec, EXACT, tuple(krull_dim(p) for p in primes), M.d)
    if oracle == "topsplit":
        return CdTable(dec, TOPSPLIT, tuple(top_prime_test(a, p, M.d) for p in primes), M.d)
    if oracle != "user":
        raise InvalidArgument(f"unknown cd oracle {oracle!r}")

    if values is None or len(values) != len(primes):
        raise InvalidArgument("a user cd table needs one value per component")
    values = tuple(values)
    for p, v in zip(primes, values):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v <= krull_dim(p):
            raise InvalidArgument(f"cd value {v!r} for {p} must lie in [0, dim R/p]")
    # Supp R/q ⊆ Supp R/p whenever p ⊆ q
    for j, p in enumerate(primes):
        for k, q in enumerate(primes):
            if j != k and p.issubset(q) and values[k] > values[j]:
                raise InvalidArgument(f"cd values not monotone: {p} ⊆ {q} but {values[j]} < {values[k]}")
    if a.is_homogeneous() and all(p.is_homogeneous() for p in primes):
        for p, v in zip(primes, values):
            top = top_prime_test(a, p, M.d)
            if top and v != M.d:
                raise InvalidArgument(f"{p} passes the top test, so its cd is {M.d}, not {v}")
            if not top and v >= M.d:
                raise InvalidArgument(f"{p} fails the top test, so its cd is below {M.d}")
    return CdTable(dec, EXACT, values, M.d)


def _saturation_form(I: Ideal, J: Ideal) -> Ideal:
    # (0)-torsion of M is all of M (only reachable when (0) is an associated prime)
    if J.is_zero():
        return Ideal.unit(I.ring)
    return saturate(I, J)


@dataclass(frozen=True)
class CdFiltration:
    """The chain K_0 ⊆ ... ⊆ K_c with M_i = K_i / I, plus both defining computations."""

    module: CyclicModule
    a: Ideal
    table: CdTable
    levels: tuple
    a_products: tuple
    saturation_forms: tuple
    intersection_forms: tuple

    @property
    def c(self) -> int:
        return len(self.levels) - 1


def filtration(M: CyclicModule, a: Ideal, table: CdTable) -> CdFiltration:
    """Build M_i = H^0_{a_i}(M) = ∩_{cd > i} N_j for i = 0..c, checking the two agree."""
    if table.mode != EXACT:
        raise InvalidArgument("the filtration needs an exact cd table")
    _require_decomposition_of(M, table.decomposition)
    ring = M.ring
    I = M.ideal
    comps = table.decomposition.components
    levels, a_products, sats, inters = [], [], [], []
    for i in range(table.c + 1):
        a_i = product([comp.prime for comp, v in zip(comps, table.values) if v <= i], ring)
        sat = _saturation_form(I, a_i)
        inter = intersect_all([comp.component for comp, v in zip(comps, table.values) if v > i], ring)
        if sat != inter:
            raise TheoremViolation(
                f"level {i} of the cd-filtration of R/{I}: saturation gives {sat}, "
                f"intersection of components gives {inter}"
            )
        levels.append(sat)
        a_products.append(a_i)
        sats.append(sat)
        inters.append(inter)
    for lo, hi in zip(levels, levels[1:]):
        if not lo.issubset(hi):
            raise TheoremViolation(f"filtration of R/{I} is not increasing: {lo} ⊄ {hi}")
    if not levels[-1].is_unit():
        raise TheoremViolation(f"top level of the filtration of R/{I} is {levels[-1]}, not (1)")
    return CdFiltration(M, a, table, tuple(levels), tuple(a_products), tuple(sats), tuple(inters))


def t_submodule(M: CyclicModule, a: Ideal, table: CdTable) -> Ideal:
    """The ideal K with T_R(a, M) = K/I, i.e. H^0_b(M) = ∩_{top} N_j."""
    _require_decomposition_of(M, table.decomposition)
    if table.mode == TOPSPLIT and not any(table.values):
        raise HypothesisNotMet(f"H^{M.d}_a(R/{M.ideal}) = 0 for a = {a}")
    ring = M.ring
    b = product([comp.prime for comp in table.lower_components()], ring)
    K = _saturation_form(M.ideal, b)
    check = intersect_all([comp.component for comp in table.top_components()], ring)
    if K != check:
        raise TheoremViolation(
            f"T(a, R/{M.ideal}): saturation by {b} gives {K}, top components give {check}"
        )
    return K


@dataclass(frozen=True)
class TopCohomologyReport:
    """What is known about H^d_a(M). Annihilator fields are None when it vanishes."""

    d: int
    nonvanishing: bool
    attached: tuple
    t_ideal: Optional[Ideal] = None
    annihilator: Optional[Ideal] = None
    radical_ann: Optional[Ideal] = None
    supp_bound: tuple = ()


def ann_top(M: CyclicModule, a: Ideal, dec: PrimaryDecomposition) -> TopCohomologyReport:
    """Annihilator of H^d_a(M) as Ann(M/T_R(a, M)), with its radical and a support bound."""
    table = cd_table(M, a, dec, oracle="topsplit")
    top = table.top_components()
    attached = tuple(sorted((comp.prime for comp in top), key=ideal_key))
    if not attached:
        return TopCohomologyReport(M.d, False, ())
    ring = M.ring
    K = t_submodule(M, a, table)
    radical = intersect_all([comp.prime for comp in top], ring)
    if K.is_monomial() and monomial_radical(K) != radical:
        raise TheoremViolation(f"Rad{K} = {monomial_radical(K)} differs from ∩ top primes {radical}")
    supp = tuple(sorted((p + a for p in attached), key=ideal_key))
    return TopCohomologyReport(M.d, True, attached, K, K, radical, supp)


@dataclass(frozen=True)
class LevelAss:
    i: int
    ass_sub: tuple  # Ass M_i
    ass_quotient: tuple  # Ass M/M_i
    ass_layer: tuple  # Ass M_i/M_{i-1}
    recomputed: Optional[tuple] = None  # Ass R/K_i from a fresh decomposition


def ass_filtration_report(F: CdFiltration) -> list:
    """Associated primes of M_i, M/M_i and M_i/M_{i-1} predicted from the cd table.

    For monomial I the quotient part is recomputed independently as
    Ass(R/K_i) and must agree.
    """
    primes = F.table.decomposition.primes()
    values = F.table.values
    monomial = F.module.ideal.is_monomial()
    out = []
    for i, K in enumerate(F.levels):
        def pick(pred):
            return tuple(sorted((p for p, v in zip(primes, values) if pred(v)), key=ideal_key))

        sub = pick(lambda v: v <= i)
        quo = pick(lambda v: v > i)
        layer = pick(lambda v: v == i)
        recomputed = None
        if monomial:
            recomputed = () if K.is_unit() else tuple(associated_primes(K))
            if set(recomputed) != set(quo):
                raise TheoremViolation(
                    f"Ass(M/M_{i}) for R/{F.module.ideal}: predicted {list(map(str, quo))}, "
                    f"recomputed {list(map(str, recomputed))}"
                )
        out.append(LevelAss(i, sub, quo, layer, recomputed))
    return out


def top_nonzero_at(J: Ideal, a: Ideal, d: int) -> bool:
    """Whether H^d_a(R/J) is nonzero, for a monomial (or zero or unit) ideal J."""
    if J.is_unit():
        return False
    return any(top_prime_test(a, p, d) for p in primary_decomposition(J).primes())


@dataclass
class EquivalenceReport:
    checks: list = field(default_factory=list)  # (name, description, passed)

    def add(self, name, description, passed):
        self.checks.append((name, description, bool(passed)))

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c[2]]


def random_monomials_outside(ideal: Ideal, count: int, rng: random.Random, max_exp: int = 2) -> list:
    """Up to ``count`` distinct random monomials not in ``ideal`` (fewer if they run out)."""
    ring = ideal.ring
    out, seen = [], set()
    for _ in range(50 * count):
        if len(out) >= count:
            break
        e = tuple(rng.randint(0, max_exp) for _ in range(ring.n))
        if e in seen:
            continue
        seen.add(e)
        m = ring.monomial(e)
        if m not in ideal:
            out.append(m)
    return out


def ann_equivalences(
    M: CyclicModule,
    a: Ideal,
    dec: PrimaryDecomposition,
    battery: Optional[Sequence[Polynomial]] = None,
    rng: Optional[random.Random] = None,
    extra: int = 5,
) -> EquivalenceReport:
    """Check the annihilator against H^d_a(xM) = 0 ⇔ x·H^d_a(M) = 0 and Ass = Att ⇔ Ann = I.

    xM is cyclic with annihilator I : x. The element battery is every
    generator of the annihilator plus ``battery`` (or ``extra`` random
    monomials outside the annihilator).
    """
    report = ann_top(M, a, dec)
    if not report.nonvanishing:
        raise HypothesisNotMet(f"H^{M.d}_a(R/{M.ideal}) = 0 for a = {a}")
    ann = report.annihilator
    I = M.ideal
    ring = M.ring
    result = EquivalenceReport()

    if I.is_zero() or I.is_monomial():
        if battery is None:
            battery = random_monomials_outside(ann, extra, rng or random.Random(0))
        for x in list(ann.gb()) + list(battery):
            colon = quotient(I, Ideal(ring, [x]))
            nonzero = top_nonzero_at(colon, a, M.d)
            expected = x not in ann
            result.add(
                "colon-criterion",
                f"element {x}: H^{M.d}_a(R/{colon}) nonzero={nonzero}, x outside Ann={expected}",
                nonzero == expected,
            )

    ass = set(dec.primes())
    att = set(report.attached)
    result.add("att-is-ass-gives-ann-is-I", f"Att=Ass is {att == ass}; Ann=I is {ann == I}", (att != ass) or ann == I)
    result.add("ann-is-I-gives-att-is-ass", "Ann=I implies Att=Ass", (ann != I) or att == ass)
    return result
