"""Randomized property suites over seeded corpora of monomial ideals.

Every suite turns each instance into pass/fail. A failure, whether a
false check or a TheoremViolation raised inside the engine, is recorded
as a counterexample holding a job document that reproduces it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from . import cd
from .errors import TopcohError
from .groebner import Ideal, intersect_all, krull_dim, product, saturate
from .hochster import stanley_reisner, top_local_cohomology_ranks
from .primdec import associated_primes, ideal_key, minimal_primes, monomial_radical
from .ring import Ring

VARIABLE_NAMES = ("x", "y", "z", "w", "u", "v", "s", "t")


@dataclass
class VerifyConfig:
    seed: int = 1
    instances: int = 10  # monomial ideals with a = m
    general_instances: Optional[int] = None  # random monomial a; defaults to ``instances``
    squarefree_instances: Optional[int] = None  # defaults to ``instances``
    max_vars: int = 4
    max_degree: int = 4
    max_gens: int = 6
    squarefree_max_vars: int = 6
    battery: int = 5

    @classmethod
    def from_dict(cls, data: dict) -> "VerifyConfig":
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown verify options {sorted(unknown)}")
        return cls(**data)


@dataclass(frozen=True)
class Instance:
    ideal: Ideal
    a: Ideal

    def job(self, command: str) -> dict:
        ring = self.ideal.ring
        return {
            "command": command,
            "ring": {"variables": list(ring.variables), "characteristic": ring.characteristic},
            "ideal": [str(g) for g in self.ideal.generators],
            "a": [str(g) for g in self.a.generators],
        }


# -- random corpora --------------------------------------------------------

def _ring(n: int) -> Ring:
    return Ring(VARIABLE_NAMES[:n])


def random_monomial(rng: random.Random, n: int, max_degree: int) -> tuple:
    degree = rng.randint(1, max_degree)
    e = [0] * n
    for _ in range(degree):
        e[rng.randrange(n)] += 1
    return tuple(e)


def random_monomial_ideal(rng: random.Random, n: int, max_degree: int, max_gens: int) -> Ideal:
    """A random proper nonzero monomial ideal."""
    k = rng.randint(1, max_gens)
    return Ideal.from_monomials(_ring(n), [random_monomial(rng, n, max_degree) for _ in range(k)])


def random_squarefree_ideal(rng: random.Random, n: int, max_degree: int, max_gens: int) -> Ideal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        size = rng.randint(1, min(n, max_degree))
        support = rng.sample(range(n), size)
        gens.append(tuple(1 if i in support else 0 for i in range(n)))
    return Ideal.from_monomials(_ring(n), gens)


def maximal_corpus(cfg: VerifyConfig) -> list:
    rng = random.Random(f"{cfg.seed}:maximal")
    out = []
    for _ in range(cfg.instances):
        n = rng.randint(1, cfg.max_vars)
        I = random_monomial_ideal(rng, n, cfg.max_degree, cfg.max_gens)
        out.append(Instance(I, Ideal.maximal(I.ring)))
    return out


def general_corpus(cfg: VerifyConfig) -> list:
    """Monomial I with a random monomial a (half the time a prime generated by variables)."""
    count = cfg.instances if cfg.general_instances is None else cfg.general_instances
    rng = random.Random(f"{cfg.seed}:general")
    out = []
    for _ in range(count):
        n = rng.randint(2, cfg.max_vars) if cfg.max_vars >= 2 else 1
        I = random_monomial_ideal(rng, n, cfg.max_degree, cfg.max_gens)
        if rng.random() < 0.5:
            chosen = rng.sample(range(n), rng.randint(1, n))
            a = Ideal(I.ring, [I.ring.var(i) for i in sorted(chosen)])
        else:
            a = random_monomial_ideal(rng, n, cfg.max_degree, cfg.max_gens)
        out.append(Instance(I, a))
    return out


def squarefree_corpus(cfg: VerifyConfig) -> list:
    count = cfg.instances if cfg.squarefree_instances is None else cfg.squarefree_instances
    rng = random.Random(f"{cfg.seed}:squarefree")
    out = []
    for _ in range(count):
        n = rng.randint(1, cfg.squarefree_max_vars)
        I = random_squarefree_ideal(rng, n, cfg.max_degree, cfg.max_gens)
        out.append(Instance(I, Ideal.maximal(I.ring)))
    return out


# -- property checks -------------------------------------------------------

@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    passed: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def failed(self) -> int:
        return self.cases - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "passed": self.passed,
            "failed": self.failed,
            "counterexamples": self.counterexamples,
        }


def _run(result: PropertyResult, job: dict, check: Callable[[], Optional[str]]):
    """Run one case; ``check`` returns None on success or a failure message."""
    result.cases += 1
    try:
        message = check()
    except TopcohError as exc:
        message = f"{exc.kind}: {exc}"
    if message is None:
        result.passed += 1
    else:
        result.counterexamples.append(dict(job, failure=message))


def check_filtration_duals(inst: Instance) -> Optional[str]:
    M = cd.CyclicModule(inst.ideal)
    dec = cd.decompose(inst.ideal)
    F = cd.filtration(M, inst.a, cd.cd_table(M, inst.a, dec, oracle="dim"))
    for i, (s, t) in enumerate(zip(F.saturation_forms, F.intersection_forms)):
        if s != t:
            return f"level {i}: {s} != {t}"
    return None


def check_ass_recomputation(inst: Instance) -> Optional[str]:
    M = cd.CyclicModule(inst.ideal)
    dec = cd.decompose(inst.ideal)
    F = cd.filtration(M, inst.a, cd.cd_table(M, inst.a, dec, oracle="dim"))
    for level in cd.ass_filtration_report(F):
        if set(level.recomputed) != set(level.ass_quotient):
            return f"level {level.i}: Ass mismatch"
    return None


def check_annihilator_chain(inst: Instance) -> Optional[str]:
    """Annihilator = saturation = top intersection, and the structural facts around it."""
    I, a = inst.ideal, inst.a
    ring = I.ring
    M = cd.CyclicModule(I)
    dec = cd.decompose(I)
    report = cd.ann_top(M, a, dec)
    if not report.nonvanishing:
        return None
    table = cd.cd_table(M, a, dec, oracle="topsplit")
    top = table.top_components()
    b = product([c.prime for c in table.lower_components()], ring)
    sat = saturate(I, b)
    inter = intersect_all([c.component for c in top], ring)
    ann = report.annihilator
    if not (ann == sat == inter):
        return f"annihilator {ann}, saturation {sat}, intersection {inter} differ"
    top_primes = sorted((c.prime for c in top), key=ideal_key)
    if monomial_radical(ann) != intersect_all(top_primes, ring):
        return f"Rad{ann} != intersection of top primes"
    if minimal_primes(ann) != top_primes:
        return f"minimal primes of {ann} are not the top primes"
    if associated_primes(ann) != list(report.attached):
        return f"Ass R/{ann} differs from the attached primes"
    # M/T has no nonzero submodule of smaller cohomological dimension
    G = cd.CyclicModule(ann)
    if cd.t_submodule(G, a, cd.cd_table(G, a, cd.decompose(ann), oracle="topsplit")) != ann:
        return f"T(a, R/{ann}) is not zero"
    if a == Ideal.maximal(ring):
        exact = cd.t_submodule(M, a, cd.cd_table(M, a, dec, oracle="dim"))
        if exact != ann:
            return f"exact-table T {exact} differs from {ann}"
        assh = sorted((p for p in dec.primes() if krull_dim(p) == M.d), key=ideal_key)
        if assh != list(report.attached):
            return "attached primes for a = m are not the top-dimensional associated primes"
    return None


def check_radical(inst: Instance) -> Optional[str]:
    M = cd.CyclicModule(inst.ideal)
    report = cd.ann_top(M, inst.a, cd.decompose(inst.ideal))
    if not report.nonvanishing:
        return None
    expected = intersect_all(list(report.attached), inst.ideal.ring)
    if monomial_radical(report.annihilator) != expected or report.radical_ann != expected:
        return f"Rad{report.annihilator} != {expected}"
    return None


def check_equivalences(inst: Instance, rng: random.Random, battery: int) -> Optional[str]:
    M = cd.CyclicModule(inst.ideal)
    dec = cd.decompose(inst.ideal)
    if not cd.h_top_nonzero(M, inst.a, dec):
        return None
    report = cd.ann_equivalences(M, inst.a, dec, rng=rng, extra=battery)
    if not report.passed:
        return "; ".join(desc for _, desc, _ in report.failures)
    return None


def check_hochster(inst: Instance) -> Optional[str]:
    I = inst.ideal
    m = Ideal.maximal(I.ring)
    M = cd.CyclicModule(I)
    dec = cd.decompose(I)
    oracle = top_local_cohomology_ranks(I)
    if stanley_reisner(I).dim + 1 != M.d:
        return f"complex dimension + 1 differs from dim R/I = {M.d}"
    engine = cd.h_top_nonzero(M, m, dec)
    if oracle.nonvanishing != engine:
        return f"Hochster nonvanishing {oracle.nonvanishing}, engine {engine}"
    if not engine:
        return None
    K = cd.t_submodule(M, m, cd.cd_table(M, m, dec, oracle="dim"))
    quotient_ranks = top_local_cohomology_ranks(K)
    if quotient_ranks.d != oracle.d or quotient_ranks.ranks != oracle.ranks:
        return f"top ranks of R/I and R/{K} differ"
    return None


def check_monotonicity(n: int, a: Ideal) -> Optional[str]:
    """For variable primes p ⊆ q: dim R/q <= dim R/p, and the top test passes upward."""
    ring = a.ring
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]
    primes = {S: Ideal(ring, [ring.var(i) for i in sorted(S)]) for S in subsets}
    dims = {S: krull_dim(p) for S, p in primes.items()}
    zero_dim = {S: krull_dim(a + p) == 0 for S, p in primes.items()}
    for P in subsets:
        for Q in subsets:
            if P <= Q:
                if dims[Q] > dims[P]:
                    return f"dim grows from {primes[P]} to {primes[Q]}"
                if zero_dim[P] and not zero_dim[Q]:
                    return f"a + {primes[P]} is m-primary but a + {primes[Q]} is not"
    return None


# -- the harness -----------------------------------------------------------

PROPERTY_NAMES = (
    "filtration-duals",
    "annihilator-chain",
    "ass-recomputation",
    "hochster-agreement",
    "annihilator-equivalences",
    "support-monotonicity",
)


def verify(cfg: VerifyConfig) -> dict:
    """Run all suites; the report depends only on ``cfg``."""
    maximal = maximal_corpus(cfg)
    general = general_corpus(cfg)
    squarefree = squarefree_corpus(cfg)
    results = {name: PropertyResult(name) for name in PROPERTY_NAMES}

    for inst in maximal:
        _run(results["filtration-duals"], inst.job("filtration"), lambda: check_filtration_duals(inst))
        _run(results["ass-recomputation"], inst.job("filtration"), lambda: check_ass_recomputation(inst))
    for k, inst in enumerate(maximal + general):
        _run(results["annihilator-chain"], inst.job("ann-top"), lambda: check_annihilator_chain(inst))
        rng = random.Random(f"{cfg.seed}:battery:{k}")
        _run(
            results["annihilator-equivalences"],
            inst.job("ann-top"),
            lambda: check_equivalences(inst, rng, cfg.battery),
        )
    for inst in squarefree:
        _run(results["hochster-agreement"], inst.job("hochster"), lambda: check_hochster(inst))
    rng = random.Random(f"{cfg.seed}:monotone")
    for n in range(1, cfg.max_vars + 1):
        for _ in range(max(1, cfg.instances // cfg.max_vars)):
            a = random_monomial_ideal(rng, n, cfg.max_degree, cfg.max_gens)
            job = Instance(Ideal.maximal(a.ring), a).job("att-top")
            _run(results["support-monotonicity"], job, lambda: check_monotonicity(n, a))

    props = [results[name].as_dict() for name in PROPERTY_NAMES]
    return {
        "seed": cfg.seed,
        "all_passed": all(p["failed"] == 0 for p in props),
        "properties": props,
    }


def format_report(report: dict) -> str:
    lines = []
    for p in report["properties"]:
        status = "PASS" if p["failed"] == 0 else "FAIL"
        lines.append(f"{status} {p['name']}: {p['passed']}/{p['cases']}")
    return "\n".join(lines)
