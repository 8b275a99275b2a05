"""Primary decomposition of monomial ideals.

Monomial ideals are handled combinatorially through their minimal
generators (exponent tuples). The decomposition is built from the
irreducible decomposition by merging components with equal radical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidArgument
from .groebner import Ideal, intersect_all, radical_member
from .ring import Ring, mono_divides, mono_lcm


def ideal_key(I: Ideal):
    """Deterministic sort key for ideals (fewer generators first, then text)."""
    return (len(I.gb()), tuple(str(g) for g in I.gb()))


# -- combinatorics on minimal monomial generators --------------------------

def minimalize(monos: Iterable[tuple]) -> tuple:
    """Minimal generators of the monomial ideal spanned by ``monos``, sorted."""
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


def mono_member(m: tuple, gens: Sequence[tuple]) -> bool:
    return any(mono_divides(g, m) for g in gens)


def mono_subset(A: Sequence[tuple], B: Sequence[tuple]) -> bool:
    """(A) ⊆ (B) for monomial generator lists."""
    return all(mono_member(a, B) for a in A)


def monomial_intersect(A: Sequence[tuple], B: Sequence[tuple]) -> tuple:
    """(A) ∩ (B) for monomial ideals: generated by pairwise lcms."""
    return minimalize(mono_lcm(a, b) for a in A for b in B)


def monomial_generators(I: Ideal) -> tuple:
    """Minimal monomial generators of I as exponent tuples."""
    basis = I.gb()
    if not all(g.is_monomial() for g in basis):
        raise InvalidArgument(f"{I} is not a monomial ideal")
    return minimalize(g.monomials()[0] for g in basis)


def _support(m: tuple) -> frozenset:
    return frozenset(i for i, e in enumerate(m) if e)


# -- decompositions --------------------------------------------------------

def _split(gens: tuple, memo: dict) -> list:
    if gens in memo:
        return memo[gens]
    for m in gens:
        sup = sorted(_support(m))
        if len(sup) >= 2:
            i = sup[0]
            u = tuple(e if k == i else 0 for k, e in enumerate(m))
            v = tuple(0 if k == i else e for k, e in enumerate(m))
            result = _split(minimalize(gens + (u,)), memo) + _split(minimalize(gens + (v,)), memo)
            break
    else:
        result = [gens]
    memo[gens] = result
    return result


def _irreducible_gens(gens: tuple) -> list:
    pieces = sorted(set(_split(gens, {})))
    # keep only inclusion-minimal pieces
    keep = []
    for C in pieces:
        if not any(D != C and mono_subset(D, C) for D in pieces):
            keep.append(C)
    return keep


def _check_proper_monomial(I: Ideal):
    if I.is_unit():
        raise InvalidArgument("the unit ideal has no primary decomposition")
    return monomial_generators(I)


def irreducible_decomposition(I: Ideal) -> list:
    """Irreducible monomial ideals (pure powers of variables) intersecting to I."""
    if I.is_zero():
        raise InvalidArgument("irreducible decomposition needs a nonzero monomial ideal")
    gens = _check_proper_monomial(I)
    return [Ideal.from_monomials(I.ring, C) for C in _irreducible_gens(gens)]


@dataclass(frozen=True)
class PrimaryComponent:
    component: Ideal
    prime: Ideal

    def __str__(self):
        return f"<{self.component}, {self.prime}>"


@dataclass(frozen=True)
class PrimaryDecomposition:
    """An irredundant decomposition ``source = ∩ component`` with distinct primes."""

    components: tuple
    source: Ideal

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def primes(self) -> list:
        return [c.prime for c in self.components]

    def validate(self) -> None:
        """Check intersection, irredundancy, distinct primes and radicals.

        Primality of each prime and primariness of each component are not
        checked: they are guaranteed for monomial inputs and trusted for
        user-supplied decompositions.
        """
        ring = self.source.ring
        comps = [c.component for c in self.components]
        if not comps:
            raise InvalidArgument("a decomposition needs at least one component")
        if intersect_all(comps, ring) != self.source:
            raise InvalidArgument("components do not intersect to the source ideal")
        if len(comps) > 1:
            for k in range(len(comps)):
                rest = intersect_all(comps[:k] + comps[k + 1:], ring)
                if rest == self.source:
                    raise InvalidArgument(f"component {comps[k]} is redundant")
        primes = self.primes()
        if len(set(primes)) != len(primes):
            raise InvalidArgument("associated primes are not pairwise distinct")
        for c in self.components:
            if c.prime.is_unit():
                raise InvalidArgument(f"{c.prime} is not a proper ideal")
            if not all(radical_member(g, c.component) for g in c.prime.generators):
                raise InvalidArgument(f"{c.prime} is not contained in Rad{c.component}")
            if not c.component.issubset(c.prime):
                raise InvalidArgument(f"{c.component} is not contained in {c.prime}")

    @classmethod
    def from_user(cls, source: Ideal, pairs: Sequence) -> "PrimaryDecomposition":
        """Wrap and validate a decomposition supplied as (component, prime) ideal pairs."""
        comps = tuple(PrimaryComponent(q, p) for q, p in pairs)
        dec = cls(comps, source)
        dec.validate()
        return dec


def _variable_prime(ring: Ring, support) -> Ideal:
    return Ideal(ring, [ring.var(i) for i in sorted(support)])


def primary_decomposition(I: Ideal) -> PrimaryDecomposition:
    """Reduced primary decomposition of a proper monomial ideal or of (0)."""
    ring = I.ring
    if I.is_zero():
        zero = Ideal.zero(ring)
        return PrimaryDecomposition((PrimaryComponent(zero, zero),), I)
    gens = _check_proper_monomial(I)
    groups: dict = {}
    for C in _irreducible_gens(gens):
        groups.setdefault(frozenset().union(*(_support(m) for m in C)), []).append(C)
    merged = []
    for sup, pieces in groups.items():
        comp = pieces[0]
        for P in pieces[1:]:
            comp = monomial_intersect(comp, P)
        merged.append((tuple(sorted(sup)), comp))
    merged.sort(key=lambda t: (len(t[0]), t[0], t[1]))

    # drop-one retest: every component must be needed
    comps = [c for _, c in merged]
    if len(comps) > 1:
        for k in range(len(comps)):
            rest = comps[:k] + comps[k + 1:]
            acc = rest[0]
            for C in rest[1:]:
                acc = monomial_intersect(acc, C)
            if acc == gens:
                raise AssertionError(f"redundant component {comps[k]} for {I}")

    components = tuple(
        PrimaryComponent(Ideal.from_monomials(ring, comp), _variable_prime(ring, sup))
        for sup, comp in merged
    )
    return PrimaryDecomposition(components, I)


def associated_primes(I: Ideal) -> list:
    return sorted(primary_decomposition(I).primes(), key=ideal_key)


def minimal_primes(I: Ideal) -> list:
    primes = associated_primes(I)
    out = []
    for p in primes:
        if not any(q != p and q.issubset(p) for q in primes):
            out.append(p)
    return out


def monomial_radical(I: Ideal) -> Ideal:
    """Radical of a monomial ideal: squarefree parts of its generators."""
    gens = monomial_generators(I)
    sqfree = minimalize(tuple(1 if e else 0 for e in m) for m in gens)
    return Ideal.from_monomials(I.ring, sqfree)


def is_squarefree_monomial(I: Ideal) -> bool:
    try:
        gens = monomial_generators(I)
    except InvalidArgument:
        return False
    return all(e <= 1 for m in gens for e in m)

