"""Buchberger's algorithm and the ideal operations built on it."""

from __future__ import annotations

import heapq
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidArgument, RingMismatch
from .ring import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    Ring,
    block_order,
    divide,
    mono_coprime,
    mono_divides,
    mono_lcm,
    normal_form,
    s_polynomial,
)


def buchberger_reduced(gens: Iterable[Polynomial], order: MonomialOrder = GREVLEX) -> list:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed smallest lcm first (normal strategy), skipping those
    with coprime leading monomials and those killed by the chain criterion.
    The result is monic, inter-reduced and sorted by decreasing leading
    monomial. An empty or all-zero input yields ``[]``.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch(f"{g.ring} vs {ring}")
    key = order.key

    G = []
    leads = []
    pending = set()
    heap = []

    def add(poly):
        poly = poly.monic(order)
        k = len(G)
        G.append(poly)
        lm = poly.lm(order)
        leads.append(lm)
        for i in range(k):
            lcm = mono_lcm(leads[i], lm)
            pending.add((i, k))
            heapq.heappush(heap, (key(lcm), k, i))

    for g in gens:
        r = normal_form(g, G, order) if G else g
        if r:
            if r.is_constant():
                return [ring.one()]
            add(r)

    while heap:
        _, j, i = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        if mono_coprime(li, lj):
            continue
        lcm = mono_lcm(li, lj)
        if _chain_criterion(i, j, lcm, leads, pending):
            continue
        r = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if r:
            if r.is_constant():
                return [ring.one()]
            add(r)

    return _reduce_basis(G, order)


def _chain_criterion(i, j, lcm, leads, pending):
    for k, lk in enumerate(leads):
        if k == i or k == j:
            continue
        if not mono_divides(lk, lcm):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _reduce_basis(G, order):
    key = order.key
    G = sorted(G, key=lambda g: key(g.lm(order)))
    minimal = []
    for g in G:
        lm = g.lm(order)
        if not any(mono_divides(h.lm(order), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(normal_form(g, others, order).monic(order))
    return sorted(reduced, key=lambda g: key(g.lm(order)), reverse=True)


class Ideal:
    """An ideal of a polynomial ring, with write-once cached reduced bases."""

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.constant(g)
            if g.ring != ring:
                raise RingMismatch(f"generator over {g.ring}, ideal over {ring}")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = {}

    @classmethod
    def zero(cls, ring: Ring) -> "Ideal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        return cls(ring, (ring.one(),))

    @classmethod
    def maximal(cls, ring: Ring) -> "Ideal":
        """The irrelevant ideal generated by all variables."""
        return cls(ring, ring.gens())

    @classmethod
    def from_monomials(cls, ring: Ring, exponents: Iterable[Sequence[int]]) -> "Ideal":
        return cls(ring, [ring.monomial(e) for e in exponents])

    @classmethod
    def _with_basis(cls, ring, basis, order=GREVLEX):
        ideal = cls(ring, basis)
        ideal._gb[order] = tuple(basis)
        return ideal

    def gb(self, order: MonomialOrder = GREVLEX) -> tuple:
        basis = self._gb.get(order)
        if basis is None:
            basis = tuple(buchberger_reduced(self.generators, order))
            for g in self.generators:
                if normal_form(g, basis, order):
                    raise AssertionError(f"generator {g} does not reduce to 0 against its basis")
            self._gb[order] = basis
        return basis

    # -- predicates

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        basis = self.gb()
        return len(basis) == 1 and basis[0].is_constant()

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gb())

    def is_homogeneous(self) -> bool:
        return is_homogeneous(self)

    def contains(self, f: Polynomial) -> bool:
        return membership(f, self)

    def __contains__(self, f):
        return membership(f, self)

    def issubset(self, other: "Ideal") -> bool:
        self._check(other)
        return all(membership(g, other) for g in self.generators)

    __le__ = issubset

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.gb() == other.gb()

    def __hash__(self):
        return hash((self.ring, self.gb()))

    # -- arithmetic

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, [f * g for f in self.gb() for g in other.gb()])

    def dim(self) -> int:
        return krull_dim(self)

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gb()) + ")"

    def __repr__(self):
        return f"Ideal{self}"


def product(ideals: Sequence[Ideal], ring: Ring) -> Ideal:
    """Product of ideals; the empty product is the unit ideal."""
    result = Ideal.unit(ring)
    for I in ideals:
        result = result * I
    return result


def membership(f: Polynomial, I: Ideal) -> bool:
    if f.ring != I.ring:
        raise RingMismatch(f"{f.ring} vs {I.ring}")
    if not f:
        return True
    basis = I.gb()
    if not basis:
        return False
    return not normal_form(f, basis)


# -- auxiliary variables ---------------------------------------------------

def _aux_ring(ring: Ring, count: int) -> Ring:
    names = []
    i = 0
    while len(names) < count:
        name = f"_t{i}"
        if name not in ring.variables:
            names.append(name)
        i += 1
    return ring.extend(names)


def _lift(f: Polynomial, big: Ring, shift: int) -> Polynomial:
    return f.change_ring(big, [i + shift for i in range(f.ring.n)])


def _drop(f: Polynomial, small: Ring, shift: int) -> Polynomial:
    return Polynomial(small, {m[shift:]: c for m, c in f.coefficients.items()})


def _eliminate_front(gens, big: Ring, small: Ring, shift: int) -> Ideal:
    """(gens) intersected with the subring on the last ``small.n`` variables."""
    order = block_order(range(shift))
    basis = buchberger_reduced(gens, order)
    kept = [_drop(g, small, shift) for g in basis if not any(m[:shift] != (0,) * shift for m in g.monomials())]
    key = GREVLEX.key
    kept.sort(key=lambda g: key(g.lm()), reverse=True)
    return Ideal._with_basis(small, kept)


def eliminate(I: Ideal, variables: Iterable) -> Ideal:
    """I intersected with k[remaining variables], as an ideal of the same ring."""
    ring = I.ring
    idx = sorted({v if isinstance(v, int) else ring.index(v) for v in variables})
    if not idx:
        return Ideal(ring, I.generators)
    for i in idx:
        if not 0 <= i < ring.n:
            raise InvalidArgument(f"variable index {i} out of range")
    basis = buchberger_reduced(I.generators, block_order(idx))
    kept = [g for g in basis if not (g.support() & set(idx))]
    key = GREVLEX.key
    kept.sort(key=lambda g: key(g.lm()), reverse=True)
    return Ideal._with_basis(ring, kept)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via elimination of t from t*I + (1-t)*J."""
    I._check(J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal.zero(ring)
    if I.is_unit():
        return Ideal._with_basis(ring, J.gb())
    if J.is_unit():
        return Ideal._with_basis(ring, I.gb())
    big = _aux_ring(ring, 1)
    t = big.var(0)
    one_minus_t = big.one() - t
    gens = [t * _lift(f, big, 1) for f in I.gb()]
    gens += [one_minus_t * _lift(g, big, 1) for g in J.gb()]
    return _eliminate_front(gens, big, ring, 1)


def intersect_all(ideals: Sequence[Ideal], ring: Ring) -> Ideal:
    """Intersection of a list of ideals; the empty intersection is the unit ideal."""
    result = Ideal.unit(ring)
    for I in ideals:
        result = intersect(result, I)
    return result


def _exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial:
    (q,), r = divide(f, [g])
    if r:
        raise AssertionError(f"{g} does not divide {f}")
    return q


def quotient(I: Ideal, J: Ideal) -> Ideal:
    """The colon ideal I : J."""
    I._check(J)
    ring = I.ring
    gens = [g for g in J.gb()]
    if not gens:
        raise InvalidArgument("quotient by the zero ideal")
    result = None
    for g in gens:
        if g.is_constant():
            part = Ideal._with_basis(ring, I.gb())
        else:
            K = intersect(I, Ideal(ring, [g]))
            part = Ideal(ring, [_exact_quotient(k, g) for k in K.gb()])
        result = part if result is None else intersect(result, part)
    return result


def saturate(I: Ideal, J: Ideal) -> Ideal:
    """I : J^∞ by repeated quotients until the reduced basis stops changing."""
    I._check(J)
    if J.is_zero():
        raise InvalidArgument("saturation by the zero ideal")
    K = Ideal._with_basis(I.ring, I.gb())
    while True:
        nxt = quotient(K, J)
        if nxt.gb() == K.gb():
            return K
        K = nxt


def _saturate_aux(I: Ideal, J: Ideal) -> Ideal:
    """Independent route: I : J^∞ = ∩_g (I + (1 - t*g)) ∩ R over generators g of J."""
    I._check(J)
    if J.is_zero():
        raise InvalidArgument("saturation by the zero ideal")
    ring = I.ring
    big = _aux_ring(ring, 1)
    t = big.var(0)
    result = Ideal.unit(ring)
    for g in J.gb():
        gens = [_lift(f, big, 1) for f in I.gb()] + [big.one() - t * _lift(g, big, 1)]
        result = intersect(result, _eliminate_front(gens, big, ring, 1))
    return result


def radical_member(f: Polynomial, I: Ideal) -> bool:
    """f ∈ Rad(I) iff 1 ∈ I + (1 - t*f) in R[t]."""
    if f.ring != I.ring:
        raise RingMismatch(f"{f.ring} vs {I.ring}")
    if not f:
        return True
    ring = I.ring
    big = _aux_ring(ring, 1)
    t = big.var(0)
    gens = [_lift(g, big, 1) for g in I.generators] + [big.one() - t * _lift(f, big, 1)]
    basis = buchberger_reduced(gens)
    return len(basis) == 1 and basis[0].is_constant()


def krull_dim(I: Ideal) -> int:
    """dim R/I from maximal independent sets of the leading-term ideal; -1 for the unit ideal."""
    basis = I.gb()
    n = I.ring.n
    if not basis:
        return n
    if I.is_unit():
        return -1
    supports = [frozenset(i for i, e in enumerate(g.lm()) if e) for g in basis]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            S = frozenset(S)
            if not any(s <= S for s in supports):
                return size
    return 0


def is_homogeneous(I: Ideal) -> bool:
    return all(g.is_homogeneous() for g in I.gb())
