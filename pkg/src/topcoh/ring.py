"""Exact multivariate polynomials over Q and F_p.

Monomials are plain tuples of exponents. Coefficients over Q are Python
ints or Fractions (a Fraction with denominator 1 is always stored as an
int); over F_p they are ints in ``range(p)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence

from .errors import InvalidArgument, RingMismatch

Monomial = tuple

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class Ring:
    """A standard-graded polynomial ring k[x_1, ..., x_n], k = Q or F_p."""

    variables: tuple
    characteristic: int = 0

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise InvalidArgument("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise InvalidArgument(f"duplicate variable names in {self.variables}")
        for v in self.variables:
            if not isinstance(v, str) or not _IDENT.match(v):
                raise InvalidArgument(f"invalid variable name {v!r}")
        c = self.characteristic
        if c != 0 and not (_is_prime(c) and c < 2**31):
            raise InvalidArgument(f"characteristic must be 0 or a prime below 2^31, got {c}")

    @property
    def n(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise InvalidArgument(f"unknown variable {name!r}") from None

    # -- coefficients -------------------------------------------------------

    def coerce(self, c):
        """Map an int/Fraction into the coefficient field."""
        p = self.characteristic
        if p == 0:
            if isinstance(c, Fraction):
                return c.numerator if c.denominator == 1 else c
            if isinstance(c, int):
                return c
            raise InvalidArgument(f"unsupported coefficient {c!r}")
        if isinstance(c, Fraction):
            if c.denominator % p == 0:
                raise ZeroDivisionError(f"denominator {c.denominator} not invertible mod {p}")
            return c.numerator * pow(c.denominator, -1, p) % p
        if isinstance(c, int):
            return c % p
        raise InvalidArgument(f"unsupported coefficient {c!r}")

    def inverse(self, c):
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p == 0:
            return self.coerce(Fraction(1) / c)
        return pow(c, -1, p)

    # -- constructors -------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.n: c})

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.n
        e[i] = 1
        return Polynomial._raw(self, {tuple(e): 1})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.n)]

    def monomial(self, exponents: Sequence[int], coef=1) -> "Polynomial":
        return Polynomial(self, {tuple(exponents): coef})

    def extend(self, names: Iterable[str]) -> "Ring":
        """The ring with ``names`` prepended to the variable list."""
        return Ring(tuple(names) + self.variables, self.characteristic)


# -- monomial helpers ------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


# -- orders ----------------------------------------------------------------

def _grevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order, exposed as a sort key (larger key = larger monomial).

    ``kind`` is ``"lex"``, ``"grevlex"`` or ``"block"``. A block order
    compares the variables listed in ``elim`` first (grevlex among
    themselves) and breaks ties by grevlex on the remaining variables, so it
    eliminates exactly ``elim``.
    """

    kind: str = "grevlex"
    elim: tuple = ()
    key: Callable = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind == "lex":
            key = tuple
        elif self.kind == "grevlex":
            key = _grevlex_key
        elif self.kind == "block":
            if not self.elim:
                raise InvalidArgument("block order needs a nonempty elimination set")
            elim = tuple(sorted(set(self.elim)))
            object.__setattr__(self, "elim", elim)
            elim_set = set(elim)

            def key(m):
                inner = tuple(e for i, e in enumerate(m) if i in elim_set)
                outer = tuple(e for i, e in enumerate(m) if i not in elim_set)
                return (_grevlex_key(inner), _grevlex_key(outer))
        else:
            raise InvalidArgument(f"unknown monomial order {self.kind!r}")
        object.__setattr__(self, "key", key)


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(elim: Iterable[int]) -> MonomialOrder:
    return MonomialOrder("block", tuple(elim))


# -- polynomials -----------------------------------------------------------

class Polynomial:
    """An immutable polynomial: a map monomial -> nonzero coefficient.

    Equality is structural (same ring, same term map). ``terms(order)``
    gives the canonical descending term list for a monomial order.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, object]):
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != ring.n or any((not isinstance(e, int)) or e < 0 for e in m):
                raise InvalidArgument(f"bad exponent vector {m} for ring with {ring.n} variables")
            c = ring.coerce(c)
            if c:
                clean[m] = c
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # trusted path: terms already canonical
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- inspection

    @property
    def coefficients(self) -> Mapping:
        return MappingProxyType(self._terms)

    def terms(self, order: MonomialOrder = GREVLEX) -> list:
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monomials(self) -> list:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def lead(self, order: MonomialOrder = GREVLEX):
        """(leading monomial, leading coefficient)."""
        if not self._terms:
            raise InvalidArgument("zero polynomial has no leading term")
        m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def lm(self, order: MonomialOrder = GREVLEX) -> Monomial:
        return self.lead(order)[0]

    def lc(self, order: MonomialOrder = GREVLEX):
        return self.lead(order)[1]

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def support(self) -> set:
        """Indices of variables that occur."""
        return {i for m in self._terms for i, e in enumerate(m) if e}

    # -- arithmetic

    def _check(self, other):
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Polynomial._raw(self.ring, _add_terms(self.ring, self._terms, other._terms, 1))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Polynomial._raw(self.ring, _add_terms(self.ring, self._terms, other._terms, -1))

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        ring = self.ring
        return Polynomial._raw(ring, {m: ring.coerce(-c) for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(ring, _clean(ring, out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InvalidArgument("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        ring = self.ring
        c = ring.coerce(c)
        if not c:
            return ring.zero()
        return Polynomial._raw(ring, _clean(ring, {m: v * c for m, v in self._terms.items()}))

    def mul_term(self, mono: Monomial, coef) -> "Polynomial":
        ring = self.ring
        if not coef:
            return ring.zero()
        return Polynomial._raw(
            ring, _clean(ring, {mono_mul(m, mono): v * coef for m, v in self._terms.items()})
        )

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        lc = self.lc(order)
        if lc == 1:
            return self
        return self.scale(self.ring.inverse(lc))

    def change_ring(self, ring: Ring, positions: Sequence[int]) -> "Polynomial":
        """Move into ``ring``; variable i of self becomes variable positions[i]."""
        out = {}
        for m, c in self._terms.items():
            e = [0] * ring.n
            for i, x in enumerate(m):
                e[positions[i]] += x
            out[tuple(e)] = c
        return Polynomial(ring, out)

    # -- comparison / display

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _clean(ring, terms):
    out = {}
    for m, c in terms.items():
        c = ring.coerce(c)
        if c:
            out[m] = c
    return out


def _add_terms(ring, a, b, sign):
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + sign * c
        v = ring.coerce(v)
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def format_monomial(ring: Ring, m: Monomial) -> str:
    parts = []
    for name, e in zip(ring.variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """Render as text the parser reads back, terms descending in ``order``."""
    if p.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(p.terms(order)):
        neg = c < 0 if p.ring.characteristic == 0 else False
        mag = -c if neg else c
        mono = format_monomial(p.ring, m)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# -- division --------------------------------------------------------------

def divide(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder = GREVLEX):
    """Multivariate division of f by the list G.

    Returns ``(quotients, remainder)`` with f = sum(q_i * g_i) + remainder
    and no term of the remainder divisible by any leading monomial of G.
    Reducers are tried in list order, always on the current leading term.
    """
    ring = f.ring
    for g in G:
        if g.ring != ring:
            raise RingMismatch(f"{g.ring} vs {ring}")
    G = [g for g in G if g]
    leads = [g.lead(order) for g in G]
    inv = [ring.inverse(c) for _, c in leads]
    quotients = [dict() for _ in G]
    p = dict(f._terms)
    r = {}
    key = order.key
    while p:
        m = max(p, key=key)
        c = p[m]
        for i, (lm, _) in enumerate(leads):
            if mono_divides(lm, m):
                q_m = mono_div(m, lm)
                q_c = ring.coerce(c * inv[i])
                quotients[i][q_m] = ring.coerce(quotients[i].get(q_m, 0) + q_c)
                for gm, gc in G[i]._terms.items():
                    t = mono_mul(gm, q_m)
                    v = ring.coerce(p.get(t, 0) - q_c * gc)
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            r[m] = c
            del p[m]
    qs = [Polynomial._raw(ring, _clean(ring, q)) for q in quotients]
    return qs, Polynomial._raw(ring, r)


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Fully reduced remainder of f modulo G."""
    return divide(f, G, order)[1]


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    if not f or not g:
        raise InvalidArgument("S-polynomial of a zero polynomial")
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    ring = f.ring
    mf, cf = f.lead(order)
    mg, cg = g.lead(order)
    lcm = mono_lcm(mf, mg)
    return f.mul_term(mono_div(lcm, mf), ring.inverse(cf)) - g.mul_term(
        mono_div(lcm, mg), ring.inverse(cg)
    )
