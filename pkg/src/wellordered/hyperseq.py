"""Hypersequences: term rules indexed by the ordinals below a domain ordinal."""
from __future__ import annotations

import hashlib
import math
import re
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Optional, Sequence

import numpy as np

from .ordinal import OMEGA, Ordinal, OrdinalLike, as_ordinal
from .space import SCALAR, RealVector, Space, norm, vector


class IndexOutOfDomain(IndexError):
    pass


class UnknownFamily(ValueError):
    pass


class InvalidParameter(ValueError):
    pass


@dataclass(frozen=True)
class TailBound:
    """Certified bound ``T(n)`` on the norm mass outside ``support(n)``.

    For a series over omega, ``support(n)`` is the first *n* indices, and the
    certificate reads ``sum(norm(a_i) for i >= n) <= T(n)``. Reindexed series
    keep the same ``T`` and carry the image of those indices instead, so every
    index outside ``support(n)`` still belongs to the certified tail.
    """

    bound: Callable[[int], float]
    support: Optional[Callable[[int], Sequence[Ordinal]]] = None

    def __call__(self, n: int) -> float:
        return float(self.bound(n))

    @property
    def is_initial(self) -> bool:
        return self.support is None

    def indices(self, n: int) -> list[Ordinal]:
        if self.support is None:
            return [Ordinal(k) for k in range(n)]
        return list(self.support(n))

    def first_below(self, eps: float, cap: int) -> Optional[int]:
        """Smallest n <= cap with T(n) < eps, or None."""
        if self(0) < eps:
            return 0
        if self(cap) >= eps:
            return None
        lo, hi = 0, 1
        while self(hi) >= eps:
            lo, hi = hi, min(2 * hi, cap)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self(mid) < eps:
                hi = mid
            else:
                lo = mid
        return hi


ZERO_TAIL = TailBound(lambda n: 0.0, lambda n: ())


@dataclass(frozen=True)
class IndicatorMask:
    """Membership predicate for a subset of omega."""

    contains: Callable[[int], bool]
    label: str = "S"

    def __contains__(self, n: int) -> bool:
        return bool(self.contains(n))

    def complement(self) -> IndicatorMask:
        inner = self.contains
        return IndicatorMask(lambda n: not inner(n), f"~{self.label}")

    @classmethod
    def everything(cls) -> IndicatorMask:
        return cls(lambda n: True, "all")

    @classmethod
    def nothing(cls) -> IndicatorMask:
        return cls(lambda n: False, "none")

    @classmethod
    def evens(cls) -> IndicatorMask:
        return cls(lambda n: n % 2 == 0, "evens")

    @classmethod
    def odds(cls) -> IndicatorMask:
        return cls(lambda n: n % 2 == 1, "odds")

    @classmethod
    def finite(cls, members) -> IndicatorMask:
        members = frozenset(int(m) for m in members)
        return cls(members.__contains__, f"{sorted(members)}")

    @classmethod
    def random(cls, seed: int, density: float = 0.5) -> IndicatorMask:
        """Pseudorandom subset of omega; membership of n depends only on (seed, n)."""
        def member(n: int) -> bool:
            digest = hashlib.blake2b(f"{seed}:{n}".encode(), digest_size=8).digest()
            return int.from_bytes(digest, "big") < density * 2.0**64
        return cls(member, f"random({seed})")


@dataclass(frozen=True)
class Hypersequence:
    """A term rule ``a: domain -> space``, optionally with a tail certificate."""

    domain: Ordinal
    rule: Callable[[Ordinal], Any] = field(repr=False)
    space: Space = SCALAR
    tail: Optional[TailBound] = field(default=None, repr=False)
    label: str = "custom"

    def __call__(self, i: OrdinalLike):
        return term_at(self, i)

    @property
    def certified(self) -> bool:
        return self.tail is not None


def term_at(h: Hypersequence, i: OrdinalLike):
    i = as_ordinal(i)
    if not i < h.domain:
        raise IndexOutOfDomain(f"index {i} is outside the domain {h.domain}")
    return h.rule(i)


def custom(rule: Callable[[Ordinal], Any], domain: OrdinalLike = OMEGA,
           space: Space = SCALAR, label: str = "custom") -> Hypersequence:
    """Wrap a user term rule. No tail bound: sums of it are never certified."""
    return Hypersequence(as_ordinal(domain), rule, space, None, label)


def custom_natural(fn: Callable[[int], Any], space: Space = SCALAR,
                   label: str = "custom") -> Hypersequence:
    """Uncertified omega-series from a rule on Python ints."""
    return Hypersequence(OMEGA, lambda i: fn(int(i)), space, None, label)


def zero_series(domain: OrdinalLike = OMEGA, space: Space = SCALAR) -> Hypersequence:
    z = space.zero()
    return Hypersequence(as_ordinal(domain), lambda i: z, space, ZERO_TAIL, "zero")


def _omega_family(fn, bound, space=SCALAR, label="") -> Hypersequence:
    return Hypersequence(OMEGA, lambda i: fn(int(i)), space, TailBound(bound), label)


# past this exponent r^n is 0.0 in double precision for every |r| < 1
_HUGE = 2**64


def _power(r: float, n: int) -> float:
    # positions in rearrangements can exceed the float range; keep the parity
    if n > _HUGE:
        n = _HUGE + (n & 1)
    return r ** n


def _geometric(r: float, scale: float = 1.0) -> Hypersequence:
    if not abs(r) < 1:
        raise InvalidParameter(f"geometric ratio must satisfy |r| < 1, got {r}")
    ar = abs(r)
    return _omega_family(lambda i: scale * _power(r, i + 1),
                         lambda n: abs(scale) * ar ** (n + 1) / (1 - ar),
                         label=f"geometric({r:g})" if scale == 1 else f"geometric({r:g},{scale:g})")


def _n_over_2n() -> Hypersequence:
    # sum_{i>=n} (i+1)/2^(i+1) = (n+2)/2^n exactly
    return _omega_family(lambda i: math.ldexp(i + 1, -(i + 1)) if i < _HUGE else 0.0,
                         lambda n: math.ldexp(n + 2, -n), label="n_over_2n")


def _p_series(p: float) -> Hypersequence:
    if not p > 1:
        raise InvalidParameter(f"p-series needs p > 1 for a tail bound, got {p}")

    def bound(n: int) -> float:
        # integral test; at n = 0 the first term 1 is added explicitly
        if n == 0:
            return p / (p - 1)
        return 1.0 / ((p - 1) * n ** (p - 1))
    def term(i: int) -> float:
        try:
            return 1.0 / float(i + 1) ** p
        except OverflowError:
            return 0.0
    return _omega_family(term, bound, label=f"p_series({p:g})")


def _vector_geometric(d: float, r: float) -> Hypersequence:
    if d != int(d) or d < 1:
        raise InvalidParameter(f"dimension must be a positive integer, got {d}")
    if not abs(r) < 1:
        raise InvalidParameter(f"geometric ratio must satisfy |r| < 1, got {r}")
    d = int(d)
    ar = abs(r)
    basis = [vector(np.eye(d)[k]) for k in range(d)]

    def term(i: int):
        return vector(basis[i % d] * _power(r, i + 1))
    return _omega_family(term, lambda n: ar ** (n + 1) / (1 - ar), RealVector(d),
                         label=f"vector_geometric({d},{r:g})")


def _column_of(n: int) -> int:
    # column j of the staircase occupies positions j(j+1)/2 .. j(j+1)/2 + j
    return (math.isqrt(8 * n + 1) - 1) // 2


def _staircase() -> Hypersequence:
    """The terms of n_over_2n split into unit fractions: 1/2, 1/4, 1/4, 1/8, 1/8, 1/8, ...

    Column j holds j+1 copies of 2^-(j+1). Arranged over w^2 by the canonical
    enumeration, row r of the table is 2^-(r+1), 2^-(r+2), ...
    """
    def term(n: int) -> float:
        return math.ldexp(1.0, -(_column_of(n) + 1))

    def bound(n: int) -> float:
        j = _column_of(n)
        return math.ldexp(j + 2, -j)
    return _omega_family(term, bound, label="staircase")


FAMILIES: dict[str, Callable[..., Hypersequence]] = {
    "zero": lambda: zero_series(),
    "geometric": _geometric,
    "n_over_2n": _n_over_2n,
    "p_series": _p_series,
    "vector_geometric": _vector_geometric,
    "staircase": _staircase,
}

# uncertified rules available from the command line
CUSTOM: dict[str, Callable[[int], float]] = {
    "harmonic": lambda i: 1.0 / (i + 1),
    "inverse_square": lambda i: 1.0 / (i + 1) ** 2,
    "alternating": lambda i: (-1.0) ** i / 2.0 ** (i + 1),
}


def make_family(name: str, *params: float) -> Hypersequence:
    """Build a named omega-series together with its analytic tail bound."""
    try:
        factory = FAMILIES[name]
    except KeyError:
        raise UnknownFamily(f"unknown family {name!r}; known: {', '.join(FAMILIES)}") from None
    try:
        return factory(*params)
    except TypeError as exc:
        raise InvalidParameter(f"bad parameters for {name}: {params}") from exc


_SPEC = re.compile(r"^\s*(family|custom):([a-z_0-9]+)\s*(?:\((.*)\))?\s*$")


def parse_series(spec: str) -> Hypersequence:
    """Parse ``family:name(p1,p2)`` or ``custom:name``."""
    m = _SPEC.match(spec)
    if not m:
        raise ValueError(f"series spec must look like 'family:name(params)', got {spec!r}")
    kind, name, args = m.groups()
    params = []
    if args and args.strip():
        try:
            params = [float(a) for a in args.split(",")]
        except ValueError:
            raise InvalidParameter(f"non-numeric parameter in {spec!r}") from None
    if kind == "custom":
        if name not in CUSTOM or params:
            raise UnknownFamily(f"unknown custom series {name!r}; known: {', '.join(CUSTOM)}")
        return custom_natural(CUSTOM[name], label=f"custom:{name}")
    return make_family(name, *params)


def mask(h: Hypersequence, S: IndicatorMask) -> Hypersequence:
    """Keep the terms indexed by S and zero the rest; the tail bound still holds."""
    if h.domain != OMEGA:
        raise ValueError(f"masks apply to series over w, not {h.domain}")
    z = h.space.zero()
    rule, contains = h.rule, S.contains

    def masked(i: Ordinal):
        return rule(i) if contains(int(i)) else z
    return replace(h, rule=masked, label=f"{h.label}[{S.label}]")


def restrict(h: Hypersequence, beta: OrdinalLike) -> Hypersequence:
    """The restriction of h to the indices below beta."""
    beta = as_ordinal(beta)
    if beta > h.domain:
        raise ValueError(f"cannot restrict a series over {h.domain} to {beta}")
    if beta == h.domain:
        return h
    tail = h.tail
    if tail is not None:
        inner = tail.indices
        tail = TailBound(tail.bound, lambda n: [i for i in inner(n) if i < beta])
    return replace(h, domain=beta, tail=tail, label=f"{h.label}|{beta}")


def norm_series(h: Hypersequence) -> Hypersequence:
    """The real series of term norms, over the same domain and tail certificate."""
    rule = h.rule
    return replace(h, rule=lambda i: norm(rule(i)), space=SCALAR, label=f"|{h.label}|")


def reindex(h: Hypersequence, domain: Ordinal, to_old: Callable[[Ordinal], Ordinal],
            to_new: Callable[[Ordinal], Ordinal], label: str) -> Hypersequence:
    """Compose h with a bijection ``to_old: domain -> h.domain`` (inverse ``to_new``).

    The tail certificate is pulled back through the bijection: the image of
    the certified head is still the certified head.
    """
    rule = h.rule
    tail = h.tail
    if tail is not None:
        head = tail.indices
        tail = TailBound(tail.bound, lambda n: [to_new(i) for i in head(n)])
    return Hypersequence(domain, lambda i: rule(to_old(i)), h.space, tail, label)
