"""Ordinals below epsilon_0 in Cantor normal form.

An ordinal is stored as a nested tuple ``((exponent, coefficient), ...)`` with
strictly decreasing exponents, where every exponent is itself such a tuple.
Python's lexicographic tuple comparison then coincides with the ordinal order,
so comparisons run at C speed and canonical forms double as hash keys.
"""
from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterable, Tuple, Union

Cnf = Tuple[Tuple["Cnf", int], ...]

_ZERO: Cnf = ()
_ONE: Cnf = (((), 1),)
_OMEGA: Cnf = ((_ONE, 1),)


class OrdinalKind(enum.Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


class Order(enum.Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"


# ---------------------------------------------------------------------------
# raw tuple arithmetic

def _nat(n: int) -> Cnf:
    if n < 0:
        raise ValueError(f"ordinals are non-negative, got {n}")
    return ((_ZERO, n),) if n else _ZERO


def _add(a: Cnf, b: Cnf) -> Cnf:
    if not b:
        return a
    if not a:
        return b
    lead = b[0][0]
    out = []
    for e, c in a:
        if e > lead:
            out.append((e, c))
        elif e == lead:
            out.append((e, c + b[0][1]))
            return tuple(out) + b[1:]
        else:
            break
    return tuple(out) + b


def _mul(a: Cnf, b: Cnf) -> Cnf:
    if not a or not b:
        return _ZERO
    lead, lead_c = a[0]
    out: Cnf = _ZERO
    for e, c in b:
        if e:
            piece: Cnf = ((_add(lead, e), c),)
        else:
            piece = ((lead, lead_c * c),) + a[1:]
        out = _add(out, piece)
    return out


def _left_diff(a: Cnf, b: Cnf) -> Cnf:
    """The unique d with a + d = b, for a <= b."""
    for k, (ea, ca) in enumerate(a):
        if k >= len(b):
            raise ValueError("left difference needs a <= b")
        eb, cb = b[k]
        if (ea, ca) == (eb, cb):
            continue
        if ea == eb:
            if ca > cb:
                raise ValueError("left difference needs a <= b")
            return ((eb, cb - ca),) + b[k + 1:]
        if ea > eb:
            raise ValueError("left difference needs a <= b")
        return b[k:]
    return b[len(a):]


def _kind(a: Cnf) -> OrdinalKind:
    if not a:
        return OrdinalKind.ZERO
    return OrdinalKind.SUCCESSOR if not a[-1][0] else OrdinalKind.LIMIT


@lru_cache(maxsize=65536)
def _fundamental(lam: Cnf, n: int) -> Cnf:
    if _kind(lam) is not OrdinalKind.LIMIT:
        raise ValueError("fundamental sequences exist only for limit ordinals")
    e, c = lam[-1]
    base = lam[:-1] + (((e, c - 1),) if c > 1 else ())
    if _kind(e) is OrdinalKind.SUCCESSOR:
        pred = _pred(e)
        return _add(base, ((pred, n),) if n else _ZERO)
    return _add(base, ((_fundamental(e, n), 1),))


def _pred(a: Cnf) -> Cnf:
    e, c = a[-1]
    return a[:-1] + (((e, c - 1),) if c > 1 else ())


def _depth(a: Cnf) -> int:
    return 0 if not a else 1 + max(_depth(e) for e, _ in a)


def _check(a: Cnf) -> None:
    prev = None
    for e, c in a:
        if not isinstance(c, int) or c < 1:
            raise ValueError(f"coefficients must be positive integers, got {c!r}")
        if prev is not None and not e < prev:
            raise ValueError("exponents must be strictly decreasing")
        _check(e)
        prev = e


# ---------------------------------------------------------------------------
# public value type

OrdinalLike = Union["Ordinal", int]


class Ordinal:
    """Immutable ordinal below epsilon_0.

    ``Ordinal(5)`` is a natural number; use :func:`omega_pow` and the
    arithmetic operators for everything else, or :func:`wellordered.parse`.
    """

    __slots__ = ("_cnf",)

    def __init__(self, n: int = 0):
        self._cnf = _nat(int(n))

    @classmethod
    def _wrap(cls, cnf: Cnf) -> Ordinal:
        obj = object.__new__(cls)
        obj._cnf = cnf
        return obj

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[OrdinalLike, int]]) -> Ordinal:
        """Sum of ``omega**e * c`` over *terms*, normalized to CNF."""
        out: Cnf = _ZERO
        for e, c in terms:
            if c < 0:
                raise ValueError("coefficients must be non-negative")
            if c:
                out = _add(out, ((as_ordinal(e)._cnf, c),))
        return cls._wrap(out)

    @classmethod
    def from_cnf(cls, cnf: Cnf) -> Ordinal:
        _check(cnf)
        return cls._wrap(cnf)

    @property
    def cnf(self) -> Cnf:
        return self._cnf

    @property
    def terms(self) -> tuple[tuple[Ordinal, int], ...]:
        return tuple((Ordinal._wrap(e), c) for e, c in self._cnf)

    @property
    def kind(self) -> OrdinalKind:
        return _kind(self._cnf)

    @property
    def is_finite(self) -> bool:
        return not self._cnf or not self._cnf[0][0]

    @property
    def is_limit(self) -> bool:
        return _kind(self._cnf) is OrdinalKind.LIMIT

    @property
    def depth(self) -> int:
        """Exponent nesting depth (0 for zero, 1 for positive naturals)."""
        return _depth(self._cnf)

    def __int__(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self._cnf[0][1] if self._cnf else 0

    __index__ = __int__

    def __bool__(self) -> bool:
        return bool(self._cnf)

    def __hash__(self) -> int:
        return hash(self._cnf)

    def __eq__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else self._cnf == other._cnf

    def __lt__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else self._cnf < other._cnf

    def __le__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else self._cnf <= other._cnf

    def __gt__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else self._cnf > other._cnf

    def __ge__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else self._cnf >= other._cnf

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else Ordinal._wrap(_add(self._cnf, other._cnf))

    def __radd__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else Ordinal._wrap(_add(other._cnf, self._cnf))

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else Ordinal._wrap(_mul(self._cnf, other._cnf))

    def __rmul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else Ordinal._wrap(_mul(other._cnf, self._cnf))

    def __str__(self) -> str:
        from .notation import render
        return render(self)

    def __repr__(self) -> str:
        return f"Ordinal({str(self)!r})"

    def __reduce__(self):
        return (Ordinal.from_cnf, (self._cnf,))


def _coerce(x) -> Ordinal | None:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Ordinal(x)
    return None


def as_ordinal(x: OrdinalLike) -> Ordinal:
    o = _coerce(x)
    if o is None:
        raise TypeError(f"cannot interpret {x!r} as an ordinal")
    return o


ZERO = Ordinal._wrap(_ZERO)
ONE = Ordinal._wrap(_ONE)
OMEGA = Ordinal._wrap(_OMEGA)


# ---------------------------------------------------------------------------
# functional API

def compare(a: OrdinalLike, b: OrdinalLike) -> Order:
    x, y = as_ordinal(a)._cnf, as_ordinal(b)._cnf
    if x == y:
        return Order.EQUAL
    return Order.LESS if x < y else Order.GREATER


def add(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    return as_ordinal(a) + as_ordinal(b)


def mul(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    return as_ordinal(a) * as_ordinal(b)


def omega_pow(e: OrdinalLike) -> Ordinal:
    return Ordinal._wrap(((as_ordinal(e)._cnf, 1),))


def classify(a: OrdinalLike) -> OrdinalKind:
    return as_ordinal(a).kind


def fundamental_sequence(lam: OrdinalLike, n: int) -> Ordinal:
    """The n-th element of the standard (Wainer) fundamental sequence of *lam*.

    (g + w^(b+1))[n] = g + w^b * n, (g + w^l)[n] = g + w^(l[n]) for limit l;
    a coefficient c > 1 is unfolded as g + w^b*(c-1) + (w^b)[n].
    """
    if n < 0:
        raise ValueError("index must be a natural number")
    return Ordinal._wrap(_fundamental(as_ordinal(lam)._cnf, n))


def left_difference(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """Return the unique d with ``a + d == b`` (requires a <= b)."""
    return Ordinal._wrap(_left_diff(as_ordinal(a)._cnf, as_ordinal(b)._cnf))


def predecessor(a: OrdinalLike) -> Ordinal:
    a = as_ordinal(a)
    if a.kind is not OrdinalKind.SUCCESSOR:
        raise ValueError(f"{a} has no predecessor")
    return Ordinal._wrap(_pred(a._cnf))
