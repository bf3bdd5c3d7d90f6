"""Computable bijections between a countable ordinal and omega.

Direction convention: ``Enumeration.forward`` maps an index below ``alpha`` to
a natural number (a bijection alpha -> omega, used to spread an omega-series
over alpha); ``Enumeration.backward`` is its inverse omega -> alpha.

The canonical enumeration works on the Cantor normal form of alpha. Finite
trailing points come first; the infinite blocks ``w^e`` of alpha are then
interleaved round-robin, and inside a block ``w^e`` the Cantor pairing
function recurses on the exponent:

* ``w^k``, k finite: the coefficient tuple of ``w^(k-1), ..., w^0`` ranked
  by the graded Cantor polynomial (``w*a + b -> pair(a, b)`` for k = 2);
* ``w^(l+k)``, l limit: the k coefficients above ``w^l`` plus the position
  of the remainder below ``w^l``, ranked the same way;
* ``w^l``, l limit: the block is cut along the fundamental sequence of l
  into pieces ``[w^(l[n]), w^(l[n+1]))`` of type ``w^(l[n+1])``, and the
  piece number is paired with the position inside the piece.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .hyperseq import IndicatorMask
from .ordinal import (Cnf, Ordinal, OrdinalLike, _add, _fundamental, _left_diff, _nat,
                      as_ordinal)


def pair(a: int, b: int) -> int:
    """Cantor pairing ``(a+b)(a+b+1)/2 + a``."""
    s = a + b
    return s * (s + 1) // 2 + a


def unpair(n: int) -> tuple[int, int]:
    s = (math.isqrt(8 * n + 1) - 1) // 2
    a = n - s * (s + 1) // 2
    return a, s - a


def tuple_rank(xs: Sequence[int]) -> int:
    """Cantor polynomial of a k-tuple: tuples are graded by their sum.

    ``sum(C(S_j + j - 1, j) for j = 1..k)`` with ``S_j = x_1 + ... + x_j``;
    for k = 2 this is :func:`pair`. Positions grow like (sum)^k / k!.
    """
    n = s = 0
    for j, x in enumerate(xs, start=1):
        s += x
        n += math.comb(s + j - 1, j)
    return n


def _largest_sum(n: int, j: int) -> int:
    # largest S with C(S + j - 1, j) <= n
    lo, hi = 0, 1
    while math.comb(hi + j - 1, j) <= n:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid + j - 1, j) <= n:
            lo = mid
        else:
            hi = mid
    return lo


def tuple_unrank(n: int, k: int) -> list[int]:
    """Inverse of :func:`tuple_rank` for k-tuples."""
    sums = [0] * (k + 1)
    for j in range(k, 0, -1):
        sums[j] = _largest_sum(n, j)
        n -= math.comb(sums[j] + j - 1, j)
    return [sums[j] - sums[j - 1] for j in range(1, k + 1)]


def _split_exponent(e: Cnf) -> tuple[Cnf, int]:
    """e = head + k with head zero or a limit, k finite."""
    if e and not e[-1][0]:
        return e[:-1], e[-1][1]
    return e, 0


def _power_index(e: Cnf, d: Cnf) -> int:
    """Position of d < w^e in the canonical bijection w^e -> omega (e >= 1).

    With e = head + k, d is a k-tuple of coefficients of w^(head+k-1), ...,
    w^head, followed (when head > 0) by a remainder below w^head; the tuple is
    ranked with :func:`tuple_rank`. For limit head the remainder lies in a
    piece ``[w^(head[n-1]), w^(head[n]))`` and is ranked as ``pair(n-1, .)``.
    Fundamental-sequence chains can be long, so the descent is a loop.
    """
    pending = []  # (coefficient tuple, piece number) to fold back in
    while True:
        head, k = _split_exponent(e)
        coeffs = []
        for j in range(k - 1, -1, -1):
            ex = _add(head, _nat(j))
            if d and d[0][0] == ex:
                coeffs.append(d[0][1])
                d = d[1:]
            else:
                coeffs.append(0)
        if not head:
            n = tuple_rank(coeffs)
            break
        if not d:
            # the remainder is 0, whose position is 0 in every block
            n = tuple_rank(coeffs + [0])
            break
        lead = d[0][0]
        piece = 1
        while not lead < _fundamental(head, piece):
            piece += 1
        if piece > 1:
            d = _left_diff(((_fundamental(head, piece - 1), 1),), d)
        pending.append((coeffs, piece - 1))
        e = _fundamental(head, piece)
    for coeffs, piece in reversed(pending):
        n = tuple_rank(coeffs + [pair(piece, n)])
    return n


def _power_ordinal(e: Cnf, n: int) -> Cnf:
    """Inverse of :func:`_power_index`."""
    pending = []  # (terms above the remainder, piece start or None)
    while True:
        head, k = _split_exponent(e)
        xs = tuple_unrank(n, k + 1 if head else k)
        out = tuple((_add(head, _nat(k - 1 - j)), c) for j, c in enumerate(xs[:k]) if c)
        if not head or not xs[k]:
            d = out
            break
        piece, n = unpair(xs[k])
        start = ((_fundamental(head, piece), 1),) if piece else None
        pending.append((out, start))
        e = _fundamental(head, piece + 1)
    for out, start in reversed(pending):
        if start is not None:
            d = _add(start, d)
        d = out + d
    return d


@dataclass(frozen=True)
class Enumeration:
    alpha: Ordinal
    forward: Callable[[Ordinal], int]
    backward: Callable[[int], Ordinal]
    provenance: str = "canonical"

    def __repr__(self):
        return f"Enumeration({self.alpha}, {self.provenance})"


def canonical_enumeration(alpha: OrdinalLike) -> Enumeration:
    alpha = as_ordinal(alpha)
    if alpha.is_finite:
        raise ValueError(f"{alpha} is finite; enumerations need an infinite ordinal")
    cnf = alpha.cnf
    infinite = [(e, c) for e, c in cnf if e]
    points = cnf[-1][1] if not cnf[-1][0] else 0
    blocks = sum(c for _, c in infinite)
    finite_start: Cnf = tuple(infinite)

    def forward(i: Ordinal) -> int:
        d = as_ordinal(i).cnf
        start: Cnf = ()
        before = 0
        for e, c in infinite:
            end = start + ((e, c),)
            if d < end:
                rem = _left_diff(start, d)
                if rem and rem[0][0] == e:
                    j, r = rem[0][1], rem[1:]
                else:
                    j, r = 0, rem
                return points + blocks * _power_index(e, r) + before + j
            start, before = end, before + c
        j = _left_diff(finite_start, d)
        j = j[0][1] if j else 0
        if j >= points:
            raise ValueError(f"{i} is not below {alpha}")
        return j

    def backward(n: int) -> Ordinal:
        if n < 0:
            raise ValueError("positions are natural numbers")
        if n < points:
            return Ordinal._wrap(_add(finite_start, _nat(n)))
        q, b = divmod(n - points, blocks)
        start: Cnf = ()
        for e, c in infinite:
            if b < c:
                offset = start + (((e, b),) if b else ())
                return Ordinal._wrap(_add(offset, _power_ordinal(e, q)))
            start, b = start + ((e, c),), b - c
        raise AssertionError("unreachable")

    return Enumeration(alpha, forward, backward, "canonical")


def perturb(e: Enumeration, seed: int, window: int) -> Enumeration:
    """Compose e with a seeded random permutation of the positions 0..window-1."""
    if window < 1:
        raise ValueError("window must be at least 1")
    perm = [int(k) for k in np.random.default_rng(seed).permutation(window)]
    inv = [0] * window
    for k, v in enumerate(perm):
        inv[v] = k
    fwd, bwd = e.forward, e.backward

    def forward(i: Ordinal) -> int:
        k = fwd(i)
        return perm[k] if k < window else k

    def backward(n: int) -> Ordinal:
        return bwd(inv[n] if n < window else n)

    return Enumeration(e.alpha, forward, backward, f"perturb:{seed}:{window}({e.provenance})")


def parse_bijection(spec: str, alpha: OrdinalLike) -> Enumeration:
    """``canonical`` or ``perturb:<seed>:<window>`` over alpha."""
    base = canonical_enumeration(alpha)
    spec = spec.strip()
    if spec == "canonical":
        return base
    parts = spec.split(":")
    if len(parts) == 3 and parts[0] == "perturb":
        try:
            return perturb(base, int(parts[1]), int(parts[2]))
        except ValueError as exc:
            raise ValueError(f"bad bijection spec {spec!r}: {exc}") from None
    raise ValueError(f"bijection spec must be 'canonical' or 'perturb:<seed>:<window>', got {spec!r}")


def image_membership(e: Enumeration, beta: OrdinalLike, n: int) -> bool:
    """Whether n lies in f[beta], the image of the indices below beta."""
    return e.backward(n) < as_ordinal(beta)


def image_mask(e: Enumeration, beta: OrdinalLike) -> IndicatorMask:
    beta = as_ordinal(beta)
    if beta > e.alpha:
        raise ValueError(f"{beta} exceeds the enumerated ordinal {e.alpha}")
    bwd = e.backward
    return IndicatorMask(lambda n: bwd(n) < beta, f"f[{beta}]")


def position_in_image(e: Enumeration, beta: OrdinalLike, i: OrdinalLike) -> int:
    """card{k in f[beta] : k < f(i)}: where f(i) sits inside the image of beta."""
    beta, i = as_ordinal(beta), as_ordinal(i)
    if not i < beta:
        raise ValueError(f"index {i} is not below {beta}")
    if beta > e.alpha:
        raise ValueError(f"{beta} exceeds the enumerated ordinal {e.alpha}")
    bwd = e.backward
    return sum(1 for k in range(e.forward(i)) if bwd(k) < beta)


@dataclass(frozen=True)
class OrdinalBijection:
    """A bijection between two ordinals, with its inverse."""

    domain: Ordinal
    codomain: Ordinal
    apply: Callable[[Ordinal], Ordinal]
    inverse: Callable[[Ordinal], Ordinal]


def compose_to(e_alpha: Enumeration, e_beta: Enumeration) -> OrdinalBijection:
    """The bijection beta -> alpha obtained by passing through omega."""
    fa, ba = e_alpha.forward, e_alpha.backward
    fb, bb = e_beta.forward, e_beta.backward
    return OrdinalBijection(e_beta.alpha, e_alpha.alpha,
                            lambda i: ba(fb(i)), lambda j: bb(fa(j)))
