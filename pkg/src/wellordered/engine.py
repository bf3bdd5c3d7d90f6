"""Transfinite partial sums of hypersequences.

The engine follows the recursion that defines the partial sum hypersequence:
``s_0 = 0``, ``s_(a+1) = s_a + a_a``, and at a limit ``l`` the value is the
limit of earlier partial sums. Limits are approached along the fundamental
sequence of ``l``; the domain is walked block by block following its Cantor
normal form, left to right.

Limits are finitized in one of two ways.

Certified
    The series carries a :class:`~wellordered.hyperseq.TailBound`. The engine
    picks the smallest ``n0`` with ``T(n0) < tol`` and collects the finite set
    ``P = support(n0)`` of indices that carry the certified head of the
    series. A limit stage stops as soon as no index of ``P`` remains ahead of
    it. Everything skipped, over all stages together, lies outside ``P``, so
    its total norm is at most ``T(n0)``.

Uncertified
    Without a tail bound a limit stage stops once 8 consecutive samples lie
    within ``tol`` of each other. Such results are flagged as heuristic, and
    only produced on request; by default the engine refuses with
    ``Unresolved(reason=NO_TAIL_BOUND)``.

Divergence is never claimed. A stage that cannot be finished within the
budget is reported as :class:`Unresolved` at the limit ordinal where it
stalled.
"""
from __future__ import annotations

import enum
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, replace
from typing import Any, Callable, NamedTuple, Optional, Union

from .hyperseq import Hypersequence, IndicatorMask, TailBound, mask, norm_series, restrict
from .ordinal import (_ONE, OMEGA, Cnf, Ordinal, OrdinalKind, OrdinalLike, _add, _fundamental,
                      _left_diff, _nat, as_ordinal, fundamental_sequence, predecessor)
from .space import axpy, norm

UNIT_ROUNDOFF = 2.0 ** -53
CAUCHY_WINDOW = 8


class Reason(str, enum.Enum):
    LIMIT_BUDGET_EXHAUSTED = "limit-budget-exhausted"
    NO_TAIL_BOUND = "no-tail-bound"
    CAUCHY_FAILED = "cauchy-failed"


@dataclass(frozen=True)
class EvalBudget:
    """Tolerance, samples allowed per limit stage, and total terms allowed."""

    tol: float = 1e-9
    limit_cap: int = 10**6
    term_cap: int = 10**7

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")
        if self.limit_cap < 2:
            raise ValueError("limit cap must be at least 2")
        if self.term_cap < self.limit_cap:
            raise ValueError("term cap must be at least the limit cap")


@dataclass(frozen=True)
class Converged:
    sum: Any
    err: float
    certified: bool = True
    terms: int = 0
    n0: Optional[int] = None

    @property
    def converged(self) -> bool:
        return True


@dataclass(frozen=True)
class Unresolved:
    reached: Ordinal
    reason: Reason

    @property
    def converged(self) -> bool:
        return False


SumOutcome = Union[Converged, Unresolved]


class _Stall(Exception):
    def __init__(self, reached: Cnf, reason: Reason):
        self.reached = reached
        self.reason = reason


class _Targets:
    """Sorted certified-head indices, queried by interval."""

    def __init__(self, tail: TailBound, n0: int, domain: Ordinal):
        self.count = None
        self.points: list[Cnf] = []
        if tail.is_initial:
            self.count = n0
        else:
            dom = domain.cnf
            self.points = sorted({i.cnf for i in tail.indices(n0) if i.cnf < dom})

    def last_in(self, lo: Cnf, hi: Cnf) -> Optional[Cnf]:
        """Largest target t with lo <= t < hi."""
        if self.count is not None:
            if lo and lo[0][0]:
                return None
            top = self.count - 1
            if not hi or not hi[0][0]:
                top = min(top, (hi[0][1] if hi else 0) - 1)
            if top < (lo[0][1] if lo else 0):
                return None
            return _nat(top)
        k = bisect_left(self.points, hi)
        if k and self.points[k - 1] >= lo:
            return self.points[k - 1]
        return None


class _Evaluation:
    def __init__(self, h: Hypersequence, budget: EvalBudget, targets: Optional[_Targets],
                 trace: Optional[Callable[[Ordinal, Any], None]]):
        self.rule = h.rule
        self.space = h.space
        self.budget = budget
        self.targets = targets
        self.trace = trace
        self.terms = 0
        self.mass = 0.0
        self.limits = 0
        self.stages: list[Cnf] = []

    def run(self, domain: Cnf):
        s = self.space.zero()
        if self.trace:
            self.trace(Ordinal._wrap(()), s)
        return self.segment((), domain, s)

    def segment(self, start: Cnf, length: Cnf, s):
        for e, c in length:
            piece = ((e, 1),)
            for _ in range(c):
                s = self.block(start, e, s)
                start = _add(start, piece)
        return s

    def step(self, i: Cnf, s):
        self.terms += 1
        if self.terms > self.budget.term_cap and self.stages:
            raise _Stall(self.stages[-1], Reason.LIMIT_BUDGET_EXHAUSTED)
        a = self.rule(Ordinal._wrap(i))
        self.mass += norm(a)
        s = axpy(1.0, a, s)
        if self.trace:
            self.trace(Ordinal._wrap(_add(i, _ONE)), s)
        return s

    def block(self, start: Cnf, e: Cnf, s):
        """Add the terms indexed by [start, start + w^e)."""
        if not e:
            return self.step(start, s)
        limit = _add(start, ((e, 1),))
        self.stages.append(limit)
        self.limits += 1
        if e == _ONE:
            s = self.omega_block(start, limit, s)
        else:
            s = self.limit_block(start, e, limit, s)
        self.stages.pop()
        if self.trace:
            self.trace(Ordinal._wrap(limit), s)
        return s

    def omega_block(self, start: Cnf, limit: Cnf, s):
        # fundamental sequence of w is 0, 1, 2, ...: ordinary partial sums
        cap = self.budget.limit_cap
        if self.targets is not None:
            last = self.targets.last_in(start, limit)
            if last is None:
                return s
            count = _left_diff(start, last)
            count = (count[0][1] if count else 0) + 1
            if count + 1 > cap:
                raise _Stall(limit, Reason.LIMIT_BUDGET_EXHAUSTED)
            for k in range(count):
                s = self.step(_add(start, (((), k),) if k else ()), s)
            return s
        recent = deque([s], maxlen=CAUCHY_WINDOW)
        k = 0
        while not self.settled(recent):
            if k + 1 >= cap:
                raise _Stall(limit, Reason.CAUCHY_FAILED)
            s = self.step(_add(start, (((), k),) if k else ()), s)
            recent.append(s)
            k += 1
        return s

    def limit_block(self, start: Cnf, e: Cnf, limit: Cnf, s):
        lam_full = ((e, 1),)
        cap = self.budget.limit_cap
        lam = _fundamental(lam_full, 0)
        s = self.segment(start, lam, s)
        recent = deque([s], maxlen=CAUCHY_WINDOW)
        n = 0
        while True:
            here = _add(start, lam)
            if self.targets is not None:
                if self.targets.last_in(here, limit) is None:
                    return s
            elif self.settled(recent):
                return s
            n += 1
            if n >= cap:
                reason = (Reason.LIMIT_BUDGET_EXHAUSTED if self.targets is not None
                          else Reason.CAUCHY_FAILED)
                raise _Stall(limit, reason)
            nxt = _fundamental(lam_full, n)
            s = self.segment(here, _left_diff(lam, nxt), s)
            recent.append(s)
            lam = nxt

    def settled(self, recent: deque) -> bool:
        if len(recent) < CAUCHY_WINDOW:
            return False
        last = recent[-1]
        half = self.budget.tol / 2
        return all(norm(axpy(-1.0, x, last)) < half for x in recent)


def sum_series(h: Hypersequence, budget: EvalBudget = EvalBudget(), *,
               uncertified: bool = False,
               trace: Optional[Callable[[Ordinal, Any], None]] = None) -> SumOutcome:
    """Evaluate the sum of h over its domain.

    Certified series are always evaluated in certified mode. Series without a
    tail bound are refused (``Unresolved(..., NO_TAIL_BOUND)``) unless
    ``uncertified=True``, in which case a heuristic Cauchy criterion finalizes
    each limit and the result is marked ``certified=False``.

    *trace*, if given, is called with ``(index, partial_sum)`` for every
    partial sum the recursion computes, starting with ``(0, 0)``.
    """
    domain = h.domain.cnf
    has_limit = any(e for e, _ in domain)
    targets = None
    n0 = None
    if h.tail is not None:
        n0 = h.tail.first_below(budget.tol, budget.term_cap)
        if n0 is None:
            return Unresolved(OMEGA, Reason.LIMIT_BUDGET_EXHAUSTED)
        targets = _Targets(h.tail, n0, h.domain)
    elif has_limit and not uncertified:
        return Unresolved(OMEGA, Reason.NO_TAIL_BOUND)

    ev = _Evaluation(h, budget, targets, trace)
    try:
        s = ev.run(domain)
    except _Stall as stall:
        return Unresolved(Ordinal._wrap(stall.reached), stall.reason)

    n = ev.terms + 2
    gamma = n * UNIT_ROUNDOFF / (1 - n * UNIT_ROUNDOFF)
    rounding = gamma * ev.mass * h.space.rounding_factor
    if targets is None:
        heuristic = budget.tol if has_limit else 0.0
        return Converged(s, heuristic + rounding, not has_limit, ev.terms)
    truncation = h.tail(n0) if ev.limits else 0.0
    return Converged(s, truncation + rounding, True, ev.terms, n0)


def abs_converges(h: Hypersequence, budget: EvalBudget = EvalBudget(), *,
                  uncertified: bool = False) -> SumOutcome:
    """Sum the norm series of h; Converged means h converges absolutely."""
    return sum_series(norm_series(h), budget, uncertified=uncertified)


def partials_along(h: Hypersequence, lam: OrdinalLike, count: int,
                   budget: EvalBudget = EvalBudget(), *,
                   uncertified: bool = False) -> list[tuple[Ordinal, Any]]:
    """Partial sums at ``lam[0], ..., lam[count-1]`` along the fundamental sequence."""
    lam = as_ordinal(lam)
    if not lam.is_limit:
        raise ValueError(f"{lam} is not a limit ordinal")
    if lam > h.domain:
        raise ValueError(f"{lam} exceeds the domain {h.domain}")
    out = []
    for n in range(count):
        idx = fundamental_sequence(lam, n)
        outcome = sum_series(restrict(h, idx), budget, uncertified=uncertified)
        if not outcome.converged:
            raise ValueError(f"partial sum at {idx} is unresolved: {outcome}")
        out.append((idx, outcome.sum))
    return out


class SplitOutcome(NamedTuple):
    whole: SumOutcome
    part: SumOutcome
    rest: SumOutcome

    @property
    def resolved(self) -> bool:
        return all(o.converged for o in self)

    @property
    def discrepancy(self) -> Optional[float]:
        """norm(sum - (part + rest)), or None if some component is unresolved."""
        if not self.resolved:
            return None
        return norm(axpy(-1.0, axpy(1.0, self.part.sum, self.rest.sum), self.whole.sum))

    def holds(self, tol: float) -> Optional[bool]:
        if not self.resolved:
            return None
        slack = self.whole.err + self.part.err + self.rest.err + tol
        return self.discrepancy <= slack


def split_sum(h: Hypersequence, S: IndicatorMask,
              budget: EvalBudget = EvalBudget()) -> SplitOutcome:
    """Sum h, its S-part and its complement part separately."""
    if h.domain != OMEGA:
        raise ValueError(f"split sums need a series over w, not {h.domain}")
    return SplitOutcome(sum_series(h, budget),
                        sum_series(mask(h, S), budget),
                        sum_series(mask(h, S.complement()), budget))


class DominationViolation(ValueError):
    def __init__(self, index: Ordinal, smaller: float, larger: float):
        self.index = index
        self.norm_a = smaller
        self.norm_b = larger
        super().__init__(f"norm(a) = {smaller!r} exceeds norm(b) = {larger!r} at index {index}")


@dataclass(frozen=True)
class DominationCertificate:
    a: SumOutcome
    b: SumOutcome
    checked: int

    @property
    def conclusive(self) -> bool:
        return self.a.converged and self.b.converged

    @property
    def holds(self) -> Optional[bool]:
        """Whether sum norm(a) <= sum norm(b) within the combined error."""
        if not self.conclusive:
            return None
        return self.a.sum <= self.b.sum + self.a.err + self.b.err


def dominated_compare(a: Hypersequence, b: Hypersequence,
                      budget: EvalBudget = EvalBudget(), *,
                      extra_indices=()) -> DominationCertificate:
    """Direct comparison test for well-ordered series.

    Assumes ``norm(a_i) <= norm(b_i)`` for every index, and checks it at every
    index the evaluation of b touches plus *extra_indices*; a violation raises
    :class:`DominationViolation`. Since b's tail bound then also bounds a's
    tail, a is summed under b's certificate when it has none of its own.
    """
    if a.domain != b.domain:
        raise ValueError(f"domains differ: {a.domain} vs {b.domain}")
    touched: list[Ordinal] = []
    record = lambda i, s: touched.append(i)
    outcome_b = sum_series(norm_series(b), budget, trace=record)
    if not outcome_b.converged:
        return DominationCertificate(Unresolved(outcome_b.reached, outcome_b.reason),
                                     outcome_b, 0)
    # the trace reports s_(i+1) after adding a_i; indices are their predecessors
    indices = {predecessor(i) for i in touched if i.kind is OrdinalKind.SUCCESSOR}
    indices.update(as_ordinal(i) for i in extra_indices)
    for i in sorted(indices):
        na, nb = norm(a.rule(i)), norm(b.rule(i))
        if na > nb:
            raise DominationViolation(i, na, nb)
    a_norms = norm_series(a)
    if a_norms.tail is None:
        a_norms = replace(a_norms, tail=b.tail)
    return DominationCertificate(sum_series(a_norms, budget), outcome_b, len(indices))
