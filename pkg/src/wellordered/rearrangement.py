"""Reindexing absolutely convergent series between countable ordinals.

:func:`verify_invariance` checks numerically that spreading an omega-series
over an ordinal alpha through an enumeration changes neither its sum nor the
sum of its norms.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Optional

from .bijections import Enumeration, compose_to, image_mask
from .engine import (EvalBudget, SumOutcome, abs_converges, split_sum,
                     sum_series)
from .hyperseq import Hypersequence, IndicatorMask, reindex, restrict
from .ordinal import OMEGA, ONE, Ordinal, OrdinalKind, _add, _nat, predecessor
from .space import axpy, norm


def rearrange_from_omega(h: Hypersequence, e: Enumeration) -> Hypersequence:
    """The series ``i -> a_f(i)`` over ``e.alpha``, where f is ``e.forward``."""
    if h.domain != OMEGA:
        raise ValueError(f"expected a series over w, got one over {h.domain}")
    fwd, bwd = e.forward, e.backward
    return reindex(h, e.alpha, lambda i: Ordinal(fwd(i)), lambda n: bwd(int(n)),
                   f"{h.label}@{e.alpha}")


def rearrange_to_omega(h: Hypersequence, e: Enumeration) -> Hypersequence:
    """The omega-series ``n -> a_g(n)``, where g is ``e.backward``."""
    if h.domain != e.alpha:
        raise ValueError(f"series over {h.domain} does not match enumeration of {e.alpha}")
    fwd, bwd = e.forward, e.backward
    label = h.label
    if label.endswith(f"@{e.alpha}"):
        label = label[: -len(f"@{e.alpha}")]
    return reindex(h, OMEGA, lambda n: bwd(int(n)), lambda i: Ordinal(fwd(i)), label)


def rearrange_general(h: Hypersequence, e_alpha: Enumeration,
                      e_beta: Enumeration) -> Hypersequence:
    """The series over ``e_beta.alpha`` obtained through the bijection beta -> omega -> alpha."""
    if h.domain != e_alpha.alpha:
        raise ValueError(f"series over {h.domain} does not match enumeration of {e_alpha.alpha}")
    bij = compose_to(e_alpha, e_beta)
    return reindex(h, bij.domain, bij.apply, bij.inverse, f"{h.label}@{bij.domain}")


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class TailCheck:
    """A prefix beta of alpha compared with the full sum."""

    beta: Ordinal
    deviation: Optional[float]
    allowance: Optional[float]

    @property
    def ok(self) -> Optional[bool]:
        if self.deviation is None:
            return None
        return self.deviation <= self.allowance


@dataclass(frozen=True)
class VerificationReport:
    series: str
    alpha: Ordinal
    bijection: str
    original: SumOutcome
    rearranged: SumOutcome
    abs_original: Optional[SumOutcome]
    abs_rearranged: Optional[SumOutcome]
    discrepancy: Optional[float]
    tolerance: float
    n0: Optional[int] = None
    beta0: Optional[Ordinal] = None
    tail_checks: tuple[TailCheck, ...] = field(default=())
    flags: tuple[str, ...] = field(default=())
    verdict: Verdict = Verdict.INCONCLUSIVE

    @property
    def err_total(self) -> Optional[float]:
        if not (self.original.converged and self.rearranged.converged):
            return None
        return self.original.err + self.rearranged.err

    def to_text(self, space=None) -> str:
        fmt = space.format if space is not None else str
        lines = [
            f"series: {self.series}",
            f"ordinal: {self.alpha}",
            f"bijection: {self.bijection}",
            f"original: {_describe(self.original, fmt)}",
            f"rearranged: {_describe(self.rearranged, fmt)}",
        ]
        if self.abs_original is not None:
            lines.append(f"abs original: {_describe(self.abs_original, str)}")
            lines.append(f"abs rearranged: {_describe(self.abs_rearranged, str)}")
        lines += [
            f"discrepancy: {_num(self.discrepancy)}",
            f"err total: {_num(self.err_total)}",
            f"tolerance: {self.tolerance!r}",
            f"n0: {'-' if self.n0 is None else self.n0}",
            f"beta0: {'-' if self.beta0 is None else self.beta0}",
        ]
        for tc in self.tail_checks:
            lines.append(f"tail check {tc.beta}: deviation {_num(tc.deviation)} "
                         f"allowance {_num(tc.allowance)}")
        if self.flags:
            lines.append(f"flags: {', '.join(self.flags)}")
        lines.append(f"verdict: {self.verdict.value}")
        return "\n".join(lines)

    def csv_row(self) -> list[str]:
        return [self.series, str(self.alpha), self.bijection, self.verdict.value,
                _num(self.discrepancy), _num(self.err_total)]


CSV_HEADER = ["series", "ordinal", "bijection", "verdict", "discrepancy", "err_total"]


def _num(x) -> str:
    return "-" if x is None else repr(float(x))


def _describe(o: SumOutcome, fmt) -> str:
    if o is None:
        return "-"
    if o.converged:
        tag = "" if o.certified else " (heuristic)"
        return f"converged {fmt(o.sum)} err {o.err!r}{tag}"
    return f"unresolved at {o.reached} ({o.reason.value})"


def beta_zero(e: Enumeration, n0: int) -> Ordinal:
    """max({w} U f^-1[{0..n0}]) + 1: past it, every term a_0..a_n0 is already placed."""
    top = max([OMEGA] + [e.backward(k) for k in range(n0 + 1)])
    return top + ONE


def _sample_prefixes(beta0: Ordinal, alpha: Ordinal, count: int, seed: int) -> list[Ordinal]:
    """Up to *count* distinct ordinals in [beta0, alpha), deterministic in seed."""
    if not beta0 < alpha:
        return []
    rng = random.Random(seed)
    out = {beta0}
    tries = 0
    while len(out) < count and tries < 50 * count:
        tries += 1
        # beta0 plus a random sum of alpha's own powers with small coefficients
        terms = []
        for e, _ in reversed(alpha.cnf):
            if rng.random() < 0.5:
                terms.append((e, rng.randint(1, 4)))
        cand = beta0
        for e, c in sorted(terms, key=lambda t: t[0], reverse=True):
            cand = Ordinal._wrap(_add(cand.cnf, ((e, c),)))
        cand = Ordinal._wrap(_add(cand.cnf, _nat(rng.randint(0, 8 * count))))
        if cand < alpha:
            out.add(cand)
    return sorted(out)


def verify_invariance(h: Hypersequence, e: Enumeration, budget: EvalBudget = EvalBudget(), *,
                      uncertified: bool = False, check_abs: bool = True,
                      tail_samples: int = 0, seed: int = 0) -> VerificationReport:
    """Compare the sum of h with the sum of its rearrangement over ``e.alpha``.

    Passes when both sums converge and differ by at most their combined error
    plus the tolerance; with *check_abs* the norm sums must agree likewise.
    *tail_samples* prefixes beta >= beta0 are additionally summed and compared
    with the full sum, which must be within ``T(n0)`` plus computation error.
    """
    if h.domain != OMEGA:
        raise ValueError(f"expected a series over w, got one over {h.domain}")
    tol = budget.tol
    flags = []
    g = rearrange_from_omega(h, e)
    original = sum_series(h, budget, uncertified=uncertified)
    rearranged = sum_series(g, budget, uncertified=uncertified)
    abs_o = abs_r = None
    if check_abs:
        abs_o = abs_converges(h, budget, uncertified=uncertified)
        abs_r = abs_converges(g, budget, uncertified=uncertified)

    n0 = beta0 = None
    if h.tail is not None:
        n0 = h.tail.first_below(tol, budget.term_cap)
    if n0 is not None:
        beta0 = beta_zero(e, n0)
        if not beta0 < e.alpha:
            flags.append("beta0-not-below-alpha")

    outcomes = [original, rearranged] + ([abs_o, abs_r] if check_abs else [])
    discrepancy = None
    if original.converged and rearranged.converged:
        discrepancy = norm(axpy(-1.0, rearranged.sum, original.sum))
    if not all(o.converged for o in outcomes):
        verdict = Verdict.INCONCLUSIVE
    else:
        ok = discrepancy <= original.err + rearranged.err + tol
        if check_abs:
            ok = ok and abs(abs_o.sum - abs_r.sum) <= abs_o.err + abs_r.err + tol
        verdict = Verdict.PASS if ok else Verdict.FAIL
        if not all(o.certified for o in outcomes):
            flags.append("heuristic")

    checks = []
    if tail_samples and beta0 is not None and original.converged:
        for beta in _sample_prefixes(beta0, e.alpha, tail_samples, seed):
            part = sum_series(restrict(g, beta), budget)
            if part.converged:
                dev = norm(axpy(-1.0, part.sum, original.sum))
                checks.append(TailCheck(beta, dev, h.tail(n0) + part.err + original.err))
            else:
                checks.append(TailCheck(beta, None, None))
        if len(checks) < tail_samples:
            flags.append(f"only-{len(checks)}-prefixes-above-beta0")
        if any(tc.ok is False for tc in checks):
            verdict = Verdict.FAIL

    return VerificationReport(h.label, e.alpha, e.provenance, original, rearranged, abs_o, abs_r,
                              discrepancy, tol, n0, beta0, tuple(checks), tuple(flags), verdict)


def last_term_split(h: Hypersequence, e: Enumeration,
                    budget: EvalBudget = EvalBudget()) -> Optional[float]:
    """Successor case: sum over alpha = beta+1 equals the beta-part plus a_f(beta).

    Splits the omega-series into the singleton ``{f(beta)}`` and its
    complement, and returns norm(sum of the complement + a_f(beta) - sum over
    alpha), or None for limit alpha or unresolved sums.
    """
    if e.alpha.kind is not OrdinalKind.SUCCESSOR:
        return None
    beta = predecessor(e.alpha)
    k = e.forward(beta)
    split = split_sum(h, IndicatorMask.finite([k]).complement(), budget)
    whole = sum_series(rearrange_from_omega(h, e), budget)
    if not (split.resolved and whole.converged):
        return None
    recombined = axpy(1.0, h.rule(Ordinal(k)), split.part.sum)
    return norm(axpy(-1.0, recombined, whole.sum))


def image_split(h: Hypersequence, e: Enumeration, beta: Ordinal,
                budget: EvalBudget = EvalBudget()):
    """Split h into the terms indexed by f[beta] and by f[alpha - beta]."""
    return split_sum(h, image_mask(e, beta), budget)
