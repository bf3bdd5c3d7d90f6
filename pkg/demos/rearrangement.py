# Rearranging absolutely convergent series over countable ordinals keeps the sum.
import time

from wellordered import (EvalBudget, Reason, canonical_enumeration, custom_natural, make_family,
                         parse, perturb, rearrange_from_omega, rearrange_to_omega, sum_series)
from wellordered.hyperseq import CUSTOM
from wellordered.rearrangement import verify_invariance

h = make_family("vector_geometric", 3, 0.5)
e = perturb(canonical_enumeration(parse("w^3*2+w")), seed=1, window=64)
report = verify_invariance(h, e, tail_samples=4, seed=1)
print(report.to_text(h.space))
print()

# the round trip omega -> alpha -> omega gives back the same terms
back = rearrange_to_omega(rearrange_from_omega(h, e), e)
print("round trip exact:", all((back(i) == h(i)).all() for i in range(1000)))

# a small batch over several ordinals
t0 = time.perf_counter()
for alpha in ["w", "w*2", "w^2", "w^3", "w^w"]:
    base = canonical_enumeration(parse(alpha))
    verdicts = [verify_invariance(make_family("p_series", 4), perturb(base, s, 64)).verdict.value
                for s in range(5)]
    print(f"{alpha:>4}:", " ".join(verdicts))
print(f"{time.perf_counter() - t0:.2f} s")

# without a tail bound nothing is certified
harmonic = custom_natural(CUSTOM["harmonic"])
out = sum_series(harmonic)
print("harmonic:", out.reason is Reason.NO_TAIL_BOUND, out)
out = sum_series(harmonic, EvalBudget(limit_cap=10**5, term_cap=10**5), uncertified=True)
print("harmonic, heuristic mode:", out)
