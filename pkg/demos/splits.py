# Splitting absolutely convergent series and comparing dominated ones.
from wellordered import (DominationViolation, IndicatorMask, custom_natural, dominated_compare,
                         make_family, split_sum)

h = make_family("geometric", 0.5, 2.0)  # 1 + 1/2 + 1/4 + ...
sp = split_sum(h, IndicatorMask.evens())
print("whole", sp.whole.sum, "evens", sp.part.sum, "odds", sp.rest.sum)

# any subset works; the parts always add back up
for seed in range(5):
    sp = split_sum(make_family("n_over_2n"), IndicatorMask.random(seed, 0.3))
    print(f"mask {seed}: {sp.part.sum:.10f} + {sp.rest.sum:.10f}  discrepancy {sp.discrepancy:.1e}")

# a is dominated term by term by b, so its sum is at most b's
cert = dominated_compare(make_family("geometric", 0.25), make_family("geometric", 0.5))
print(f"sum |a| = {cert.a.sum:.10f} <= sum |b| = {cert.b.sum:.10f}: {cert.holds}")

# break domination at one index and the comparison says where
quarter = make_family("geometric", 0.25)
bad = custom_natural(lambda i: 0.9 if i == 11 else quarter(i))
try:
    dominated_compare(bad, make_family("geometric", 0.5))
except DominationViolation as err:
    print("violation:", err)
