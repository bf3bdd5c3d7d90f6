# Summing the same terms in two orders: along omega, and in a triangular table over w^2.
from wellordered import (EvalBudget, canonical_enumeration, make_family, parse, partials_along,
                         rearrange_from_omega, sum_series)

# 1/2 + 2/4 + 3/8 + ...
h = make_family("n_over_2n")
out = sum_series(h, EvalBudget(tol=1e-12))
print("n/2^n over w:", out.sum, "+-", out.err, f"({out.terms} terms)")

# Split every n/2^n into n copies of 1/2^n. Read along omega that is
# 1/2, 1/4, 1/4, 1/8, 1/8, 1/8, ... which still sums to 2.
stairs = make_family("staircase")
print("first terms:", [stairs(i) for i in range(10)])

# Spread over w^2 with the Cantor pairing, row r reads 2^-(r+1), 2^-(r+2), ...
table = rearrange_from_omega(stairs, canonical_enumeration(parse("w^2")))
for r in range(4):
    print(f"row {r}:", " ".join(f"{table(parse(f'w*{r}+{k}')):.4f}" for k in range(6)), "...")

# each row sums to 2^-r; partial sums at w*n are 2 - 2^(1-n)
for idx, value in partials_along(table, parse("w^2"), 6):
    print(f"  s[{idx}] = {value:.12f}")

whole = sum_series(table)
print("sum over w^2:", whole.sum, "+-", whole.err)
