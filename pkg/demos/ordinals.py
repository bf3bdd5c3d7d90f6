# Ordinal arithmetic below epsilon_0, in Cantor normal form.
from wellordered import OMEGA as w, fundamental_sequence, parse, render

a = parse("w^2*3+w+5")
print(a, "|", render(a, unicode=True))

# addition is not commutative: a finite number on the left is absorbed
print("1 + w =", 1 + w)
print("w + 1 =", w + 1)
print("(w+3) + (w*2+1) =", parse("w+3") + parse("w*2+1"))

# neither is multiplication
print("2 * w =", 2 * w, "   w * 2 =", w * 2)
print("(w+1) * w =", (w + 1) * w)

# comparisons follow the well-order
print(sorted([parse("w^2"), parse("w*7+3"), parse("w^w"), parse("w^2+1")]))

# every limit comes with a fundamental sequence; the engine approaches limits along it
for lam in ["w", "w*2", "w^2", "w^w", "w^(w+1)"]:
    seq = [str(fundamental_sequence(parse(lam), n)) for n in range(5)]
    print(f"{lam:>8}:", ", ".join(seq), "...")
