# Computable bijections between an ordinal and omega.
from wellordered import (OMEGA, canonical_enumeration, image_mask, parse, perturb,
                         position_in_image)

# w*2 interleaves the two copies of omega
e = canonical_enumeration(parse("w*2"))
print("w*2:", [str(e.backward(n)) for n in range(8)])

# w^2 walks the diagonals of the table: w*a + b sits at pair(a, b)
e = canonical_enumeration(parse("w^2"))
grid = [[e.forward(parse(f"w*{a}+{b}")) for b in range(5)] for a in range(5)]
for row in grid:
    print(" ".join(f"{n:3d}" for n in row))

# higher ordinals still come out one index at a time
for alpha in ["w^3", "w^w", "w^2*3+w*5+7"]:
    e = canonical_enumeration(parse(alpha))
    print(f"{alpha}:", ", ".join(str(e.backward(n)) for n in range(10)), "...")

# a seeded shuffle of the first few positions gives another bijection
base = canonical_enumeration(parse("w^2"))
p = perturb(base, seed=7, window=8)
print(p.provenance, [str(p.backward(n)) for n in range(8)])

# f[w] inside w*2 is the even numbers; 6 is the 4th of them
e = canonical_enumeration(parse("w*2"))
evens = image_mask(e, OMEGA)
print([n for n in range(12) if n in evens], position_in_image(e, OMEGA, e.backward(6)))
