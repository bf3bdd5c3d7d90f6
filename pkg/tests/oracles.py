"""Independent reference implementations used to freeze expected values.

Ordinals below w^w are modelled as coefficient lists ``c`` with
``c[k]`` the coefficient of ``w^k``; nothing here touches the package's CNF code.
"""
from fractions import Fraction


def trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def lead(c):
    return len(c) - 1


def cmp(a, b):
    a, b = trim(a), trim(b)
    if len(a) != len(b):
        return (len(a) > len(b)) - (len(a) < len(b))
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return (x > y) - (x < y)
    return 0


def add(a, b):
    a, b = trim(a), trim(b)
    if not b:
        return a
    m = lead(b)
    out = list(b)
    if len(a) > m:
        out[m] += a[m]
        out += a[m + 1:]
    return trim(out)


def mul(a, b):
    a, b = trim(a), trim(b)
    if not a or not b:
        return ()
    out = ()
    for k in range(lead(b), -1, -1):
        c = b[k]
        if not c:
            continue
        if k:
            piece = [0] * (lead(a) + k) + [c]
        else:
            piece = list(a)
            piece[-1] *= c
        out = add(out, piece)
    return out


def render(c):
    """ASCII rendering written independently of the package."""
    c = trim(c)
    if not c:
        return "0"
    parts = []
    for k in range(lead(c), -1, -1):
        if not c[k]:
            continue
        if k == 0:
            parts.append(str(c[k]))
            continue
        base = "w" if k == 1 else f"w^{k}"
        parts.append(base if c[k] == 1 else f"{base}*{c[k]}")
    return "+".join(parts)


def to_terms(c):
    return [(k, v) for k, v in enumerate(trim(c)) if v][::-1]


def geometric_sum(r, scale=1, start=0, step=1):
    """Exact sum of scale * r^(i+1) over i = start, start+step, ..."""
    r = Fraction(r)
    return Fraction(scale) * r ** (start + 1) / (1 - r ** step)


def cantor_pair(a, b):
    return (a + b) * (a + b + 1) // 2 + a
