from hypothesis import strategies as st

from wellordered import Ordinal, omega_pow


def _from_parts(parts):
    out = Ordinal(0)
    for e, c in sorted(parts, key=lambda t: t[0], reverse=True):
        out = out + omega_pow(e) * c
    return out


def ordinals(max_depth=3, max_terms=3, max_coeff=5):
    """Ordinals below epsilon_0 with bounded nesting."""
    if max_depth <= 1:
        return st.integers(0, 20).map(Ordinal)
    exps = ordinals(max_depth - 1, max_terms, max_coeff)
    term = st.tuples(exps, st.integers(1, max_coeff))
    return st.lists(term, max_size=max_terms).map(_from_parts)


def infinite_ordinals(max_depth=3):
    return ordinals(max_depth).filter(lambda a: not a.is_finite)


def limits(max_depth=3):
    return ordinals(max_depth).filter(lambda a: a.is_limit)


coeff_lists = st.lists(st.integers(0, 6), max_size=5)
