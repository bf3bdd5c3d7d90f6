import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from strategies import infinite_ordinals
from wellordered import (OMEGA, Ordinal, canonical_enumeration, compose_to, image_mask,
                         image_membership, pair, parse, parse_bijection, perturb,
                         position_in_image, unpair)
from wellordered.bijections import tuple_rank, tuple_unrank

ALPHAS = ["w", "w*2", "w^2", "w^2*3+w*5+7", "w^3", "w^w", "w^(w+1)*2+w^5", "w^w^w"]


def test_pairing_matches_oracle():
    for a, b in itertools.product(range(60), repeat=2):
        assert pair(a, b) == oracles.cantor_pair(a, b)
        assert unpair(pair(a, b)) == (a, b)


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_tuple_rank_is_a_bijection(k):
    ranks = sorted(tuple_rank(x) for x in itertools.product(range(7), repeat=k) if sum(x) < 7)
    assert ranks == list(range(len(ranks)))
    assert all(tuple_rank(tuple_unrank(n, k)) == n for n in range(3000))


@pytest.mark.parametrize("alpha", ALPHAS)
def test_prefix_bijectivity(alpha):
    e = canonical_enumeration(parse(alpha))
    count = 2000 if alpha == "w^w^w" else 10**4
    seen = set()
    for n in range(count):
        i = e.backward(n)
        assert i < e.alpha
        assert e.forward(i) == n
        seen.add(i)
    assert len(seen) == count


@settings(max_examples=40, deadline=None)
@given(infinite_ordinals(), st.integers(0, 10**6))
def test_forward_backward_inverse(alpha, n):
    e = canonical_enumeration(alpha)
    assert e.forward(e.backward(n)) == n


def test_omega_squared_is_the_staircase():
    e = canonical_enumeration(parse("w^2"))
    for a, b in itertools.product(range(30), repeat=2):
        assert e.forward(OMEGA * a + b) == oracles.cantor_pair(a, b)


def test_omega_times_two_interleaves():
    e = canonical_enumeration(parse("w*2"))
    assert [str(e.backward(n)) for n in range(4)] == ["0", "w", "1", "w+1"]
    assert all(image_membership(e, OMEGA, n) == (n % 2 == 0) for n in range(100))


def test_finite_points_come_first():
    e = canonical_enumeration(parse("w*2+3"))
    assert [str(e.backward(n)) for n in range(3)] == ["w*2", "w*2+1", "w*2+2"]
    with pytest.raises(ValueError):
        e.forward(parse("w*2+3"))
    with pytest.raises(ValueError):
        canonical_enumeration(5)


def test_perturb():
    base = canonical_enumeration(parse("w^2"))
    one = perturb(base, 9, 1)
    assert all(one.backward(n) == base.backward(n) for n in range(200))
    a, b = perturb(base, 4, 64), perturb(base, 4, 64)
    assert [a.backward(n) for n in range(200)] == [b.backward(n) for n in range(200)]
    assert sorted(a.forward(base.backward(n)) for n in range(64)) == list(range(64))
    assert any(a.backward(n) != base.backward(n) for n in range(64))
    assert all(a.backward(n) == base.backward(n) for n in range(64, 300))
    assert a.provenance == "perturb:4:64(canonical)"
    with pytest.raises(ValueError):
        perturb(base, 0, 0)


def test_parse_bijection():
    assert parse_bijection("canonical", OMEGA).provenance == "canonical"
    assert parse_bijection("perturb:3:8", OMEGA).provenance == "perturb:3:8(canonical)"
    for bad in ["random", "perturb:3", "perturb:x:8", "perturb:1:0"]:
        with pytest.raises(ValueError):
            parse_bijection(bad, OMEGA)


def test_position_in_image_examples():
    e = canonical_enumeration(parse("w*2"))
    assert position_in_image(e, OMEGA, Ordinal(3)) == 3  # f(3) = 6
    assert position_in_image(e, OMEGA, Ordinal(0)) == 0
    sq = canonical_enumeration(parse("w^2"))
    expected = sum(1 for b in range(5) if pair(0, b) < pair(0, 5))
    assert position_in_image(sq, OMEGA, Ordinal(5)) == expected
    with pytest.raises(ValueError):
        position_in_image(e, OMEGA, OMEGA)


@pytest.mark.parametrize("alpha,beta", [("w*2", "w"), ("w^2", "w*3"), ("w^2*3+w*5+7", "w^2*2+4")])
def test_image_partition(alpha, beta):
    e = canonical_enumeration(parse(alpha))
    inside, full = image_mask(e, parse(beta)), image_mask(e, e.alpha)
    for n in range(2000):
        assert n in full
        assert (n in inside) == (e.backward(n) < parse(beta))
        assert (n in inside) != (n in inside.complement())
    # positions inside the image are counted consecutively
    members = [n for n in range(2000) if n in inside]
    for rank, n in enumerate(members[:200]):
        assert position_in_image(e, parse(beta), e.backward(n)) == rank


def test_compose_to():
    ea = canonical_enumeration(parse("w*2"))
    same = compose_to(ea, ea)
    assert all(same.apply(ea.backward(n)) == ea.backward(n) for n in range(300))
    w = canonical_enumeration(OMEGA)
    ident = compose_to(w, w)
    assert all(ident.apply(Ordinal(n)) == Ordinal(n) for n in range(300))
    eb = perturb(canonical_enumeration(parse("w^2")), 1, 32)
    bij = compose_to(ea, eb)
    for n in range(300):
        i = eb.backward(n)
        assert bij.inverse(bij.apply(i)) == i
