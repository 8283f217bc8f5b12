from __future__ import annotations

import random

import pytest

from oracles import eps_product, gram_inner
from svoa.cocycle import build_epsilon, eps
from svoa.examples import build_example
from svoa.lattice import LatticeData, example2_lattice, standard_lattice

LATTICES = [standard_lattice(6), example2_lattice(), standard_lattice(3),
            LatticeData(((2, 1), (1, 3)), "odd2")]


def rand_vec(rng, r, b=3):
    return tuple(rng.randint(-b, b) for _ in range(r))


def test_example1_values():
    lat = standard_lattice(6)
    T = build_epsilon(lat, {(0, 1): 1})
    g1, g2 = (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)
    assert T(g1, g2) == 1 and T(g2, g1) == -1
    for i in range(6):
        gi = tuple(int(k == i) for k in range(6))
        assert T(gi, gi) == -1
    assert T(g1, (0,) * 6) == T((0,) * 6, g1) == 1


@pytest.mark.parametrize("lat", LATTICES, ids=lambda l: l.name)
def test_identities_on_random_pairs(lat):
    T = build_epsilon(lat)
    rng = random.Random(7)
    for _ in range(100):
        a, b, c = (rand_vec(rng, lat.rank) for _ in range(3))
        ab = gram_inner(lat.gram, a, b)
        na, nb = gram_inner(lat.gram, a, a), gram_inner(lat.gram, b, b)
        assert T(a, b) * T(b, a) == (-1) ** ((ab + na * nb) % 2)
        apb = tuple(x + y for x, y in zip(a, b))
        assert T(apb, c) == T(a, c) * T(b, c)
        assert T(a, b) == eps_product(T.basis_values, a, b) == eps(T, a, b)
        neg_b = tuple(-x for x in b)
        assert T(a, neg_b) == T(a, b) == T(tuple(-x for x in a), b)


@pytest.mark.parametrize("lat", LATTICES, ids=lambda l: l.name)
def test_diagonal_on_enumerated_vectors(lat):
    T = build_epsilon(lat)
    for n in range(1, 5):
        for a in lat.enumerate_norm(n):
            assert T(a, a) == (-1) ** (((n + n * n) // 2) % 2)
            if n == 2:
                assert T(a, a) == T(a, tuple(-x for x in a)) == -1
            if n in (3, 4):
                assert T(a, a) == 1


def test_overrides_and_validation():
    lat = standard_lattice(3)
    T = build_epsilon(lat, [(0, 2, -1)])
    assert T.basis_values[0][2] == -1 and T.basis_values[2][0] == 1
    assert not T.violations()
    with pytest.raises(ValueError):
        build_epsilon(lat, {(1, 0): 1})
    with pytest.raises(ValueError):
        build_epsilon(lat, {(0, 1): 2})


def test_corruption_is_detected():
    T = build_epsilon(standard_lattice(2))
    bad = T.with_value(0, 1, -T.basis_values[0][1])
    assert bad.violations()


def test_example_tables_are_consistent():
    for n in (1, 2):
        assert not build_example(n).epsilon.violations()
