from __future__ import annotations

from fractions import Fraction

import pytest

from svoa.examples import EXAMPLE_NUMBERS, build_example
from svoa.lattice import theta_coefficients
from svoa.parsing import parse_state


def test_example1_bundle():
    b = build_example(1)
    assert b.kind == "N4" and b.expected_c == 6
    V = b.voa
    units = [tuple(int(i == j) for j in range(6)) for i in range(6)]
    omega = sum((V.heis(g, 1, on=V.heis(g, 1)) for g in units), V.zero()) * Fraction(1, 2)
    assert b.expected_virasoro == omega == V.standard_virasoro()
    assert b.epsilon((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)) == 1


def test_example2_lattice_shells():
    lat = build_example(2).lattice
    assert len(lat.enumerate_norm(1)) == 0
    assert len(lat.enumerate_norm(2)) == 2
    assert len(lat.enumerate_norm(3)) == 24
    assert [n for _, n in theta_coefficients(lat, 3)] == [1, 0, 2, 24]


def test_example4_bundle():
    b = build_example(4)
    g = (1, 1, 1)
    assert b.expected_c == 1
    assert b.expected_virasoro == b.voa.heis(g, 1, on=b.voa.heis(g, 1)) * Fraction(1, 6)


def test_example5_uses_norm_three_pair():
    b = build_example(5)
    lat = b.lattice
    a, c = b.notes["alpha"], b.notes["beta"]
    assert lat.norm(a) == lat.norm(c) == 3 and lat.inner(a, c) == 1
    assert b.expected_c == Fraction(3, 2)


@pytest.mark.parametrize("n", EXAMPLE_NUMBERS)
def test_generators_are_odd_weight_three_halves_and_round_trip(n):
    b = build_example(n)
    for name, s in b.generator_states().items():
        assert s.has_weight(Fraction(3, 2)), name
        assert s.parity() == 1, name
        assert parse_state(str(s), b.voa) == s


def test_unknown_example():
    with pytest.raises(ValueError):
        build_example(6)
