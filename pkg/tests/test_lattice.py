from __future__ import annotations

import json
from fractions import Fraction

import pytest

from oracles import brute_force_norm, theta_brute
from svoa.lattice import (
    LatticeData,
    LatticeError,
    builtin_lattice,
    example2_lattice,
    inner,
    lattice_predicates,
    load_lattice,
    parse_lattice_spec,
    standard_lattice,
    theta_coefficients,
)

E2 = example2_lattice()
H = (0, 0, 0, 0, 0, 1)
ALPHAS = [tuple(int(i == k) for i in range(6)) for k in range(5)] + [(-1, -1, -1, -1, -1, 3)]

SMALL = {
    "Z3": standard_lattice(3),
    "ex2": E2,
    "A2": LatticeData(((2, -1), (-1, 2)), "A2"),
    "odd2": LatticeData(((2, 1), (1, 3)), "odd2"),
    "D4": LatticeData(((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)), "D4"),
}


def test_inner_products():
    assert inner(standard_lattice(6), (1, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0)) == 1
    assert inner(E2, H, H) == 2
    for a in ALPHAS:
        assert inner(E2, a, H) == 1
        assert inner(E2, a, a) == 3
    for a in ALPHAS:
        for b in ALPHAS:
            if a != b:
                assert inner(E2, a, b) == 0


def test_dimension_mismatch():
    with pytest.raises(LatticeError):
        inner(E2, (1, 0), H)


def test_construction_rejects_bad_gram():
    with pytest.raises(LatticeError):
        LatticeData(((1, 2), (2, 1)))  # indefinite
    with pytest.raises(LatticeError):
        LatticeData(((1, 0), (1, 1)))  # not symmetric


@pytest.mark.parametrize("name", sorted(SMALL))
@pytest.mark.parametrize("n", range(5))
def test_enumeration_matches_brute_force(name, n):
    lat = SMALL[name]
    got = lat.enumerate_norm(n)
    assert len(got) == len(set(got))
    assert set(got) == brute_force_norm(lat.gram, n)
    assert set(got) == {tuple(-x for x in v) for v in got}
    if n:
        assert len(got) % 2 == 0


def test_example2_roots_and_l3():
    assert set(E2.enumerate_norm(2)) == {H, tuple(-x for x in H)}
    assert len(E2.enumerate_norm(3)) == 24
    assert not E2.enumerate_norm(1)


def test_theta():
    assert theta_coefficients(E2, 3) == [(0, 1), (Fraction(1, 2), 0), (1, 2), (Fraction(3, 2), 24)]
    assert theta_coefficients(standard_lattice(1), 1) == [(0, 1), (Fraction(1, 2), 2)]
    z6 = [n for _, n in theta_coefficients(standard_lattice(6), 2)]
    assert z6 == theta_brute(standard_lattice(6).gram, 2) == [1, 12, 60]
    with pytest.raises(LatticeError):
        theta_coefficients(E2, -1)


def test_predicates():
    p = lattice_predicates(E2)
    assert p.is_odd and p.min_norm == 2
    assert set(p.roots) == {H, tuple(-x for x in H)}
    assert lattice_predicates(standard_lattice(3)).min_norm == 1
    z6 = lattice_predicates(standard_lattice(6))
    assert set(z6.roots) == brute_force_norm(standard_lattice(6).gram, 2)
    assert len(z6.roots) == 60
    assert not lattice_predicates(SMALL["D4"]).is_odd


def test_builtins():
    assert builtin_lattice("Z8").rank == 8
    assert builtin_lattice("ex2") == E2
    with pytest.raises(LatticeError):
        builtin_lattice("Z9")


def test_spec_file_round_trip(tmp_path):
    spec = E2.to_json()
    spec["epsilon_upper"] = [[1, 2, -1]]
    path = tmp_path / "l.json"
    path.write_text(json.dumps(spec))
    lat, over = load_lattice(path)
    assert lat == E2 and over == [(0, 1, -1)]


def test_spec_errors(tmp_path):
    with pytest.raises(LatticeError):
        parse_lattice_spec({"rank": 2, "gram": [[1, 0], [0, 1]], "epsilon_upper": [[2, 1, 1]]})
    with pytest.raises(LatticeError):
        parse_lattice_spec({"rank": 3, "gram": [[1, 0], [0, 1]]})
    with pytest.raises(LatticeError):
        parse_lattice_spec({"gram": [[1]]})
    bad = tmp_path / "bad.json"
    bad.write_text('{"rank": 1,\n "gram": [[1]')
    with pytest.raises(LatticeError, match=r":2:"):
        load_lattice(bad)
