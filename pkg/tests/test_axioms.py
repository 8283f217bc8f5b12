from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial

from svoa.axioms import (
    AxiomSuite,
    associativity_difference,
    binom,
    commutator_difference,
    jacobi_difference,
    random_state,
    run_axiom_suite,
    skew_difference,
)
from svoa.cocycle import build_epsilon
from svoa.fock import LatticeVOA
from svoa.lattice import example2_lattice, standard_lattice
from svoa.modes import apply_mode, vanishing_bound

Z1 = LatticeVOA(standard_lattice(1))
Z2 = LatticeVOA(standard_lattice(2))


def test_binom():
    for r in range(-6, 7):
        for i in range(6):
            # falling factorial over i!
            num = 1
            for k in range(i):
                num *= r - k
            assert binom(r, i) == Fraction(num, factorial(i))
    assert binom(3, -1) == 0
    assert binom(-1, 5) == -1 and binom(5, 2) == comb(5, 2)


def test_random_states_are_homogeneous():
    rng = random.Random(1)
    for _ in range(50):
        u = random_state(Z2, rng)
        w = u.weight()
        assert w is not None and w <= Fraction(5, 2)
        assert u.parity() in (0, 1)
        assert not u.is_zero()


def test_small_suite_passes_on_z2():
    rep = run_axiom_suite(AxiomSuite(Z2, trials=8, seed=1))
    assert rep.passed
    assert [it.label for it in rep.items] == [
        "super Jacobi identity", "super commutativity", "super associativity", "super skew-symmetry"]


def test_suite_on_odd_rank_two_and_example2():
    assert run_axiom_suite(AxiomSuite(LatticeVOA(standard_lattice(3)), trials=4, seed=5,
                                      max_weight=Fraction(3, 2))).passed
    assert run_axiom_suite(AxiomSuite(LatticeVOA(example2_lattice()), trials=3, seed=2,
                                      max_weight=Fraction(3, 2))).passed


def test_suite_is_deterministic():
    a = [tuple(map(str, t)) for t in AxiomSuite(Z2, trials=5, seed=9).triples()]
    b = [tuple(map(str, t)) for t in AxiomSuite(Z2, trials=5, seed=9).triples()]
    assert a == b


def test_corrupted_epsilon_fails_with_witness():
    lat = standard_lattice(2)
    bad = build_epsilon(lat).with_value(0, 1, -1)
    V = LatticeVOA(lat, bad)
    rep = run_axiom_suite(AxiomSuite(V, trials=30, seed=0))
    assert not rep.passed
    first = rep.first_failure()
    assert first.witness is not None and not first.witness.is_zero()
    assert "u" in first.context and "modes" in first.context


def test_named_slices_agree_with_jacobi():
    rng = random.Random(4)
    for _ in range(5):
        u, v, w = (random_state(Z2, rng, Fraction(3, 2)) for _ in range(3))
        for r in (-1, 0, 1):
            for s in (-1, 0, 1):
                assert commutator_difference(u, v, w, r, s) == jacobi_difference(u, v, w, r, s, 0)
                assert associativity_difference(u, v, w, r, s) == jacobi_difference(u, v, w, 0, s, r)
                assert commutator_difference(u, v, w, r, s).is_zero()


def test_skew_with_literal_powers_fails_on_z1():
    # The divided power T^(i) = T^i / i! is required; T^i alone breaks at t = -3.
    e, f = Z1.exp((1,)), Z1.exp((-1,))
    assert skew_difference(e, f, -3).is_zero()
    t = -3
    acc = Z1.zero()
    for i in range(vanishing_bound(e, f) - t):
        y = apply_mode(e, t + i, f)
        for _ in range(i):
            y = y.translate()
        acc = acc + (-1) ** i * y
    sign = -1 if (t + 1) % 2 else 1
    assert not (apply_mode(f, t, e) + sign * acc).is_zero()
