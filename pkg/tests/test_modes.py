from __future__ import annotations

import json
import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from oracles import exp_pair_oracle, gram_inner, state_as_rational_dict
from svoa.axioms import random_state, skew_difference
from svoa.examples import build_example
from svoa.fock import LatticeVOA, SpaceMismatch
from svoa.lattice import example2_lattice, standard_lattice
from svoa.modes import apply_mode, exp_mode, heis_mode, vanishing_bound

Z3 = LatticeVOA(standard_lattice(3))
Z2 = LatticeVOA(standard_lattice(2))
Z6 = LatticeVOA(standard_lattice(6))


def l123(V):
    return [a for n in (1, 2, 3) for a in V.lattice.enumerate_norm(n)]


def test_exp_mode_matches_closed_form_table():
    vecs = l123(Z3)
    gram, table = Z3.lattice.gram, Z3.epsilon.basis_values
    checked = 0
    for g in vecs:
        for r in vecs:
            ip = gram_inner(gram, g, r)
            top = -ip - 1  # largest n with a nonzero value
            for n in range(top - 3, top + 3):
                got = state_as_rational_dict(exp_mode(g, n, Z3.exp(r)))
                assert got == exp_pair_oracle(gram, table, g, r, n), (g, r, n)
                checked += 1
    assert checked == len(vecs) ** 2 * 6


def test_table_cases_in_words():
    g, r = (1, 1, 0), (-1, 0, 0)  # (g, r) = -1
    assert exp_mode(g, 0, Z3.exp(r)) == Z3.exp((0, 1, 0), Z3.epsilon(g, r))
    assert exp_mode(g, 1, Z3.exp(r)).is_zero()
    h = (1, 1, 0)
    assert exp_mode(h, 1, Z3.exp((-1, -1, 0))) == -Z3.vacuum()


def test_heis_mode_examples():
    ex1 = build_example(1)
    V = ex1.voa
    h = (1, 1, 0, 0, 0, 0)
    g1 = (1, 0, 0, 0, 0, 0)
    assert heis_mode(h, 0, V.exp(g1)) == V.exp(g1)
    assert heis_mode(h, 0, V.exp((-1, 0, 0, 0, 0, 0))) == -V.exp((-1, 0, 0, 0, 0, 0))
    b = V.heis(g1, 2)
    assert heis_mode(g1, 2, b) == 2 * V.vacuum()
    hs = V.heis(h)
    assert heis_mode(h, 1, hs) == 2 * V.vacuum()


def test_apply_mode_example1_products():
    ex1 = build_example(1)
    q = ex1.generators
    V = ex1.voa
    h = V.heis((1, 1, 0, 0, 0, 0))
    assert apply_mode(q.tau_p, 1, q.taubar_m) == h
    # tau+(1)taubar+ = (a,abar) eps(g1,g2) e^{g1+g2} - (b,bbar) eps(g2,g1) e^{g1+g2} = 2 e^{g1+g2},
    # so x+ = -e^{g1+g2}; tau+(0)taubar+ = (g1+g2)(-1)e^{g1+g2} = -T x+
    g12 = (1, 1, 0, 0, 0, 0)
    assert apply_mode(q.tau_p, 1, q.taubar_p) == 2 * V.exp(g12)
    assert q.xp == -V.exp(g12)
    t0 = apply_mode(q.tau_p, 0, q.taubar_p)
    assert t0 == V.heis(g12, 1, on=V.exp(g12))
    assert t0 == -q.xp.translate()
    assert apply_mode(q.tau_p, 2, q.taubar_m) == 2 * V.vacuum()
    assert apply_mode(q.tau_p, 3, q.taubar_m).is_zero()
    assert vanishing_bound(q.tau_p, q.taubar_m) == 3


def test_vacuum_axioms():
    rng = random.Random(2)
    one = Z2.vacuum()
    for _ in range(20):
        u = random_state(Z2, rng)
        assert apply_mode(u, -1, one) == u
        for n in range(0, 3):
            assert apply_mode(u, n, one).is_zero()
        for n in (-3, -2, 0, 1, 2):
            assert apply_mode(one, n, u).is_zero()
        assert apply_mode(one, -1, u) == u


def test_vanishing_bound_examples():
    e = Z3.exp((1, 0, 0))
    assert vanishing_bound(e, e) == 1
    for n in range(1, 4):
        assert apply_mode(e, n, e).is_zero()
    assert apply_mode(e, 0, e).is_zero()  # (g1, g1) = 1 >= -0


def test_vanishing_bound_is_sharp_somewhere():
    # e^g(n)e^-g with norm 1: top nonzero mode is n = 0 = floor(1/2 + 1/2) - 1
    assert not apply_mode(Z3.exp((1, 0, 0)), 0, Z3.exp((-1, 0, 0))).is_zero()
    assert vanishing_bound(Z3.exp((1, 0, 0)), Z3.exp((-1, 0, 0))) == 1


def test_skew_symmetry_weight_two_pairs():
    rng = random.Random(11)
    for _ in range(100):
        u = random_state(Z2, rng, 2)
        v = random_state(Z2, rng, 2)
        for t in range(-3, 4):
            assert skew_difference(u, v, t).is_zero()


def test_kac_moody_bracket_example1():
    ex1 = build_example(1)
    q = ex1.generators
    V = ex1.voa
    rng = random.Random(4)
    sl2 = [q.h, q.xp, q.xm]
    k = q.k
    from svoa.recognition import bracket
    from svoa.conformal import vacuum_coefficient
    for _ in range(3):
        w = random_state(V, rng, 2)
        for u in sl2:
            for v in sl2:
                u0v = apply_mode(u, 0, v)
                form = vacuum_coefficient(apply_mode(u, 1, v))
                for m in range(-2, 3):
                    for n in range(-2, 3):
                        lhs = bracket(u, m, v, n, w)
                        rhs = apply_mode(u0v, m + n, w)
                        if m + n == 0:
                            rhs = rhs + m * form * w
                        assert (lhs - rhs).is_zero()
    assert k == 1


def test_lattice_mismatch():
    with pytest.raises(SpaceMismatch):
        apply_mode(Z2.vacuum(), -1, Z3.vacuum())


def test_mode_cache_is_invisible():
    V = LatticeVOA(example2_lattice())
    rng = random.Random(8)
    pairs = [(random_state(V, rng, 2), random_state(V, rng, 2)) for _ in range(5)]
    first = [apply_mode(u, n, v) for u, v in pairs for n in range(-2, 2)]
    V.engine.clear()
    second = [apply_mode(u, n, v) for u, v in pairs for n in range(-2, 2)]
    assert first == second


BACKEND_SCRIPT = r"""
import json, random
from svoa import BACKEND
from svoa.axioms import random_state
from svoa.fock import LatticeVOA
from svoa.lattice import example2_lattice, standard_lattice
from svoa.modes import apply_mode
out = [BACKEND]
for lat in (standard_lattice(2), example2_lattice()):
    V = LatticeVOA(lat)
    rng = random.Random(21)
    for _ in range(25):
        u, v = random_state(V, rng, 2), random_state(V, rng, 2)
        for n in range(-3, 3):
            out.append(str(apply_mode(u, n, v)))
print(json.dumps(out))
"""


def _run_backend(pure: bool):
    env = dict(os.environ, SVOA_PURE_PYTHON="1" if pure else "0")
    res = subprocess.run([sys.executable, "-c", BACKEND_SCRIPT], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def test_backends_agree():
    pure = _run_backend(True)
    fast = _run_backend(False)
    assert pure[0] == "python"
    if fast[0] != "compiled":
        pytest.skip("compiled kernels not built")
    assert pure[1:] == fast[1:]


def test_compiled_cyclo_matches_pure_on_large_inputs():
    from svoa import _cyclo
    try:
        from svoa import _cyclo_ext
    except ImportError:
        pytest.skip("compiled kernels not built")
    rng = random.Random(0)
    for bits in (4, 27, 29, 80):
        for _ in range(50):
            a = tuple(rng.randint(-2**bits, 2**bits) for _ in range(8))
            b = tuple(rng.randint(-2**bits, 2**bits) for _ in range(8))
            ad, bd = rng.randint(1, 2**bits), rng.randint(1, 2**bits)
            an, ad = _cyclo.normalize(a, ad)
            bn, bd = _cyclo.normalize(b, bd)
            assert _cyclo.mul(an, ad, bn, bd) == _cyclo_ext.mul(an, ad, bn, bd)
            assert _cyclo.add(an, ad, bn, bd) == _cyclo_ext.add(an, ad, bn, bd)
            p, qd = rng.randint(-2**bits, 2**bits), rng.randint(1, 2**bits)
            assert _cyclo.scale(an, ad, p, qd) == _cyclo_ext.scale(an, ad, p, qd)
