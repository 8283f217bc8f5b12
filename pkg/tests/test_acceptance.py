"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` or directly as a script.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import eps_product, exp_pair_oracle, gram_inner, state_as_rational_dict  # noqa: E402
from svoa.axioms import AxiomSuite, random_state, run_axiom_suite, skew_difference  # noqa: E402
from svoa.cocycle import build_epsilon  # noqa: E402
from svoa.conformal import Subspace, intersect, span_products  # noqa: E402
from svoa.examples import build_example  # noqa: E402
from svoa.fock import LatticeVOA  # noqa: E402
from svoa.lattice import standard_lattice, theta_coefficients  # noqa: E402
from svoa.modes import apply_mode, exp_mode  # noqa: E402
from svoa.recognition import (  # noqa: E402
    check_n2,
    check_n4_axioms,
    check_n4_relations,
    lattice_side_sums,
    n4_commutator_checks,
)

UNITS6 = [tuple(int(i == j) for j in range(6)) for i in range(6)]


def _sum_of_squares(V, vectors, scale):
    out = V.zero()
    for a in vectors:
        out = out + V.heis(a, 1, on=V.heis(a, 1))
    return out * scale


def _failed(rep):
    f = rep.first_failure()
    return f"first failure: {f.label}" if f else ""


# -- criteria -------------------------------------------------------------------

def criterion_1():
    b = build_example(1)
    q, V = b.generators, b.voa
    ax = check_n4_axioms(q, "abstract")
    rel = check_n4_relations(q)
    if not ax.passed:
        return False, _failed(ax)
    if not rel.passed:
        return False, _failed(rel)
    sigma_ok = q.sigma == _sum_of_squares(V, UNITS6, Fraction(1, 2))
    ok = rel.c == 6 and ax.c == 6 and sigma_ok
    return ok, f"c = {rel.c}, sigma = (1/2) sum g_i(-1)g_i: {sigma_ok}"


def criterion_2():
    b = build_example(2)
    q, V = b.generators, b.voa
    theta = [n for _, n in theta_coefficients(b.lattice, 3)]
    sums = lattice_side_sums(b.sum_data, V)
    ax = check_n4_axioms(q, "lattice")
    rel = check_n4_relations(q)
    frame = list(b.sum_data.c)
    sigma_ok = q.sigma == _sum_of_squares(V, frame, Fraction(1, 6))
    ok = (theta == [1, 0, 2, 24] and sums.passed and ax.passed and rel.passed
          and sums.notes["c_a d_(h-a) eps(h,a) values"] == "-1/3"
          and ax.c == 6 and rel.c == 6 and sigma_ok)
    return ok, (f"theta {theta}, sums {sums.passed}, (I)-(IV) {ax.passed}, relations {rel.passed}, "
                f"c = {rel.c}, sigma = (1/6) sum a(-1)a: {sigma_ok}")


def criterion_3():
    details = []
    ok = True
    for n, c in ((3, 3), (4, 1), (5, Fraction(3, 2))):
        b = build_example(n)
        V = b.voa
        if n == 3:
            want = _sum_of_squares(V, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], Fraction(1, 2))
        elif n == 4:
            want = _sum_of_squares(V, [(1, 1, 1)], Fraction(1, 6))
        else:
            want = b.expected_virasoro
        rep = check_n2(*b.generators)
        this = rep.passed and rep.c == c and rep.notes["sigma"] == want
        ok &= this
        details.append(f"ex{n}: c = {rep.c} {'ok' if this else 'BAD ' + _failed(rep)}")
    return ok, "; ".join(details)


def criterion_4():
    b = build_example(1)
    q, V = b.generators, b.voa
    zero_ok = all(span_products(X, n, X).is_zero() for X in (q.A, q.B) for n in (0, 1, 2))
    a1b = span_products(q.A, 1, q.B)
    a2b = span_products(q.A, 2, q.B)
    a0b = span_products(q.A, 0, q.B)
    b0a = span_products(q.B, 0, q.A)
    tsl2 = Subspace(V, [u.translate() for u in (q.h, q.xp, q.xm)])
    meets = intersect(tsl2, a0b).dim > 0
    same = a0b == b0a
    ok = zero_ok and a1b.dim == 3 and a2b == Subspace(V, [V.vacuum()]) and same and meets == same
    return ok, (f"A(n)A = B(n)B = 0: {zero_ok}, dim A(1)B = {a1b.dim}, dim A(2)B = {a2b.dim}, "
                f"A(0)B = B(0)A: {same}, T sl2 meets A(0)B: {meets}")


def criterion_5():
    V = LatticeVOA(standard_lattice(2))
    suite = AxiomSuite(V, trials=100, seed=0, max_weight=Fraction(5, 2),
                       jacobi_range=(-2, 2), skew_range=(-3, 3))
    rep = run_axiom_suite(suite)
    rng = random.Random(1)
    pairs_ok = True
    for _ in range(100):
        u, v = random_state(V, rng, 2), random_state(V, rng, 2)
        if any(skew_difference(u, v, t) for t in range(-3, 4)):
            pairs_ok = False
            break
    return rep.passed and pairs_ok, f"100 triples, 125 (r,s,t) each: {rep.passed}; 100 extra skew pairs: {pairs_ok}"


def criterion_6():
    V = LatticeVOA(standard_lattice(3))
    lat, table = V.lattice, V.epsilon.basis_values
    vecs = [a for n in (1, 2, 3) for a in lat.enumerate_norm(n)]
    bad = checked = 0
    for g in vecs:
        for r in vecs:
            top = -gram_inner(lat.gram, g, r) - 1
            for n in range(top - 3, top + 2):  # four nonzero values and the first zero
                if state_as_rational_dict(exp_mode(g, n, V.exp(r))) != exp_pair_oracle(lat.gram, table, g, r, n):
                    bad += 1
                checked += 1
    return bad == 0, f"{len(vecs)} vectors, {checked} (g, r, n) cases, {bad} discrepancies"


def criterion_7():
    bad = 0
    count = 0
    for n in (1, 2):
        b = build_example(n)
        lat, eps = b.lattice, b.epsilon
        for k in (2, 3, 4):
            for a in lat.enumerate_norm(k):
                want = -1 if k == 2 else 1
                bad += eps(a, a) != want
                count += 1
        rng = random.Random(n)
        for _ in range(100):
            a, c, d = (tuple(rng.randint(-3, 3) for _ in range(lat.rank)) for _ in range(3))
            ac = tuple(x + y for x, y in zip(a, c))
            bad += eps(ac, d) != eps(a, d) * eps(c, d)
            bad += eps(d, ac) != eps(d, a) * eps(d, c)
            sign = (-1) ** ((lat.inner(a, c) + lat.norm(a) * lat.norm(c)) % 2)
            bad += eps(a, c) * eps(c, a) != sign
            bad += eps(a, c) != eps_product(eps.basis_values, a, c)
    return bad == 0, f"{count} enumerated vectors, 2 x 100 random pairs, {bad} violations"


def criterion_8():
    total = 0
    for n in (1, 2):
        b = build_example(n)
        rng = random.Random(8 + n)
        states = [random_state(b.voa, rng, 2) for _ in range(3)]
        rep = n4_commutator_checks(b.generators, states, range(-2, 3))
        total += len(rep.items)
        if not rep.passed:
            return False, f"example {n}: {_failed(rep)}"
    return True, f"{total} bracket identities on random states, m, n in [-2, 2]"


def criterion_9():
    b1 = build_example(1)
    q1, V1 = b1.generators, b1.voa
    b2 = build_example(2)
    data = b2.sum_data
    lam = next(iter(data.d))
    bad_data = data.perturbed("d", lam, data.d[lam] * 2)
    Z2 = standard_lattice(2)
    corrupt = LatticeVOA(Z2, build_epsilon(Z2).with_value(0, 1, -1))
    cases = {
        "zeroed generator": check_n4_axioms(q1.replace(tau_m=V1.zero())),
        "swapped taubars": check_n4_axioms(q1.replace(taubar_p=q1.taubar_m, taubar_m=q1.taubar_p)),
        "perturbed d": lattice_side_sums(bad_data, b2.voa),
        "perturbed d (generators)": check_n4_axioms(bad_data.generators(b2.voa), "lattice"),
        "corrupted epsilon": run_axiom_suite(AxiomSuite(corrupt, trials=30, seed=0)),
    }
    ok = True
    parts = []
    for name, rep in cases.items():
        f = rep.first_failure()
        good = (not rep.passed and f is not None and f.witness is not None
                and not f.witness.is_zero())
        ok &= good
        parts.append(f"{name} -> {f.label if f else 'no failure'}")
    return ok, "; ".join(parts)


def criterion_10():
    V = LatticeVOA(standard_lattice(2))
    one = V.vacuum()
    omega = V.standard_virasoro()
    rng = random.Random(10)
    bad = 0
    for _ in range(100):
        u = random_state(V, rng, Fraction(5, 2))
        t = u.translate()
        bad += not (t == apply_mode(u, -2, one) == apply_mode(omega, 0, u))
    return bad == 0, f"100 states, {bad} disagreements"


CRITERIA = [
    (1, "Example 1 golden (N=4 hypotheses and relations, c = 6, sigma)", criterion_1),
    (2, "Example 2 golden (theta, lattice sums, lattice hypotheses, c = 6, sigma)", criterion_2),
    (3, "Examples 3-5 golden (N=2, c and sigma)", criterion_3),
    (4, "Example 1 subspace consequences", criterion_4),
    (5, "SVOA axiom property suite on V_Z2", criterion_5),
    (6, "exp_mode against closed-form oracle on Z3", criterion_6),
    (7, "epsilon suite", criterion_7),
    (8, "mode-commutator identities", criterion_8),
    (9, "negative tests name the first violated identity with a witness", criterion_9),
    (10, "T three-way agreement on V_Z2", criterion_10),
]


def _run(number, title, fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    return ok, f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} [{dt:.1f}s] {detail}"


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_acceptance(number, title, fn, capsys):
    ok, line = _run(number, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
