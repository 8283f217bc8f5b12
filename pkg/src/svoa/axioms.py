"""Randomised checks of the SVOA axioms on a lattice SVOA.

Every identity is evaluated as an exact difference of FockStates; a
counterexample is any nonzero difference.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .fock import FockState, LatticeVOA
from .modes import apply_mode, vanishing_bound
from .report import CheckReport
from .scalars import I, Scalar

__all__ = [
    "binom",
    "jacobi_difference",
    "skew_difference",
    "commutator_difference",
    "associativity_difference",
    "random_state",
    "AxiomSuite",
    "run_axiom_suite",
]


def binom(r: int, i: int) -> int:
    """Generalised binomial coefficient C(r, i) for integer r, i >= 0."""
    if i < 0:
        return 0
    if r >= 0:
        return comb(r, i) if i <= r else 0
    return (-1) ** i * comb(-r + i - 1, i)


def _sgn(t, u, v):
    pu, pv = u.parity(), v.parity()
    return -1 if (t + pu * pv) % 2 else 1


def jacobi_difference(u, v, w, r, s, t) -> FockState:
    """LHS - RHS of the super Jacobi identity for modes r, s, t applied to w."""
    voa = w.voa
    lhs = voa.zero()
    n_uv = vanishing_bound(u, v)
    i = 0
    while t + i < n_uv:
        c = binom(r, i)
        if c:
            lhs = lhs + c * apply_mode(apply_mode(u, t + i, v), r + s - i, w)
        elif r >= 0:
            break
        i += 1
    rhs = voa.zero()
    sign = _sgn(t, u, v)
    n_vw = vanishing_bound(v, w)
    n_uw = vanishing_bound(u, w)
    top = max(n_vw - s, n_uw - r, 0)
    for i in range(top + 1):
        c = (-1) ** i * binom(t, i)
        if not c:
            continue
        if s + i < n_vw:
            rhs = rhs + c * apply_mode(u, r + t - i, apply_mode(v, s + i, w))
        if r + i < n_uw:
            rhs = rhs - (sign * c) * apply_mode(v, s + t - i, apply_mode(u, r + i, w))
    return lhs - rhs


def commutator_difference(u, v, w, r, s) -> FockState:
    """u(r)v(s)w - (-1)^{p(u)p(v)} v(s)u(r)w - sum_i C(r,i) (u(i)v)(r+s-i) w."""
    return jacobi_difference(u, v, w, r, s, 0)


def associativity_difference(u, v, w, t, s) -> FockState:
    return jacobi_difference(u, v, w, 0, s, t)


def skew_difference(u, v, t) -> FockState:
    """v(t)u + (-1)^{t+p(u)p(v)} sum_i (-1)^i T^(i) u(t+i)v, with T^(i) x = x(-i-1)1."""
    voa = u.voa
    one = voa.vacuum()
    acc = voa.zero()
    n0 = vanishing_bound(u, v)
    i = 0
    while t + i < n0:
        x = apply_mode(u, t + i, v)
        if x:
            acc = acc + (-1) ** i * apply_mode(x, -i - 1, one)
        i += 1
    return apply_mode(v, t, u) + _sgn(t, u, v) * acc


# -- random states ---------------------------------------------------------------

def _rand_coeff(rng: random.Random) -> Scalar:
    num = rng.choice([1, -1, 2, -2, 3, 1, -1])
    den = rng.choice([1, 1, 2, 3])
    c = Scalar.from_rational(Fraction(num, den))
    if rng.random() < 0.25:
        c = c * I
    return c


def random_state(voa: LatticeVOA, rng: random.Random, max_weight=Fraction(5, 2),
                 weight=None, max_terms: int = 3) -> FockState:
    """A random nonzero homogeneous state of weight <= max_weight."""
    if weight is None:
        choices = [Fraction(k, 2) for k in range(int(2 * max_weight) + 1)]
        while True:
            weight = rng.choice(choices)
            if voa.basis(weight):
                break
    basis = voa.basis(weight)
    k = rng.randint(1, min(max_terms, len(basis)))
    out = voa.zero()
    for m in rng.sample(basis, k):
        out = out + voa.monomial([(i, -nl) for nl, i in m.factors], m.point, _rand_coeff(rng))
    return out


@dataclass
class AxiomSuite:
    voa: LatticeVOA
    trials: int = 100
    seed: int = 0
    max_weight: Fraction = Fraction(5, 2)
    jacobi_range: tuple = (-2, 2)
    skew_range: tuple = (-3, 3)

    def triples(self):
        rng = random.Random(self.seed)
        for _ in range(self.trials):
            yield tuple(random_state(self.voa, rng, self.max_weight) for _ in range(3))


def run_axiom_suite(suite: AxiomSuite, stop_on_failure: bool = True, progress=None) -> CheckReport:
    """Super Jacobi on (r, s, t) in jacobi_range^3 and skew-symmetry on t in skew_range.

    Commutativity (t = 0) and associativity (r = 0) are the corresponding
    slices of the Jacobi grid and are reported separately.
    """
    report = CheckReport(title=f"SVOA axioms on {suite.voa.lattice.name} "
                               f"(trials={suite.trials}, seed={suite.seed})")
    lo, hi = suite.jacobi_range
    rng_ = range(lo, hi + 1)
    slo, shi = suite.skew_range
    status = {"jacobi": None, "commutativity": None, "associativity": None, "skew": None}
    for k, (u, v, w) in enumerate(suite.triples()):
        for r in rng_:
            for s in rng_:
                for t in rng_:
                    d = jacobi_difference(u, v, w, r, s, t)
                    if d:
                        label = ("commutativity" if t == 0 else
                                 "associativity" if r == 0 else "jacobi")
                        if status[label] is None:
                            status[label] = (d, (u, v, w), (r, s, t))
                        if status["jacobi"] is None:
                            status["jacobi"] = (d, (u, v, w), (r, s, t))
                        if stop_on_failure:
                            break
                else:
                    continue
                if stop_on_failure and status["jacobi"]:
                    break
            if stop_on_failure and status["jacobi"]:
                break
        for t in range(slo, shi + 1):
            d = skew_difference(u, v, t)
            if d and status["skew"] is None:
                status["skew"] = (d, (u, v), (t,))
        if progress:
            progress(k + 1)
        if stop_on_failure and any(status.values()):
            break
    anchors = {
        "jacobi": "sum_i C(r,i)(u(t+i)v)(r+s-i)w = sum_i (-1)^i C(t,i){u(r+t-i)v(s+i) - (-1)^(t+p(u)p(v)) v(s+t-i)u(r+i)}w",
        "commutativity": "u(r)v(s) - (-1)^(p(u)p(v)) v(s)u(r) = sum_i C(r,i)(u(i)v)(r+s-i)",
        "associativity": "(u(t)v)(s) = sum_i (-1)^i C(t,i){u(t-i)v(s+i) - (-1)^(t+p(u)p(v)) v(s+t-i)u(i)}",
        "skew": "v(t)u = -(-1)^(t+p(u)p(v)) sum_i (-1)^i T^(i) u(t+i)v",
    }
    titles = {"jacobi": "super Jacobi identity", "commutativity": "super commutativity",
              "associativity": "super associativity", "skew": "super skew-symmetry"}
    for key in ("jacobi", "commutativity", "associativity", "skew"):
        st = status[key]
        if st is None:
            report.add(titles[key], anchors[key], True)
        else:
            d, states, modes = st
            names = "uvw"
            ctx = {f"{names[j]}": str(x) for j, x in enumerate(states)}
            ctx["modes"] = ",".join(map(str, modes))
            report.add(titles[key], anchors[key], False, witness=d, context=ctx)
    return report
