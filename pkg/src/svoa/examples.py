"""Builders for the five worked N=2 / N=4 constructions.

1. N=4, c=6, in V_{Z^6} (twelve free fermions).
2. N=4, c=6, in the rank-6 lattice spanned by an orthogonal norm-3 frame
   and h = (a_1+...+a_6)/3 (no norm-1 vectors, roots +-h only).
3. N=2, c=3, in V_{Z^3}.
4. N=2, c=1, from e^{+-gamma}/sqrt3 with gamma of norm 3 (inside Z^3).
5. N=2, c=3/2, from two norm-3 vectors alpha, beta with (alpha, beta) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cocycle import EpsilonTable, build_epsilon
from .fock import FockState, LatticeVOA
from .lattice import LatticeData, example2_lattice, standard_lattice
from .recognition import GeneratorQuad, SumData
from .scalars import I, INV_SQRT2, INV_SQRT3, Scalar

__all__ = ["ExampleBundle", "build_example", "EXAMPLE_NUMBERS"]

EXAMPLE_NUMBERS = (1, 2, 3, 4, 5)


@dataclass
class ExampleBundle:
    number: int
    kind: str  # "N4" or "N2"
    voa: LatticeVOA
    generators: object  # GeneratorQuad or (tau_p, tau_m)
    expected_c: Scalar
    expected_virasoro: FockState
    sum_data: SumData | None = None
    notes: dict = field(default_factory=dict)

    @property
    def lattice(self) -> LatticeData:
        return self.voa.lattice

    @property
    def epsilon(self) -> EpsilonTable:
        return self.voa.epsilon

    def generator_states(self) -> dict[str, FockState]:
        if self.kind == "N4":
            q = self.generators
            return {"tau_p": q.tau_p, "tau_m": q.tau_m, "taubar_p": q.taubar_p, "taubar_m": q.taubar_m}
        tp, tm = self.generators
        return {"tau_p": tp, "tau_m": tm}


def _unit(rank, i, s=1):
    v = [0] * rank
    v[i] = s
    return tuple(v)


def _example1() -> ExampleBundle:
    lat = standard_lattice(6)
    # eps(g1, g2) = +1 is already the default upper-triangle choice
    V = LatticeVOA(lat, build_epsilon(lat, {(0, 1): 1}))
    g = [_unit(6, k) for k in range(6)]
    mg = [_unit(6, k, -1) for k in range(6)]

    def vec(c3=0, c4=0, c5=0, c6=0):
        return [0, 0, c3, c4, c5, c6]

    a = vec(INV_SQRT2, I * INV_SQRT2)
    abar = vec(INV_SQRT2, -I * INV_SQRT2)
    b = vec(0, 0, INV_SQRT2, I * INV_SQRT2)
    bbar = vec(0, 0, INV_SQRT2, -I * INV_SQRT2)

    def x1(vector, point):  # vector(-1) e^point
        return V.heis(vector, 1, on=V.exp(point))

    tau_p = x1(a, g[0]) + x1(b, g[1])
    tau_m = x1(a, mg[1]) - x1(b, mg[0])
    taubar_p = x1(abar, g[1]) - x1(bbar, g[0])
    taubar_m = -x1(abar, mg[0]) - x1(bbar, mg[1])
    omega = V.standard_virasoro()
    return ExampleBundle(1, "N4", V, GeneratorQuad(tau_p, tau_m, taubar_p, taubar_m),
                         Scalar.from_rational(6), omega,
                         notes={"h": (1, 1, 0, 0, 0, 0)})


def example2_sum_data(V: LatticeVOA, c=None, d=None) -> SumData:
    """Coefficient data: tau+ = sum c_a e^a over a in X = {a_i}, taubar+ = sum d_l e^l over Y = {h - a_i}.

    Defaults c_a = 1, d_{h-a} = -eps(h, a)/3.
    """
    lat = V.lattice
    h = _unit(6, 5)
    X = [_unit(6, k) for k in range(5)]
    X.append(tuple(3 * h[k] - sum(x[k] for x in X) for k in range(6)))
    if c is None:
        c = {a: Scalar.from_rational(1) for a in X}
    if d is None:
        d = {}
        for a in X:
            lam = tuple(hk - ak for hk, ak in zip(h, a))
            d[lam] = Scalar.from_rational(Fraction(-V.epsilon(h, a), 3))
    assert all(lat.norm(a) == 3 for a in X)
    return SumData(h=h, c=dict(c), d=dict(d))


def _example2() -> ExampleBundle:
    lat = example2_lattice()
    V = LatticeVOA(lat, build_epsilon(lat))
    data = example2_sum_data(V)
    quad = data.generators(V)
    X = list(data.c)
    omega = V.zero()
    for a in X:
        omega = omega + V.heis(a, 1, on=V.heis(a, 1))
    omega = omega * Fraction(1, 6)
    return ExampleBundle(2, "N4", V, quad, Scalar.from_rational(6), omega, sum_data=data,
                         notes={"h": data.h})


def _example3(tau_minus_sign: int = -1) -> ExampleBundle:
    """tau+ = a+(-1)e^{g1}, tau- = s*a-(-1)e^{-g1} with a+- = (g2 +- i g3)/sqrt2.

    With s = +1, tau+(1)tau- = eps(g1, -g1) g1 = -g1 because eps(g1, g1) = -1, so
    h(0)tau+ = -tau+.  The default s = -1 gives h = g1 and sigma = omega.
    """
    lat = standard_lattice(3)
    V = LatticeVOA(lat)
    ap = [0, INV_SQRT2, I * INV_SQRT2]
    am = [0, INV_SQRT2, -I * INV_SQRT2]
    tp = V.heis(ap, 1, on=V.exp((1, 0, 0)))
    tm = V.heis(am, 1, on=V.exp((-1, 0, 0))) * tau_minus_sign
    return ExampleBundle(3, "N2", V, (tp, tm), Scalar.from_rational(3), V.standard_virasoro(),
                         notes={"tau_minus_sign": tau_minus_sign})


def _example4() -> ExampleBundle:
    lat = standard_lattice(3)
    V = LatticeVOA(lat)
    gamma = (1, 1, 1)
    tp = V.exp(gamma, INV_SQRT3)
    tm = V.exp((-1, -1, -1), INV_SQRT3)
    omega = V.heis(gamma, 1, on=V.heis(gamma, 1)) * Fraction(1, 6)
    return ExampleBundle(4, "N2", V, (tp, tm), Scalar.from_rational(1), omega,
                         notes={"gamma": gamma})


def _example5(lam=1, mu=1) -> ExampleBundle:
    lat = standard_lattice(3)
    V = LatticeVOA(lat)
    alpha, beta = (1, 1, 1), (1, 1, -1)
    lam, mu = Scalar.from_rational(1) * lam, Scalar.from_rational(1) * mu
    half = Fraction(1, 2)
    neg = lambda p: tuple(-x for x in p)  # noqa: E731
    tp = (V.exp(alpha, lam) + V.exp(beta, mu)) * half
    tm = (V.exp(neg(alpha), lam.inverse()) + V.exp(neg(beta), mu.inverse())) * half
    amb = tuple(x - y for x, y in zip(alpha, beta))
    eps = V.epsilon
    omega = (V.heis(alpha, 1, on=V.heis(alpha, 1)) + V.heis(beta, 1, on=V.heis(beta, 1))
             + V.exp(amb, 2 * lam / mu * eps(alpha, beta))
             + V.exp(neg(amb), 2 * mu / lam * eps(beta, alpha))) * Fraction(1, 8)
    return ExampleBundle(5, "N2", V, (tp, tm), Scalar.from_rational(Fraction(3, 2)), omega,
                         notes={"alpha": alpha, "beta": beta})


_BUILDERS = {1: _example1, 2: _example2, 3: _example3, 4: _example4, 5: _example5}


def build_example(n: int, **options) -> ExampleBundle:
    if n not in _BUILDERS:
        raise ValueError(f"no example {n}; choose from 1..5")
    return _BUILDERS[n](**options)
