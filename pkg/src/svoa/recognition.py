"""Recognition checks for N=4 and N=2 superconformal subalgebras of V_L.

All identities are evaluated exactly with the mode engine; a failed item
carries the nonzero difference state as its witness.  Generator names:
``tau_p``, ``tau_m`` span A and ``taubar_p``, ``taubar_m`` span B.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .conformal import (
    Sl2Error,
    Subspace,
    intersect,
    is_virasoro,
    level_of_sl2,
    primary_report,
    span_products,
    vacuum_coefficient,
)
from .fock import FockState, LatticeVOA
from .lattice import lattice_predicates
from .modes import apply_mode
from .report import CheckReport
from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "GeneratorQuad",
    "SumData",
    "NormalizationError",
    "normalize_quad",
    "check_n4_axioms",
    "check_n4_relations",
    "check_n2",
    "lattice_side_sums",
    "n4_commutator_checks",
    "n2_commutator_checks",
    "bracket",
]

_HALF = Fraction(1, 2)


def bracket(u: FockState, m: int, v: FockState, n: int, w: FockState) -> FockState:
    """[u(m), v(n)] w with the super sign (-1)^{p(u)p(v)}."""
    sign = -1 if (u.parity() or 0) * (v.parity() or 0) % 2 else 1
    return apply_mode(u, m, apply_mode(v, n, w)) - sign * apply_mode(v, n, apply_mode(u, m, w))


# -- generator data ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GeneratorQuad:
    """tau+-, taubar+- ; derived quantities assume the quad is normalized."""

    tau_p: FockState
    tau_m: FockState
    taubar_p: FockState
    taubar_m: FockState

    @property
    def voa(self) -> LatticeVOA:
        return self.tau_p.voa

    def states(self) -> tuple[FockState, FockState, FockState, FockState]:
        return (self.tau_p, self.tau_m, self.taubar_p, self.taubar_m)

    @property
    def A(self) -> list[FockState]:
        return [self.tau_p, self.tau_m]

    @property
    def B(self) -> list[FockState]:
        return [self.taubar_p, self.taubar_m]

    def scaled(self, s=1, t=1) -> GeneratorQuad:
        """tau's times s, taubar's times t."""
        return GeneratorQuad(self.tau_p * s, self.tau_m * s, self.taubar_p * t, self.taubar_m * t)

    def involution(self) -> GeneratorQuad:
        """(tau+-, taubar+-) -> (taubar+-, -tau+-)."""
        return GeneratorQuad(self.taubar_p, self.taubar_m, -self.tau_p, -self.tau_m)

    def replace(self, **kw) -> GeneratorQuad:
        d = dict(tau_p=self.tau_p, tau_m=self.tau_m, taubar_p=self.taubar_p, taubar_m=self.taubar_m)
        d.update(kw)
        return GeneratorQuad(**d)

    @cached_property
    def h(self) -> FockState:
        return apply_mode(self.tau_p, 1, self.taubar_m)

    @cached_property
    def xp(self) -> FockState:
        return apply_mode(self.tau_p, 1, self.taubar_p) * (-_HALF)

    @cached_property
    def xm(self) -> FockState:
        return apply_mode(self.tau_m, 1, self.taubar_m) * _HALF

    @cached_property
    def sigma(self) -> FockState:
        return (apply_mode(self.tau_p, 0, self.taubar_m)
                - apply_mode(self.tau_m, 0, self.taubar_p)) * _HALF

    @cached_property
    def k(self) -> Scalar:
        return level_of_sl2(self.h, self.xp, self.xm)

    def n4_names(self) -> dict[str, FockState]:
        """J0 = h, J+- = x+-, G+- = tau+-, Gbar+- = -+taubar+-."""
        return {"J0": self.h, "J+": self.xp, "J-": self.xm, "G+": self.tau_p, "G-": self.tau_m,
                "Gbar+": -self.taubar_p, "Gbar-": self.taubar_m}


@dataclass
class SumData:
    """tau+ = sum_{a in X} c_a e^a and taubar+ = sum_{l in Y} d_l e^l for a root h."""

    h: tuple
    c: dict
    d: dict

    @property
    def X(self) -> list[tuple]:
        return [a for a, v in self.c.items() if as_scalar(v)]

    @property
    def Y(self) -> list[tuple]:
        return [l for l, v in self.d.items() if as_scalar(v)]

    def generators(self, V: LatticeVOA) -> GeneratorQuad:
        eps = V.epsilon
        h = self.h
        tp, tm, bp, bm = V.zero(), V.zero(), V.zero(), V.zero()
        for a in self.X:
            c = as_scalar(self.c[a])
            tp = tp + V.exp(a, c)
            tm = tm + V.exp(_sub(a, h), c * eps(h, a))
        for l in self.Y:
            d = as_scalar(self.d[l])
            bp = bp + V.exp(l, d)
            bm = bm + V.exp(_sub(l, h), d * eps(h, l))
        return GeneratorQuad(tp, tm, bp, bm)

    def perturbed(self, which: str, key, value) -> SumData:
        c, d = dict(self.c), dict(self.d)
        (c if which == "c" else d)[tuple(key)] = value
        return SumData(self.h, c, d)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


# -- normalization -----------------------------------------------------------------

class NormalizationError(ValueError):
    pass


def _eigen_ratio(x: FockState, v: FockState):
    """mu with x = mu*v, or None."""
    if v.is_zero():
        return None
    mono, c = v.sorted_terms()[0]
    mu = x.coefficient(mono) / c
    return mu if (x - v * mu).is_zero() else None


def normalize_quad(q: GeneratorQuad) -> GeneratorQuad:
    """Rescale taubar+- so that h = tau+(1)taubar- = tau-(1)taubar+ satisfies h(0)tau+ = tau+."""
    h_raw = apply_mode(q.tau_p, 1, q.taubar_m)
    if h_raw.is_zero():
        raise NormalizationError("tau+(1)taubar- vanishes")
    lam = h_raw - apply_mode(q.tau_m, 1, q.taubar_p)
    if not lam.is_zero():
        raise NormalizationError(f"tau+(1)taubar- - tau-(1)taubar+ = {lam} is nonzero")
    dim = span_products(q.A, 1, q.B).dim
    if dim != 3:
        raise NormalizationError(f"A(1)B has dimension {dim}, expected 3")
    mu = _eigen_ratio(apply_mode(h_raw, 0, q.tau_p), q.tau_p)
    if not mu:
        raise NormalizationError("tau+ is not an eigenvector of (tau+(1)taubar-)(0) with nonzero eigenvalue")
    out = q if mu == ONE else q.scaled(1, mu.inverse())
    try:
        out.k
    except Sl2Error as e:
        raise NormalizationError(str(e)) from e
    return out


def _soft_normalize(q: GeneratorQuad):
    """Best-effort normalization that never raises; returns (quad, note)."""
    h_raw = apply_mode(q.tau_p, 1, q.taubar_m)
    mu = _eigen_ratio(apply_mode(h_raw, 0, q.tau_p), q.tau_p) if h_raw else None
    if not mu:
        return q, "no rescaling applied"
    if mu == ONE:
        return q, "already normalized"
    return q.scaled(1, mu.inverse()), f"taubar+- divided by {mu}"


# -- N=4: recognition hypotheses -----------------------------------------------------------

def _weight_parity_items(rep, names_states, prefix=""):
    for name, s in names_states:
        rep.add(f"{prefix}{name} has weight 3/2", "wt = 3/2", s.has_weight(Fraction(3, 2)) and bool(s),
                witness=s if s else None)
        rep.add(f"{prefix}{name} is odd", "p = 1", s.parity() == 1 or not s, witness=s if s else None)


def _in_vacuum_line(u: FockState):
    return vacuum_coefficient(u) is not None


def check_n4_axioms(q: GeneratorQuad, mode: str = "abstract") -> CheckReport:
    """Recognition hypotheses (I)-(IV) for an N=4 quad.

    ``mode="abstract"``: (III) A(0)A = B(0)B = 0, (IV) T sl2 meets A(0)B, and
    primality against the standard lattice conformal vector.
    ``mode="lattice"``: (III) A(1)A = B(1)B = 0, (IV) h is a root of L, and
    L odd with minimum norm 2.
    """
    if mode not in ("abstract", "lattice"):
        raise ValueError("mode must be 'abstract' or 'lattice'")
    rep = CheckReport(title=f"N=4 hypotheses ({mode})")
    q, note = _soft_normalize(q)
    rep.notes["normalization"] = note
    V = q.voa
    tp, tm, bp, bm = q.states()
    h, xp, xm = q.h, q.xp, q.xm
    z = lambda label, anchor, diff: rep.check_zero(label, anchor, diff)  # noqa: E731

    # (I): A, B are sl2 doublets with highest weights tau+, taubar+
    z("(I) h(0)tau+ = tau+", "h(0)tau± = ±tau±", apply_mode(h, 0, tp) - tp)
    z("(I) h(0)tau- = -tau-", "h(0)tau± = ±tau±", apply_mode(h, 0, tm) + tm)
    z("(I) h(0)taubar+ = taubar+", "h(0)taubar± = ±taubar±", apply_mode(h, 0, bp) - bp)
    z("(I) h(0)taubar- = -taubar-", "h(0)taubar± = ±taubar±", apply_mode(h, 0, bm) + bm)
    z("(I) x+(0)tau- = tau+", "x±(0)tau∓ = tau±", apply_mode(xp, 0, tm) - tp)
    z("(I) x-(0)tau+ = tau-", "x±(0)tau∓ = tau±", apply_mode(xm, 0, tp) - tm)
    z("(I) x+(0)taubar- = taubar+", "x±(0)taubar∓ = taubar±", apply_mode(xp, 0, bm) - bp)
    z("(I) x-(0)taubar+ = taubar-", "x±(0)taubar∓ = taubar±", apply_mode(xm, 0, bp) - bm)
    z("(I) x+(0)tau+ = 0", "x±(0)tau± = 0", apply_mode(xp, 0, tp))
    z("(I) x-(0)tau- = 0", "x±(0)tau± = 0", apply_mode(xm, 0, tm))
    z("(I) x+(0)taubar+ = 0", "x±(0)taubar± = 0", apply_mode(xp, 0, bp))
    z("(I) x-(0)taubar- = 0", "x±(0)taubar± = 0", apply_mode(xm, 0, bm))
    _weight_parity_items(rep, zip(("tau+", "tau-", "taubar+", "taubar-"), q.states()), "(I) ")
    dim_a = Subspace(V, q.A).dim
    dim_b = Subspace(V, q.B).dim
    dim_ab = Subspace(V, q.states()).dim
    rep.add("(I) dim A = 2", "A = <tau+, tau->", dim_a == 2, context={"dim": dim_a})
    rep.add("(I) dim B = 2", "B = <taubar+, taubar->", dim_b == 2, context={"dim": dim_b})
    rep.add("(I) A + B is direct", "dim(A + B) = 4", dim_ab == 4, context={"dim": dim_ab})

    # (II): A(1)B is sl2
    z("(II) h(0)x+ = 2x+", "h(0)x± = ±2x±", apply_mode(h, 0, xp) - 2 * xp)
    z("(II) h(0)x- = -2x-", "h(0)x± = ±2x±", apply_mode(h, 0, xm) + 2 * xm)
    z("(II) x+(0)x- = h", "x+(0)x- = h", apply_mode(xp, 0, xm) - h)
    z("(II) tau+(1)taubar- = tau-(1)taubar+", "tau+(1)taubar- - tau-(1)taubar+ = 0",
      h - apply_mode(tm, 1, bp))
    a1b = span_products(q.A, 1, q.B)
    sl2 = Subspace(V, [h, xp, xm])
    rep.add("(II) dim A(1)B = 3", "A(1)B = sl2", a1b.dim == 3, context={"dim": a1b.dim})
    rep.add("(II) A(1)B = <h, x+, x->", "A(1)B = sl2", a1b == sl2 and sl2.dim == 3)

    hh = apply_mode(h, 1, h)
    k = vacuum_coefficient(hh)
    rep.add("(II) h(1)h in C1", "h(1)h = 2k1", k is not None, witness=hh)
    if k is not None:
        rep.k = k / 2
        rep.c = 6 * rep.k

    if mode == "abstract":
        omega = V.standard_virasoro()
        for name, s in zip(("tau+", "tau-", "taubar+", "taubar-"), q.states()):
            pr = primary_report(s, omega)
            for it in pr.items:
                rep.add(f"(hyp) {name} primary: {it.label}", it.anchor, it.passed, it.witness)
        for label, X in (("A(0)A", q.A), ("B(0)B", q.B)):
            prods = [apply_mode(u, 0, v) for u in X for v in X]
            bad = next((p for p in prods if p), V.zero())
            rep.check_zero(f"(III) {label} = 0", "A(0)A = B(0)B = 0", bad)
        a0b = span_products(q.A, 0, q.B)
        tsl2 = Subspace(V, [u.translate() for u in (h, xp, xm)])
        meet = intersect(tsl2, a0b)
        rep.add("(IV) T sl2 meets A(0)B", "T sl2 ∩ A(0)B ≠ 0", meet.dim > 0,
                context={"dim": meet.dim})
        b0a = span_products(q.B, 0, q.A)
        rep.notes["A(0)B = B(0)A"] = a0b == b0a
        rep.notes["dim T sl2 ∩ A(0)B"] = meet.dim
    else:
        for label, X in (("A(1)A", q.A), ("B(1)B", q.B)):
            prods = [apply_mode(u, 1, v) for u in X for v in X]
            bad = next((p for p in prods if p), V.zero())
            rep.check_zero(f"(III) {label} = 0", "A(1)A = B(1)B = 0", bad)
        root = _root_of(h)
        rep.add("(IV) h is a root of L", "sl2 contains a root", root is not None, witness=h if h else None,
                context={} if root is None else {"root": root})
        preds = lattice_predicates(V.lattice)
        rep.add("(hyp) L is odd", "L odd", preds.is_odd)
        rep.add("(hyp) min norm of L is 2", "min (a,a) = 2", preds.min_norm == 2,
                context={"min_norm": preds.min_norm})
        if root is not None:
            rep.notes["root"] = root
    return rep


def _root_of(h: FockState):
    """The lattice vector a with h = a(-1)1 and (a, a) = 2, or None."""
    V = h.voa
    vec = [ZERO] * V.rank
    zero = (0,) * V.rank
    for m, c in h.terms.items():
        if m.point != zero or len(m.factors) != 1 or m.factors[0][0] != -1:
            return None
        vec[m.factors[0][1]] = c
    coords = []
    for c in vec:
        if not c.is_rational():
            return None
        f = c.to_fraction()
        if f.denominator != 1:
            return None
        coords.append(int(f))
    coords = tuple(coords)
    return coords if V.lattice.norm(coords) == 2 else None


# -- N=4: the full relation suite -------------------------------------------------------

def check_n4_relations(q: GeneratorQuad) -> CheckReport:
    """Relations (a)-(m), the weight-space consequences, and the sigma identities."""
    rep = CheckReport(title="N=4 relations")
    q, note = _soft_normalize(q)
    rep.notes["normalization"] = note
    V = q.voa
    one = V.vacuum()
    n = q.n4_names()
    J0, Jp, Jm, Gp, Gm, Bp, Bm = (n[x] for x in ("J0", "J+", "J-", "G+", "G-", "Gbar+", "Gbar-"))
    tp, tm, bp, bm = q.states()
    h, xp, xm, sigma = q.h, q.xp, q.xm, q.sigma
    hh = apply_mode(h, 1, h)
    k2 = vacuum_coefficient(hh)
    rep.add("h(1)h in C1", "h(1)h = 2k1", k2 is not None, witness=hh)
    k = (k2 if k2 is not None else ZERO) / 2
    c = 6 * k
    rep.k, rep.c = k, c
    z = rep.check_zero
    m = apply_mode

    z("(a) J0(0)J+ = 2J+", "J0(0)J± = ±2J±", m(J0, 0, Jp) - 2 * Jp)
    z("(a) J0(0)J- = -2J-", "J0(0)J± = ±2J±", m(J0, 0, Jm) + 2 * Jm)
    z("(b) J0(1)J0 = (c/3)1", "J0(1)J0 = (c/3)1", m(J0, 1, J0) - one * (c / 3))
    z("(c) J+(0)J- = J0", "J+(0)J- = J0", m(Jp, 0, Jm) - J0)
    z("(d) J+(1)J- = (c/6)1", "J+(1)J- = (c/6)1", m(Jp, 1, Jm) - one * (c / 6))
    z("(e) J0(0)G+ = G+", "J0(0)G± = ±G±", m(J0, 0, Gp) - Gp)
    z("(e) J0(0)G- = -G-", "J0(0)G± = ±G±", m(J0, 0, Gm) + Gm)
    z("(f) J0(0)Gbar+ = Gbar+", "J0(0)Gbar± = ±Gbar±", m(J0, 0, Bp) - Bp)
    z("(f) J0(0)Gbar- = -Gbar-", "J0(0)Gbar± = ±Gbar±", m(J0, 0, Bm) + Bm)
    z("(g) J+(0)G- = G+", "J±(0)G∓ = G±", m(Jp, 0, Gm) - Gp)
    z("(g) J-(0)G+ = G-", "J±(0)G∓ = G±", m(Jm, 0, Gp) - Gm)
    z("(h) J+(0)Gbar- = -Gbar+", "J±(0)Gbar∓ = -Gbar±", m(Jp, 0, Bm) + Bp)
    z("(h) J-(0)Gbar+ = -Gbar-", "J±(0)Gbar∓ = -Gbar±", m(Jm, 0, Bp) + Bm)
    z("(i) G+(1)Gbar+ = 2J+", "G±(1)Gbar± = 2J±", m(Gp, 1, Bp) - 2 * Jp)
    z("(i) G-(1)Gbar- = 2J-", "G±(1)Gbar± = 2J±", m(Gm, 1, Bm) - 2 * Jm)
    z("(j) G+(1)Gbar- = J0", "G±(1)Gbar∓ = ±J0", m(Gp, 1, Bm) - J0)
    z("(j) G-(1)Gbar+ = -J0", "G±(1)Gbar∓ = ±J0", m(Gm, 1, Bp) + J0)
    z("(k) G+(2)Gbar- = (c/3)1", "G±(2)Gbar∓ = (c/3)1", m(Gp, 2, Bm) - one * (c / 3))
    z("(k) G-(2)Gbar+ = (c/3)1", "G±(2)Gbar∓ = (c/3)1", m(Gm, 2, Bp) - one * (c / 3))
    z("(l) G+(0)Gbar+ = TJ+", "G±(0)Gbar± = TJ±", m(Gp, 0, Bp) - Jp.translate())
    z("(l) G-(0)Gbar- = TJ-", "G±(0)Gbar± = TJ±", m(Gm, 0, Bm) - Jm.translate())
    TJ0 = J0.translate()
    z("(m) G+(0)Gbar- = sigma + (1/2)TJ0", "G±(0)Gbar∓ = omega ± (1/2)TJ0",
      m(Gp, 0, Bm) - sigma - TJ0 * _HALF)
    z("(m) G-(0)Gbar+ = sigma - (1/2)TJ0", "G±(0)Gbar∓ = omega ± (1/2)TJ0",
      m(Gm, 0, Bp) - sigma + TJ0 * _HALF)

    # Weight-space consequences
    for label, X, Y in (("A(%d)A", q.A, q.A), ("B(%d)B", q.B, q.B)):
        for nn in (0, 1, 2):
            S = span_products(X, nn, Y)
            bad = S.basis()[0] if S.dim else V.zero()
            z(f"{label % nn} = 0", "A(n)A = B(n)B = 0 (n >= 0)", bad)
    sl2 = Subspace(V, [h, xp, xm])
    a0b = span_products(q.A, 0, q.B)
    v2 = Subspace(V, [u.translate() for u in (h, xp, xm)] + [sigma])
    rep.add("A(0)B = T sl2 + C sigma", "A(0)B = V_2", a0b == v2,
            context={"dim A(0)B": a0b.dim, "dim V_2": v2.dim})
    a1b = span_products(q.A, 1, q.B)
    rep.add("A(1)B = sl2", "A(1)B = sl2", a1b == sl2 and sl2.dim == 3, context={"dim": a1b.dim})
    a2b = span_products(q.A, 2, q.B)
    target = Subspace(V, [one * c]) if c else Subspace(V, [])
    rep.add("A(2)B = C c1", "A(2)B = C c1", a2b == target, context={"dim": a2b.dim})

    # Virasoro vector
    vir = is_virasoro(sigma, c)
    rep.extend(vir, prefix="sigma Virasoro: ")

    # sl2 and sigma identities
    sl2_named = (("h", h), ("x+", xp), ("x-", xm))
    gens_named = (("tau+", tp), ("tau-", tm), ("taubar+", bp), ("taubar-", bm))
    for un, u in sl2_named:
        for vn, v in gens_named:
            z(f"{un}(1){vn} = 0", "u(1)v = 0 (u in sl2, v in A+B)", m(u, 1, v))
    for un, u in sl2_named:
        z(f"sigma(0){un} = T{un}", "sigma(0)u = Tu", m(sigma, 0, u) - u.translate())
        z(f"sigma(1){un} = {un}", "sigma(1)u = u", m(sigma, 1, u) - u)
        z(f"sigma(2){un} = 0", "sigma(2)u = 0", m(sigma, 2, u))
    for vn, v in gens_named:
        z(f"sigma(0){vn} = T{vn}", "sigma(0)v = Tv", m(sigma, 0, v) - v.translate())
        z(f"sigma(1){vn} = (3/2){vn}", "sigma(1)v = (3/2)v", m(sigma, 1, v) - v * Fraction(3, 2))
        z(f"sigma(2){vn} = 0", "sigma(2)v = 0", m(sigma, 2, v))
    z("tau+(0)taubar+ = -Tx+", "tau±(0)taubar± = ∓Tx±", m(tp, 0, bp) + xp.translate())
    z("tau-(0)taubar- = Tx-", "tau±(0)taubar± = ∓Tx±", m(tm, 0, bm) - xm.translate())
    z("tau+(2)taubar+ = 0", "tau±(2)taubar± = 0", m(tp, 2, bp))
    z("tau-(2)taubar- = 0", "tau±(2)taubar± = 0", m(tm, 2, bm))
    z("tau+(2)taubar- = 2k1", "tau±(2)taubar∓ = ±2k1", m(tp, 2, bm) - one * (2 * k))
    z("tau-(2)taubar+ = -2k1", "tau±(2)taubar∓ = ±2k1", m(tm, 2, bp) + one * (2 * k))

    # Records without a verdict
    omega = V.standard_virasoro()
    rep.notes["sigma"] = sigma
    rep.notes["sigma equals the standard lattice conformal vector"] = sigma == omega
    half = Subspace(V, [m(u, 1, v) for _, u in sl2_named for _, v in gens_named]
                    + [m(sigma, 2, v) for _, v in gens_named])
    rep.notes["dim of weight-1/2 candidates found"] = half.dim
    return rep


def n4_commutator_checks(q: GeneratorQuad, states, mrange=range(-2, 3)) -> CheckReport:
    """Mode brackets of the N=4 generators as action identities on ``states``."""
    rep = CheckReport(title="N=4 mode brackets")
    q, _ = _soft_normalize(q)
    try:
        k = q.k
    except Sl2Error as e:
        rep.extend(e.report, prefix="sl2: ")
        return rep
    h, xp, xm, sigma = q.h, q.xp, q.xm, q.sigma
    tp, tm, bp, bm = q.states()
    m = apply_mode
    sl2 = (("h", h), ("x+", xp), ("x-", xm))
    gens = (("tau+", tp), ("tau-", tm), ("taubar+", bp), ("taubar-", bm))
    for wi, w in enumerate(states):
        for a in mrange:
            for b in mrange:
                for un, u in sl2:
                    for vn, v in sl2:
                        inner = vacuum_coefficient(m(u, 1, v)) or ZERO
                        rhs = m(m(u, 0, v), a + b, w)
                        if a + b == 0:
                            rhs = rhs + w * (a * inner)
                        rep.check_zero(f"[{un}({a}),{vn}({b})] w{wi}",
                                       "[u(m),v(n)] = (u(0)v)(m+n) + m<<u,v>> delta_{m+n,0}",
                                       bracket(u, a, v, b, w) - rhs)
                for s, t, tb in ((1, tp, bp), (-1, tm, bm)):
                    xs = xp if s == 1 else xm
                    rep.check_zero(f"[tau{'+-'[s < 0]}({a}),taubar{'+-'[s < 0]}({b})] w{wi}",
                                   "[tau±(m),taubar±(n)] = ±(n-m)x±(m+n-1)",
                                   bracket(t, a, tb, b, w) - s * (b - a) * m(xs, a + b - 1, w))
                for s, t, tb in ((1, tp, bm), (-1, tm, bp)):
                    rhs = s * m(sigma, a + b, w) + m(h, a + b - 1, w) * (Fraction(a - b, 2))
                    if a + b == 1:
                        rhs = rhs + w * (s * a * (a - 1) * k)
                    rep.check_zero(f"[tau{'+-'[s < 0]}({a}),taubar{'-+'[s < 0]}({b})] w{wi}",
                                   "[tau±(m),taubar∓(n)] = ±sigma(m+n) + (1/2)(m-n)h(m+n-1) ± m(m-1)k delta_{m+n,1}",
                                   bracket(t, a, tb, b, w) - rhs)
                for un, u in sl2:
                    rep.check_zero(f"[sigma({a}),{un}({b})] w{wi}", "[sigma(m),u(n)] = -n u(m+n-1)",
                                   bracket(sigma, a, u, b, w) + b * m(u, a + b - 1, w))
                for vn, v in gens:
                    rep.check_zero(f"[sigma({a}),{vn}({b})] w{wi}",
                                   "[sigma(m),v(n)] = (m/2 - n) v(m+n-1)",
                                   bracket(sigma, a, v, b, w) - m(v, a + b - 1, w) * Fraction(a - 2 * b, 2))
    return rep


# -- N=2 -------------------------------------------------------------------------------

def check_n2(tau_p: FockState, tau_m: FockState, brackets: bool = True) -> CheckReport:
    """Recognition hypotheses (I), (II) for an N=2 pair and their consequences."""
    rep = CheckReport(title="N=2")
    V = tau_p.voa
    one = V.vacuum()
    m = apply_mode
    z = rep.check_zero
    h = m(tau_p, 1, tau_m)
    z("(I) h(0)tau+ = tau+", "h(0)tau± = ±tau±, h = tau+(1)tau-", m(h, 0, tau_p) - tau_p)
    z("(I) h(0)tau- = -tau-", "h(0)tau± = ±tau±, h = tau+(1)tau-", m(h, 0, tau_m) + tau_m)
    z("(II) tau+(0)tau+ = 0", "tau±(0)tau± = 0", m(tau_p, 0, tau_p))
    z("(II) tau-(0)tau- = 0", "tau±(0)tau± = 0", m(tau_m, 0, tau_m))
    _weight_parity_items(rep, (("tau+", tau_p), ("tau-", tau_m)), "(hyp) ")
    omega = V.standard_virasoro()
    for name, s in (("tau+", tau_p), ("tau-", tau_m)):
        for it in primary_report(s, omega).items:
            rep.add(f"(hyp) {name} primary: {it.label}", it.anchor, it.passed, it.witness)

    hh = m(h, 1, h)
    k2 = vacuum_coefficient(hh)
    rep.add("h(1)h in C1", "h(1)h = 2k1", k2 is not None, witness=hh)
    k = (k2 if k2 is not None else ZERO) / 2
    c = 6 * k
    rep.k, rep.c = k, c
    Th = h.translate()
    sigma = (m(tau_p, 0, tau_m) + m(tau_m, 0, tau_p)) * _HALF

    z("(i) tau+(2)tau- = (c/3)1", "tau±(2)tau∓ = (c/3)1", m(tau_p, 2, tau_m) - one * (c / 3))
    z("(i) tau-(2)tau+ = (c/3)1", "tau±(2)tau∓ = (c/3)1", m(tau_m, 2, tau_p) - one * (c / 3))
    z("(ii) tau+(1)tau- = h", "tau±(1)tau∓ = ±h", m(tau_p, 1, tau_m) - h)
    z("(ii) tau-(1)tau+ = -h", "tau±(1)tau∓ = ±h", m(tau_m, 1, tau_p) + h)
    z("(iii) tau+(0)tau- = sigma + (1/2)Th", "tau±(0)tau∓ = omega ± (1/2)Th",
      m(tau_p, 0, tau_m) - sigma - Th * _HALF)
    z("(iii) tau-(0)tau+ = sigma - (1/2)Th", "tau±(0)tau∓ = omega ± (1/2)Th",
      m(tau_m, 0, tau_p) - sigma + Th * _HALF)
    z("(iv) h(0)tau+ = tau+", "h(0)tau± = ±tau±", m(h, 0, tau_p) - tau_p)
    z("(iv) h(0)tau- = -tau-", "h(0)tau± = ±tau±", m(h, 0, tau_m) + tau_m)
    z("(v) h(1)h = (c/3)1", "h(1)h = (c/3)1", hh - one * (c / 3))
    rep.extend(is_virasoro(sigma, c), prefix="sigma Virasoro: ")
    z("h(1)tau+ = 0", "h(1)tau± = 0", m(h, 1, tau_p))
    z("h(1)tau- = 0", "h(1)tau± = 0", m(h, 1, tau_m))
    z("sigma(0)h = Th", "sigma(0)h = Th", m(sigma, 0, h) - Th)
    z("sigma(1)h = h", "sigma(1)h = h", m(sigma, 1, h) - h)
    z("sigma(2)h = 0", "sigma(2)h = 0", m(sigma, 2, h))
    for name, t in (("tau+", tau_p), ("tau-", tau_m)):
        z(f"sigma(0){name} = T{name}", "sigma(0)tau± = Ttau±", m(sigma, 0, t) - t.translate())
        z(f"sigma(1){name} = (3/2){name}", "sigma(1)tau± = (3/2)tau±", m(sigma, 1, t) - t * Fraction(3, 2))
        z(f"sigma(2){name} = 0", "sigma(2)tau± = 0", m(sigma, 2, t))
    if brackets:
        rep.extend(n2_commutator_checks(tau_p, tau_m, [one, tau_p, tau_m, h], range(-1, 3),
                                        h=h, sigma=sigma, k=k))
    rep.notes["sigma"] = sigma
    rep.notes["sigma equals the standard lattice conformal vector"] = sigma == omega
    return rep


def n2_commutator_checks(tau_p, tau_m, states, mrange=range(-1, 3), h=None, sigma=None, k=None) -> CheckReport:
    rep = CheckReport(title="N=2 mode brackets")
    m = apply_mode
    if h is None:
        h = m(tau_p, 1, tau_m)
    if sigma is None:
        sigma = (m(tau_p, 0, tau_m) + m(tau_m, 0, tau_p)) * _HALF
    if k is None:
        k = (vacuum_coefficient(m(h, 1, h)) or ZERO) / 2
    for wi, w in enumerate(states):
        for a in mrange:
            for b in mrange:
                rhs = m(sigma, a + b, w) + m(h, a + b - 1, w) * Fraction(a - b, 2)
                if a + b == 1:
                    rhs = rhs + w * (a * (a - 1) * k)
                rep.check_zero(f"[tau+({a}),tau-({b})] w{wi}",
                               "[tau+(m),tau-(n)] = sigma(m+n) + (1/2)(m-n)h(m+n-1) + m(m-1)k delta_{m+n,1}",
                               bracket(tau_p, a, tau_m, b, w) - rhs)
    return rep


# -- lattice-side sums -------------------------------------------------------------------

def _heis_state(V: LatticeVOA, vec) -> FockState:
    return V.heis(vec, 1)


def _sum_vectors(terms, rank):
    out = [ZERO] * rank
    for coeff, a in terms:
        for i, x in enumerate(a):
            if x:
                out[i] = out[i] + coeff * x
    return out


def lattice_side_sums(data: SumData, V: LatticeVOA) -> CheckReport:
    """The finite lattice sums controlling A(1)A, B(1)B and A(1)B, with a route check.

    X, Y must lie in L_3 with (h, a) = 1 on both.  Each sum is evaluated
    exactly; the verdicts are then compared with direct engine computation.
    """
    lat, eps, h = V.lattice, V.epsilon, tuple(data.h)
    if lat.norm(h) != 2:
        raise ValueError(f"h = {h} is not a root")
    for name, S in (("X", data.X), ("Y", data.Y)):
        for a in S:
            if lat.norm(a) != 3:
                raise ValueError(f"{name} contains {a}, which is not in L_3")
            if lat.inner(h, a) != 1:
                raise ValueError(f"(h, {a}) = {lat.inner(h, a)}, expected 1")
    c = {tuple(a): as_scalar(v) for a, v in data.c.items()}
    d = {tuple(a): as_scalar(v) for a, v in data.d.items()}
    cget = lambda a: c.get(a, ZERO)  # noqa: E731
    dget = lambda a: d.get(a, ZERO)  # noqa: E731
    gammas = [g for g in lat.enumerate_norm(2) if lat.inner(g, h) == 0]
    rep = CheckReport(title="lattice-side sums")
    rank = V.rank
    one = V.vacuum()

    def gamma_state(coef, partner):
        # sum_gamma eps(h, gamma) {sum_a coef_a partner_{h+gamma-a} eps(a, h+gamma)} e^gamma
        out = V.zero()
        for g in gammas:
            hg = _add(h, g)
            s = ZERO
            for a, ca in coef.items():
                if ca:
                    s = s + ca * partner(_sub(hg, a)) * eps(a, hg)
            if s:
                out = out + V.exp(g, s * eps(h, g))
        return out

    verdict = {}
    for tag, coef, get in (("c", c, cget), ("d", d, dget)):
        lab = "A(1)A" if tag == "c" else "B(1)B"
        wa = gamma_state(coef, get)
        ok_a = rep.check_zero(f"{lab} sum (a) [{tag}]",
                              f"sum_a {tag}_a {tag}_(h+g-a) eps(a, h+g) = 0 for roots g ⊥ h", wa)
        vec = _sum_vectors([(ca * get(_sub(h, a)) * eps(h, a), a) for a, ca in coef.items() if ca], rank)
        ok_b = rep.check_zero(f"{lab} sum (b) [{tag}]",
                              f"sum_a {tag}_a {tag}_(h-a) eps(h, a) a = 0", _heis_state(V, vec))
        verdict[lab] = ok_a and ok_b

    prods = [cget(a) * dget(_sub(h, a)) * eps(h, a) for a in c if cget(a)]
    vec = _sum_vectors([(-(cget(a) * dget(_sub(h, a)) * eps(h, a)), a) for a in c if cget(a)], rank)
    ok_pa = rep.check_zero("A(1)B sum (a) h = -sum c_a d_(h-a) eps(h,a) a",
                           "h = -sum_a c_a d_(h-a) eps(h, a) a",
                           _heis_state(V, h) - _heis_state(V, vec))
    ok_pb = rep.check_zero("A(1)B sum (b) gamma sum vanishes",
                           "sum_g eps(h,g){sum_a c_a d_(h+g-a) eps(a, h+g)} e^g = 0",
                           gamma_state(c, dget))
    total = sum(prods, ZERO)
    rep.check_zero("sum c_a d_(h-a) eps(h,a) = -2", "sum_a c_a d_(h-a) eps(h, a) = -2",
                   one * (total + 2))
    verdict["A(1)B"] = ok_pa and ok_pb
    rep.notes["c_a d_(h-a) eps(h,a) values"] = ", ".join(sorted({str(p) for p in prods}))
    rep.notes["sum c_a d_(h-a) eps(h,a)"] = total

    # second route: the engine
    q = data.generators(V)
    a1a = span_products(q.A, 1, q.A).is_zero()
    b1b = span_products(q.B, 1, q.B).is_zero()
    hstate = _heis_state(V, h)
    t1b = apply_mode(q.tau_p, 1, q.taubar_m)
    engine = {"A(1)A": a1a, "B(1)B": b1b, "A(1)B": t1b == hstate}
    for key, desc in (("A(1)A", "A(1)A = 0"), ("B(1)B", "B(1)B = 0"),
                      ("A(1)B", "tau+(1)taubar- = h")):
        rep.add(f"route agreement: {desc}", "sum verdict = engine verdict",
                verdict[key] == engine[key],
                context={"sums": verdict[key], "engine": engine[key]})
    rep.notes["engine tau+(1)taubar-"] = t1b
    return rep
