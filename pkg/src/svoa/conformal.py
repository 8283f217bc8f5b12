"""Exact subspaces of V_L, and Virasoro / primary / sl2-level checks."""

from __future__ import annotations

from fractions import Fraction

from .fock import FockState, LatticeVOA, SpaceMismatch, mono_key
from .modes import apply_mode
from .report import CheckReport
from .scalars import Scalar, as_scalar

__all__ = [
    "Subspace",
    "span_products",
    "intersect",
    "contains",
    "is_virasoro",
    "is_primary",
    "primary_report",
    "level_of_sl2",
    "Sl2Error",
]


def _echelon(rows, key):
    """Reduced row echelon form of dict rows; pivot = least column under ``key``."""
    out: list[tuple[object, dict]] = []  # (pivot column, row), pivot coefficient 1
    for v in rows:
        v = {k: c for k, c in v.items() if c}
        for piv, r in out:
            c = v.get(piv)
            if c:
                for k, x in r.items():
                    y = v.get(k)
                    y = -c * x if y is None else y - c * x
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
        if not v:
            continue
        piv = min(v, key=key)
        inv = v[piv].inverse()
        v = {k: x * inv for k, x in v.items()}
        reduced = []
        for p, r in out:
            c = r.get(piv)
            if c:
                r = dict(r)
                for k, x in v.items():
                    y = r.get(k)
                    y = -c * x if y is None else y - c * x
                    if y:
                        r[k] = y
                    else:
                        r.pop(k, None)
            reduced.append((p, r))
        reduced.append((piv, v))
        out = sorted(reduced, key=lambda pr: key(pr[0]))
    return out


class Subspace:
    """A finite-dimensional subspace of V_L in reduced row echelon form.

    Columns are monomials in the global canonical order, so two Subspaces are
    equal exactly when their echelon rows are equal.
    """

    __slots__ = ("voa", "rows")

    def __init__(self, voa: LatticeVOA, vectors=()):
        self.voa = voa
        dicts = []
        for v in vectors:
            if not isinstance(v, FockState):
                raise TypeError("Subspace vectors must be FockStates")
            if not v.voa.same_as(voa):
                raise SpaceMismatch("vector lives in a different lattice SVOA")
            dicts.append(v.terms)
        self.rows = tuple(_echelon(dicts, mono_key))

    @classmethod
    def _from_rows(cls, voa, rows):
        s = cls.__new__(cls)
        s.voa = voa
        s.rows = tuple(rows)
        return s

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self):
        return self.dim

    def basis(self) -> list[FockState]:
        return [FockState(self.voa, dict(r)) for _, r in self.rows]

    def is_zero(self) -> bool:
        return not self.rows

    def _check(self, other):
        if not self.voa.same_as(other.voa):
            raise SpaceMismatch("subspaces live in different lattice SVOAs")

    def reduce(self, v: FockState) -> FockState:
        """Remainder of v after elimination against the echelon rows."""
        w = dict(v.terms)
        for piv, r in self.rows:
            c = w.get(piv)
            if c:
                for k, x in r.items():
                    y = w.get(k)
                    y = -c * x if y is None else y - c * x
                    if y:
                        w[k] = y
                    else:
                        w.pop(k, None)
        return FockState(self.voa, w)

    def contains(self, v: FockState) -> bool:
        if not v.voa.same_as(self.voa):
            raise SpaceMismatch("vector lives in a different lattice SVOA")
        return self.reduce(v).is_zero()

    __contains__ = contains

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace(self.voa, self.basis() + other.basis())

    def __and__(self, other: Subspace) -> Subspace:
        return intersect(self, other)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.voa.same_as(other.voa) and self.rows == other.rows

    def __hash__(self):
        return hash(tuple((p, frozenset(r.items())) for p, r in self.rows))

    def image(self, op) -> Subspace:
        return Subspace(self.voa, [op(b) for b in self.basis()])

    def __repr__(self):
        return f"Subspace(dim={self.dim})"

    def __str__(self):
        if not self.rows:
            return "{0}"
        return "span{" + "; ".join(str(b) for b in self.basis()) + "}"


def span(voa: LatticeVOA, vectors) -> Subspace:
    return Subspace(voa, vectors)


def span_products(X, n: int, Y) -> Subspace:
    """X(n)Y = span{u(n)v : u in X, v in Y}."""
    X, Y = list(X), list(Y)
    if not X and not Y:
        raise ValueError("span_products needs at least one state")
    voa = (X or Y)[0].voa
    return Subspace(voa, [apply_mode(u, n, v) for u in X for v in Y])


def intersect(S1: Subspace, S2: Subspace) -> Subspace:
    """Zassenhaus: echelonise [r|r] for r in S1 and [s|0] for s in S2."""
    S1._check(S2)
    left = lambda k: (0, mono_key(k[1])) if k[0] == 0 else (1, mono_key(k[1]))  # noqa: E731
    rows = []
    for _, r in S1.rows:
        d = {(0, m): c for m, c in r.items()}
        d.update({(1, m): c for m, c in r.items()})
        rows.append(d)
    for _, r in S2.rows:
        rows.append({(0, m): c for m, c in r.items()})
    ech = _echelon(rows, left)
    vecs = [FockState(S1.voa, {m: c for (side, m), c in r.items() if side == 1})
            for piv, r in ech if piv[0] == 1]
    return Subspace(S1.voa, vecs)


def contains(S: Subspace, v: FockState) -> bool:
    return S.contains(v)


# -- Virasoro and primaries -----------------------------------------------------

def is_virasoro(s: FockState, c) -> CheckReport:
    """Check s(0)s = Ts, s(1)s = 2s, s(2)s = 0, s(3)s = (c/2)1 and wt s = 2."""
    c = as_scalar(c)
    V = s.voa
    rep = CheckReport(title=f"Virasoro vector, c = {c}")
    rep.c = c
    rep.add("weight 2", "s homogeneous, L(0)-weight 2", s and s.has_weight(2),
            witness=s if s else None)
    rep.check_zero("s(0)s = Ts", "s(0)s = Ts", apply_mode(s, 0, s) - s.translate())
    rep.check_zero("s(1)s = 2s", "s(1)s = 2s", apply_mode(s, 1, s) - 2 * s)
    rep.check_zero("s(2)s = 0", "s(2)s = 0", apply_mode(s, 2, s))
    rep.check_zero("s(3)s = (c/2)1", "s(3)s = (c/2)1",
                   apply_mode(s, 3, s) - V.vacuum() * (c / 2))
    return rep


def primary_report(v: FockState, omega: FockState) -> CheckReport:
    """L(1)v = L(2)v = 0 with L(n) = omega(n+1).

    For homogeneous v of weight <= 3/2 every L(n)v with n >= 3 has negative
    weight, so these two conditions are the whole story.
    """
    rep = CheckReport(title="primary")
    rep.check_zero("L(1)v = 0", "omega(2)v = 0", apply_mode(omega, 2, v))
    rep.check_zero("L(2)v = 0", "omega(3)v = 0", apply_mode(omega, 3, v))
    w = v.weight()
    if w is not None and w > Fraction(3, 2):
        for n in range(3, int(w) + 1):
            rep.check_zero(f"L({n})v = 0", f"omega({n + 1})v = 0", apply_mode(omega, n + 1, v))
    return rep


def is_primary(v: FockState, omega: FockState) -> bool:
    return primary_report(v, omega).passed


# -- sl2 -----------------------------------------------------------------------

class Sl2Error(ValueError):
    """The triple does not satisfy the sl2 relations; ``report`` says which."""

    def __init__(self, report: CheckReport):
        first = report.first_failure()
        super().__init__(f"sl2 relation fails: {first.label}" if first else "sl2 relation fails")
        self.report = report


def vacuum_coefficient(u: FockState):
    """Scalar k with u = k*1, or None if u is not a multiple of the vacuum."""
    vac = u.voa.vacuum()
    (m,) = vac.terms
    if set(u.terms) - {m}:
        return None
    return u.coefficient(m)


def level_of_sl2(h: FockState, xp: FockState, xm: FockState) -> Scalar:
    """Level k of an sl2 triple: h(1)h = 2k*1 (then x+(1)x- = k*1 and h(1)x+- = 0)."""
    rep = CheckReport(title="sl2 triple")
    rep.check_zero("h(0)x+ = 2x+", "h(0)x+ = 2x+", apply_mode(h, 0, xp) - 2 * xp)
    rep.check_zero("h(0)x- = -2x-", "h(0)x- = -2x-", apply_mode(h, 0, xm) + 2 * xm)
    rep.check_zero("x+(0)x- = h", "x+(0)x- = h", apply_mode(xp, 0, xm) - h)
    hh = apply_mode(h, 1, h)
    k2 = vacuum_coefficient(hh)
    rep.add("h(1)h in C1", "h(1)h = 2k1", k2 is not None, witness=hh)
    if not rep.passed:
        raise Sl2Error(rep)
    k = k2 / 2
    vac = h.voa.vacuum()
    rep.check_zero("x+(1)x- = k1", "x+(1)x- = k1", apply_mode(xp, 1, xm) - vac * k)
    rep.check_zero("h(1)x+ = 0", "h(1)x+ = 0", apply_mode(h, 1, xp))
    rep.check_zero("h(1)x- = 0", "h(1)x- = 0", apply_mode(h, 1, xm))
    if not rep.passed:
        raise Sl2Error(rep)
    return k
