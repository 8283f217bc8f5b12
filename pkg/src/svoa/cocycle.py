"""Bimultiplicative sign cocycles eps: L x L -> {+1, -1}.

The twisted group algebra uses e^a e^b = eps(a, b) e^(a+b).  A bimultiplicative
eps is fixed by its values on basis pairs; we pick those so that

    eps(a, b) eps(b, a) = (-1)^((a,b) + (a,a)(b,b))
    eps(a, a)           = (-1)^(((a,a) + (a,a)^2) / 2)

hold on the basis, free choices sitting in the strict upper triangle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import LatticeData

__all__ = ["EpsilonTable", "build_epsilon", "eps"]


@dataclass(frozen=True, eq=False)
class EpsilonTable:
    lattice: LatticeData
    basis_values: tuple
    _neg: tuple = field(init=False, repr=False)

    def __post_init__(self):
        vals = tuple(tuple(int(v) for v in row) for row in self.basis_values)
        r = self.lattice.rank
        if len(vals) != r or any(len(row) != r for row in vals):
            raise ValueError("basis_values must be rank x rank")
        if any(v not in (1, -1) for row in vals for v in row):
            raise ValueError("basis_values entries must be +1 or -1")
        object.__setattr__(self, "basis_values", vals)
        # rows of (i, j) with eps(b_i, b_j) = -1
        neg = tuple(tuple(j for j in range(r) if vals[i][j] == -1) for i in range(r))
        object.__setattr__(self, "_neg", neg)

    def __call__(self, a, b) -> int:
        s = 0
        for i, js in enumerate(self._neg):
            ai = a[i]
            if ai and js:
                for j in js:
                    s += ai * b[j]
        return -1 if s & 1 else 1

    def __eq__(self, other):
        return (isinstance(other, EpsilonTable) and self.lattice == other.lattice
                and self.basis_values == other.basis_values)

    def __hash__(self):
        return hash((self.lattice, self.basis_values))

    def with_value(self, i: int, j: int, value: int) -> EpsilonTable:
        """Copy with a single basis value overwritten (no consistency repair)."""
        rows = [list(r) for r in self.basis_values]
        rows[i][j] = value
        return EpsilonTable(self.lattice, tuple(map(tuple, rows)))

    def violations(self) -> list[tuple[int, int]]:
        """Basis pairs breaking the diagonal or skew rule."""
        g = self.lattice.gram
        v = self.basis_values
        bad = []
        for i in range(self.lattice.rank):
            n = g[i][i]
            if v[i][i] != (-1) ** (((n + n * n) // 2) % 2):
                bad.append((i, i))
            for j in range(i + 1, self.lattice.rank):
                if v[i][j] * v[j][i] != (-1) ** ((g[i][j] + g[i][i] * g[j][j]) % 2):
                    bad.append((i, j))
        return bad


def build_epsilon(lat: LatticeData, upper_choices=None) -> EpsilonTable:
    """Canonical table: eps(b_i, b_j) = +1 for i < j unless overridden.

    ``upper_choices`` maps (i, j) with i < j (0-based) to +-1; an iterable of
    (i, j, s) triples is accepted too.
    """
    if upper_choices is None:
        choices = {}
    elif isinstance(upper_choices, dict):
        choices = dict(upper_choices)
    else:
        choices = {(i, j): s for i, j, s in upper_choices}
    r = lat.rank
    g = lat.gram
    for (i, j), s in choices.items():
        if not 0 <= i < j < r or s not in (1, -1):
            raise ValueError(f"bad upper-triangle choice {(i, j)}: {s}")
    vals = [[1] * r for _ in range(r)]
    for i in range(r):
        n = g[i][i]
        vals[i][i] = -1 if ((n + n * n) // 2) % 2 else 1
        for j in range(i + 1, r):
            s = choices.get((i, j), 1)
            vals[i][j] = s
            vals[j][i] = s * (-1 if (g[i][j] + g[i][i] * g[j][j]) % 2 else 1)
    return EpsilonTable(lat, tuple(map(tuple, vals)))


def eps(table: EpsilonTable, a, b) -> int:
    return table(a, b)
