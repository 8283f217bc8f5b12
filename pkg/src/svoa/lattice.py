"""Positive-definite integral lattices given by a Gram matrix.

Vectors are plain tuples of integer coordinates in the lattice basis.
Short vectors are enumerated Fincke-Pohst style from an exact rational
LDL^T factorisation, so nothing here touches floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, isqrt
from pathlib import Path

__all__ = [
    "LatticeData",
    "LatticeError",
    "inner",
    "enumerate_norm",
    "theta_coefficients",
    "lattice_predicates",
    "LatticePredicates",
    "builtin_lattice",
    "load_lattice",
    "standard_lattice",
    "example2_lattice",
]


class LatticeError(ValueError):
    pass


def _ldl(gram):
    """Exact LDL^T of a symmetric matrix; returns (L, D) or raises if not PD."""
    n = len(gram)
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        d = Fraction(gram[j][j]) - sum(L[j][k] ** 2 * D[k] for k in range(j))
        if d <= 0:
            raise LatticeError("Gram matrix is not positive definite")
        D[j] = d
        for i in range(j + 1, n):
            s = Fraction(gram[i][j]) - sum(L[i][k] * L[j][k] * D[k] for k in range(j))
            L[i][j] = s / d
    return L, D


@dataclass(frozen=True, eq=False)
class LatticeData:
    """A positive-definite integral lattice.

    ``gram[i][j]`` is the inner product of basis vectors i and j.  The
    constructor checks symmetry, integrality and positive-definiteness.
    """

    gram: tuple
    name: str = "L"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        gram = tuple(tuple(row) for row in self.gram)
        n = len(gram)
        if n == 0:
            raise LatticeError("rank must be positive")
        for row in gram:
            if len(row) != n:
                raise LatticeError("Gram matrix must be square")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise LatticeError(f"Gram entry {x!r} is not an integer")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise LatticeError("Gram matrix is not symmetric")
        object.__setattr__(self, "gram", gram)
        L, D = _ldl(gram)
        self._cache["ldl"] = (L, D)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def __eq__(self, other):
        return isinstance(other, LatticeData) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def _check(self, a):
        if len(a) != self.rank:
            raise LatticeError(f"vector {a} has length {len(a)}, lattice rank is {self.rank}")

    def inner(self, a, b) -> int:
        self._check(a)
        self._check(b)
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(len(a)) if a[i] for j in range(len(b)) if b[j])

    def norm(self, a) -> int:
        return self.inner(a, a)

    def pairing_row(self, a) -> tuple[int, ...]:
        """(a, b_j) for every basis vector b_j."""
        self._check(a)
        g = self.gram
        return tuple(sum(a[i] * g[i][j] for i in range(self.rank)) for j in range(self.rank))

    def inverse_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        if "ginv" not in self._cache:
            n = self.rank
            m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
                 for i, row in enumerate(self.gram)]
            for c in range(n):
                p = next(r for r in range(c, n) if m[r][c] != 0)
                m[c], m[p] = m[p], m[c]
                piv = m[c][c]
                m[c] = [x / piv for x in m[c]]
                for r in range(n):
                    if r != c and m[r][c] != 0:
                        f = m[r][c]
                        m[r] = [x - f * y for x, y in zip(m[r], m[c])]
            self._cache["ginv"] = tuple(tuple(row[n:]) for row in m)
        return self._cache["ginv"]

    def enumerate_norm(self, n: int) -> list[tuple[int, ...]]:
        key = ("norm", n)
        if key not in self._cache:
            self._cache[key] = _fincke_pohst(self, n)
        return list(self._cache[key])

    def to_json(self) -> dict:
        return {"name": self.name, "rank": self.rank, "gram": [list(r) for r in self.gram]}


def _fincke_pohst(lat: LatticeData, n: int) -> list[tuple[int, ...]]:
    if n < 0:
        raise LatticeError("norm must be non-negative")
    L, D = lat._cache["ldl"]
    r = lat.rank
    out = []
    x = [0] * r

    # Q(x) = sum_k D_k (x_k + sum_{i>k} L_ik x_i)^2 ; fix coordinates from the top down
    def descend(k, budget):
        centre = -sum(L[i][k] * x[i] for i in range(k + 1, r))
        t = budget / D[k]
        s = isqrt(floor(t)) + 1
        lo = floor(centre) - s
        hi = floor(centre) + s + 1
        for v in range(lo, hi + 1):
            d = (v - centre) ** 2
            if d > t:
                continue
            x[k] = v
            rest = budget - D[k] * d
            if k == 0:
                if rest == 0:
                    out.append(tuple(x))
            else:
                descend(k - 1, rest)
        x[k] = 0

    descend(r - 1, Fraction(n))
    out.sort()
    return out


def inner(lat: LatticeData, a, b) -> int:
    return lat.inner(a, b)


def enumerate_norm(lat: LatticeData, n: int) -> list[tuple[int, ...]]:
    return lat.enumerate_norm(n)


def theta_coefficients(lat: LatticeData, max_norm: int) -> list[tuple[Fraction, int]]:
    """Pairs (n/2, |L_n|) for 0 <= n <= max_norm."""
    if max_norm < 0:
        raise LatticeError("max_norm must be non-negative")
    return [(Fraction(n, 2), len(lat.enumerate_norm(n))) for n in range(max_norm + 1)]


@dataclass(frozen=True)
class LatticePredicates:
    is_odd: bool
    min_norm: int
    roots: tuple


def lattice_predicates(lat: LatticeData) -> LatticePredicates:
    # norm mod 2 is additive, so L is odd iff some basis vector has odd norm
    is_odd = any(lat.gram[i][i] % 2 for i in range(lat.rank))
    min_norm = next(n for n in range(1, min(lat.gram[i][i] for i in range(lat.rank)) + 1)
                    if lat.enumerate_norm(n))
    return LatticePredicates(is_odd, min_norm, tuple(lat.enumerate_norm(2)))


def standard_lattice(rank: int) -> LatticeData:
    return LatticeData(tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank)), f"Z{rank}")


def example2_lattice() -> LatticeData:
    """Span of an orthogonal norm-3 frame a_1..a_6 and h = (a_1+...+a_6)/3.

    Basis (a_1, ..., a_5, h); a_6 = 3h - a_1 - ... - a_5.
    """
    g = [[0] * 6 for _ in range(6)]
    for i in range(5):
        g[i][i] = 3
        g[i][5] = g[5][i] = 1
    g[5][5] = 2
    return LatticeData(tuple(map(tuple, g)), "ex2")


def builtin_lattice(name: str) -> LatticeData:
    if name == "ex2":
        return example2_lattice()
    if name.startswith("Z") and name[1:].isdigit() and 1 <= int(name[1:]) <= 8:
        return standard_lattice(int(name[1:]))
    raise LatticeError(f"unknown builtin lattice {name!r} (expected Z1..Z8 or ex2)")


def parse_lattice_spec(data: dict) -> tuple[LatticeData, list[tuple[int, int, int]]]:
    """Validate a lattice-spec document; returns the lattice and epsilon overrides.

    Overrides use 0-based indices, the file uses 1-based ones.
    """
    for key in ("rank", "gram"):
        if key not in data:
            raise LatticeError(f"lattice spec is missing {key!r}")
    lat = LatticeData(tuple(tuple(row) for row in data["gram"]), str(data.get("name", "L")))
    if lat.rank != data["rank"]:
        raise LatticeError(f"rank {data['rank']} does not match Gram matrix size {lat.rank}")
    overrides = []
    for triple in data.get("epsilon_upper", []):
        i, j, s = triple
        if not (1 <= i < j <= lat.rank) or s not in (1, -1):
            raise LatticeError(f"bad epsilon_upper entry {triple!r}")
        overrides.append((i - 1, j - 1, s))
    return lat, overrides


def load_lattice(path) -> tuple[LatticeData, list[tuple[int, int, int]]]:
    with open(Path(path)) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise LatticeError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return parse_lattice_spec(data)
