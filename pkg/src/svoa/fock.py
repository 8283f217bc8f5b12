"""The Fock space V_L = S(h^-) (x) C^eps[L] and its states.

Heisenberg directions are the lattice basis vectors b_1..b_r (pairings go
through the Gram matrix).  A :class:`FockState` is a finite Scalar-linear
combination of canonical monomials, tied to the :class:`LatticeVOA` it
lives in.
"""

from __future__ import annotations

from collections import namedtuple
from fractions import Fraction
from itertools import product as iproduct

from ._backend import kernels as _kernels
from .cocycle import EpsilonTable, build_epsilon
from .lattice import LatticeData
from .scalars import ONE, Scalar, as_scalar

__all__ = ["Monomial", "FockState", "LatticeVOA", "SpaceMismatch"]

Monomial = namedtuple("Monomial", ["factors", "point"])
Monomial.__doc__ = """Basis state b_{i1}(-n1)...b_{ik}(-nk) e^point.

``factors`` holds pairs (-level, index) with 0-based index, sorted
ascending, i.e. level descending then index ascending.
"""


class SpaceMismatch(ValueError):
    """Raised when states from different lattice SVOAs are combined."""


def mono_key(m):
    """Global canonical order used for printing and subspace columns."""
    return (m[1], m[0])


class LatticeVOA:
    """The lattice SVOA V_L for a lattice and a sign cocycle."""

    def __init__(self, lattice: LatticeData, epsilon: EpsilonTable | None = None):
        if epsilon is None:
            epsilon = build_epsilon(lattice)
        if epsilon.lattice != lattice:
            raise SpaceMismatch("epsilon table belongs to a different lattice")
        self.lattice = lattice
        self.epsilon = epsilon
        neg = [[j for j in range(lattice.rank) if epsilon.basis_values[i][j] == -1]
               for i in range(lattice.rank)]
        self.engine = _kernels.ModeEngine(lattice.gram, neg)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def __repr__(self):
        return f"LatticeVOA({self.lattice.name}, rank={self.rank})"

    def same_as(self, other: LatticeVOA) -> bool:
        return self is other or (self.lattice == other.lattice and self.epsilon == other.epsilon)

    # -- constructors ----------------------------------------------------
    def zero(self) -> FockState:
        return FockState(self, {})

    def vacuum(self) -> FockState:
        return FockState(self, {Monomial((), (0,) * self.rank): ONE})

    def exp(self, point, coeff=1) -> FockState:
        """coeff * e^point."""
        point = tuple(int(x) for x in point)
        self.lattice._check(point)
        c = as_scalar(coeff)
        return FockState(self, {Monomial((), point): c} if c else {})

    def monomial(self, factors, point=None, coeff=1) -> FockState:
        """coeff * b_{i}(-n)... e^point from (index, level) pairs, 0-based index."""
        if point is None:
            point = (0,) * self.rank
        fs = []
        for i, n in factors:
            if not 0 <= i < self.rank or n < 1:
                raise ValueError(f"bad Heisenberg factor b{i + 1}(-{n})")
            fs.append((-n, i))
        c = as_scalar(coeff)
        m = Monomial(tuple(sorted(fs)), tuple(int(x) for x in point))
        return FockState(self, {m: c} if c else {})

    def heis(self, vector, level: int = 1, on: FockState | None = None) -> FockState:
        """v(-level) applied to ``on`` (default the vacuum), v given in basis coordinates."""
        target = self.vacuum() if on is None else on
        out = self.zero()
        for i, c in enumerate(vector):
            c = as_scalar(c)
            if c:
                out = out + c * heis_basis(target, i, -level)
        return out

    def standard_virasoro(self) -> FockState:
        """1/2 sum_ij (G^-1)_ij b_i(-1) b_j(-1) 1, the usual lattice conformal vector."""
        ginv = self.lattice.inverse_gram()
        terms = {}
        zero = (0,) * self.rank
        for i in range(self.rank):
            for j in range(self.rank):
                if ginv[i][j]:
                    m = Monomial(tuple(sorted([(-1, i), (-1, j)])), zero)
                    terms[m] = terms.get(m, Fraction(0)) + ginv[i][j] / 2
        return FockState(self, {m: Scalar.from_rational(c) for m, c in terms.items() if c})

    def parse(self, text: str) -> FockState:
        from .parsing import parse_state

        return parse_state(text, self)

    def basis(self, weight) -> list[Monomial]:
        """All canonical monomials of the given L(0)-weight."""
        w2 = int(2 * Fraction(weight))
        if Fraction(w2, 2) != Fraction(weight) or w2 < 0:
            return []
        out = []
        for n in range(w2 + 1):
            if (w2 - n) % 2:
                continue
            level = (w2 - n) // 2
            for pt in self.lattice.enumerate_norm(n):
                for fs in _coloured_partitions(level, self.rank):
                    out.append(Monomial(fs, pt))
        return sorted(out, key=mono_key)


def _coloured_partitions(n, colours):
    """Sorted factor tuples (-level, index) with total level n."""
    out = []

    def rec(remaining, max_part, acc):
        if remaining == 0:
            out.append(tuple(sorted(acc)))
            return
        for part in range(min(remaining, max_part[0]), 0, -1):
            lo = max_part[1] if part == max_part[0] else 0
            for c in range(lo, colours):
                rec(remaining - part, (part, c), acc + [(-part, c)])

    rec(n, (n, 0), [])
    return out


def heis_basis(v: FockState, i: int, m: int) -> FockState:
    eng = v.voa.engine
    out = {}
    for mono, c in v.terms.items():
        for key, k in eng.heis(i, m, mono):
            _acc(out, Monomial(*key), c * k)
    return FockState(v.voa, out, clean=True)


def _acc(d, key, val):
    cur = d.get(key)
    d[key] = val if cur is None else cur + val


class FockState:
    """Immutable finite linear combination of canonical monomials."""

    __slots__ = ("voa", "terms", "_hash")

    def __init__(self, voa: LatticeVOA, terms, clean=False):
        self.voa = voa
        if clean:
            terms = {Monomial(*k): v for k, v in terms.items() if v}
        self.terms = terms
        self._hash = None

    def _check(self, other):
        if not isinstance(other, FockState):
            raise TypeError(f"expected FockState, got {type(other).__name__}")
        if not self.voa.same_as(other.voa):
            raise SpaceMismatch("states live in different lattice SVOAs")

    # -- linear structure -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, FockState):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return FockState(self.voa, out, clean=True)

    def __sub__(self, other):
        if not isinstance(other, FockState):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return FockState(self.voa, {k: -v for k, v in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, FockState):
            return NotImplemented
        c = as_scalar(c)
        if not c:
            return self.voa.zero()
        return FockState(self.voa, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * as_scalar(c).inverse()

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, FockState):
            return NotImplemented
        return self.voa.same_as(other.voa) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def coefficient(self, mono) -> Scalar:
        from .scalars import ZERO

        return self.terms.get(Monomial(*mono), ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: mono_key(kv[0]))

    # -- grading -------------------------------------------------------------
    def weights(self) -> set[Fraction]:
        eng = self.voa.engine
        return {Fraction(eng.weight2(m), 2) for m in self.terms}

    def weight(self):
        """Common L(0)-weight, or None if the state is zero or inhomogeneous."""
        ws = self.weights()
        return ws.pop() if len(ws) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def has_weight(self, w) -> bool:
        """True if every term has weight w (vacuously true for 0)."""
        return self.weights() <= {Fraction(w)}

    def parity(self):
        """0 (even), 1 (odd) or None (mixed).  The zero state counts as even."""
        ps = {self.voa.lattice.norm(m.point) % 2 for m in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    # -- operators -----------------------------------------------------------
    def translate(self) -> FockState:
        """T u, by the derivation formula (not through the mode engine)."""
        eng = self.voa.engine
        out = {}
        for mono, c in self.terms.items():
            for key, k in eng.translate(mono).items():
                _acc(out, Monomial(*key), c * k)
        return FockState(self.voa, out, clean=True)

    def mode(self, n: int, v: FockState) -> FockState:
        from .modes import apply_mode

        return apply_mode(self, n, v)

    def __call__(self, n: int):
        """``u(n)`` as an operator: ``u(n)(v)``."""
        return lambda v: self.mode(n, v)

    def __str__(self):
        from .parsing import format_state

        return format_state(self)

    def __repr__(self):
        return f"FockState({self})"
