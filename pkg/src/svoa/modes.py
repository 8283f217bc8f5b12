"""Vertex operator modes u(n)v on V_L.

``apply_mode`` is bilinear over Scalars; the monomial-level work (the
exponential vertex operator of e^alpha and the associativity recursion that
strips Heisenberg factors) is done by the kernel engine owned by the
:class:`~svoa.fock.LatticeVOA`.
"""

from __future__ import annotations

from math import floor

from ._backend import kernels
from .fock import FockState, Monomial, SpaceMismatch, _acc, heis_basis
from .scalars import Scalar, as_scalar

__all__ = ["heis_mode", "exp_mode", "apply_mode", "vanishing_bound", "mode_op"]


def heis_mode(b, m: int, v: FockState) -> FockState:
    """b(m) v for b = sum_i b_i * (basis direction i), coordinates given as scalars."""
    out = v.voa.zero()
    for i, c in enumerate(b):
        c = as_scalar(c)
        if c:
            out = out + c * heis_basis(v, i, m)
    return out


def exp_mode(alpha, n: int, v: FockState) -> FockState:
    """e^alpha(n) v, i.e. the z^(-n-1) coefficient of Y(e^alpha, z) v."""
    alpha = tuple(int(x) for x in alpha)
    v.voa.lattice._check(alpha)
    eng = v.voa.engine
    out = {}
    for mono, c in v.terms.items():
        for key, q in eng.exp_mode(alpha, n, mono).items():
            _acc(out, Monomial(*key), c * q)
    return FockState(v.voa, out, clean=True)


def vanishing_bound(u: FockState, v: FockState) -> int:
    """n0 with u(n)v = 0 for all n >= n0 (weights of V_L are >= 0).

    For homogeneous u, v this is floor(wt u + wt v); inhomogeneous inputs use
    their top weights.
    """
    if u.is_zero() or v.is_zero():
        return -10**9
    return floor(max(u.weights()) + max(v.weights()))


def apply_mode(u: FockState, n: int, v: FockState) -> FockState:
    """u(n) v, exact."""
    if not isinstance(u, FockState) or not isinstance(v, FockState):
        raise TypeError("apply_mode expects FockStates")
    if not u.voa.same_as(v.voa):
        raise SpaceMismatch("states live in different lattice SVOAs")
    voa = v.voa
    if not u.terms or not v.terms:
        return voa.zero()
    res = kernels.apply_terms(voa.engine, _raw_items(u), n, _raw_items(v))
    return FockState(voa, {Monomial(*k): Scalar._raw(*c) for k, c in res.items()})

def _raw_items(u: FockState):
    return [(m, c._n, c._d) for m, c in u.terms.items()]


def mode_op(u: FockState, n: int):
    """The operator u(n) as a callable on states."""
    return lambda v: apply_mode(u, n, v)

