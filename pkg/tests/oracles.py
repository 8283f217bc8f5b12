"""Independent reference computations used to freeze expected values.

Nothing here calls the package's arithmetic or mode engine; states are only
read back through their public ``terms`` mapping for comparison.
"""

from __future__ import annotations

import cmath
import itertools
import math
from fractions import Fraction
from functools import lru_cache

import sympy as sp

X = sp.Symbol("x")
MINPOLY = sp.Poly(X**8 - X**4 + 1, X, domain=sp.QQ)
ZETA_C = cmath.exp(2j * cmath.pi / 24)


# -- Q(zeta24) ---------------------------------------------------------------

def poly_of(coeffs) -> sp.Poly:
    return sp.Poly(list(reversed([sp.Rational(c.numerator, c.denominator) for c in coeffs])),
                   X, domain=sp.QQ)


def coords_of(p: sp.Poly) -> tuple[Fraction, ...]:
    r = p.rem(MINPOLY)
    cs = [Fraction(int(c.p), int(c.q)) for c in reversed(r.all_coeffs())]
    return tuple(cs + [Fraction(0)] * (8 - len(cs)))


def field_mul(a, b):
    """Product of two coordinate vectors by sympy polynomial reduction."""
    return coords_of(poly_of(a) * poly_of(b))


def field_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def complex_value(coeffs) -> complex:
    return sum(complex(c) * ZETA_C**j for j, c in enumerate(coeffs))


# -- lattices ----------------------------------------------------------------

def brute_force_norm(gram, n: int) -> set[tuple[int, ...]]:
    """All x with x^T G x = n, by a coordinate box |x_i| <= sqrt(n (G^-1)_ii)."""
    G = sp.Matrix(gram)
    Ginv = G.inv()
    r = len(gram)
    bounds = [int(math.isqrt(int(sp.floor(n * Ginv[i, i])))) + 1 for i in range(r)]
    out = set()
    for x in itertools.product(*[range(-b, b + 1) for b in bounds]):
        if gram_inner(gram, x, x) == n:
            out.add(x)
    return out


def gram_inner(gram, a, b) -> int:
    return sum(a[i] * gram[i][j] * b[j] for i in range(len(a)) for j in range(len(b)))


def eps_product(basis_values, a, b) -> int:
    """prod eps(b_i, b_j)^(a_i b_j) straight from the basis table."""
    s = 1
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            if basis_values[i][j] == -1 and (ai * bj) % 2:
                s = -s
    return s


# -- vertex operator of e^gamma on e^rho --------------------------------------------

@lru_cache(maxsize=None)
def _creation_series(gamma: tuple, degree: int):
    """Coefficient of z^degree in exp(sum_m gamma(-m) z^m / m) as a sympy polynomial
    in commuting symbols b{i}_{m} standing for b_i(-m)."""
    z = sp.Symbol("z")
    r = len(gamma)
    expo = sum(sp.Rational(1, m) * z**m * sum(gamma[i] * sp.Symbol(f"b{i}_{m}") for i in range(r))
               for m in range(1, degree + 1))
    series = sp.series(sp.exp(expo), z, 0, degree + 1).removeO()
    return sp.expand(series).coeff(z, degree)


def exp_pair_oracle(gram, basis_values, gamma, rho, n):
    """The closed form of e^gamma(n) e^rho, as {(factors, point): Fraction}.

    e^gamma(n) e^rho = eps(gamma, rho) [z^(-n-1-(gamma,rho))] exp(sum gamma(-m) z^m/m) e^(gamma+rho),
    which is zero when -n-1-(gamma, rho) < 0.
    """
    d = -n - 1 - gram_inner(gram, gamma, rho)
    if d < 0:
        return {}
    sign = eps_product(basis_values, gamma, rho)
    point = tuple(g + p for g, p in zip(gamma, rho))
    poly = sp.Poly(_creation_series(tuple(gamma), d)) if d else None
    out = {}
    if poly is None:
        out[((), point)] = Fraction(sign)
        return out
    gens = poly.gens
    for powers, coeff in poly.terms():
        factors = []
        for sym, k in zip(gens, powers):
            i, m = str(sym)[1:].split("_")
            factors += [(-int(m), int(i))] * k
        out[(tuple(sorted(factors)), point)] = Fraction(int(coeff.p), int(coeff.q)) * sign
    return out


def state_as_rational_dict(state):
    """{(factors, point): Fraction} for a state with rational coefficients."""
    return {(tuple(m.factors), tuple(m.point)): c.to_fraction() for m, c in state.terms.items()}


def theta_brute(gram, max_norm):
    return [len(brute_force_norm(gram, n)) for n in range(max_norm + 1)]
