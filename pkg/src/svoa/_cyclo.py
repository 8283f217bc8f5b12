"""Pure-Python kernel for arithmetic in Q(zeta_24).

An element is a pair ``(nums, den)``: ``nums`` is a tuple of 8 Python ints
(coordinates on 1, z, ..., z^7) and ``den`` a positive int, with
``gcd(*nums, den) == 1``.  The reduction rule is z^8 = z^4 - 1.

The compiled twin lives in ``_cyclo_ext.pyx`` and must stay bit-identical.
"""

from __future__ import annotations

from math import gcd

DEGREE = 8
ZERO_NUMS = (0,) * DEGREE


def normalize(nums, den):
    if den < 0:
        nums = [-x for x in nums]
        den = -den
    g = gcd(den, *nums)
    if g != 1:
        nums = [x // g for x in nums]
        den //= g
    return tuple(nums), den


def reduce_poly(coeffs):
    """Fold a coefficient list of length <= 15 down to degree < 8."""
    c = list(coeffs)
    for k in range(len(c) - 1, DEGREE - 1, -1):
        t = c[k]
        if t:
            c[k - 4] += t
            c[k - 8] -= t
    return c[:DEGREE] + [0] * (DEGREE - len(c))


def add(an, ad, bn, bd):
    if ad == bd:
        nums = [x + y for x, y in zip(an, bn)]
        if ad == 1:
            return tuple(nums), 1
        return normalize(nums, ad)
    nums = [x * bd + y * ad for x, y in zip(an, bn)]
    return normalize(nums, ad * bd)


def mul(an, ad, bn, bd):
    # rational fast paths
    if not any(an[1:]):
        a0 = an[0]
        if a0 == 0:
            return ZERO_NUMS, 1
        return normalize([a0 * y for y in bn], ad * bd)
    if not any(bn[1:]):
        b0 = bn[0]
        if b0 == 0:
            return ZERO_NUMS, 1
        return normalize([b0 * x for x in an], ad * bd)
    prod = [0] * 15
    for i in range(DEGREE):
        x = an[i]
        if x:
            for j in range(DEGREE):
                y = bn[j]
                if y:
                    prod[i + j] += x * y
    return normalize(reduce_poly(prod), ad * bd)


def scale(an, ad, p, q):
    """Multiply by the rational p/q (q > 0)."""
    if p == 0:
        return ZERO_NUMS, 1
    return normalize([x * p for x in an], ad * q)
