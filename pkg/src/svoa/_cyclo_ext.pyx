# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``svoa._cyclo``.

Same representation and results.  When every input coordinate fits in 28
bits the work is done in C ``long long`` (products stay below 2**62);
otherwise it falls back to Python ints.
"""

from math import gcd

DEGREE = 8
ZERO_NUMS = (0,) * DEGREE

cdef long long SMALL = 1 << 28


cdef inline long long _cgcd(long long a, long long b) noexcept:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef bint _fits(object nums, object den):
    cdef object x
    if not (-SMALL < den < SMALL):
        return False
    for x in nums:
        if not (-SMALL < x < SMALL):
            return False
    return True


cdef tuple _normalize_c(long long* c, long long den):
    cdef long long g
    cdef int t
    if den < 0:
        for t in range(DEGREE):
            c[t] = -c[t]
        den = -den
    g = den
    for t in range(DEGREE):
        if g == 1:
            break
        if c[t]:
            g = _cgcd(g, c[t])
    if g > 1:
        for t in range(DEGREE):
            c[t] //= g
        den //= g
    return (c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]), den


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
    cdef Py_ssize_t k
    c = list(coeffs)
    for k in range(len(c) - 1, DEGREE - 1, -1):
        t = c[k]
        if t:
            c[k - 4] += t
            c[k - 8] -= t
    return c[:DEGREE] + [0] * (DEGREE - len(c))


def add(an, ad, bn, bd):
    cdef long long c[8]
    cdef long long xd, yd, g
    cdef int t
    if _fits(an, ad) and _fits(bn, bd):
        xd = ad
        yd = bd
        if xd == yd:
            for t in range(DEGREE):
                c[t] = <long long>an[t] + <long long>bn[t]
            return _normalize_c(c, xd)
        for t in range(DEGREE):
            c[t] = <long long>an[t] * yd + <long long>bn[t] * xd
        return _normalize_c(c, xd * yd)
    if ad == bd:
        return normalize([x + y for x, y in zip(an, bn)], ad)
    return normalize([x * bd + y * ad for x, y in zip(an, bn)], ad * bd)


def mul(an, ad, bn, bd):
    cdef long long a[8]
    cdef long long b[8]
    cdef long long p[15]
    cdef long long x, y
    cdef int i, j, k
    if _fits(an, ad) and _fits(bn, bd):
        for i in range(DEGREE):
            a[i] = an[i]
            b[i] = bn[i]
        for k in range(15):
            p[k] = 0
        for i in range(DEGREE):
            x = a[i]
            if x:
                for j in range(DEGREE):
                    y = b[j]
                    if y:
                        p[i + j] += x * y
        for k in range(14, DEGREE - 1, -1):
            if p[k]:
                p[k - 4] += p[k]
                p[k - 8] -= p[k]
        return _normalize_c(p, <long long>ad * <long long>bd)
    prod = [0] * 15
    for i in range(DEGREE):
        ox = an[i]
        if ox:
            for j in range(DEGREE):
                oy = bn[j]
                if oy:
                    prod[i + j] += ox * oy
    return normalize(reduce_poly(prod), ad * bd)


def scale(an, ad, p, q):
    """Multiply by the rational p/q (q > 0)."""
    cdef long long c[8]
    cdef long long pp
    cdef int t
    if p == 0:
        return ZERO_NUMS, 1
    if _fits(an, ad) and -SMALL < p < SMALL and q < SMALL:
        pp = p
        for t in range(DEGREE):
            c[t] = <long long>an[t] * pp
        return _normalize_c(c, <long long>ad * <long long>q)
    return normalize([x * p for x in an], ad * q)
