"""Pure-Python mode kernel on basis monomials of V_L.

A monomial is ``(factors, point)``.  ``factors`` is a sorted tuple of pairs
``(-level, index)`` standing for b_index(-level); sorting these pairs
ascending gives the canonical order (level descending, index ascending).
``point`` is the lattice vector of e^point.

Products of basis monomials have rational structure constants, so every
result here is a dict ``{monomial: Fraction}``.  Results handed out by
:meth:`ModeEngine.mode` are cached and must be treated as read-only.

The compiled twin lives in ``_kernels_ext.pyx``.
"""

from __future__ import annotations

from bisect import insort
from fractions import Fraction
from math import comb, gcd

from ._cyclo import mul as cyclo_mul, normalize as cyclo_normalize

_ONE = Fraction(1)


class ModeEngine:
    """Monomial-level vertex operator modes for one (lattice, epsilon) pair.

    ``gram`` is the Gram matrix, ``neg`` lists for each i the j with
    eps(b_i, b_j) = -1.
    """

    def __init__(self, gram, neg):
        self.gram = tuple(tuple(r) for r in gram)
        self.rank = len(self.gram)
        self.neg = tuple(tuple(r) for r in neg)
        self._mode_cache = {}
        self._creation_cache = {}
        self._norm_cache = {}

    def clear(self):
        self._mode_cache.clear()
        self._creation_cache.clear()

    def cache_size(self) -> int:
        return len(self._mode_cache)

    # -- lattice helpers -------------------------------------------------
    def eps(self, a, b) -> int:
        s = 0
        for i, js in enumerate(self.neg):
            ai = a[i]
            if ai and js:
                for j in js:
                    s += ai * b[j]
        return -1 if s & 1 else 1

    def pairing_row(self, a):
        g = self.gram
        r = self.rank
        return tuple(sum(a[i] * g[i][j] for i in range(r) if a[i]) for j in range(r))

    def norm(self, a) -> int:
        n = self._norm_cache.get(a)
        if n is None:
            row = self.pairing_row(a)
            n = sum(x * y for x, y in zip(a, row))
            self._norm_cache[a] = n
        return n

    def weight2(self, mono) -> int:
        """Twice the L(0)-weight of a monomial."""
        factors, point = mono
        lv = 0
        for f in factors:
            lv -= f[0]
        return 2 * lv + self.norm(point)

    # -- Heisenberg ------------------------------------------------------
    def heis(self, i, m, mono):
        """b_i(m) applied to a monomial: list of (monomial, int coefficient)."""
        factors, point = mono
        if m < 0:
            f = list(factors)
            insort(f, (m, i))
            return [((tuple(f), point), 1)]
        g = self.gram[i]
        if m == 0:
            v = sum(g[j] * point[j] for j in range(self.rank) if point[j])
            return [(mono, v)] if v else []
        out = []
        seen = None
        for pos, f in enumerate(factors):
            if f[0] != -m or f == seen:
                continue
            seen = f
            gij = g[f[1]]
            if gij:
                mult = 1
                while pos + mult < len(factors) and factors[pos + mult] == f:
                    mult += 1
                rest = factors[:pos] + factors[pos + 1:]
                out.append(((rest, point), m * gij * mult))
        return out

    def translate(self, mono):
        """T = L(-1) on a monomial, as a dict {monomial: int}."""
        factors, point = mono
        out = {}
        prev = None
        for pos, f in enumerate(factors):
            if f == prev:
                continue
            prev = f
            mult = 1
            while pos + mult < len(factors) and factors[pos + mult] == f:
                mult += 1
            n = -f[0]
            rest = list(factors[:pos] + factors[pos + 1:])
            insort(rest, (-(n + 1), f[1]))
            key = (tuple(rest), point)
            out[key] = out.get(key, 0) + n * mult
        for j in range(self.rank):
            if point[j]:
                rest = list(factors)
                insort(rest, (-1, j))
                key = (tuple(rest), point)
                out[key] = out.get(key, 0) + point[j]
        return {k: v for k, v in out.items() if v}

    # -- vertex operators of e^alpha ------------------------------------
    def creation(self, alpha, d):
        """Coefficient of z^d in exp(sum_m alpha(-m) z^m / m): {factors: Fraction}."""
        key = (alpha, d)
        hit = self._creation_cache.get(key)
        if hit is not None:
            return hit
        if d == 0:
            res = {(): _ONE}
        else:
            acc = {}
            nz = [(j, a) for j, a in enumerate(alpha) if a]
            for m in range(1, d + 1):
                for fs, c in self.creation(alpha, d - m).items():
                    for j, a in nz:
                        f = list(fs)
                        insort(f, (-m, j))
                        f = tuple(f)
                        acc[f] = acc.get(f, 0) + c * a
            res = {f: c / d for f, c in acc.items() if c}
        self._creation_cache[key] = res
        return res

    def exp_mode(self, alpha, n, mono):
        """e^alpha(n) applied to a monomial."""
        factors, point = mono
        row = self.pairing_row(alpha)
        p = sum(row[j] * point[j] for j in range(self.rank) if point[j])
        # group the annihilable factors
        groups = []
        keep = []
        kmax = 0
        prev = None
        for pos, f in enumerate(factors):
            if f == prev:
                continue
            prev = f
            mult = 1
            while pos + mult < len(factors) and factors[pos + mult] == f:
                mult += 1
            r = row[f[1]]
            if r:
                groups.append((f, mult, -r))
                kmax += -f[0] * mult
            else:
                keep.extend([f] * mult)
        base = -n - 1 - p
        if base + kmax < 0:
            return {}
        sign = self.eps(alpha, point)
        newpt = tuple(a + b for a, b in zip(alpha, point))
        # annihilation: choose how many of each factor to contract
        choices = [(tuple(keep), 0, sign)]
        for f, mult, negr in groups:
            lvl = -f[0]
            nxt = []
            for rem, k, c in choices:
                for t in range(mult + 1):
                    cc = c * comb(mult, t) * negr**t
                    nxt.append((rem + (f,) * (mult - t), k + t * lvl, cc))
            choices = nxt
        out = {}
        for rem, k, c in choices:
            d = base + k
            if d < 0:
                continue
            rem = tuple(sorted(rem))
            for fs, cf in self.creation(alpha, d).items():
                key = (tuple(sorted(rem + fs)) if rem and fs else (rem or fs), newpt)
                out[key] = out.get(key, 0) + c * cf
        return {k: v for k, v in out.items() if v}

    # -- general modes -----------------------------------------------------
    def mode(self, u, s, w):
        """u(s)w for basis monomials u, w (cached; do not mutate the result)."""
        key = (u, s, w)
        hit = self._mode_cache.get(key)
        if hit is not None:
            return hit
        wu = self.weight2(u)
        ww = self.weight2(w)
        if wu + ww - 2 * s - 2 < 0:
            res = {}
        elif not u[0]:
            res = self.exp_mode(u[1], s, w)
        else:
            res = self._strip(u, s, w, wu, ww)
        self._mode_cache[key] = res
        return res

    def _strip(self, u, s, w, wu, ww):
        # u = b_i(-m) u'; associativity at t = -m:
        #   u(s) = sum_j C(m+j-1, j) [ b_i(-m-j) u'(s+j) - (-1)^m u'(s-m-j) b_i(j) ]
        (negm, i) = u[0][0]
        m = -negm
        up = (u[0][1:], u[1])
        wup = wu - 2 * m
        out = {}
        j = 0
        while wup + ww - 2 * (s + j) - 2 >= 0:
            x = self.mode(up, s + j, w)
            if x:
                c = comb(m + j - 1, j)
                lvl = (-(m + j), i)
                for (fs, pt), v in x.items():
                    f = list(fs)
                    insort(f, lvl)
                    key = (tuple(f), pt)
                    out[key] = out.get(key, 0) + c * v
            j += 1
        sgn = 1 if m % 2 else -1
        top = max((-f[0] for f in w[0]), default=0)
        for j in range(top + 1):
            c0 = sgn * comb(m + j - 1, j)
            for mono, cf in self.heis(i, j, w):
                x = self.mode(up, s - m - j, mono)
                if x:
                    c = c0 * cf
                    for key, v in x.items():
                        out[key] = out.get(key, 0) + c * v
        return {k: v for k, v in out.items() if v}


def _lincomb_into(acc, key, nums, den, p, q):
    """acc[key] += (nums/den) * (p/q), kept unnormalized as [list, den]."""
    cur = acc.get(key)
    d = den * q
    if cur is None:
        acc[key] = [[x * p for x in nums], d]
        return
    cn, cd = cur
    if cd == d:
        for t in range(8):
            cn[t] += nums[t] * p
    else:
        g = gcd(cd, d)
        f1 = d // g
        f2 = cd // g
        for t in range(8):
            cn[t] = cn[t] * f1 + nums[t] * p * f2
        cur[1] = cd * f1


def apply_terms(engine, uitems, n, vitems):
    """Bilinear extension of ``engine.mode``.

    ``uitems``/``vitems`` are lists of ``(monomial, nums, den)`` with Q(zeta24)
    coefficients in raw kernel form; returns ``{monomial: (nums, den)}`` with
    canonical, nonzero coefficients.
    """
    acc = {}
    vw = [(vm, vn, vd, engine.weight2(vm)) for vm, vn, vd in vitems]
    for um, un, ud in uitems:
        wu = engine.weight2(um) - 2 * n - 2
        for vm, vn, vd, wv in vw:
            if wu + wv < 0:
                continue
            res = engine.mode(um, n, vm)
            if not res:
                continue
            cn, cd = cyclo_mul(un, ud, vn, vd)
            for key, q in res.items():
                _lincomb_into(acc, key, cn, cd, q.numerator, q.denominator)
    out = {}
    for key, (nums, den) in acc.items():
        if any(nums):
            out[key] = cyclo_normalize(nums, den)
    return out
