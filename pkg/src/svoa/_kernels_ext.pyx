# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``svoa._kernels``.

Same algorithms and public results as the pure module.  Internally the
creation coefficients of degree d are kept as integer numerators over d!
(their denominators always divide d!) and products are accumulated as
integer pairs; Fractions are built once per cached result.
"""

from bisect import insort
from fractions import Fraction
from math import comb, factorial, gcd

from ._cyclo_ext import mul as cyclo_mul, normalize as cyclo_normalize


cdef object _frac(object n, object d):
    g = gcd(n, d)
    if g != 1:
        n //= g
        d //= g
    return Fraction(n, d, _normalize=False)


cdef inline void _pair_add(dict acc, object key, object n, object d):
    """acc[key] += n/d, unnormalized [num, den] lists."""
    cur = acc.get(key)
    if cur is None:
        acc[key] = [n, d]
        return
    cd = cur[1]
    if cd == d:
        cur[0] += n
    else:
        g = gcd(cd, d)
        cur[0] = cur[0] * (d // g) + n * (cd // g)
        cur[1] = cd * (d // g)


cdef dict _finish(dict acc):
    cdef dict out = {}
    for k, (n, d) in acc.items():
        if n:
            out[k] = _frac(n, d)
    return out


cdef class ModeEngine:
    """Monomial-level vertex operator modes for one (lattice, epsilon) pair."""

    cdef public tuple gram
    cdef public int rank
    cdef public tuple neg
    cdef dict _mode_cache
    cdef dict _creation_cache
    cdef dict _norm_cache

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

    def cache_size(self):
        return len(self._mode_cache)

    # -- lattice helpers ---------------------------------------------------
    cpdef int eps(self, a, b):
        cdef long long s = 0
        cdef int i
        cdef tuple js
        for i in range(self.rank):
            js = <tuple>self.neg[i]
            ai = a[i]
            if ai and js:
                for j in js:
                    s += ai * b[j]
        return -1 if s & 1 else 1

    cpdef tuple pairing_row(self, a):
        cdef int i, j
        cdef long long acc
        cdef list out = []
        for j in range(self.rank):
            acc = 0
            for i in range(self.rank):
                if a[i]:
                    acc += <long long>a[i] * <long long>self.gram[i][j]
            out.append(acc)
        return tuple(out)

    cpdef long long norm(self, a):
        n = self._norm_cache.get(a)
        if n is None:
            row = self.pairing_row(a)
            n = sum([x * y for x, y in zip(a, row)])
            self._norm_cache[a] = n
        return n

    cpdef long long weight2(self, mono):
        cdef long long lv = 0
        for f in <tuple>mono[0]:
            lv -= <long long>f[0]
        return 2 * lv + self.norm(mono[1])

    # -- Heisenberg ----------------------------------------------------------
    cpdef list heis(self, int i, int m, mono):
        cdef tuple factors = mono[0]
        cdef tuple point = mono[1]
        cdef tuple g
        cdef Py_ssize_t pos, mult, nf
        cdef long long v
        cdef int j
        if m < 0:
            f = list(factors)
            insort(f, (m, i))
            return [((tuple(f), point), 1)]
        g = self.gram[i]
        if m == 0:
            v = 0
            for j in range(self.rank):
                if point[j]:
                    v += <long long>g[j] * <long long>point[j]
            return [(mono, v)] if v else []
        out = []
        seen = None
        nf = len(factors)
        for pos in range(nf):
            f = factors[pos]
            if f[0] != -m or f == seen:
                continue
            seen = f
            gij = g[f[1]]
            if gij:
                mult = 1
                while pos + mult < nf and factors[pos + mult] == f:
                    mult += 1
                rest = factors[:pos] + factors[pos + 1:]
                out.append(((rest, point), m * gij * mult))
        return out

    def translate(self, mono):
        cdef tuple factors = mono[0]
        cdef tuple point = mono[1]
        cdef Py_ssize_t pos, mult, nf = len(factors)
        cdef int j
        cdef dict out = {}
        prev = None
        for pos in range(nf):
            f = factors[pos]
            if f == prev:
                continue
            prev = f
            mult = 1
            while pos + mult < nf and factors[pos + mult] == f:
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

    # -- vertex operators of e^alpha ----------------------------------------
    cdef dict _creation_num(self, tuple alpha, int d):
        """{factors: N} with coefficient N / d! of z^d in exp(sum alpha(-m) z^m / m)."""
        key = (alpha, d)
        hit = self._creation_cache.get(key)
        if hit is not None:
            return <dict>hit
        cdef dict res, acc
        cdef int m, j
        if d == 0:
            res = {(): 1}
        else:
            acc = {}
            nz = [(j, alpha[j]) for j in range(len(alpha)) if alpha[j]]
            for m in range(1, d + 1):
                # N'/(d-m)! divided by d  ==  N' (d-1)!/(d-m)! / d!
                mul = factorial(d - 1) // factorial(d - m)
                for fs, c in self._creation_num(alpha, d - m).items():
                    for j, a in nz:
                        f = list(fs)
                        insort(f, (-m, j))
                        f = tuple(f)
                        acc[f] = acc.get(f, 0) + c * a * mul
            res = {f: c for f, c in acc.items() if c}
        self._creation_cache[key] = res
        return res

    def creation(self, alpha, d):
        den = factorial(d)
        return {f: _frac(c, den) for f, c in self._creation_num(tuple(alpha), d).items()}

    cpdef dict exp_mode(self, alpha, int n, mono):
        cdef tuple factors = mono[0]
        cdef tuple point = mono[1]
        cdef tuple row = self.pairing_row(alpha)
        cdef long long p = 0, kmax = 0, base, dd, lvl, r
        cdef Py_ssize_t pos, mult, nf = len(factors)
        cdef int j, t
        for j in range(self.rank):
            if point[j]:
                p += <long long>row[j] * <long long>point[j]
        groups = []
        keep = []
        prev = None
        for pos in range(nf):
            f = factors[pos]
            if f == prev:
                continue
            prev = f
            mult = 1
            while pos + mult < nf and factors[pos + mult] == f:
                mult += 1
            r = row[f[1]]
            if r:
                groups.append((f, mult, -r))
                kmax += -(<long long>f[0]) * mult
            else:
                keep.extend([f] * mult)
        base = -n - 1 - p
        if base + kmax < 0:
            return {}
        sign = self.eps(alpha, point)
        newpt = tuple([a + b for a, b in zip(alpha, point)])
        choices = [(tuple(keep), 0, sign)]
        for f, mult, negr in groups:
            lvl = -f[0]
            nxt = []
            for rem, k, c in choices:
                for t in range(mult + 1):
                    cc = c * comb(mult, t) * negr ** t
                    nxt.append((rem + (f,) * (mult - t), k + t * lvl, cc))
            choices = nxt
        # common denominator F = (base + kmax)!
        F = factorial(base + kmax)
        cdef dict out = {}
        for rem, k, c in choices:
            dd = base + k
            if dd < 0:
                continue
            rem = tuple(sorted(rem))
            scale = c * (F // factorial(dd))
            for fs, cf in self._creation_num(alpha, dd).items():
                key = (tuple(sorted(rem + fs)) if rem and fs else (rem or fs), newpt)
                out[key] = out.get(key, 0) + scale * cf
        return {k: _frac(v, F) for k, v in out.items() if v}

    # -- general modes ------------------------------------------------------
    cpdef dict mode(self, u, int s, w):
        key = (u, s, w)
        hit = self._mode_cache.get(key)
        if hit is not None:
            return <dict>hit
        cdef long long wu = self.weight2(u)
        cdef long long ww = self.weight2(w)
        cdef dict res
        if wu + ww - 2 * s - 2 < 0:
            res = {}
        elif not u[0]:
            res = self.exp_mode(u[1], s, w)
        else:
            res = self._strip(u, s, w, wu, ww)
        self._mode_cache[key] = res
        return res

    cdef dict _strip(self, u, int s, w, long long wu, long long ww):
        cdef tuple head = u[0][0]
        cdef int m = -head[0]
        cdef int i = head[1]
        cdef tuple up = (u[0][1:], u[1])
        cdef long long wup = wu - 2 * m
        cdef dict acc = {}
        cdef dict x
        cdef int j, top, sgn
        j = 0
        while wup + ww - 2 * (s + j) - 2 >= 0:
            x = self.mode(up, s + j, w)
            if x:
                c = comb(m + j - 1, j)
                lvl = (-(m + j), i)
                for (fs, pt), v in x.items():
                    f = list(fs)
                    insort(f, lvl)
                    _pair_add(acc, (tuple(f), pt), c * v.numerator, v.denominator)
            j += 1
        sgn = 1 if m % 2 else -1
        top = 0
        for f in <tuple>w[0]:
            if -f[0] > top:
                top = -f[0]
        for j in range(top + 1):
            c0 = sgn * comb(m + j - 1, j)
            for mono, cf in self.heis(i, j, w):
                x = self.mode(up, s - m - j, mono)
                if x:
                    c = c0 * cf
                    for key, v in x.items():
                        _pair_add(acc, key, c * v.numerator, v.denominator)
        return _finish(acc)


def apply_terms(ModeEngine engine, list uitems, int n, list vitems):
    """Bilinear extension of ``engine.mode`` on raw Q(zeta24) coefficients."""
    cdef dict acc = {}
    cdef dict res
    cdef long long wu
    cdef list cn, cur
    cdef int t
    vw = [(vm, vn, vd, engine.weight2(vm)) for vm, vn, vd in vitems]
    for um, un, ud in uitems:
        wu = engine.weight2(um) - 2 * n - 2
        for vm, vn, vd, wv in vw:
            if wu + <long long>wv < 0:
                continue
            res = engine.mode(um, n, vm)
            if not res:
                continue
            cnum, cd = cyclo_mul(un, ud, vn, vd)
            for key, q in res.items():
                p = q.numerator
                d = cd * q.denominator
                cur = acc.get(key)
                if cur is None:
                    acc[key] = [[x * p for x in cnum], d]
                    continue
                cn = cur[0]
                od = cur[1]
                if od == d:
                    for t in range(8):
                        cn[t] += cnum[t] * p
                else:
                    g = gcd(od, d)
                    f1 = d // g
                    f2 = od // g
                    for t in range(8):
                        cn[t] = cn[t] * f1 + cnum[t] * p * f2
                    cur[1] = od * f1
    out = {}
    for key, (nums, den) in acc.items():
        if any(nums):
            out[key] = cyclo_normalize(nums, den)
    return out
