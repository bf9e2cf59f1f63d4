# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled hot kernels. Mirrors ``_pykernels`` exactly."""

from libc.stdint cimport uint64_t, int64_t
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

from . import _pykernels

MODE_FORMULA = 0
MODE_ENUMERATION = 1
MODE_BOTH = 2


cdef int64_t _l1(const int* x, int n, int q) noexcept nogil:
    cdef int64_t rho = 1, penalty = 0, seg = 1
    cdef int i
    if n == 0:
        return 1
    for i in range(1, n):
        if x[i] != x[i - 1]:
            rho += 1
            if seg == 1 or x[i] == x[i - 2]:
                seg += 1
                continue
            penalty += (seg - 1) * (seg - 2)
            seg = 2
        else:
            penalty += (seg - 1) * (seg - 2)
            seg = 1
    penalty += (seg - 1) * (seg - 2)
    return rho * (<int64_t>n * (q - 1) - 1) + 2 - penalty // 2


def l1_size(x, int q):
    cdef vector[int] buf = list(x)
    return _l1(buf.data(), <int>buf.size(), q)


def lcs_length(x, y):
    cdef vector[int] a = list(x)
    cdef vector[int] b = list(y)
    if a.size() < b.size():
        a, b = b, a
    cdef int m = <int>b.size()
    cdef vector[int] prev = vector[int](m + 1, 0)
    cdef vector[int] cur = vector[int](m + 1, 0)
    cdef int i, j
    for i in range(<int>a.size()):
        cur[0] = 0
        for j in range(m):
            if a[i] == b[j]:
                cur[j + 1] = prev[j] + 1
            elif cur[j] > prev[j + 1]:
                cur[j + 1] = cur[j]
            else:
                cur[j + 1] = prev[j + 1]
        prev.swap(cur)
    return prev[m]


cdef bint _fits(int n, int q):
    # q^n must fit comfortably in 63 bits
    cdef uint64_t p = 1
    cdef int i
    for i in range(n):
        if p > (<uint64_t>1 << 62) // <uint64_t>q:
            return False
        p *= q
    return True


cdef size_t _ball_size(const int* x, int n, int q, int t, vector[uint64_t]& pw):
    # words of length m are base-q integers with x[0] most significant
    cdef unordered_set[uint64_t] cur, nxt
    cdef uint64_t v = 0, w, high, low, p_hi, p_lo
    cdef int i, m, a, step
    for i in range(n):
        v = v * q + x[i]
    cur.insert(v)
    m = n
    for step in range(t):
        nxt.clear()
        for w in cur:
            for i in range(m):
                p_hi = pw[m - i]
                p_lo = pw[m - i - 1]
                high = w // p_hi
                low = w % p_lo
                nxt.insert(high * p_lo + low)
        cur.swap(nxt)
        m -= 1
    for step in range(t):
        nxt.clear()
        for w in cur:
            for i in range(m + 1):
                p_lo = pw[m - i]
                high = w // p_lo
                low = w % p_lo
                for a in range(q):
                    nxt.insert((high * q + a) * p_lo + low)
        cur.swap(nxt)
        m += 1
    return cur.size()


cdef vector[uint64_t] _powers(int n, int q):
    cdef vector[uint64_t] pw = vector[uint64_t](n + 2, 1)
    cdef int i
    for i in range(1, n + 2):
        pw[i] = pw[i - 1] * q
    return pw


def ball_size(x, int q, int t):
    cdef vector[int] buf = list(x)
    cdef int n = <int>buf.size()
    if t > n or not _fits(n + 1, q):
        return _pykernels.ball_size(x, q, t)
    cdef vector[uint64_t] pw = _powers(n, q)
    return _ball_size(buf.data(), n, q, t, pw)


def sweep_range(int n, int q, int t, object lo, object hi, int mode, int cap):
    if not _fits(n + 1, q) or (mode != MODE_FORMULA and t > n):
        return _pykernels.sweep_range(n, q, t, lo, hi, mode, cap)
    cdef vector[int] x = vector[int](n, 0)
    cdef vector[uint64_t] pw = _powers(n, q)
    cdef uint64_t r = lo, end = hi, rr
    cdef int i
    cdef int64_t v, f
    cdef int64_t lo_v = -1, hi_v = -1
    cdef uint64_t lo_c = 0, hi_c = 0, total = 0
    lo_r = []
    hi_r = []
    mism = []
    rr = r
    for i in range(n - 1, -1, -1):
        x[i] = rr % q
        rr //= q
    while r < end:
        if mode == MODE_FORMULA:
            v = _l1(x.data(), n, q) if t == 1 else 1
        else:
            v = <int64_t>_ball_size(x.data(), n, q, t, pw)
            if mode == MODE_BOTH:
                f = _l1(x.data(), n, q) if t == 1 else 1
                if f != v:
                    mism.append((r, f, v))
        total += <uint64_t>v
        if lo_v < 0 or v < lo_v:
            lo_v = v
            lo_c = 0
            lo_r = []
        if v == lo_v:
            lo_c += 1
            if cap < 0 or len(lo_r) < cap:
                lo_r.append(r)
        if hi_v < 0 or v > hi_v:
            hi_v = v
            hi_c = 0
            hi_r = []
        if v == hi_v:
            hi_c += 1
            if cap < 0 or len(hi_r) < cap:
                hi_r.append(r)
        r += 1
        # mixed-radix increment, last symbol least significant
        i = n - 1
        while i >= 0:
            x[i] += 1
            if x[i] < q:
                break
            x[i] = 0
            i -= 1
    if lo_v < 0:
        return None, 0, [], None, 0, [], 0, []
    return lo_v, lo_c, lo_r, hi_v, hi_c, hi_r, total, mism
