# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot inner loops.

Semantics must match ``_core_py`` exactly; see its docstrings.  The two
integer-only kernels use C int64 values with __int128 intermediates inside
a verified size regime and fall back to object arithmetic above it.
"""

BACKEND = "cython"

cdef extern from *:
    ctypedef long long int128 "__int128"

cdef object _i128_to_pyint(int128 v):
    cdef unsigned long long lo
    cdef long long hi
    lo = <unsigned long long> (v & <int128> 0xFFFFFFFFFFFFFFFF)
    hi = <long long> (v >> 64)
    if hi == 0:
        return int(lo)
    return (int(hi) << 64) | int(lo)


cdef int128 _obj_to_i128(object v):
    # v must be a nonnegative Python int below 2**126
    cdef long long hi = v >> 63
    cdef long long lo = v & ((1 << 63) - 1)
    return ((<int128> hi) << 63) | <int128> lo


def two_term_max_below(object xn, object xd, object a_min, object thr_n,
                       object thr_d, bint allow_equal=False,
                       object max_iters=None):
    # Object arithmetic by default (deep branch-and-bound nodes carry big
    # exact remainders), switching to a typed __int128 loop once every state
    # value provably fits: b is nonincreasing in a, so once b < 2^31 the
    # remaining scan stays word-sized and the products stay under 2^107.
    cdef bint found = False
    cdef long long iters = 0
    cdef long long cap = -1
    cdef long long f_a, f_b
    cdef int128 f_xn, f_xd, f_num, f_xda, f_bn, f_bd, f_cn, f_cd, ubl, ubr, c128
    cdef bint fast_done
    if max_iters is not None:
        cap = min(max_iters, 2**62)
    if xn <= 0:
        return (False, 0, 0, 0, 0, 0)
    a = xd // xn + 1
    if a < a_min:
        a = a_min
    if a < 2:
        a = 2
    best_n, best_d = thr_n, thr_d
    res_a = res_b = 0
    b_prev = None
    small = 1 << 45
    # incumbent bounds sized so every product below stays under 2^122:
    # (2a+1)*best_d < 2^121, best_n*a*(a+1) < 2^120, cn*best_d < 2^122,
    # best_n*cd < 2^122 with a < 2^30, b < 2^31, xn, xd < 2^45
    bn_lim = 1 << 60
    bd_lim = 1 << 90
    while True:
        if (b_prev is not None and b_prev < (1 << 31) and a < (1 << 30)
                and xn < small and xd < small
                and best_n < bn_lim and best_d < bd_lim):
            f_a = a
            f_xn = _obj_to_i128(xn)
            f_xd = _obj_to_i128(xd)
            f_bn = _obj_to_i128(best_n)
            f_bd = _obj_to_i128(best_d)
            f_num = f_xn * f_a - f_xd
            f_xda = f_xd * f_a
            fast_done = False
            while True:
                iters += 1
                if cap >= 0 and iters > cap:
                    return (False, 0, 0, 0, 0, iters)
                ubl = (2 * f_a + 1) * f_bd
                ubr = f_bn * f_a * (f_a + 1)
                if ubl < ubr or (ubl == ubr and (found or not allow_equal)):
                    fast_done = True
                    break
                f_b = <long long> (f_xda // f_num) + 1
                if f_b <= f_a:
                    f_b = f_a + 1
                f_cn = f_a + f_b
                f_cd = (<int128> f_a) * (<int128> f_b)
                c128 = f_cn * f_bd - f_bn * f_cd
                if c128 > 0 or (c128 == 0 and allow_equal and not found):
                    f_bn = f_cn
                    f_bd = f_cd
                    res_a = f_a
                    res_b = f_b
                    found = True
                f_a += 1
                if f_a >= (1 << 31):
                    break  # bail to the object loop (never in practice)
                f_num += f_xn
                f_xda += f_xd
            best_n = _i128_to_pyint(f_bn)
            best_d = _i128_to_pyint(f_bd)
            a = f_a
            if fast_done:
                break
            b_prev = None
            continue
        iters += 1
        if cap >= 0 and iters > cap:
            return (False, 0, 0, 0, 0, iters)
        ub_cmp = (2 * a + 1) * best_d - best_n * a * (a + 1)
        if ub_cmp < 0:
            break
        if ub_cmp == 0 and (found or not allow_equal):
            break
        num = xn * a - xd
        b = (xd * a) // num + 1
        if b <= a:
            b = a + 1
        cn = a + b
        cd = a * b
        cmp_best = cn * best_d - best_n * cd
        if cmp_best > 0 or (cmp_best == 0 and allow_equal and not found):
            best_n, best_d = cn, cd
            res_a, res_b = a, b
            found = True
        b_prev = b
        a += 1
    return (found, best_n, best_d, res_a, res_b, iters)


# a <= 2i, b <= i(i+1), a*b*i and the floor division all fit in int64 for
# i <= 20000; the min-tracking cross products need __int128.
DEF MIN_COMPETITORS_FAST_LIMIT = 20000


def two_term_min_competitors(object i_obj):
    cdef long long i, a, b, lo, hi, sn, sd, gap_den, j
    cdef int128 cross_new, cross_cur
    if i_obj < 2:
        raise ValueError(f"need i >= 2, got {i_obj}")
    if i_obj > MIN_COMPETITORS_FAST_LIMIT:
        from . import _core_py
        return _core_py.two_term_min_competitors(i_obj)
    i = i_obj
    mins = {}
    for a in range(i + 1, 2 * i):
        # ceil via positive arithmetic only: cdivision truncates toward zero
        lo = (a * (i - 1) + (a - i)) // (a - i + 1)
        if lo <= a:
            lo = a + 1
        hi = (a * i - 1) // (a - i)
        for b in range(lo, hi + 1):
            sn = a + b
            sd = a * b
            gap_den = i * sn - sd
            j = (i * sd) // gap_den + 1
            cur = mins.get(j)
            if cur is None:
                mins[j] = (sn, sd)
            else:
                cross_new = <int128> sn * <int128> (<long long> cur[1])
                cross_cur = <int128> (<long long> cur[0]) * <int128> sd
                if cross_new < cross_cur:
                    mins[j] = (sn, sd)
    return [(j_key, nd[0], nd[1]) for j_key, nd in sorted(mins.items())]


# p = N(N+2k) <= 1.2 N^2 must fit in int64: N = i(i+1) <= 2.7e9, i <= 40000.
DEF DIRECT_TERMS_FAST_LIMIT = 40000


def direct_mode_terms(object i_obj):
    cdef long long i, big, kmax, k, q, p, f, prev_p, prev_q
    cdef int128 lhs, rhs
    if i_obj < 2:
        raise ValueError(f"need i >= 2, got {i_obj}")
    if i_obj > DIRECT_TERMS_FAST_LIMIT:
        from . import _core_py
        return _core_py.direct_mode_terms(i_obj)
    i = i_obj
    big = i * (i + 1)
    kmax = big // 10
    terms = []
    prev_p = prev_q = 0
    for k in range(kmax + 1):
        q = big - 2 * k
        p = big * (big + 2 * k)
        if p < big * q:
            raise ArithmeticError(f"x_k < i(i+1) at i={i_obj}, k={k}")
        if k:
            lhs = <int128> p * <int128> prev_q - <int128> prev_p * <int128> q
            rhs = <int128> q * <int128> prev_q
            if lhs <= rhs:
                raise ArithmeticError(f"spacing x_k - x_(k-1) <= 1 at i={i_obj}, k={k}")
        f = p // q
        if f * q != p:
            terms.append((f, p - f * q, _i128_to_pyint(<int128> f * <int128> p)))
        prev_p = p
        prev_q = q
    return terms
