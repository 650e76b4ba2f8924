"""Pure-Python reference implementations of the hot inner loops.

The compiled twin (``_core_cy``) implements the same three functions with
identical semantics; ``egy._kernels`` picks whichever is importable.  Keep
the two in lock step -- ``tests/test_kernels.py`` diffs them.

All arithmetic is on plain Python ints; fractions are carried as unreduced
(num, den) pairs and compared by cross multiplication.
"""

from __future__ import annotations

BACKEND = "python"


def two_term_max_below(xn, xd, a_min, thr_n, thr_d, allow_equal=False,
                       max_iters=None):
    """Largest 1/a + 1/b strictly below x = xn/xd with a_min <= a < b.

    Only candidates beating the threshold thr_n/thr_d are tracked (ties too,
    when allow_equal is set; the lowest-a tie is kept).  Returns
    (found, num, den, a, b, iterations); num/den is unreduced.

    For fixed a the best partner is the smallest b with 1/a + 1/b < x, so
    the loop is linear in a; it stops once even 1/a + 1/(a+1) cannot beat
    the running best.

    When the scan would pass max_iters iterations it aborts and reports
    iterations = max_iters + 1 with found=False; the caller's budget
    accounting turns that into a resource error, never a wrong answer.
    """
    if xn <= 0:
        return (False, 0, 0, 0, 0, 0)
    a = xd // xn + 1  # smallest a with 1/a < x
    if a < a_min:
        a = a_min
    if a < 2:
        a = 2
    best_n, best_d = thr_n, thr_d
    found = False
    res_a = res_b = 0
    iters = 0
    while True:
        iters += 1
        if max_iters is not None and iters > max_iters:
            return (False, 0, 0, 0, 0, iters)
        # upper bound for this a is 1/a + 1/(a+1) = (2a+1)/(a(a+1))
        ub_cmp = (2 * a + 1) * best_d - best_n * a * (a + 1)
        if ub_cmp < 0 or (ub_cmp == 0 and (found or not allow_equal)):
            break
        num = xn * a - xd  # > 0; equals a*xd*(x - 1/a)
        b = (xd * a) // num + 1
        if b <= a:
            b = a + 1
        cn, cd = a + b, a * b
        cmp_best = cn * best_d - best_n * cd
        if cmp_best > 0 or (cmp_best == 0 and allow_equal and not found):
            best_n, best_d = cn, cd
            res_a, res_b = a, b
            found = True
        a += 1
    return (found, best_n, best_d, res_a, res_b, iters)


def two_term_min_competitors(i):
    """Per greedy cell, the smallest two-term sum that can beat greedy.

    Enumerates every s = 1/a + 1/b with i < a < b and s in
    (1/i, 1/(i-1)]: a < 2i is forced by 2/a > s > 1/i, and for each a the
    window of b follows from the two endpoint constraints.  Each s lands in
    the greedy cell (1/i + 1/j, 1/i + 1/(j-1)] with
    j = floor(1/(s - 1/i)) + 1; the minimum per cell is kept.

    Returns a list of (j, s_num, s_den) sorted by j, s unreduced.
    """
    if i < 2:
        raise ValueError(f"need i >= 2, got {i}")
    mins = {}
    for a in range(i + 1, 2 * i):
        # 1/b <= 1/(i-1) - 1/a  =>  b >= a(i-1)/(a-i+1)
        lo_num = a * (i - 1)
        lo = -(-lo_num // (a - i + 1))
        if lo <= a:
            lo = a + 1
        # 1/b > 1/i - 1/a  =>  b < ai/(a-i)
        hi = (a * i - 1) // (a - i)
        for b in range(lo, hi + 1):
            sn = a + b
            sd = a * b
            gap_den = i * sn - sd  # > 0 since s > 1/i
            j = (i * sd) // gap_den + 1
            cur = mins.get(j)
            if cur is None or sn * cur[1] < cur[0] * sd:
                mins[j] = (sn, sd)
    return [(j, nd[0], nd[1]) for j, nd in sorted(mins.items())]


def direct_mode_terms(i):
    """Right-part interval lengths 1/floor(x_k) - 1/x_k for all k.

    x_k = N(N+2k)/(N-2k) with N = i(i+1), k = 0..floor(N/10).  Verifies the
    spacing x_{k+1} - x_k > 1 (so the floors are pairwise distinct) and
    x_k >= N (so every interval sits inside (1/i, 1/(i-1)]).  Integer x_k
    contribute an empty right part and are skipped.

    Returns a list of (floor_xk, term_num, term_den), terms unreduced.
    """
    if i < 2:
        raise ValueError(f"need i >= 2, got {i}")
    big = i * (i + 1)
    kmax = big // 10
    terms = []
    prev_p = prev_q = 0
    for k in range(kmax + 1):
        q = big - 2 * k
        p = big * (big + 2 * k)
        if p < big * q:
            raise ArithmeticError(f"x_k < i(i+1) at i={i}, k={k}")
        if k and p * prev_q - prev_p * q <= q * prev_q:
            raise ArithmeticError(f"spacing x_k - x_(k-1) <= 1 at i={i}, k={k}")
        f = p // q
        if f * q != p:
            # 1/f - 1/x_k = (x_k - f)/(f x_k) = (p - f q)/(f p)
            terms.append((f, p - f * q, f * p))
        prev_p, prev_q = p, q
    return terms
