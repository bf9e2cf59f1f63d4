"""Pure-Python hot kernels. Same API and results as the compiled ``_ckernels``.

Words are plain symbol sequences here; the callers own validation.
"""

MODE_FORMULA = 0
MODE_ENUMERATION = 1
MODE_BOTH = 2


def l1_size(x, q):
    """Radius-1 FLL ball size from runs and alternating segments, in one pass."""
    n = len(x)
    if n == 0:
        return 1
    rho = 1
    penalty = 0  # sum over segments of (s-1)(s-2)
    seg = 1
    for i in range(1, n):
        if x[i] != x[i - 1]:
            rho += 1
        if x[i] != x[i - 1] and (seg == 1 or x[i] == x[i - 2]):
            seg += 1
            continue
        penalty += (seg - 1) * (seg - 2)
        if x[i] != x[i - 1]:
            # x[i-2], x[i-1], x[i] pairwise distinct: new segment overlaps in x[i-1]
            seg = 2
        else:
            seg = 1
    penalty += (seg - 1) * (seg - 2)
    return rho * (n * (q - 1) - 1) + 2 - penalty // 2


def lcs_length(x, y):
    if len(x) < len(y):
        x, y = y, x
    m = len(y)
    prev = [0] * (m + 1)
    for a in x:
        cur = [0] * (m + 1)
        for j in range(m):
            if a == y[j]:
                cur[j + 1] = prev[j] + 1
            else:
                cur[j + 1] = cur[j] if cur[j] > prev[j + 1] else prev[j + 1]
        prev = cur
    return prev[m]


def _delete_once(words):
    out = set()
    for w in words:
        for i in range(len(w)):
            out.add(w[:i] + w[i + 1:])
    return out


def _insert_once(words, q):
    out = set()
    for w in words:
        for i in range(len(w) + 1):
            head, tail = w[:i], w[i:]
            for a in range(q):
                out.add(head + (a,) + tail)
    return out


def ball_members(x, q, t):
    """All words at FLL distance <= t from x (as tuples), via t deletions then t insertions."""
    level = {tuple(x)}
    for _ in range(t):
        level = _delete_once(level)
    for _ in range(t):
        level = _insert_once(level, q)
    # I_t(D_t(x)) contains I_s(D_s(x)) for s < t: re-insert what was deleted
    return level


def ball_size(x, q, t):
    return len(ball_members(x, q, t))


def _decode(rank, n, q, out):
    for i in range(n - 1, -1, -1):
        rank, out[i] = divmod(rank, q)


def sweep_range(n, q, t, lo, hi, mode, cap):
    """Aggregate ball sizes over ranks [lo, hi) of Z_q^n.

    Returns (min, min_count, min_ranks, max, max_count, max_ranks, total, mismatches)
    where rank lists keep the first ``cap`` hits in rank order (cap < 0: no cap)
    and mismatches holds (rank, formula, enumerated) triples.
    """
    x = [0] * n
    lo_v = hi_v = None
    lo_c = hi_c = 0
    lo_r = []
    hi_r = []
    total = 0
    mism = []
    for r in range(lo, hi):
        _decode(r, n, q, x)
        if mode == MODE_FORMULA:
            v = l1_size(x, q) if t == 1 else 1
        else:
            v = ball_size(x, q, t)
            if mode == MODE_BOTH:
                f = l1_size(x, q) if t == 1 else 1
                if f != v:
                    mism.append((r, f, v))
        total += v
        if lo_v is None or v < lo_v:
            lo_v, lo_c, lo_r = v, 0, []
        if v == lo_v:
            lo_c += 1
            if cap < 0 or len(lo_r) < cap:
                lo_r.append(r)
        if hi_v is None or v > hi_v:
            hi_v, hi_c, hi_r = v, 0, []
        if v == hi_v:
            hi_c += 1
            if cap < 0 or len(hi_r) < cap:
                hi_r.append(r)
    return lo_v, lo_c, lo_r, hi_v, hi_c, hi_r, total, mism
