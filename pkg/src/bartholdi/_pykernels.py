"""Pure-Python brute-force kernels.

Same signatures and results as the compiled ``_ckernels`` module, which is
preferred when it imports (see ``bartholdi.kernels``).
"""


def _det_small(a, n):
    """Bareiss on a scratch list-of-lists, destroyed in place."""
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def semi_principal_minor_sums(T, m):
    """Per-size sums of the semi-principal minors of ``T``.

    ``T`` is the 2m x 2m oriented line graph matrix with arc ``i`` inverse to
    arc ``i + m``. Entry ``k`` of the result is the sum, over every k-subset
    ``alpha`` of arcs (ascending), of ``det T[alpha; alpha']`` where column
    ``j`` of the minor is the inverse of row arc ``j``. Size 0 counts the
    empty minor as 1.
    """
    N = 2 * m
    inv = [(i + m) % N if N else 0 for i in range(N)]
    # P[i][j] = T[i][inv j]; the minor for alpha is P restricted to alpha x alpha
    P = [[T[i][inv[j]] for j in range(N)] for i in range(N)]
    rowmask = [sum(1 << j for j in range(N) if P[i][j]) for i in range(N)]
    sums = [0] * (N + 1)
    sums[0] = 1
    for s in range(1, 1 << N):
        idx = []
        zero_row = False
        t = s
        while t:
            low = t & -t
            i = low.bit_length() - 1
            if not rowmask[i] & s:
                zero_row = True
                break
            idx.append(i)
            t ^= low
        if zero_row:
            continue
        q = len(idx)
        sub = [[P[i][j] for j in idx] for i in idx]
        sums[q] += _det_small(sub, q)
    return sums


def closed_walk_bump_counts(tails, heads, m, k):
    """Closed arc walks of length ``k`` bucketed by cyclic bump count.

    Returns a list ``c`` of length ``k + 1`` where ``c[b]`` is the number of
    sequences ``(a_1, ..., a_k)`` with ``head(a_j) = tail(a_{j+1})``
    cyclically and exactly ``b`` cyclic positions where the next arc is the
    inverse of the current one.
    """
    N = 2 * m
    counts = [0] * (k + 1)
    if k < 1 or N == 0:
        return counts
    succ = [[b for b in range(N) if tails[b] == heads[a]] for a in range(N)]
    inv = [(i + m) % N for i in range(N)]
    for start in range(N):
        # stack of (arc, depth, bumps so far, next successor index)
        path = [start]
        bumps = [0]
        pos = [0]
        while path:
            a = path[-1]
            depth = len(path)
            if depth == k:
                if heads[a] == tails[start]:
                    b = bumps[-1] + (1 if inv[a] == start else 0)
                    counts[b] += 1
                path.pop()
                bumps.pop()
                pos.pop()
                continue
            options = succ[a]
            i = pos[-1]
            if i >= len(options):
                path.pop()
                bumps.pop()
                pos.pop()
                continue
            pos[-1] = i + 1
            nxt = options[i]
            path.append(nxt)
            bumps.append(bumps[-1] + (1 if nxt == inv[a] else 0))
            pos.append(0)
    return counts
