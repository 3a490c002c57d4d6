"""Pure-Python fraction-free (Bareiss) elimination on integer matrices.

Mirror of the compiled ``_bareiss`` extension; used when it is not built.
"""


def rank_int(rows):
    """Rank over Q of an integer matrix given as a list of rows (not modified)."""
    a = [list(r) for r in rows]
    nrows = len(a)
    if nrows == 0:
        return 0
    ncols = len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if a[i][c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            ri = a[i]
            f = ri[c]
            if f == 0:
                for j in range(c + 1, ncols):
                    if ri[j]:
                        ri[j] = (p * ri[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    ri[j] = (p * ri[j] - f * pr[j]) // prev
            ri[c] = 0
        prev = p
        r += 1
    return r


def det_int(rows):
    """Determinant of a square integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = -1
        for i in range(c, n):
            if a[i][c] != 0:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        pr = a[c]
        p = pr[c]
        for i in range(c + 1, n):
            ri = a[i]
            f = ri[c]
            for j in range(c + 1, n):
                ri[j] = (p * ri[j] - f * pr[j]) // prev
            ri[c] = 0
        prev = p
    return sign * a[n - 1][n - 1]
