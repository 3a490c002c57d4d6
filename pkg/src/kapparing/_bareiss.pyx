# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free (Bareiss) elimination on integer matrices.

Entries stay arbitrary-precision Python ints; the loops and row access are
typed so the interpreter overhead around each bigint operation goes away.
"""


def rank_int(rows):
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(a)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(a[0])
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list pr, ri
    cdef object p, f, prev = 1, x
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if (<list>a[i])[c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pr = <list>a[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            ri = <list>a[i]
            f = ri[c]
            if f == 0:
                for j in range(c + 1, ncols):
                    x = ri[j]
                    if x:
                        ri[j] = (p * x) // prev
            else:
                for j in range(c + 1, ncols):
                    ri[j] = (p * ri[j] - f * pr[j]) // prev
            ri[c] = 0
        prev = p
        r += 1
    return r


def det_int(rows):
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t n = len(a)
    for row in a:
        if len(row) != n:
            raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    cdef Py_ssize_t c, i, j, piv
    cdef int sign = 1
    cdef list pr, ri
    cdef object p, f, prev = 1
    for c in range(n - 1):
        piv = -1
        for i in range(c, n):
            if (<list>a[i])[c] != 0:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        pr = <list>a[c]
        p = pr[c]
        for i in range(c + 1, n):
            ri = <list>a[i]
            f = ri[c]
            for j in range(c + 1, n):
                ri[j] = (p * ri[j] - f * pr[j]) // prev
            ri[c] = 0
        prev = p
    return sign * (<list>a[n - 1])[n - 1]
