# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Mirror of ``uudd._pykernels``: lexicographic next-permutation over a C int
buffer with running counters.  Permutation lengths are capped at 16, far
beyond anything enumerable.
"""

BACKEND = "cython"

DEF MAXLEN = 16

# rank pattern (tl, tr, bl, br) -> vortex?; index = 64*r0 + 16*r1 + 4*r2 + r3
cdef char _VORTEX[256]


cdef void _init_vortex():
    cdef int i
    for i in range(256):
        _VORTEX[i] = 0
    cdef int cyc[4]
    cyc[0] = 0; cyc[1] = 1; cyc[2] = 3; cyc[3] = 2
    cdef int start, step, r, cell
    cdef int ranks[4]
    for start in range(4):
        for step in (1, 3):
            for r in range(4):
                cell = cyc[(start + step * r) % 4]
                ranks[cell] = r
            _VORTEX[64 * ranks[0] + 16 * ranks[1] + 4 * ranks[2] + ranks[3]] = 1


_init_vortex()


cdef inline bint _next_perm(int* a, int n) nogil:
    cdef int i = n - 2
    cdef int j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


cdef inline bint _uudd(int* p, int n) nogil:
    cdef int m
    for m in range(1, (n - 1) // 2 + 1):
        if (p[2 * m - 2] < p[2 * m - 1]) != (p[2 * m - 1] < p[2 * m]):
            return False
    return True


cdef inline int _rank(int w, int a, int b, int c, int d) nogil:
    return (a < w) + (b < w) + (c < w) + (d < w)


cdef inline bint _vortex(int a, int b, int c, int d) nogil:
    return _VORTEX[64 * _rank(a, a, b, c, d) + 16 * _rank(b, a, b, c, d)
                   + 4 * _rank(c, a, b, c, d) + _rank(d, a, b, c, d)]


def _check_len(int n):
    if n < 1 or n > MAXLEN:
        raise ValueError(f"length {n} outside 1..{MAXLEN}")


def uudd_ok(p):
    cdef int buf[MAXLEN]
    cdef int n = len(p)
    _check_len(n)
    for i in range(n):
        buf[i] = p[i]
    return bool(_uudd(buf, n))


def is_vortex(int a, int b, int c, int d):
    return bool(_vortex(a, b, c, d))


def uudd_by_last(int length):
    _check_len(length)
    cdef int p[MAXLEN]
    cdef long long counts[MAXLEN]
    cdef int i
    for i in range(length):
        p[i] = i
        counts[i] = 0
    with nogil:
        while True:
            if _uudd(p, length):
                counts[p[length - 1]] += 1
            if not _next_perm(p, length):
                break
    return [counts[i] for i in range(length)]


def uudd_count(int length):
    return sum(uudd_by_last(length))


def whirlpool_count(int rows, int cols):
    cdef int n = rows * cols
    _check_len(n)
    cdef int p[MAXLEN]
    cdef int tl[MAXLEN]
    cdef int nb = 0
    cdef int i, r, c
    cdef long long total = 0
    cdef bint ok
    for r in range(rows - 1):
        for c in range(cols - 1):
            tl[nb] = r * cols + c
            nb += 1
    for i in range(n):
        p[i] = i
    with nogil:
        while True:
            ok = True
            for i in range(nb):
                if not _vortex(p[tl[i]], p[tl[i] + 1], p[tl[i] + cols], p[tl[i] + cols + 1]):
                    ok = False
                    break
            if ok:
                total += 1
            if not _next_perm(p, n):
                break
    return total


cdef int _fill_rest(int* p, int length, int last):
    cdef int i, k = 0
    for i in range(length):
        if i != last:
            p[k] = i
            k += 1
    p[length - 1] = last
    return length - 1


def alternating_last(int length, int last):
    _check_len(length)
    if last < 0 or last >= length:
        raise ValueError("last entry out of range")
    cdef int p[MAXLEN]
    cdef int h = _fill_rest(p, length, last)
    cdef long long total = 0
    cdef int i
    cdef bint ok
    with nogil:
        while True:
            ok = True
            for i in range(length - 1):
                if (p[i] > p[i + 1]) != (i % 2 == 0):
                    ok = False
                    break
            if ok:
                total += 1
            if not _next_perm(p, h):
                break
    return total


def descents_last(int length, int last):
    _check_len(length)
    if last < 0 or last >= length:
        raise ValueError("last entry out of range")
    cdef int p[MAXLEN]
    cdef long long dist[MAXLEN]
    cdef int h = _fill_rest(p, length, last)
    cdef int i, d
    for i in range(length):
        dist[i] = 0
    with nogil:
        while True:
            d = 0
            for i in range(length - 1):
                if p[i] > p[i + 1]:
                    d += 1
            dist[d] += 1
            if not _next_perm(p, h):
                break
    return [dist[i] for i in range(length)]
