# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the loops in ``_pykernels``.

Inputs are narrowed to 64-bit integers (Cython raises OverflowError for an
argument that does not fit) and every add or multiply is overflow-checked;
on overflow these raise OverflowError and ``kernels`` reruns the Python
version. Class sums accumulate in 128 bits.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    """
    typedef __int128 bw_int128;
    static int bw_add64(int64_t a, int64_t b, int64_t *r) { return __builtin_add_overflow(a, b, r); }
    static int bw_mul64(int64_t a, int64_t b, int64_t *r) { return __builtin_mul_overflow(a, b, r); }
    static int bw_add128(bw_int128 a, bw_int128 b, bw_int128 *r) { return __builtin_add_overflow(a, b, r); }
    """
    ctypedef long long bw_int128
    int bw_add64(int64_t a, int64_t b, int64_t *r) nogil
    int bw_mul64(int64_t a, int64_t b, int64_t *r) nogil
    int bw_add128(bw_int128 a, bw_int128 b, bw_int128 *r) nogil


cdef object _int128_to_py(bw_int128 v):
    cdef bint neg = v < 0
    cdef bw_int128 mag = -v if neg else v
    cdef uint64_t lo = <uint64_t>mag
    cdef uint64_t hi = <uint64_t>(mag >> 64)
    out = (int(hi) << 64) | int(lo)
    return -out if neg else out


def complete_series(parts, int degree):
    if degree < 0:
        return []
    cdef int64_t *c = <int64_t *>calloc(degree + 1, sizeof(int64_t))
    if c == NULL:
        raise MemoryError()
    cdef int i, r
    cdef int64_t nxt
    try:
        c[0] = 1
        for part in parts:
            r = part
            for i in range(r, degree + 1):
                if bw_add64(c[i], c[i - r], &nxt):
                    raise OverflowError("complete_series exceeds 64 bits")
                c[i] = nxt
        return [c[i] for i in range(degree + 1)]
    finally:
        free(c)


def class_sums(rows, weights):
    cdef Py_ssize_t k = len(weights)
    cdef Py_ssize_t i, j
    cdef int64_t *w = <int64_t *>malloc(max(k, 1) * sizeof(int64_t))
    if w == NULL:
        raise MemoryError()
    cdef bw_int128 acc, term
    cdef int64_t cv
    out = []
    try:
        for j in range(k):
            w[j] = weights[j]
        for row in rows:
            if len(row) != k:
                raise ValueError("row length does not match weights")
            acc = 0
            for j in range(k):
                cv = row[j]
                if cv == 0 or w[j] == 0:
                    continue
                term = (<bw_int128>cv) * (<bw_int128>w[j])
                if bw_add128(acc, term, &acc):
                    raise OverflowError("class sum exceeds 128 bits")
            out.append(_int128_to_py(acc))
        return out
    finally:
        free(w)


def poly_mul_truncated(a, b, int bound):
    if not a or not b:
        return {}
    cdef int side = bound + 1
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef int *ai = <int *>malloc(na * sizeof(int))
    cdef int *aj = <int *>malloc(na * sizeof(int))
    cdef int64_t *ac = <int64_t *>malloc(na * sizeof(int64_t))
    cdef int *bi = <int *>malloc(nb * sizeof(int))
    cdef int *bj = <int *>malloc(nb * sizeof(int))
    cdef int64_t *bc = <int64_t *>malloc(nb * sizeof(int64_t))
    cdef int64_t *grid = <int64_t *>calloc(side * side, sizeof(int64_t))
    cdef Py_ssize_t p, q
    cdef int x, y
    cdef int64_t prod, nxt
    try:
        if not (ai and aj and ac and bi and bj and bc and grid):
            raise MemoryError()
        p = 0
        for (x, y), coef in a.items():
            ai[p] = x; aj[p] = y; ac[p] = coef
            p += 1
        q = 0
        for (x, y), coef in b.items():
            bi[q] = x; bj[q] = y; bc[q] = coef
            q += 1
        for p in range(na):
            for q in range(nb):
                x = ai[p] + bi[q]
                y = aj[p] + bj[q]
                if x + y > bound:
                    continue
                if bw_mul64(ac[p], bc[q], &prod) or bw_add64(grid[x * side + y], prod, &nxt):
                    raise OverflowError("polynomial coefficient exceeds 64 bits")
                grid[x * side + y] = nxt
        out = {}
        for x in range(side):
            for y in range(side - x):
                if grid[x * side + y]:
                    out[(x, y)] = grid[x * side + y]
        return out
    finally:
        free(ai); free(aj); free(ac); free(bi); free(bj); free(bc); free(grid)


def orbit_representatives(positions, letters, int digits, int base):
    cdef Py_ssize_t g, ngroup = len(positions)
    cdef int64_t size = 1
    cdef int k
    for k in range(digits):
        if bw_mul64(size, base, &size) or size > (1 << 34):
            raise OverflowError("word space too large")
    cdef int *pos = <int *>malloc(max(ngroup * digits, 1) * sizeof(int))
    cdef int *let = <int *>malloc(max(ngroup * base, 1) * sizeof(int))
    cdef int64_t *powers = <int64_t *>malloc(max(digits, 1) * sizeof(int64_t))
    cdef int *word_letters = <int *>malloc(max(digits, 1) * sizeof(int))
    cdef unsigned char *seen = <unsigned char *>calloc(size, 1)
    cdef int64_t word, w, image
    reps = []
    try:
        if not (pos and let and powers and word_letters and seen):
            raise MemoryError()
        for g in range(ngroup):
            for k in range(digits):
                pos[g * digits + k] = positions[g][k]
            for k in range(base):
                let[g * base + k] = letters[g][k]
        powers[0] = 1
        for k in range(1, digits):
            powers[k] = powers[k - 1] * base
        for word in range(size):
            if seen[word]:
                continue
            reps.append(word)
            w = word
            for k in range(digits):
                word_letters[k] = w % base
                w //= base
            for g in range(ngroup):
                image = 0
                for k in range(digits):
                    image += let[g * base + word_letters[k]] * powers[pos[g * digits + k]]
                seen[image] = 1
        return reps
    finally:
        free(pos); free(let); free(powers); free(word_letters); free(seen)
