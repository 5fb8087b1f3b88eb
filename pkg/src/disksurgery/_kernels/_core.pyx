# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled word kernels; mirrors ``pyops`` exactly (see its docstring)."""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef inline long _key(long a) noexcept nogil:
    if a > 0:
        return 2 * (a - 1)
    return 2 * (-a - 1) + 1


cdef long* _unbox(object letters, Py_ssize_t* n_out) except? NULL:
    # Copies a Python int sequence into a fresh C array (caller frees).
    cdef Py_ssize_t n = len(letters)
    cdef long* buf = <long*> malloc((n if n else 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i = 0
    for a in letters:
        buf[i] = a
        i += 1
    n_out[0] = n
    return buf


cdef tuple _box(long* buf, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t i
    return tuple([buf[i] for i in range(lo, hi)])


cdef Py_ssize_t _reduce_into(long* src, Py_ssize_t n, long* dst) noexcept nogil:
    # Stack-based free reduction; returns the reduced length.
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t i
    for i in range(n):
        if top > 0 and dst[top - 1] == -src[i]:
            top -= 1
        else:
            dst[top] = src[i]
            top += 1
    return top


cdef void _strip_ends(long* buf, Py_ssize_t n, Py_ssize_t* lo_out, Py_ssize_t* hi_out) noexcept nogil:
    cdef Py_ssize_t lo = 0
    cdef Py_ssize_t hi = n
    while hi - lo >= 2 and buf[lo] == -buf[hi - 1]:
        lo += 1
        hi -= 1
    lo_out[0] = lo
    hi_out[0] = hi


cdef Py_ssize_t _best_rotation(long* buf, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t best = 0
    cdef Py_ssize_t cand, off
    cdef long d
    if n <= 1:
        return 0
    for cand in range(1, n):
        for off in range(n):
            d = _key(buf[(cand + off) % n]) - _key(buf[(best + off) % n])
            if d < 0:
                best = cand
                break
            if d > 0:
                break
    return best


def free_reduce(letters):
    """Freely reduced form of a letter sequence, as a tuple."""
    cdef Py_ssize_t n = 0
    cdef long* src = _unbox(letters, &n)
    cdef long* dst = <long*> malloc((n if n else 1) * sizeof(long))
    cdef Py_ssize_t top
    if dst == NULL:
        free(src)
        raise MemoryError()
    try:
        top = _reduce_into(src, n, dst)
        return _box(dst, 0, top)
    finally:
        free(src)
        free(dst)


def cyclic_reduce(letters):
    """Cyclically reduced form: freely reduce, then strip cancelling ends."""
    cdef Py_ssize_t n = 0
    cdef long* src = _unbox(letters, &n)
    cdef long* dst = <long*> malloc((n if n else 1) * sizeof(long))
    cdef Py_ssize_t top, lo, hi
    if dst == NULL:
        free(src)
        raise MemoryError()
    try:
        top = _reduce_into(src, n, dst)
        _strip_ends(dst, top, &lo, &hi)
        return _box(dst, lo, hi)
    finally:
        free(src)
        free(dst)


def least_rotation(letters):
    """Lexicographically least rotation under the canonical letter order."""
    cdef Py_ssize_t n = 0
    cdef long* buf = _unbox(letters, &n)
    cdef Py_ssize_t best, i
    try:
        best = _best_rotation(buf, n)
        return tuple([buf[(best + i) % n] for i in range(n)])
    finally:
        free(buf)


def canonical_cyclic(letters):
    """Canonical representative of the conjugacy class of a letter sequence."""
    cdef Py_ssize_t n = 0
    cdef long* src = _unbox(letters, &n)
    cdef long* dst = <long*> malloc((n if n else 1) * sizeof(long))
    cdef Py_ssize_t top, lo, hi, m, best, i
    if dst == NULL:
        free(src)
        raise MemoryError()
    try:
        top = _reduce_into(src, n, dst)
        _strip_ends(dst, top, &lo, &hi)
        m = hi - lo
        best = _best_rotation(dst + lo, m)
        return tuple([dst[lo + (best + i) % m] for i in range(m)]) if m else ()
    finally:
        free(src)
        free(dst)


cdef long* _substitute(object letters, object flat, object offsets,
                       Py_ssize_t* len_out) except? NULL:
    # Substitute + freely reduce into a fresh C array (caller frees).
    cdef Py_ssize_t n = 0
    cdef long* src = _unbox(letters, &n)
    cdef Py_ssize_t nf = 0
    cdef long* img = NULL
    cdef Py_ssize_t no = 0
    cdef long* off = NULL
    cdef long* out = NULL
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t i, j, width, maxw
    cdef long k, b
    try:
        img = _unbox(flat, &nf)
        off = _unbox(offsets, &no)
        maxw = 1
        for i in range(no - 1):
            width = off[i + 1] - off[i]
            if width > maxw:
                maxw = width
        out = <long*> malloc((n * maxw if n else 1) * sizeof(long))
        if out == NULL:
            raise MemoryError()
        for i in range(n):
            k = _key(src[i])
            for j in range(off[k], off[k + 1]):
                b = img[j]
                if top > 0 and out[top - 1] == -b:
                    top -= 1
                else:
                    out[top] = b
                    top += 1
        len_out[0] = top
        return out
    except BaseException:
        if out != NULL:
            free(out)
        raise
    finally:
        free(src)
        if img != NULL:
            free(img)
        if off != NULL:
            free(off)


def apply_images(letters, flat, offsets):
    """Substitute each letter by its image and freely reduce (see pyops)."""
    cdef Py_ssize_t top = 0
    cdef long* out = _substitute(letters, flat, offsets, &top)
    try:
        return _box(out, 0, top)
    finally:
        free(out)


def apply_images_canonical(letters, flat, offsets):
    """Image of a conjugacy class: substitute, then canonical cyclic form."""
    cdef Py_ssize_t top = 0
    cdef long* out = _substitute(letters, flat, offsets, &top)
    cdef Py_ssize_t lo, hi, m, best, i
    try:
        _strip_ends(out, top, &lo, &hi)
        m = hi - lo
        best = _best_rotation(out + lo, m)
        return tuple([out[lo + (best + i) % m] for i in range(m)]) if m else ()
    finally:
        free(out)
