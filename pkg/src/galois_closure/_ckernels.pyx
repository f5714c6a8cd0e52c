# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; a line-for-line port of _pykernels with C masks.

Masks are ``unsigned long long``; universes are limited to 64 points.
"""

from cpython cimport array as carray
from libc.stdlib cimport malloc, free, qsort
import array

ctypedef unsigned long long u64
ctypedef const unsigned long long[:] masks_t

NAME = "cython"

cdef carray.array _U64_TEMPLATE = array.array("Q")


cdef inline u64 _closure(masks_t closed, u64 a) except? 0:
    cdef Py_ssize_t k
    for k in range(closed.shape[0]):
        if a & ~closed[k] == 0:
            return closed[k]
    raise ValueError("family has no member containing the mask; universe missing")


cdef inline u64 _image(masks_t img, u64 a) nogil:
    cdef u64 out = 0
    cdef Py_ssize_t x = 0
    while a:
        if a & 1:
            out |= (<u64>1) << img[x]
        a >>= 1
        x += 1
    return out


cdef inline u64 _preimage(masks_t img, u64 b) nogil:
    cdef u64 out = 0
    cdef Py_ssize_t x
    for x in range(img.shape[0]):
        if (b >> img[x]) & 1:
            out |= (<u64>1) << x
    return out


cdef inline int _lowest_index(u64 m) nogil:
    cdef int i = 0
    while not (m & 1):
        m >>= 1
        i += 1
    return i


def closure_mask(masks_t closed, u64 a):
    return _closure(closed, a)


def closure_table(masks_t closed, int n):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef carray.array out = carray.clone(_U64_TEMPLATE, size, zero=False)
    cdef u64[:] view = out
    cdef Py_ssize_t a
    for a in range(size):
        view[a] = _closure(closed, <u64>a)
    return out


def table_scan(masks_t t, int n):
    cdef u64 size = (<u64>1) << n
    cdef long long ext = -1, idem = -1
    cdef long long mono_a = -1, mono_b = -1, comp_a = -1, comp_b = -1
    cdef u64 a, ca, rest, bit, b, cb, sub, cca
    for a in range(size):
        ca = t[a]
        if ext < 0 and (a & ~ca):
            ext = a
        if idem < 0 and t[ca] != ca:
            idem = a
        if mono_a < 0:
            rest = ~a & (size - 1)
            while rest:
                bit = rest & (~rest + 1)
                rest ^= bit
                if ca & ~t[a | bit]:
                    mono_a = a
                    mono_b = a | bit
                    break
    for b in range(size):
        cb = t[b]
        sub = b
        while True:
            cca = t[t[sub]]
            if (sub & ~cca) or (cca & ~cb):
                comp_a = sub
                comp_b = b
                break
            if sub == 0:
                break
            sub = (sub - 1) & b
        if comp_a >= 0:
            break
    return ext, mono_a, mono_b, idem, comp_a, comp_b


def fixed_points(masks_t t):
    cdef Py_ssize_t a
    return [a for a in range(t.shape[0]) if t[a] == <u64>a]


def image_mask(masks_t img, u64 a):
    return _image(img, a)


def preimage_mask(masks_t img, u64 b):
    return _preimage(img, b)


cdef int _cmp_u64(const void* p, const void* q) noexcept nogil:
    cdef u64 x = (<const u64*>p)[0]
    cdef u64 y = (<const u64*>q)[0]
    return (x > y) - (x < y)


cdef inline bint _member(const u64* sorted_, Py_ssize_t m, u64 v) nogil:
    cdef Py_ssize_t lo = 0, hi = m, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if sorted_[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    return lo < m and sorted_[lo] == v


def intersection_scan(masks_t members):
    cdef Py_ssize_t m = members.shape[0], i, j
    cdef u64* srt = <u64*>malloc(max(m, 1) * sizeof(u64))
    if srt == NULL:
        raise MemoryError()
    cdef Py_ssize_t ri = -1, rj = -1
    cdef u64 fi
    try:
        for i in range(m):
            srt[i] = members[i]
        qsort(srt, m, sizeof(u64), _cmp_u64)
        with nogil:
            for i in range(m):
                fi = members[i]
                for j in range(i + 1, m):
                    if not _member(srt, m, fi & members[j]):
                        ri = i
                        rj = j
                        break
                if ri >= 0:
                    break
    finally:
        free(srt)
    return ri, rj


def continuity_scan(masks_t img, masks_t closed_src, masks_t closed_dst):
    cdef Py_ssize_t j
    cdef u64 pre
    for j in range(closed_dst.shape[0]):
        pre = _preimage(img, closed_dst[j])
        if _closure(closed_src, pre) != pre:
            return j
    return -1


def continuity_image_scan(masks_t img, masks_t closed_src, masks_t closed_dst, int n_src):
    cdef u64 a, size = (<u64>1) << n_src, lhs, rhs
    for a in range(size):
        lhs = _image(img, _closure(closed_src, a))
        rhs = _closure(closed_dst, _image(img, a))
        if lhs & ~rhs:
            return a
    return -1


def qoset_galois_scan(masks_t phi, masks_t psi, masks_t up_p, masks_t up_pp):
    cdef Py_ssize_t x
    cdef u64 diff
    for x in range(phi.shape[0]):
        diff = up_pp[phi[x]] ^ _preimage(psi, up_p[x])
        if diff:
            return x, _lowest_index(diff)
    return -1, -1


def direct_scan(masks_t phi, masks_t psi, masks_t closed_e, masks_t closed_ep, int n_prime):
    cdef u64 ap, size = (<u64>1) << n_prime, lhs, rhs
    for ap in range(size):
        lhs = _preimage(phi, _closure(closed_ep, ap))
        rhs = _closure(closed_e, _image(psi, ap))
        if lhs != rhs:
            return ap
    return -1


def induced_scan(masks_t phi, masks_t psi, masks_t closed_e, masks_t closed_ep):
    cdef Py_ssize_t m = closed_e.shape[0], mp = closed_ep.shape[0], i, j
    cdef u64* pre_phi = <u64*>malloc(max(mp, 1) * sizeof(u64))
    cdef u64* pre_psi = <u64*>malloc(max(m, 1) * sizeof(u64))
    cdef Py_ssize_t ri = -1, rj = -1
    cdef u64 f, back
    if pre_phi == NULL or pre_psi == NULL:
        free(pre_phi)
        free(pre_psi)
        raise MemoryError()
    try:
        with nogil:
            for j in range(mp):
                pre_phi[j] = _preimage(phi, closed_ep[j])
            for i in range(m):
                pre_psi[i] = _preimage(psi, closed_e[i])
            for i in range(m):
                f = closed_e[i]
                back = pre_psi[i]
                for j in range(mp):
                    if ((pre_phi[j] & ~f) == 0) != ((closed_ep[j] & ~back) == 0):
                        ri = i
                        rj = j
                        break
                if ri >= 0:
                    break
    finally:
        free(pre_phi)
        free(pre_psi)
    return ri, rj
