# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled truncated multiplication kernel.

Same contract as cylqt._mul_py.mul_packed, restricted to packed keys that
fit a C long long (the caller checks the packed space size).  The double
loop, digit checks and accumulation run at C speed; coefficients stay
Python objects so arithmetic remains exact for int and Fraction alike.
"""

from libc.stdlib cimport free, malloc


def mul_packed(list a_items, list b_items, tuple strides, tuple radices,
               tuple bounds, Py_ssize_t cap_start, long long cap_total):
    cdef Py_ssize_t na = len(a_items), nb = len(b_items)
    cdef Py_ssize_t nv = len(radices)
    cdef long long[32] c_strides, c_radices, c_bounds
    cdef long long key, kb, digit, total
    cdef Py_ssize_t i, j, v
    cdef object va, vb, cur
    cdef dict out = {}
    cdef bint ok

    if nv > 32:
        raise ValueError("too many variables for the compiled kernel")
    for v in range(nv):
        c_strides[v] = strides[v]
        c_radices[v] = radices[v]
        c_bounds[v] = bounds[v]

    cdef list a_vals = [item[1] for item in a_items]
    cdef long long *a_keys = <long long *> malloc(na * sizeof(long long))
    if a_keys == NULL:
        raise MemoryError()
    try:
        for i in range(na):
            a_keys[i] = a_items[i][0]

        for j in range(nb):
            kb = b_items[j][0]
            vb = b_items[j][1]
            for i in range(na):
                key = a_keys[i] + kb
                ok = True
                total = 0
                for v in range(nv):
                    digit = (key // c_strides[v]) % c_radices[v]
                    if digit > c_bounds[v]:
                        ok = False
                        break
                    if v >= cap_start:
                        total += digit
                if not ok or (cap_total >= 0 and total > cap_total):
                    continue
                va = a_vals[i]
                cur = out.get(key)
                if cur is None:
                    out[key] = va * vb
                else:
                    out[key] = cur + va * vb
    finally:
        free(a_keys)

    return {k: w for k, w in out.items() if w}
