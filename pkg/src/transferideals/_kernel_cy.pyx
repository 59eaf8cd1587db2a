# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython kernel: same API as ``_kernel_py`` for the hot term operations."""

KERNEL_NAME = "cython"


def exp_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long> a[i] + <long> b[i]
    return tuple(out)


def exp_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long> a[i] - <long> b[i]
    return tuple(out)


def exp_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long> a[i] > <long> b[i]:
            return False
    return True


def exp_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    cdef list out = [0] * n
    for i in range(n):
        x = <long> a[i]
        y = <long> b[i]
        out[i] = x if x > y else y
    return tuple(out)


def exp_deg(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef long s = 0
    for i in range(n):
        s += <long> a[i]
    return s


def grevlex_key(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef long s = 0
    cdef list rev = [0] * n
    for i in range(n):
        s += <long> a[i]
        rev[n - 1 - i] = -<long> a[i]
    return (s, tuple(rev))


def addmul_terms(dict f, g_items, tuple m, c, long modulus):
    cdef Py_ssize_t i, n = len(m)
    cdef tuple mg, key
    cdef list buf
    cdef long vi
    if modulus:
        ci = <long> c
        for mg, cg in g_items:
            buf = [0] * n
            for i in range(n):
                buf[i] = <long> m[i] + <long> mg[i]
            key = tuple(buf)
            vi = (<long> f.get(key, 0) + ci * <long> cg) % modulus
            if vi:
                f[key] = vi
            else:
                f.pop(key, None)
    else:
        for mg, cg in g_items:
            buf = [0] * n
            for i in range(n):
                buf[i] = <long> m[i] + <long> mg[i]
            key = tuple(buf)
            v = f.get(key)
            v = c * cg if v is None else v + c * cg
            if v:
                f[key] = v
            else:
                f.pop(key, None)
