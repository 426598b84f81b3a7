# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``.

Same data layout and semantics; see that module's docstring.  Coefficients
stay Python objects (exact Fractions or int residues), the win comes from
typed loops, C-level dict access and a C fast path for the modular
coefficient arithmetic.  Keep in lockstep with ``_kernels_py``.
"""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem, PyDict_DelItem
from cpython.object cimport PyObject
from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_GET_SIZE, PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF

from itertools import product as _product
from math import comb as _comb

KERNEL_BACKEND = "cython"


cdef inline object _coeff_add(object a, object b, long long p):
    if p:
        return (<long long> a + <long long> b) % p
    return a + b


cdef inline object _coeff_mul(object a, object b, long long p):
    if p:
        return (<long long> a * <long long> b) % p
    return a * b


cdef inline tuple _tuple_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = (<object> PyTuple_GET_ITEM(a, i)) + (<object> PyTuple_GET_ITEM(b, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline tuple _tuple_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = (<object> PyTuple_GET_ITEM(a, i)) - (<object> PyTuple_GET_ITEM(b, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline void _accumulate(dict out, tuple exp, object c, long long p):
    cdef PyObject *slot = PyDict_GetItem(out, exp)
    cdef object acc
    if slot == NULL:
        PyDict_SetItem(out, exp, c)
        return
    acc = _coeff_add(<object> slot, c, p)
    if acc:
        PyDict_SetItem(out, exp, acc)
    else:
        PyDict_DelItem(out, exp)


def poly_add(dict a, dict b, long long p):
    cdef dict out = dict(a)
    cdef tuple exp
    cdef object c
    for exp, c in b.items():
        _accumulate(out, exp, c, p)
    return out


def poly_neg(dict a, long long p):
    cdef dict out = {}
    cdef tuple exp
    cdef object c
    for exp, c in a.items():
        if p:
            out[exp] = (p - <long long> c) % p
        else:
            out[exp] = -c
    return out


def poly_scale(dict a, object c, long long p):
    cdef dict out = {}
    cdef tuple exp
    cdef object v
    if p:
        c = c % p
    if not c:
        return out
    for exp, v in a.items():
        v = _coeff_mul(v, c, p)
        if v:
            out[exp] = v
    return out


def poly_mul(dict a, dict b, long long p):
    cdef dict out = {}
    cdef tuple ea, eb
    cdef object ca, cb, c
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            c = _coeff_mul(ca, cb, p)
            if not c:
                continue
            _accumulate(out, _tuple_add(ea, eb), c, p)
    return out


def binom_product(tuple beta, tuple alpha):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(beta)
    cdef long b, a
    out = 1
    for i in range(n):
        b = <object> PyTuple_GET_ITEM(beta, i)
        a = <object> PyTuple_GET_ITEM(alpha, i)
        if a > b:
            return 0
        out *= _comb(b, a)
    return out


def partial_apply(tuple gamma, dict f, long long p):
    cdef dict out = {}
    cdef tuple beta
    cdef object c, co
    for beta, c in f.items():
        co = binom_product(beta, gamma)
        if p:
            co = co % p
        if not co:
            continue
        c = _coeff_mul(c, co, p)
        if not c:
            continue
        _accumulate(out, _tuple_sub(beta, gamma), c, p)
    return out


def diffop_apply(dict xi, dict f, long long p):
    cdef dict out = {}
    cdef tuple alpha
    cdef dict coeff, df
    for alpha, coeff in xi.items():
        df = partial_apply(alpha, f, p)
        if not df:
            continue
        out = poly_add(out, poly_mul(coeff, df, p), p)
    return out


def diffop_mul(dict xi, dict eta, long long p):
    cdef dict out = {}
    cdef dict f, g, dg, contrib
    cdef tuple alpha, beta, gamma, delta, target
    cdef object factor
    cdef PyObject *slot
    for alpha, f in xi.items():
        for beta, g in eta.items():
            for gamma in _product(*(range(a + 1) for a in alpha)):
                dg = partial_apply(gamma, g, p)
                if not dg:
                    continue
                delta = _tuple_sub(alpha, gamma)
                target = _tuple_add(delta, beta)
                factor = binom_product(target, delta)
                if p:
                    factor = factor % p
                if not factor:
                    continue
                contrib = poly_mul(f, dg, p)
                if factor != 1:
                    contrib = poly_scale(contrib, factor, p)
                if not contrib:
                    continue
                slot = PyDict_GetItem(out, target)
                if slot == NULL:
                    PyDict_SetItem(out, target, contrib)
                else:
                    PyDict_SetItem(out, target, poly_add(<object> slot, contrib, p))
    return {exp: coeff for exp, coeff in out.items() if coeff}
