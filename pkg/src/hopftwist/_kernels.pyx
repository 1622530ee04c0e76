# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; same surface as ``_kernels_py``."""

from math import gcd

BACKEND = "cython"


cdef tuple _mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef long va, vb
    cdef list out
    if na == 0:
        return b
    if nb == 0:
        return a
    out = []
    while i < na and j < nb:
        va = a[i]
        vb = b[j]
        if va == vb:
            out.append(va)
            out.append(<long>a[i + 1] + <long>b[j + 1])
            i += 2
            j += 2
        elif va < vb:
            out.append(va)
            out.append(a[i + 1])
            i += 2
        else:
            out.append(vb)
            out.append(b[j + 1])
            j += 2
    while i < na:
        out.append(a[i])
        i += 1
    while j < nb:
        out.append(b[j])
        j += 1
    return tuple(out)


def mono_mul(tuple a, tuple b):
    return _mono_mul(a, b)


def mono_div(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef long va, vb, e
    cdef list out
    if nb == 0:
        return a
    out = []
    while j < nb:
        if i >= na:
            return None
        va = a[i]
        vb = b[j]
        if va == vb:
            e = <long>a[i + 1] - <long>b[j + 1]
            if e < 0:
                return None
            if e:
                out.append(va)
                out.append(e)
            i += 2
            j += 2
        elif va < vb:
            out.append(va)
            out.append(a[i + 1])
            i += 2
        else:
            return None
    while i < na:
        out.append(a[i])
        i += 1
    return tuple(out)


def poly_mul(dict p, dict q):
    cdef dict out = {}
    cdef tuple ma, mb, m
    cdef object ca, cb, prev
    if len(p) > len(q):
        p, q = q, p
    for ma, ca in p.items():
        for mb, cb in q.items():
            m = _mono_mul(ma, mb)
            prev = out.get(m)
            if prev is None:
                out[m] = ca * cb
            else:
                out[m] = prev + ca * cb
    return {m: ca for m, ca in out.items() if ca != 0}


cdef list _primitive(list row):
    cdef object g = 0
    cdef object v
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def echelon(rows, Py_ssize_t ncols):
    cdef list work = [_primitive(list(src)) for src in rows if any(src)]
    cdef list pivots = []
    cdef Py_ssize_t rank = 0, col, r, best, nrows = len(work), k
    cdef list prow, row
    cdef object v, best_abs, pv, e, g, f1, f2
    for col in range(ncols):
        best = -1
        best_abs = 0
        for r in range(rank, nrows):
            v = (<list>work[r])[col]
            if v and (best < 0 or abs(v) < best_abs):
                best = r
                best_abs = abs(v)
                if best_abs == 1:
                    break
        if best < 0:
            continue
        work[rank], work[best] = work[best], work[rank]
        prow = <list>work[rank]
        if prow[col] < 0:
            prow = [-v for v in prow]
            work[rank] = prow
        pv = prow[col]
        for r in range(nrows):
            if r == rank:
                continue
            row = <list>work[r]
            e = row[col]
            if not e:
                continue
            g = gcd(pv, e)
            f1 = pv // g
            f2 = e // g
            work[r] = _primitive([f1 * row[k] - f2 * prow[k] for k in range(ncols)])
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return work[:rank], pivots
