"""Pure-Python hot kernels.

Monomials are flat tuples ``(id0, e0, id1, e1, ...)`` with strictly
increasing variable ids and positive exponents.  Polynomials are plain dicts
mapping monomials to exact coefficients (``int`` or ``Fraction``).

The compiled module ``_kernels`` exposes exactly the same functions.
"""

from math import gcd

BACKEND = "python"


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        va, vb = a[i], b[j]
        if va == vb:
            out.append(va)
            out.append(a[i + 1] + b[j + 1])
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
    if i < na:
        out.extend(a[i:])
    if j < nb:
        out.extend(b[j:])
    return tuple(out)


def mono_div(a, b):
    """Return ``a / b`` or ``None`` when ``b`` does not divide ``a``."""
    if not b:
        return a
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while j < nb:
        if i >= na:
            return None
        va, vb = a[i], b[j]
        if va == vb:
            e = a[i + 1] - b[j + 1]
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
    if i < na:
        out.extend(a[i:])
    return tuple(out)


def poly_mul(p, q):
    if len(p) > len(q):
        p, q = q, p
    out = {}
    get = out.get
    for ma, ca in p.items():
        for mb, cb in q.items():
            m = mono_mul(ma, mb)
            out[m] = get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c != 0}


def _primitive(row):
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def echelon(rows, ncols):
    """Fraction-free Gauss-Jordan elimination of an integer matrix.

    Returns ``(reduced, pivots)`` where ``reduced`` holds the nonzero rows of
    the reduced echelon form (each row primitive with a positive pivot, all
    other rows vanishing in pivot columns) and ``pivots`` their pivot columns.
    """
    work = [_primitive(list(r)) for r in rows if any(r)]
    pivots = []
    rank = 0
    for col in range(ncols):
        best = -1
        best_abs = 0
        for r in range(rank, len(work)):
            v = work[r][col]
            if v and (best < 0 or abs(v) < best_abs):
                best = r
                best_abs = abs(v)
                if best_abs == 1:
                    break
        if best < 0:
            continue
        work[rank], work[best] = work[best], work[rank]
        prow = work[rank]
        if prow[col] < 0:
            prow = [-v for v in prow]
            work[rank] = prow
        pv = prow[col]
        for r in range(len(work)):
            if r == rank:
                continue
            row = work[r]
            e = row[col]
            if not e:
                continue
            g = gcd(pv, e)
            f1, f2 = pv // g, e // g
            work[r] = _primitive([f1 * x - f2 * y for x, y in zip(row, prow)])
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return work[:rank], pivots
