"""Exact linear algebra over Q and over the rational-function field."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .arith import ONE, ZERO, RatExpr, SparsePoly, as_ratexpr
from .kernels import echelon


def _all_constant(rows) -> bool:
    for r in rows:
        for v in r:
            if isinstance(v, RatExpr):
                if not v.is_constant():
                    return False
            elif isinstance(v, SparsePoly):
                if not v.is_constant():
                    return False
    return True


def _const(v) -> Fraction:
    if isinstance(v, RatExpr):
        return v.constant_value()
    if isinstance(v, SparsePoly):
        return v.constant_value()
    return Fraction(v)


def integer_rows(rows):
    """Scale each constant row to a primitive-ish integer row."""
    out = []
    for r in rows:
        fr = [_const(v) for v in r]
        m = lcm(*(f.denominator for f in fr)) if fr else 1
        out.append([int(f * m) for f in fr])
    return out


def _cost(v: RatExpr):
    return (len(v.num) + len(v.den), v.num.degree() + v.den.degree())


def rref(rows, ncols):
    """Reduced row echelon form over the fraction field.

    Returns ``(rows, pivots)``; every returned row has a 1 in its pivot column
    and zeros in the other pivot columns.  Pivots are chosen as the cheapest
    nonzero entry (fewest terms, then lowest degree) for determinism.
    """
    if _all_constant(rows):
        red, piv = echelon(integer_rows(rows), ncols)
        out = []
        for r, c in zip(red, piv):
            p = r[c]
            out.append([RatExpr(SparsePoly.const(Fraction(v, p))) for v in r])
        return out, piv
    work = [[as_ratexpr(v) for v in r] for r in rows]
    work = [r for r in work if any(not v.is_zero() for v in r)]
    pivots = []
    rank = 0
    for col in range(ncols):
        best = None
        for i in range(rank, len(work)):
            v = work[i][col]
            if not v.is_zero():
                key = _cost(v)
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            continue
        i = best[1]
        work[rank], work[i] = work[i], work[rank]
        prow = work[rank]
        inv = prow[col].inverse()
        prow = [v * inv if not v.is_zero() else v for v in prow]
        prow[col] = ONE
        work[rank] = prow
        for j in range(len(work)):
            if j == rank:
                continue
            e = work[j][col]
            if e.is_zero():
                continue
            row = work[j]
            work[j] = [x - e * y if not y.is_zero() else x for x, y in zip(row, prow)]
            work[j][col] = ZERO
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return work[:rank], pivots


def nullspace(rows, ncols):
    """Basis of ``{v : rows·v = 0}``; one vector per free column (free entry 1)."""
    red, pivots = rref(rows, ncols)
    pset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for r, c in zip(red, pivots):
            if not r[f].is_zero():
                v[c] = -r[f]
        basis.append(v)
    return basis


def rank(rows, ncols) -> int:
    return len(rref(rows, ncols)[1])


def solve(a, b):
    """Solve ``a·x = b``; returns one solution (free unknowns 0) or ``None``."""
    n = len(a[0]) if a else 0
    aug = [list(r) + [bv] for r, bv in zip(a, b)]
    red, pivots = rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [ZERO] * n
    for r, c in zip(red, pivots):
        x[c] = r[n]
    return x


def bareiss(mat) -> SparsePoly:
    """Determinant of a square matrix of polynomials, fraction-free."""
    n = len(mat)
    if n == 0:
        return SparsePoly.const(1)
    m = [[v if isinstance(v, SparsePoly) else SparsePoly.const(v) for v in r] for r in mat]
    sign = 1
    prev = SparsePoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return SparsePoly()
        pk = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = m[i][j] * pk - m[i][k] * m[k][j]
                m[i][j] = v.divexact(prev) if not prev.is_constant() else v.scale(1 / prev.constant_value())
            m[i][k] = SparsePoly()
        prev = pk
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def det(mat) -> RatExpr:
    """Determinant over the fraction field (row denominators cleared first)."""
    if _all_constant(mat):
        return RatExpr(SparsePoly.const(_fraction_det([[_const(v) for v in r] for r in mat])))
    scale = ONE
    polys = []
    for r in mat:
        r = [as_ratexpr(v) for v in r]
        den = SparsePoly.const(1)
        for v in r:
            if not v.den.is_constant() and (den.try_divide(v.den) is None):
                den = den * v.den
        polys.append([(v * RatExpr(den)).as_poly() for v in r])
        scale = scale * RatExpr(den)
    return RatExpr(bareiss(polys)) / scale


def _fraction_det(m) -> Fraction:
    n = len(m)
    m = [list(r) for r in m]
    d = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            m[k], m[p] = m[p], m[k]
            d = -d
        d *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return d
