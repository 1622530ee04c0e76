"""Two-cocycles, twisted algebras and the universal cocycle σ."""

from __future__ import annotations

from .arith import ONE, ZERO, RatExpr, SparsePoly, as_ratexpr
from .errors import CocycleCheckFailed, DenominatorVanishes, NotLazy
from .hopf import (
    HopfData,
    LinMap,
    TensorElt,
    convolution,
    convolution_inverse,
    counit_map,
    t_map,
    tensor_coalgebra,
    theta,
)
from .linalg import det, nullspace, solve


class CheckResult:
    """Verdict plus the first counterexample; unpacks as ``(ok, witness)``."""

    __slots__ = ("ok", "witness")

    def __init__(self, ok, witness=None):
        self.ok = ok
        self.witness = witness

    def __bool__(self):
        return self.ok

    def __iter__(self):
        return iter((self.ok, self.witness))

    def __repr__(self):
        return f"CheckResult(ok={self.ok}, witness={self.witness})"


class Cocycle:
    """Bilinear form ``H × H → R`` stored as its matrix on the basis."""

    def __init__(self, hopf: HopfData, values):
        d = hopf.dim
        if len(values) != d or any(len(r) != d for r in values):
            raise ValueError(f"cocycle matrix must be {d}x{d}")
        self.hopf = hopf
        self.values = tuple(tuple(as_ratexpr(v) for v in r) for r in values)

    @classmethod
    def trivial(cls, hopf: HopfData) -> Cocycle:
        e = hopf.counit
        return cls(hopf, [[a * b for b in e] for a in e])

    def __call__(self, x, y):
        h = self.hopf
        return self.values[h.index(x)][h.index(y)]

    def on_vectors(self, u, v):
        s = ZERO
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            row = self.values[i]
            for j, vj in enumerate(v):
                if not vj.is_zero() and not row[j].is_zero():
                    s = s + ui * vj * row[j]
        return s

    def as_linmap(self, hh=None) -> LinMap:
        hh = hh or tensor_coalgebra(self.hopf.coalg, self.hopf.coalg)
        return LinMap(hh, [v for r in self.values for v in r])

    def __eq__(self, other):
        if not isinstance(other, Cocycle):
            return NotImplemented
        return self.values == other.values

    __hash__ = None

    def __repr__(self):
        labs = self.hopf.labels
        cells = ", ".join(
            f"({labs[i]},{labs[j]}): {v}" for i, r in enumerate(self.values) for j, v in enumerate(r) if not v.is_zero()
        )
        return f"Cocycle({{{cells}}})"


# -- checks ------------------------------------------------------------------


def check_cocycle(c: Cocycle) -> CheckResult:
    """Cocycle equation on every basis triple; witness is a label triple."""
    h = c.hopf
    d = h.dim
    a = c.values
    # α(v, k) and α(k, v) for the products appearing below
    prods = [[h.mul_basis(q, s) for s in range(d)] for q in range(d)]

    def left_lin(v, k):
        s = ZERO
        for l, vl in enumerate(v):
            if not vl.is_zero() and not a[l][k].is_zero():
                s = s + vl * a[l][k]
        return s

    def right_lin(i, v):
        s = ZERO
        for l, vl in enumerate(v):
            if not vl.is_zero() and not a[i][l].is_zero():
                s = s + vl * a[i][l]
        return s

    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = ZERO
                for p, q, c1 in h.delta[i]:
                    for r, s, c2 in h.delta[j]:
                        if a[p][r].is_zero():
                            continue
                        w = left_lin(prods[q][s], k)
                        if not w.is_zero():
                            lhs = lhs + c1 * c2 * a[p][r] * w
                rhs = ZERO
                for r, s, c1 in h.delta[j]:
                    for u, v, c2 in h.delta[k]:
                        if a[r][u].is_zero():
                            continue
                        w = right_lin(i, prods[s][v])
                        if not w.is_zero():
                            rhs = rhs + c1 * c2 * a[r][u] * w
                if lhs != rhs:
                    return CheckResult(False, (h.labels[i], h.labels[j], h.labels[k]))
    return CheckResult(True)


def check_normalized(c: Cocycle) -> CheckResult:
    """``α(x,1) = α(1,x) = ε(x)`` on the basis; witness is the failing label."""
    h = c.hopf
    unit = list(h.unit)
    for j in range(h.dim):
        e = h.counit[j]
        xj = h.coalg.basis_vec(j)
        if c.on_vectors(unit, xj) != e or c.on_vectors(xj, unit) != e:
            return CheckResult(False, h.labels[j])
    return CheckResult(True)


def almost_normalized_constant(c: Cocycle):
    """``κ`` with ``α(1,x) = α(x,1) = κ ε(x)`` for all x, or ``None``."""
    h = c.hopf
    unit = list(h.unit)
    kappa = c.on_vectors(unit, unit)
    for j in range(h.dim):
        e = h.counit[j] * kappa
        xj = h.coalg.basis_vec(j)
        if c.on_vectors(unit, xj) != e or c.on_vectors(xj, unit) != e:
            return None
    return kappa


def cocycle_inverse(c: Cocycle) -> Cocycle:
    """Convolution inverse on ``H ⊗ H``; raises NotConvolutionInvertible."""
    h = c.hopf
    hh = tensor_coalgebra(h.coalg, h.coalg)
    g = convolution_inverse(c.as_linmap(hh))
    d = h.dim
    return Cocycle(h, [[g.values[i * d + j] for j in range(d)] for i in range(d)])


def bilinear_convolution(c1: Cocycle, c2: Cocycle) -> Cocycle:
    h = c1.hopf
    hh = tensor_coalgebra(h.coalg, h.coalg)
    g = convolution(c1.as_linmap(hh), c2.as_linmap(hh))
    d = h.dim
    return Cocycle(h, [[g.values[i * d + j] for j in range(d)] for i in range(d)])


# -- twisted algebras --------------------------------------------------------


class TwistedAlgebra:
    """``H`` with product ``x·y = Σ α(x1,y1) x2y2`` over the coefficient field."""

    def __init__(self, hopf: HopfData, cocycle: Cocycle, table, unit):
        self.hopf = hopf
        self.cocycle = cocycle
        self.table = table  # table[i][j] = coordinate tuple of x_i · x_j
        self.unit = tuple(unit)

    @property
    def dim(self):
        return self.hopf.dim

    @property
    def labels(self):
        return self.hopf.labels

    def product(self, x, y) -> TensorElt:
        h = self.hopf
        return TensorElt(h.labels, self.table[h.index(x)][h.index(y)])

    def mul(self, u, v):
        d = self.dim
        out = [ZERO] * d
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for j, vj in enumerate(v):
                if vj.is_zero():
                    continue
                c = ui * vj
                for l, t in enumerate(self.table[i][j]):
                    if not t.is_zero():
                        out[l] = out[l] + c * t
        return out

    def basis_vec(self, i):
        return self.hopf.coalg.basis_vec(i)

    def unit_elt(self) -> TensorElt:
        return TensorElt(self.labels, self.unit)

    def check_associative(self) -> CheckResult:
        d = self.dim
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    left = self.mul(self.table[i][j], self.basis_vec(k))
                    right = self.mul(self.basis_vec(i), self.table[j][k])
                    if left != right:
                        return CheckResult(False, (self.labels[i], self.labels[j], self.labels[k]))
        return CheckResult(True)

    def check_unit(self) -> bool:
        u = list(self.unit)
        return all(
            self.mul(u, self.basis_vec(j)) == self.basis_vec(j) and self.mul(self.basis_vec(j), u) == self.basis_vec(j)
            for j in range(self.dim)
        )

    def check_coaction(self) -> bool:
        """``id⊗Δ`` is multiplicative on basis pairs (coaction is an algebra map)."""
        h = self.hopf
        d = h.dim
        for i in range(d):
            for j in range(d):
                lhs = h.coalg.delta_vec(self.table[i][j])
                rhs: dict = {}
                for p, q, c1 in h.delta[i]:
                    for r, s, c2 in h.delta[j]:
                        c = c1 * c2
                        for l, t in enumerate(self.table[p][r]):
                            if t.is_zero():
                                continue
                            for m, cm in h.mult[q][s]:
                                key = (l, m)
                                rhs[key] = rhs.get(key, ZERO) + c * t * cm
                keys = set(lhs) | set(rhs)
                if any(lhs.get(k, ZERO) != rhs.get(k, ZERO) for k in keys):
                    return False
        return True

    def __repr__(self):
        return f"TwistedAlgebra({self.hopf.name or ''}, dim={self.dim})"


def twisted_product_table(h: HopfData, c: Cocycle):
    d = h.dim
    a = c.values
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            out = [ZERO] * d
            for p, q, c1 in h.delta[i]:
                for r, s, c2 in h.delta[j]:
                    w = a[p][r]
                    if w.is_zero():
                        continue
                    w = w * c1 * c2
                    for l, m in h.mult[q][s]:
                        out[l] = out[l] + w * m
            row.append(tuple(out))
        table.append(tuple(row))
    return tuple(table)


def _solve_unit(h: HopfData, table):
    d = h.dim
    rows, rhs = [], []
    for j in range(d):
        for l in range(d):
            rows.append([table[i][j][l] for i in range(d)])
            rhs.append(ONE if l == j else ZERO)
            rows.append([table[j][i][l] for i in range(d)])
            rhs.append(ONE if l == j else ZERO)
    return solve(rows, rhs)


def twist(h: HopfData, c: Cocycle, check: bool = True) -> TwistedAlgebra:
    """Twisted algebra ``^α H``; raises CocycleCheckFailed on a non-cocycle."""
    if check:
        res = check_cocycle(c)
        if not res:
            raise CocycleCheckFailed(f"cocycle equation fails at {res.witness}", res.witness)
    table = twisted_product_table(h, c)
    kappa = almost_normalized_constant(c)
    if kappa is not None and not kappa.is_zero():
        unit = [u / kappa for u in h.unit]
    else:
        unit = _solve_unit(h, table)
        if unit is None:
            raise CocycleCheckFailed("twisted product has no unit")
    alg = TwistedAlgebra(h, c, table, unit)
    if check:
        res = alg.check_associative()
        if not res:
            raise CocycleCheckFailed(f"twisted product not associative at {res.witness}", res.witness)
        if not alg.check_unit():
            raise CocycleCheckFailed("computed unit is not two-sided")
    return alg


# -- universal cocycle -------------------------------------------------------


def tinv_of(h) -> LinMap:
    """Cached convolution inverse of ``t`` for a Hopf algebra or coalgebra."""
    coalg = h.coalg if isinstance(h, HopfData) else h
    cached = getattr(coalg, "_tinv_cache", None)
    if cached is None:
        cached = convolution_inverse(t_map(coalg))
        coalg._tinv_cache = cached
    return cached


def _lin(values, v):
    s = ZERO
    for vi, fi in zip(v, values):
        if not vi.is_zero() and not fi.is_zero():
            s = s + vi * fi
    return s


def twisted_by_maps(h: HopfData, alpha: Cocycle, left: LinMap, right_inv: LinMap, inverse_form=False):
    """Matrix of ``Σ f(x1)f(y1)α(x2,y2)g(x3y3)`` (or the mirrored inverse form).

    With ``inverse_form`` the entry is ``Σ f(x1y1) α(x2,y2) g(x3) g(y3)``.
    """
    d = h.dim
    d2 = [h.coalg.delta2(i) for i in range(d)]
    a = alpha.values
    f, g = left.values, right_inv.values
    prods = [[h.mul_basis(r, s) for s in range(d)] for r in range(d)]
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            s = ZERO
            for p, q, r, c1 in d2[i]:
                for p2, q2, r2, c2 in d2[j]:
                    w = a[q][q2]
                    if w.is_zero():
                        continue
                    if inverse_form:
                        x = _lin(f, prods[p][p2])
                        if x.is_zero() or g[r].is_zero() or g[r2].is_zero():
                            continue
                        s = s + c1 * c2 * x * w * g[r] * g[r2]
                    else:
                        if f[p].is_zero() or f[p2].is_zero():
                            continue
                        y = _lin(g, prods[r][r2])
                        if y.is_zero():
                            continue
                        s = s + c1 * c2 * f[p] * f[p2] * w * y
            row.append(s)
        out.append(row)
    return out


class SigmaTable:
    """Universal cocycle σ, its inverse, and the data they were built from."""

    def __init__(self, hopf, alpha, alpha_inv, sigma, sigma_inv, tinv):
        self.hopf = hopf
        self.alpha = alpha
        self.alpha_inv = alpha_inv
        self.sigma = sigma
        self.sigma_inv = sigma_inv
        self.tinv = tinv

    def entry(self, x, y, inverse=False):
        m = self.sigma_inv if inverse else self.sigma
        return m(x, y)

    def __repr__(self):
        return f"SigmaTable({self.hopf.name or ''})"


def universal_sigma(h: HopfData, alpha: Cocycle, verify: bool = True) -> SigmaTable:
    """σ and σ⁻¹ from their closed formulas, then checked against each other."""
    tv = t_map(h)
    ti = tinv_of(h)
    ainv = cocycle_inverse(alpha)
    sigma = Cocycle(h, twisted_by_maps(h, alpha, tv, ti))
    sigma_inv = Cocycle(h, twisted_by_maps(h, ainv, tv, ti, inverse_form=True))
    if verify:
        hh = tensor_coalgebra(h.coalg, h.coalg)
        eps = counit_map(hh)
        if convolution(sigma.as_linmap(hh), sigma_inv.as_linmap(hh)) != eps:
            raise ArithmeticError("σ * σ⁻¹ is not the convolution unit")
        if convolution(sigma_inv.as_linmap(hh), sigma.as_linmap(hh)) != eps:
            raise ArithmeticError("σ⁻¹ * σ is not the convolution unit")
        res = check_cocycle(sigma)
        if not res:
            raise CocycleCheckFailed(f"σ fails the cocycle equation at {res.witness}", res.witness)
    return SigmaTable(h, alpha, ainv, sigma, sigma_inv, ti)


def counit_assignment(h) -> dict:
    coalg = h.coalg if isinstance(h, HopfData) else h
    return {n: e.constant_value() for n, e in zip(coalg.t_names(), coalg.counit)}


def augment(s: SigmaTable, check: bool = True) -> Cocycle:
    """Apply ``t_x, t⁻¹_x ↦ ε(x)`` entrywise to σ."""
    h = s.hopf
    assign = counit_assignment(h)
    vals = [[v.subs(assign) for v in row] for row in s.sigma.values]
    out = Cocycle(h, vals)
    if check:
        inv = Cocycle(h, [[v.subs(assign) for v in row] for row in s.sigma_inv.values])
        ainv = s.alpha_inv if s.alpha_inv is not None else cocycle_inverse(s.alpha)
        if inv != ainv:
            raise ArithmeticError("ε(σ⁻¹) differs from α⁻¹")
    return out


def phi(e: TensorElt, h: HopfData, direction: str = "forward") -> TensorElt:
    """``b⊗x ↦ Σ b t_{x1} ⊗ x2`` (forward) or with ``t⁻¹`` (inverse)."""
    if direction not in ("forward", "inverse"):
        raise ValueError("direction must be 'forward' or 'inverse'")
    f = t_map(h).values if direction == "forward" else tinv_of(h).values
    out = [ZERO] * h.dim
    for i, b in enumerate(e.coords):
        if b.is_zero():
            continue
        for p, q, c in h.delta[i]:
            if not f[p].is_zero():
                out[q] = out[q] + b * f[p] * c
    return TensorElt(h.labels, out)


def specialize(s: SigmaTable, assign: dict, check: bool = True) -> TwistedAlgebra:
    """Twisted algebra for ``β = σ`` evaluated at ``assign``.

    Raises DenominatorVanishes naming the first entry whose denominator dies.
    """
    h = s.hopf
    labs = h.labels

    def sub(m, tag):
        out = []
        for i, row in enumerate(m.values):
            r = []
            for j, v in enumerate(row):
                try:
                    r.append(v.subs(assign))
                except DenominatorVanishes as exc:
                    name = f"{tag}({labs[i]},{labs[j]})"
                    raise DenominatorVanishes(f"denominator of {name} = {v} vanishes", entry=name) from exc
            out.append(r)
        return Cocycle(h, out)

    beta = sub(s.sigma, "sigma")
    beta_inv = sub(s.sigma_inv, "sigmaInv")
    if check:
        hh = tensor_coalgebra(h.coalg, h.coalg)
        if convolution(beta.as_linmap(hh), beta_inv.as_linmap(hh)) != counit_map(hh):
            raise ArithmeticError("specialized σ is not convolution invertible")
    return twist(h, beta, check=check)


# -- lazy transport ----------------------------------------------------------


def laziness_witness(lam: LinMap, h: HopfData):
    for i in range(h.dim):
        left = [ZERO] * h.dim
        right = [ZERO] * h.dim
        for p, q, c in h.delta[i]:
            left[q] = left[q] + c * lam.values[p]
            right[p] = right[p] + c * lam.values[q]
        if left != right:
            return h.labels[i]
    return None


def lazy_transport(alpha: Cocycle, lam: LinMap) -> Cocycle:
    """``β(x,y) = Σ λ(x1)λ(y1)α(x2,y2)λ⁻¹(x3y3)`` for a lazy invertible λ."""
    h = alpha.hopf
    w = laziness_witness(lam, h)
    if w is not None:
        raise NotLazy(f"linear form is not lazy at basis {w}", witness=w)
    lam_inv = convolution_inverse(lam)
    beta = Cocycle(h, twisted_by_maps(h, alpha, lam, lam_inv))
    res = check_cocycle(beta)
    if not res:
        raise CocycleCheckFailed(f"transported form fails the cocycle equation at {res.witness}", res.witness)
    return beta


# -- center and trace form ---------------------------------------------------


def center(a: TwistedAlgebra):
    """Basis (coordinate vectors) of the center of a twisted algebra."""
    d = a.dim
    rows = []
    for j in range(d):
        for l in range(d):
            row = [a.table[i][j][l] - a.table[j][i][l] for i in range(d)]
            if any(not v.is_zero() for v in row):
                rows.append(row)
    if not rows:
        return [a.basis_vec(i) for i in range(d)]
    return nullspace(rows, d)


def trace_functional(a: TwistedAlgebra):
    """``τ_l = Tr R_{x_l}`` where ``R_w : v ↦ v·w``."""
    d = a.dim
    return [sum((a.table[k][l][k] for k in range(d)), ZERO) for l in range(d)]


def trace_gram(a: TwistedAlgebra):
    tau = trace_functional(a)
    d = a.dim
    return [[_lin(tau, a.table[i][j]) for j in range(d)] for i in range(d)]


def trace_gram_det(a: TwistedAlgebra) -> RatExpr:
    return det(trace_gram(a))


# -- localization and the group case ---------------------------------------


def in_theta_localization(r: RatExpr, theta_poly: SparsePoly) -> bool:
    """True iff the denominator divides a t-monomial times a power of Θ."""
    den = r.den
    core = den.div_mono(den.monomial_content())
    if core.is_constant():
        return True
    power = SparsePoly.const(1)
    for _ in range(core.degree() + 1):
        power = power * theta_poly
        if power.try_divide(core) is not None:
            return True
    return False


def sigma_in_localization(s: SigmaTable) -> bool:
    th = theta(s.hopf, full=True)
    return all(in_theta_localization(v, th) for m in (s.sigma, s.sigma_inv) for row in m.values for v in row)


def group_integrality_witness(s: SigmaTable, g, order: int):
    """Express ``t_g^n`` through σ-values for ``g`` of order ``n`` in a group algebra.

    Returns ``(product, factors)`` with ``product = σ(e,e)·Π σ(g,g^k)/α(g,g^k)``
    where ``g^k`` runs over ``k = 1..n-1``; the caller compares with ``t_g^n``.
    """
    h = s.hopf
    gi = h.index(g)
    e = h.unit_index()
    factors = [("sigma", h.labels[e], h.labels[e])]
    prod = s.sigma.values[e][e]
    power = gi
    for _ in range(1, order):
        prod = prod * s.sigma.values[gi][power] / s.alpha.values[gi][power]
        factors.append(("sigma/alpha", h.labels[gi], h.labels[power]))
        nxt = [i for i, c in h.mult[gi][power]]
        power = nxt[0]
    return prod, factors
