"""Coalgebras and Hopf algebras given by structure constants.

A basis element is addressed by its index; ``delta[i]`` lists the triples
``(p, q, c)`` with ``Δ(x_i) = Σ c x_p ⊗ x_q`` and ``mult[p][q]`` lists the
pairs ``(i, c)`` with ``x_p x_q = Σ c x_i``.  All coefficients are stored as
``RatExpr`` so parameters such as ``a, b, c`` flow through unchanged.
"""

from __future__ import annotations

import random
from collections import defaultdict

from .arith import ONE, ZERO, RatExpr, SparsePoly, as_ratexpr, register_variables, var_id
from .errors import InvalidHopfData, NotConvolutionInvertible
from .linalg import bareiss, nullspace, rref


def t_name(label: str) -> str:
    return f"t_{label}"


def _acc(d: dict, key, val):
    s = d.get(key)
    s = val if s is None else s + val
    if s.is_zero():
        d.pop(key, None)
    else:
        d[key] = s


class CoalgebraData:
    """Finite-dimensional coalgebra; dimension 0 is rejected.

    ``delta`` is either a list of ``(i, p, q, coeff)`` quadruples or a mapping
    ``i -> [(p, q, coeff), ...]``.  The axiom report is computed eagerly.
    """

    def __init__(self, labels, delta, counit, name=None, params=(), register=True):
        labels = tuple(str(x) for x in labels)
        if not labels:
            raise InvalidHopfData("dimension 0 is not allowed")
        if len(set(labels)) != len(labels):
            raise InvalidHopfData("basis labels must be distinct")
        self.labels = labels
        self.dim = len(labels)
        self.name = name
        self.params = tuple(params)
        if register:
            register_variables(t_name(x) for x in labels)
            register_variables(self.params)
        rows = defaultdict(dict)
        items = delta.items() if isinstance(delta, dict) else None
        if items is None:
            for i, p, q, cf in delta:
                _acc(rows[i], (p, q), as_ratexpr(cf))
        else:
            for i, terms in items:
                for p, q, cf in terms:
                    _acc(rows[i], (p, q), as_ratexpr(cf))
        for i in rows:
            if not 0 <= i < self.dim:
                raise InvalidHopfData(f"delta index {i} out of range")
        self.delta = tuple(tuple((p, q, c) for (p, q), c in sorted(rows[i].items())) for i in range(self.dim))
        if len(counit) != self.dim:
            raise InvalidHopfData("counit has the wrong length")
        self.counit = tuple(as_ratexpr(v) for v in counit)
        self.report = self._coalgebra_report()

    # -- helpers
    def index(self, label) -> int:
        if isinstance(label, int):
            return label
        return self.labels.index(str(label))

    def t_names(self):
        return [t_name(x) for x in self.labels]

    def t_vars(self):
        return [RatExpr(SparsePoly.var(n)) for n in self.t_names()]

    def delta_vec(self, v) -> dict:
        """Δ of a coordinate vector, as ``{(p, q): coeff}``."""
        out: dict = {}
        for i, vi in enumerate(v):
            if vi.is_zero():
                continue
            for p, q, c in self.delta[i]:
                _acc(out, (p, q), vi * c)
        return out

    def delta2(self, i) -> list:
        """Iterated coproduct ``(Δ⊗id)Δ(x_i)`` as ``[(p, q, r, coeff)]``."""
        out: dict = {}
        for p, r, c in self.delta[i]:
            for a, b, c2 in self.delta[p]:
                _acc(out, (a, b, r), c * c2)
        return [(a, b, r, c) for (a, b, r), c in sorted(out.items())]

    def basis_vec(self, i):
        v = [ZERO] * self.dim
        v[i] = ONE
        return v

    def _coalgebra_report(self):
        rep = []
        for i in range(self.dim):
            left: dict = {}
            for p, r, c in self.delta[i]:
                for a, b, c2 in self.delta[p]:
                    _acc(left, (a, b, r), c * c2)
            right: dict = {}
            for a, p, c in self.delta[i]:
                for b, r, c2 in self.delta[p]:
                    _acc(right, (a, b, r), c * c2)
            if not _dict_eq(left, right):
                rep.append(("coassociativity", i))
            lc: dict = {}
            rc: dict = {}
            for p, q, c in self.delta[i]:
                if not self.counit[p].is_zero():
                    _acc(lc, q, self.counit[p] * c)
                if not self.counit[q].is_zero():
                    _acc(rc, p, self.counit[q] * c)
            if not _dict_eq(lc, {i: ONE}) or not _dict_eq(rc, {i: ONE}):
                rep.append(("counit", i))
        return rep

    def is_valid(self) -> bool:
        return not self.report

    def require_valid(self):
        if self.report:
            raise InvalidHopfData(format_report(self, self.report), self.report)
        return self

    def __repr__(self):
        return f"CoalgebraData({self.name or ''!s}, dim={self.dim})"


def _dict_eq(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all(a.get(k, ZERO) == b.get(k, ZERO) for k in keys)


def format_report(c, report) -> str:
    if not report:
        return "valid"
    return "; ".join(f"{ax} violated at basis {c.labels[i]}" for ax, i in report)


class HopfData:
    """Hopf algebra: a coalgebra together with product, unit and antipode.

    ``mult`` is a list of ``(p, q, i, coeff)`` or a mapping ``(p, q) -> [(i, coeff)]``;
    ``antipode[j]`` is the coordinate vector of ``S(x_j)``.
    """

    def __init__(self, coalg: CoalgebraData, mult, unit, antipode, name=None):
        self.coalg = coalg
        d = coalg.dim
        self.name = name or coalg.name
        table = [[{} for _ in range(d)] for _ in range(d)]
        if isinstance(mult, dict):
            for (p, q), terms in mult.items():
                for i, cf in terms:
                    _acc(table[p][q], i, as_ratexpr(cf))
        else:
            for p, q, i, cf in mult:
                _acc(table[p][q], i, as_ratexpr(cf))
        self.mult = tuple(tuple(tuple(sorted(cell.items())) for cell in row) for row in table)
        if len(unit) != d or len(antipode) != d or any(len(r) != d for r in antipode):
            raise InvalidHopfData("unit or antipode has the wrong shape")
        self.unit = tuple(as_ratexpr(v) for v in unit)
        self.antipode = tuple(tuple(as_ratexpr(v) for v in r) for r in antipode)
        self.report = list(coalg.report) + self._hopf_report()

    # coalgebra passthrough
    @property
    def dim(self):
        return self.coalg.dim

    @property
    def labels(self):
        return self.coalg.labels

    @property
    def delta(self):
        return self.coalg.delta

    @property
    def counit(self):
        return self.coalg.counit

    @property
    def params(self):
        return self.coalg.params

    def index(self, label):
        return self.coalg.index(label)

    def unit_index(self):
        """Index of the basis element equal to the unit, or ``None``."""
        nz = [i for i, v in enumerate(self.unit) if not v.is_zero()]
        if len(nz) == 1 and self.unit[nz[0]] == ONE:
            return nz[0]
        return None

    # algebra on coordinate vectors
    def mul(self, u, v):
        out = [ZERO] * self.dim
        for p, up in enumerate(u):
            if up.is_zero():
                continue
            for q, vq in enumerate(v):
                if vq.is_zero():
                    continue
                c0 = up * vq
                for i, c in self.mult[p][q]:
                    out[i] = out[i] + c0 * c
        return out

    def mul_basis(self, p, q):
        out = [ZERO] * self.dim
        for i, c in self.mult[p][q]:
            out[i] = c
        return out

    def mul_word(self, word):
        v = list(self.unit)
        for j in word:
            v = self.mul(v, self.coalg.basis_vec(j))
        return v

    def apply_antipode(self, v):
        out = [ZERO] * self.dim
        for j, vj in enumerate(v):
            if vj.is_zero():
                continue
            for i, c in enumerate(self.antipode[j]):
                if not c.is_zero():
                    out[i] = out[i] + vj * c
        return out

    def counit_of(self, v):
        s = ZERO
        for vi, e in zip(v, self.counit):
            if not vi.is_zero() and not e.is_zero():
                s = s + vi * e
        return s

    def _hopf_report(self):
        d = self.dim
        rep = []
        E = self.coalg.basis_vec
        prods = [[self.mul_basis(p, q) for q in range(d)] for p in range(d)]
        for p in range(d):
            for q in range(d):
                for r in range(d):
                    left = self.mul(prods[p][q], E(r))
                    right = self.mul(E(p), prods[q][r])
                    if left != right:
                        rep.append(("associativity", p))
                        break
                else:
                    continue
                break
        for j in range(d):
            if self.mul(list(self.unit), E(j)) != E(j) or self.mul(E(j), list(self.unit)) != E(j):
                rep.append(("unit", j))
        # Δ and ε are algebra morphisms
        if not _dict_eq(self.coalg.delta_vec(self.unit), _tensor_of(self.unit, self.unit)):
            rep.append(("coproduct of unit", self.unit_index() or 0))
        if self.counit_of(self.unit) != ONE:
            rep.append(("counit of unit", self.unit_index() or 0))
        for p in range(d):
            for q in range(d):
                lhs = self.coalg.delta_vec(prods[p][q])
                rhs: dict = {}
                for a, b, c in self.delta[p]:
                    for a2, b2, c2 in self.delta[q]:
                        c0 = c * c2
                        for i, m1 in self.mult[a][a2]:
                            for j, m2 in self.mult[b][b2]:
                                _acc(rhs, (i, j), c0 * m1 * m2)
                if not _dict_eq(lhs, rhs):
                    rep.append(("coproduct multiplicativity", p))
                if self.counit_of(prods[p][q]) != self.counit[p] * self.counit[q]:
                    rep.append(("counit multiplicativity", p))
        # antipode axiom
        for i in range(d):
            left = [ZERO] * d
            right = [ZERO] * d
            for p, q, c in self.delta[i]:
                sp = self.apply_antipode(E(p))
                sq = self.apply_antipode(E(q))
                left = _vadd(left, _vscale(self.mul(sp, E(q)), c))
                right = _vadd(right, _vscale(self.mul(E(p), sq), c))
            target = _vscale(list(self.unit), self.counit[i])
            if left != target or right != target:
                rep.append(("antipode", i))
        return _dedupe(rep)

    def is_valid(self):
        return not self.report

    def require_valid(self):
        if self.report:
            raise InvalidHopfData(format_report(self.coalg, self.report), self.report)
        return self

    def __repr__(self):
        return f"HopfData({self.name or ''!s}, dim={self.dim})"


def _dedupe(rep):
    seen = set()
    out = []
    for r in rep:
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out


def _tensor_of(u, v) -> dict:
    out = {}
    for p, a in enumerate(u):
        if a.is_zero():
            continue
        for q, b in enumerate(v):
            if not b.is_zero():
                out[(p, q)] = a * b
    return out


def _vadd(u, v):
    return [a + b for a, b in zip(u, v)]


def _vscale(u, c):
    return [a * c for a in u]


def validate_hopf(h: HopfData):
    """List of violated axioms as ``{"axiom", "basis"}`` records; empty if valid."""
    return [{"axiom": ax, "basis": h.labels[i]} for ax, i in h.report]


# -- tensor coalgebra --------------------------------------------------------


def tensor_coalgebra(c1: CoalgebraData, c2: CoalgebraData) -> CoalgebraData:
    """``C1 ⊗ C2`` with basis index ``p*d2 + q`` and labels ``"<p>_<q>"``."""
    d2 = c2.dim
    labels = [f"{a}_{b}" for a in c1.labels for b in c2.labels]
    quads = []
    for i in range(c1.dim):
        for j in range(d2):
            for p, q, c in c1.delta[i]:
                for r, s, cc in c2.delta[j]:
                    quads.append((i * d2 + j, p * d2 + r, q * d2 + s, c * cc))
    counit = [a * b for a in c1.counit for b in c2.counit]
    params = tuple(dict.fromkeys(c1.params + c2.params))
    name = f"{c1.name or 'C'}⊗{c2.name or 'C'}"
    return CoalgebraData(labels, quads, counit, name=name, params=params, register=False)


# -- linear maps and tensor elements -----------------------------------------


class LinMap:
    """Linear map out of a coalgebra, given by its values on the basis."""

    __slots__ = ("domain", "values")

    def __init__(self, domain, values):
        coalg = domain.coalg if isinstance(domain, HopfData) else domain
        if len(values) != coalg.dim:
            raise ValueError("LinMap needs one value per basis element")
        self.domain = coalg
        self.values = tuple(as_ratexpr(v) for v in values)

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.values == other.values

    __hash__ = None

    def __mul__(self, other):
        return convolution(self, other)

    def as_dict(self):
        return {lab: v for lab, v in zip(self.domain.labels, self.values)}

    def __repr__(self):
        inner = ", ".join(f"{lab}: {v}" for lab, v in zip(self.domain.labels, self.values))
        return f"LinMap({{{inner}}})"


def counit_map(c) -> LinMap:
    coalg = c.coalg if isinstance(c, HopfData) else c
    return LinMap(coalg, coalg.counit)


def t_map(c) -> LinMap:
    coalg = c.coalg if isinstance(c, HopfData) else c
    return LinMap(coalg, coalg.t_vars())


class TensorElt:
    """``Σ coords[i] ⊗ x_i`` with coefficients in the fraction field."""

    __slots__ = ("labels", "coords", "ring")

    def __init__(self, labels, coords, ring="K"):
        self.labels = tuple(labels)
        self.coords = tuple(as_ratexpr(v) for v in coords)
        self.ring = ring
        if len(self.coords) != len(self.labels):
            raise ValueError("TensorElt needs one coordinate per basis element")

    @classmethod
    def zero(cls, labels, ring="K"):
        return cls(labels, [ZERO] * len(labels), ring)

    @classmethod
    def basis(cls, labels, i, coeff=ONE, ring="K"):
        v = [ZERO] * len(labels)
        v[i] = as_ratexpr(coeff)
        return cls(labels, v, ring)

    def __add__(self, other):
        return TensorElt(self.labels, [a + b for a, b in zip(self.coords, other.coords)], self.ring)

    def __sub__(self, other):
        return TensorElt(self.labels, [a - b for a, b in zip(self.coords, other.coords)], self.ring)

    def __neg__(self):
        return TensorElt(self.labels, [-a for a in self.coords], self.ring)

    def scale(self, c):
        c = as_ratexpr(c)
        return TensorElt(self.labels, [a * c for a in self.coords], self.ring)

    def is_zero(self):
        return all(a.is_zero() for a in self.coords)

    def __eq__(self, other):
        if not isinstance(other, TensorElt):
            return NotImplemented
        return len(self.coords) == len(other.coords) and all(a == b for a, b in zip(self.coords, other.coords))

    __hash__ = None

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        parts = [f"({c}) ⊗ {lab}" for c, lab in zip(self.coords, self.labels) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TensorElt({self})"


# -- convolution -------------------------------------------------------------


def convolution(f: LinMap, g: LinMap) -> LinMap:
    c = f.domain
    if g.domain is not c and g.domain.labels != c.labels:
        raise ValueError("convolution of maps on different coalgebras")
    vals = []
    for i in range(c.dim):
        s = ZERO
        for p, q, cf in c.delta[i]:
            fp, gq = f.values[p], g.values[q]
            if fp.is_zero() or gq.is_zero():
                continue
            s = s + cf * fp * gq
        vals.append(s)
    return LinMap(c, vals)


def convolution_matrix(f: LinMap):
    """``M[i][q] = Σ_p c_i^{p,q} f(x_p)``."""
    c = f.domain
    m = [[ZERO] * c.dim for _ in range(c.dim)]
    for i in range(c.dim):
        for p, q, cf in c.delta[i]:
            if not f.values[p].is_zero():
                m[i][q] = m[i][q] + cf * f.values[p]
    return m


def convolution_inverse(f: LinMap) -> LinMap:
    """Two-sided convolution inverse; solves ``M g = ε`` then checks ``g*f = ε``."""
    c = f.domain
    d = c.dim
    m = convolution_matrix(f)
    aug = [list(m[i]) + [c.counit[i]] for i in range(d)]
    red, pivots = rref(aug, d + 1)
    if len(pivots) != d or pivots[-1] == d:
        raise NotConvolutionInvertible("det(M) vanishes: map is not convolution invertible")
    g = [ZERO] * d
    for r, col in zip(red, pivots):
        g[col] = r[d]
    g = LinMap(c, g)
    eps = counit_map(c)
    if convolution(f, g) != eps or convolution(g, f) != eps:
        raise NotConvolutionInvertible("one-sided inverse only; check the coalgebra data")
    return g


def tinv(c) -> LinMap:
    """Convolution inverse of the generic map ``t : x ↦ t_x``."""
    return convolution_inverse(t_map(c))


# -- Θ -----------------------------------------------------------------------


def theta_matrix(c):
    coalg = c.coalg if isinstance(c, HopfData) else c
    tv = [SparsePoly.var(n) for n in coalg.t_names()]
    m = [[SparsePoly() for _ in range(coalg.dim)] for _ in range(coalg.dim)]
    for i in range(coalg.dim):
        for p, q, cf in coalg.delta[i]:
            m[i][q] = m[i][q] + tv[p] * cf.as_poly()
    return m


def theta(c, full: bool = False) -> SparsePoly:
    """Canonical grouplike Θ of a finite-dimensional coalgebra.

    By default the reduced norm of the generic element ``t`` of the dual
    algebra (read off its minimal polynomial); this is the generic
    determinant for matrix coalgebras and ``Π t_g`` for group coalgebras.
    ``full=True`` returns ``det M`` itself, the norm of left multiplication,
    which for ``M_n`` coalgebras is the n-th power of the generic determinant.
    """
    coalg = c.coalg if isinstance(c, HopfData) else c
    if full:
        return bareiss(theta_matrix(coalg))
    return _reduced_norm(coalg)


def _reduced_norm(coalg: CoalgebraData) -> SparsePoly:
    d = coalg.dim
    t = t_map(coalg)
    powers = [[v.as_poly() for v in coalg.counit]]
    cur = counit_map(coalg)
    names = coalg.t_names()
    rng = random.Random(0x5EED)
    while True:
        cur = convolution(cur, t)
        target = [v.as_poly() for v in cur.values]
        m = len(powers)
        for _attempt in range(8):
            point = {n: rng.randint(2, 10**6) for n in names}
            point.update({n: rng.randint(2, 10**6) for n in coalg.params})
            num_cols = [[p.subs(point).constant_value() for p in col] for col in powers]
            num_t = [p.subs(point).constant_value() for p in target]
            # numeric rank decides dependence; rows of a nonzero minor pick the system
            rows = [[num_cols[k][i] for k in range(m)] for i in range(d)]
            red, piv_rows = rref([list(r) for r in zip(*rows)], d)
            if len(piv_rows) < m:
                continue  # unlucky point
            ext = [[num_cols[k][i] for k in range(m)] + [num_t[i]] for i in range(d)]
            _, piv2 = rref([list(r) for r in zip(*ext)], d)
            if len(piv2) > m:
                break  # independent: go to the next power
            sel = piv_rows
            a = [[powers[k][i] for k in range(m)] for i in sel]
            b = [target[i] for i in sel]
            dm = bareiss(a)
            coeffs = []
            for k in range(m):
                ak = [r[:k] + [bv] + r[k + 1:] for r, bv in zip(a, b)]
                coeffs.append(RatExpr(bareiss(ak), dm))
            check = all(
                sum((coeffs[k] * RatExpr(powers[k][i]) for k in range(m)), ZERO) == RatExpr(target[i])
                for i in range(d)
            )
            if not check:
                continue
            c0 = coeffs[0]
            if not c0.is_polynomial():
                raise ArithmeticError("reduced norm is not a polynomial")
            n = c0.as_poly()
            return n if m % 2 == 1 else -n
        else:
            raise ArithmeticError("could not determine the minimal polynomial of t")
        powers.append(target)
        if len(powers) > d + 1:
            raise ArithmeticError("minimal polynomial degree exceeds the dimension")


def free_hopf_coproduct(p, c) -> SparsePoly:
    """Extend ``Δ(t_x) = Σ t'_{x(1)} t''_{x(2)}`` multiplicatively to ``p``."""
    coalg = c.coalg if isinstance(c, HopfData) else c
    if isinstance(p, RatExpr):
        p = p.as_poly()
    elif not isinstance(p, SparsePoly):
        p = as_ratexpr(p).as_poly()
    allowed = set(coalg.t_names())
    extra = p.variables() - allowed - set(coalg.params)
    if extra:
        raise ValueError(f"unexpected variables {sorted(extra)}")
    images = {}
    for i, lab in enumerate(coalg.labels):
        s = SparsePoly()
        for a, b, cf in coalg.delta[i]:
            s = s + SparsePoly.var(f"t'_{coalg.labels[a]}") * SparsePoly.var(
                f"t''_{coalg.labels[b]}"
            ) * cf.as_poly()
        images[t_name(lab)] = s
    return p.compose(images)


def prime_variables(p: SparsePoly, c, primes: int) -> SparsePoly:
    """Rename ``t_x`` to ``t'_x`` (``primes=1``) or ``t''_x`` (``primes=2``)."""
    coalg = c.coalg if isinstance(c, HopfData) else c
    mark = "'" * primes
    return p.compose({t_name(lab): SparsePoly.var(f"t{mark}_{lab}") for lab in coalg.labels})


# -- integrals ---------------------------------------------------------------


def right_integral_space(h: HopfData):
    """Basis of right integrals ``N`` with ``(N⊗id)Δ(x) = N(x)·1``."""
    d = h.dim
    rows = []
    for i in range(d):
        for q in range(d):
            row = [ZERO] * d
            for p, qq, c in h.delta[i]:
                if qq == q:
                    row[p] = row[p] + c
            row[i] = row[i] - h.unit[q]
            if any(not v.is_zero() for v in row):
                rows.append(row)
    basis = nullspace(rows, d) if rows else [[ONE if j == k else ZERO for j in range(d)] for k in range(d)]
    return [LinMap(h.coalg, v) for v in basis]


def is_right_integral(h: HopfData, n: LinMap) -> bool:
    for i in range(h.dim):
        lhs = [ZERO] * h.dim
        for p, q, c in h.delta[i]:
            lhs[q] = lhs[q] + c * n.values[p]
        if lhs != [n.values[i] * u for u in h.unit]:
            return False
    return True


__all__ = [
    "CoalgebraData",
    "HopfData",
    "LinMap",
    "TensorElt",
    "validate_hopf",
    "tensor_coalgebra",
    "convolution",
    "convolution_inverse",
    "convolution_matrix",
    "counit_map",
    "t_map",
    "tinv",
    "theta",
    "theta_matrix",
    "free_hopf_coproduct",
    "prime_variables",
    "right_integral_space",
    "is_right_integral",
    "format_report",
    "var_id",
]
