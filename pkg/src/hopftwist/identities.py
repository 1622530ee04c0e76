"""Noncommutative polynomials in the letters ``X_h`` and the evaluation ``μ_α``.

Words are tuples of basis indices.  ``μ_α`` sends ``X_h`` to
``Σ t_{h1} ⊗ h2`` and products to twisted products; everything about the
universal comodule algebra is decided through it.
"""

from __future__ import annotations

import itertools
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import gcd, lcm

from .arith import ONE, ZERO, RatExpr, SparsePoly, _Parser, as_ratexpr, is_t_variable, mono_sort_key, var_name
from .errors import ParseError, ResourceLimit
from .hopf import HopfData, TensorElt
from .linalg import nullspace, rank
from .twist import TwistedAlgebra, center, phi

DEFAULT_COLUMN_CAP = 10**4


class FreePoly:
    """Element of the free algebra: ``{word: coefficient}`` without zeros."""

    __slots__ = ("terms",)
    __hash__ = None

    def __init__(self, terms=None):
        out = {}
        for w, c in (terms or {}).items():
            c = as_ratexpr(c)
            if not c.is_zero():
                w = tuple(w)
                out[w] = out[w] + c if w in out else c
                if out[w].is_zero():
                    del out[w]
        self.terms = out

    @classmethod
    def one(cls):
        return cls({(): ONE})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def letter(cls, i: int):
        return cls({(i,): ONE})

    @classmethod
    def generic(cls, vec):
        """``X_h`` for ``h = Σ vec[i] x_i``, expanded by linearity."""
        return cls({(i,): v for i, v in enumerate(vec)})

    @classmethod
    def word(cls, w, coeff=ONE):
        return cls({tuple(w): coeff})

    @classmethod
    def parse(cls, text: str, labels, aliases=None) -> FreePoly:
        """Parse e.g. ``"X_x X_y + X_y X_x - (b/a) X_1 X_1"``.

        Letters are ``X_<label>``; ``aliases`` maps extra names to labels.
        """
        idx = {f"X_{lab}": i for i, lab in enumerate(labels)}
        for name, lab in (aliases or {}).items():
            idx[name] = list(labels).index(lab)

        def leaf(x):
            if isinstance(x, str):
                if x in idx:
                    return cls.letter(idx[x])
                if x.startswith("X_"):
                    raise ParseError(f"unknown letter {x!r}")
                return cls.const(RatExpr.var(x))
            return cls.const(x)

        return _Parser(text, leaf).parse()

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, FreePoly):
            return other
        if isinstance(other, (int, Fraction, RatExpr, SparsePoly)):
            return FreePoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out[w] + c if w in out else c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return FreePoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return FreePoly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatExpr, SparsePoly)):
            return self.scale(other)
        if not isinstance(other, FreePoly):
            return NotImplemented
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out[w] + c1 * c2 if w in out else c1 * c2
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        return FreePoly._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RatExpr, SparsePoly)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, FreePoly):
            if set(other.terms) - {()} or not other.terms:
                raise ParseError("can only divide by a nonzero scalar")
            other = other.terms[()]
        return self.scale(ONE / as_ratexpr(other))

    def __pow__(self, n: int):
        if n < 0:
            raise ParseError("negative power of a free polynomial")
        out = FreePoly.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c):
        c = as_ratexpr(c)
        if c.is_zero():
            return FreePoly()
        return FreePoly._raw({w: v * c for w, v in self.terms.items()})

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        return p

    def commutator(self, other):
        return self * other - other * self

    # inspection
    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def is_homogeneous(self):
        return len({len(w) for w in self.terms}) <= 1

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    def to_str(self, labels) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0])):
            word = " ".join(f"X_{labels[i]}" for i in w) or "1"
            cs = str(c)
            if c == ONE:
                parts.append(f"+ {word}")
            elif c == -ONE:
                parts.append(f"- {word}")
            elif c.is_constant() and c.constant_value() < 0:
                parts.append(f"- {str(-c)} {word}" if w else f"- {str(-c)}")
            else:
                parts.append(f"+ ({cs}) {word}" if w else f"+ ({cs})")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"FreePoly({self.terms!r})"


class CoactedPoly:
    """Element of ``T(X_H) ⊗ H`` as ``{(word, basis index): coefficient}``."""

    __slots__ = ("terms",)
    __hash__ = None

    def __init__(self, terms):
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    def __eq__(self, other):
        if not isinstance(other, CoactedPoly):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(k, ZERO) == other.terms.get(k, ZERO) for k in keys)

    def __repr__(self):
        return f"CoactedPoly({self.terms!r})"


# -- coaction and coinvariant generators ------------------------------------------


def _word_coaction(h: HopfData, word):
    """``[(word', vector in H, coeff)]`` for ``δ(X_{h1}⋯X_{hr})`` without merging."""
    out = []
    unit = list(h.unit)

    def rec(k, letters, vec, coeff):
        if k == len(word):
            out.append((tuple(letters), vec, coeff))
            return
        for p, q, c in h.delta[word[k]]:
            rec(k + 1, letters + [p], h.mul(vec, h.coalg.basis_vec(q)), coeff * c)

    rec(0, [], unit, ONE)
    return out


def free_coaction(p: FreePoly, h: HopfData) -> CoactedPoly:
    out: dict = {}
    for w, c in p.terms.items():
        for w2, vec, c2 in _word_coaction(h, w):
            for i, v in enumerate(vec):
                if v.is_zero():
                    continue
                key = (w2, i)
                out[key] = out.get(key, ZERO) + c * c2 * v
    return CoactedPoly(out)


def trivially_coacted(p: FreePoly, h: HopfData) -> CoactedPoly:
    """``P ⊗ 1``."""
    out = {}
    for w, c in p.terms.items():
        for i, u in enumerate(h.unit):
            if not u.is_zero():
                out[(w, i)] = c * u
    return CoactedPoly(out)


def coinv_generator(word, h: HopfData, verify: bool = True) -> FreePoly:
    """``Σ X_{h1(1)}⋯X_{hr(1)} X_{S(h1(2)⋯hr(2))}``; coinvariant by construction."""
    word = tuple(h.index(x) for x in word)
    out = FreePoly()
    for w2, vec, c in _word_coaction(h, word):
        s_vec = h.apply_antipode(vec)
        out = out + (FreePoly.word(w2) * FreePoly.generic(s_vec)).scale(c)
    if verify and free_coaction(out, h) != trivially_coacted(out, h):
        raise ArithmeticError("coinvariant generator failed its coaction check")
    return out


# -- evaluation morphism ---------------------------------------------------------------


class Evaluator:
    """Memoized ``μ_α`` for one twisted algebra; words sharing a prefix share work."""

    def __init__(self, alg: TwistedAlgebra):
        self.alg = alg
        h = alg.hopf
        self.hopf = h
        tv = h.coalg.t_vars()
        self.letters = []
        for i in range(h.dim):
            v = [ZERO] * h.dim
            for p, q, c in h.delta[i]:
                v[q] = v[q] + tv[p] * c
            self.letters.append(tuple(v))
        self._cache = {(): tuple(alg.unit)}
        self._lock = threading.Lock()

    def word(self, w):
        w = tuple(w)
        v = self._cache.get(w)
        if v is not None:
            return v
        prefix = self.word(w[:-1])
        v = tuple(self.alg.mul(prefix, self.letters[w[-1]]))
        with self._lock:
            self._cache[w] = v
        return v

    def coords(self, p: FreePoly):
        d = self.hopf.dim
        out = [ZERO] * d
        for w, c in p.terms.items():
            for i, v in enumerate(self.word(w)):
                if not v.is_zero():
                    out[i] = out[i] + c * v
        return out

    def __call__(self, p: FreePoly) -> TensorElt:
        return TensorElt(self.hopf.labels, self.coords(p))


def evaluator(alg: TwistedAlgebra) -> Evaluator:
    ev = getattr(alg, "_evaluator", None)
    if ev is None:
        ev = Evaluator(alg)
        alg._evaluator = ev
    return ev


def mu_alpha(p: FreePoly, alg: TwistedAlgebra) -> TensorElt:
    return evaluator(alg)(p)


def mu_sigma(p: FreePoly, alg: TwistedAlgebra) -> TensorElt:
    """``φ⁻¹ ∘ μ_α``; generators go to ``1⊗h``."""
    return phi(mu_alpha(p, alg), alg.hopf, "inverse")


def is_identity(p: FreePoly, alg: TwistedAlgebra) -> bool:
    return mu_alpha(p, alg).is_zero()


def _proportional_to_unit(coords, unit) -> bool:
    u = next(i for i, v in enumerate(unit) if not v.is_zero())
    lam = coords[u] / unit[u]
    return all(c == lam * uv for c, uv in zip(coords, unit))


def is_coinvariant(p: FreePoly, alg: TwistedAlgebra) -> bool:
    return _proportional_to_unit(evaluator(alg).coords(p), alg.hopf.unit)


def is_central(p: FreePoly, alg: TwistedAlgebra) -> bool:
    return all(is_identity(p.commutator(FreePoly.letter(i)), alg) for i in range(alg.dim))


def t_split(r: RatExpr) -> dict:
    """Split ``r`` by t-monomials: ``{t-monomial: coefficient in the parameters}``.

    The denominator must be free of t-variables.
    """
    if any(is_t_variable(n) for n in r.den.variables()):
        raise ValueError(f"{r} has t-variables in its denominator")
    out: dict = {}
    for m, c in r.num.terms.items():
        tpart, ppart = [], []
        for v, e in zip(m[::2], m[1::2]):
            (tpart if is_t_variable(var_name(v)) else ppart).extend((v, e))
        key = tuple(tpart)
        out.setdefault(key, {})[tuple(ppart)] = c
    return {k: RatExpr(SparsePoly(v), r.den) for k, v in out.items()}


def center_membership(p: FreePoly, alg: TwistedAlgebra, center_basis=None) -> bool:
    """True iff every t-component of ``μ_α(p)`` lies in the center of ``^αH``."""
    z = center_basis if center_basis is not None else center(alg)
    d = alg.dim
    comps: dict = {}
    for i, c in enumerate(evaluator(alg).coords(p)):
        for m, v in t_split(c).items():
            comps.setdefault(m, [ZERO] * d)[i] = v
    base = rank(z, d) if z else 0
    for vec in comps.values():
        if rank(list(z) + [vec], d) != base:
            return False
    return True


def check_comodule_law(p: FreePoly, alg: TwistedAlgebra) -> bool:
    """``(μ_α ⊗ id)∘δ = (id ⊗ Δ)∘μ_α`` on ``p``."""
    h = alg.hopf
    ev = evaluator(alg)
    lhs: dict = {}
    for (w, k), c in free_coaction(p, h).terms.items():
        for i, v in enumerate(ev.word(w)):
            if not v.is_zero():
                lhs[(i, k)] = lhs.get((i, k), ZERO) + c * v
    rhs: dict = {}
    for i, b in enumerate(ev.coords(p)):
        if b.is_zero():
            continue
        for q, r, c in h.delta[i]:
            rhs[(q, r)] = rhs.get((q, r), ZERO) + b * c
    keys = set(lhs) | set(rhs)
    return all(lhs.get(k, ZERO) == rhs.get(k, ZERO) for k in keys)


# -- identity search ---------------------------------------------------------------------


class SearchResult:
    def __init__(self, degree, kernel_dim, basis, verified, n_rows, n_cols):
        self.degree = degree
        self.kernel_dim = kernel_dim
        self.basis = basis
        self.verified = verified
        self.n_rows = n_rows
        self.n_cols = n_cols

    def __repr__(self):
        return f"SearchResult(degree={self.degree}, kernel_dim={self.kernel_dim}, verified={self.verified})"


def column_cap() -> int:
    env = os.environ.get("HOPFTWIST_COLUMN_CAP")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError(f"HOPFTWIST_COLUMN_CAP must be an integer, got {env!r}") from exc
    return DEFAULT_COLUMN_CAP


def _clear_denominators(vec):
    if all(v.is_constant() for v in vec):
        fr = [v.constant_value() for v in vec]
        m = lcm(*(f.denominator for f in fr))
        ints = [int(f * m) for f in fr]
        g = 0
        for x in ints:
            g = gcd(g, x)
        g = g or 1
        first = next((x for x in ints if x), 1)
        if first < 0:
            g = -g
        return [RatExpr(SparsePoly.const(x // g)) for x in ints]
    dens = []
    for v in vec:
        if not v.den.is_constant() and all(v.den != d for d in dens):
            dens.append(v.den)
    scale = RatExpr(SparsePoly.const(1))
    for d in dens:
        scale = scale * RatExpr(d)
    return [v * scale for v in vec]


def identity_search(degree: int, alg: TwistedAlgebra, cap=None, threads=None) -> SearchResult:
    """Exact kernel of ``μ_α`` on homogeneous degree-``degree`` polynomials."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    n = alg.dim
    cap = column_cap() if cap is None else cap
    ncols = n**degree
    if ncols > cap:
        raise ResourceLimit(f"{ncols} columns exceed the cap of {cap} (set HOPFTWIST_COLUMN_CAP)")
    words = list(itertools.product(range(n), repeat=degree))
    ev = evaluator(alg)
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            cols = list(pool.map(ev.word, words))
    else:
        cols = [ev.word(w) for w in words]
    entries: dict = {}
    for j, col in enumerate(cols):
        for i, v in enumerate(col):
            if v.is_zero():
                continue
            for m, c in t_split(v).items():
                entries.setdefault((m, i), {})[j] = c
    keys = sorted(entries, key=lambda k: (mono_sort_key(k[0]), k[1]))
    rows = []
    for k in keys:
        row = [ZERO] * ncols
        for j, c in entries[k].items():
            row[j] = c
        rows.append(row)
    kernel = nullspace(rows, ncols) if rows else [
        [ONE if j == k else ZERO for j in range(ncols)] for k in range(ncols)
    ]
    basis = []
    for vec in kernel:
        vec = _clear_denominators(vec)
        basis.append(FreePoly({words[j]: v for j, v in enumerate(vec) if not v.is_zero()}))
    verified = all(is_identity(p, alg) for p in basis)
    if not verified:
        raise ArithmeticError("kernel element failed re-verification")
    return SearchResult(degree, len(basis), basis, verified, len(rows), ncols)


__all__ = [
    "CoactedPoly",
    "Evaluator",
    "FreePoly",
    "SearchResult",
    "center_membership",
    "check_comodule_law",
    "coinv_generator",
    "free_coaction",
    "identity_search",
    "is_central",
    "is_coinvariant",
    "is_identity",
    "mu_alpha",
    "mu_sigma",
    "t_split",
    "trivially_coacted",
]
