"""Exact sparse multivariate polynomials and their fraction field over Q.

Variables are interned in a process-wide registry; a variable's id is its
registration rank, and the canonical term order is graded lexicographic on
ids (lower id = more significant).  Hopf-algebra constructors register the
``t_<label>`` variables in basis order before any parameter, so printed output
follows basis order.

Coefficients are Python ``int`` or ``fractions.Fraction``.  ``RatExpr``
equality is semantic (cross-multiplication); reduction is best effort.
"""

from __future__ import annotations

import heapq
import re
import threading
from fractions import Fraction
from numbers import Rational

from .errors import DenominatorVanishes, ParseError
from .kernels import mono_div, mono_mul, poly_mul

_registry_lock = threading.Lock()
_names: list[str] = []
_ids: dict[str, int] = {}

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


def var_id(name: str) -> int:
    """Id of variable ``name``, registering it on first use."""
    i = _ids.get(name)
    if i is not None:
        return i
    if not _NAME_RE.match(name):
        raise ParseError(f"invalid variable name {name!r}")
    with _registry_lock:
        i = _ids.get(name)
        if i is None:
            i = len(_names)
            _names.append(name)
            _ids[name] = i
    return i


def var_name(i: int) -> str:
    return _names[i]


def register_variables(names) -> None:
    for n in names:
        var_id(n)


def is_t_variable(name: str) -> bool:
    """t-variables (``t_x``, ``t'_x``, ``t''_x``) as opposed to parameters."""
    return name.startswith("t_") or name.startswith("t'")


# -- monomials -------------------------------------------------------------

_SENTINEL = 1 << 62


def mono_degree(m: tuple) -> int:
    return sum(m[1::2])


def mono_sort_key(m: tuple):
    """Ascending key = descending graded-lex term order."""
    flat = list(m)
    flat[1::2] = [-e for e in m[1::2]]
    flat.append(_SENTINEL)
    return (-mono_degree(m), tuple(flat))


def mono_gcd(a: tuple, b: tuple) -> tuple:
    da = dict(zip(a[::2], a[1::2]))
    out = []
    for v, e in zip(b[::2], b[1::2]):
        if v in da:
            out.append(v)
            out.append(min(e, da[v]))
    return tuple(out)


def mono_lcm(a: tuple, b: tuple) -> tuple:
    d = dict(zip(a[::2], a[1::2]))
    for v, e in zip(b[::2], b[1::2]):
        d[v] = max(e, d.get(v, 0))
    return tuple(x for v in sorted(d) for x in (v, d[v]))


def mono_from_dict(exps: dict) -> tuple:
    items = sorted((var_id(n) if isinstance(n, str) else n, e) for n, e in exps.items() if e)
    return tuple(x for pair in items for x in pair)


def mono_str(m: tuple) -> str:
    # parameters are printed ahead of t-variables, e.g. a*t_x^2
    params, tvars = [], []
    for v, e in zip(m[::2], m[1::2]):
        name = var_name(v)
        (tvars if is_t_variable(name) else params).append(name if e == 1 else f"{name}^{e}")
    return "*".join(params + tvars)


def _coeff_str(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# -- polynomials -----------------------------------------------------------


class SparsePoly:
    """Polynomial over Q stored as ``{monomial: coefficient}`` without zeros."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}
        self._hash = None

    @classmethod
    def const(cls, c) -> SparsePoly:
        c = _norm_coeff(Fraction(c)) if not isinstance(c, int) else c
        return cls({(): c}) if c != 0 else cls()

    @classmethod
    def var(cls, name: str) -> SparsePoly:
        return cls({(var_id(name), 1): 1})

    @classmethod
    def monomial(cls, exps: dict, coeff=1) -> SparsePoly:
        if coeff == 0:
            return cls()
        return cls({mono_from_dict(exps): coeff})

    # -- predicates
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(self.terms.get((), 0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        v = var_id(name)
        best = -1 if not self.terms else 0
        for m in self.terms:
            for i in range(0, len(m), 2):
                if m[i] == v:
                    best = max(best, m[i + 1])
        return best

    def variables(self) -> set[str]:
        return {var_name(v) for m in self.terms for v in m[::2]}

    def __len__(self):
        return len(self.terms)

    # -- ordering
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mono_sort_key(mc[0]))

    def leading_term(self):
        m = min(self.terms, key=mono_sort_key)
        return m, self.terms[m]

    # -- arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, SparsePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SparsePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly({m: -c for m, c in self.terms.items()})

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
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return SparsePoly()
        return SparsePoly(poly_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = SparsePoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> SparsePoly:
        if c == 0:
            return SparsePoly()
        if c == 1:
            return self
        return SparsePoly({m: _norm_coeff(v * c) for m, v in self.terms.items()})

    def mul_mono(self, mono: tuple, c=1) -> SparsePoly:
        if c == 0:
            return SparsePoly()
        return SparsePoly({mono_mul(m, mono): _norm_coeff(v * c) for m, v in self.terms.items()})

    def div_mono(self, mono: tuple) -> SparsePoly:
        out = {}
        for m, c in self.terms.items():
            q = mono_div(m, mono)
            if q is None:
                raise ArithmeticError("monomial does not divide polynomial")
            out[q] = c
        return SparsePoly(out)

    def monomial_content(self) -> tuple:
        it = iter(self.terms)
        g = next(it, ())
        for m in it:
            if not g:
                break
            g = mono_gcd(g, m)
        return g

    def try_divide(self, other: SparsePoly):
        """Exact quotient ``self / other`` or ``None`` if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return SparsePoly()
        if other.is_constant():
            return self.scale(Fraction(1) / other.constant_value())
        if self.degree() < other.degree():
            return None
        lm, lc = other.leading_term()
        rem = dict(self.terms)
        quot = {}
        gterms = other.terms
        # heap of remainder monomials; entries for cancelled terms are skipped
        heap = [(mono_sort_key(m), m) for m in rem]
        heapq.heapify(heap)
        while rem:
            m = heapq.heappop(heap)[1]
            if m not in rem:
                continue
            t = mono_div(m, lm)
            if t is None:
                return None
            c = Fraction(rem[m]) / lc
            quot[t] = _norm_coeff(c)
            for gm, gc in gterms.items():
                pm = mono_mul(gm, t)
                old = rem.get(pm)
                s = (old or 0) - c * gc
                if s:
                    rem[pm] = s
                    if old is None:
                        heapq.heappush(heap, (mono_sort_key(pm), pm))
                else:
                    rem.pop(pm, None)
        return SparsePoly(quot)

    def divexact(self, other: SparsePoly) -> SparsePoly:
        q = self.try_divide(other)
        if q is None:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def subs(self, assign: dict) -> SparsePoly:
        """Substitute numbers for variables (names mapped to rationals)."""
        vals = {var_id(k): v for k, v in assign.items()}
        out: dict = {}
        for m, c in self.terms.items():
            rest = []
            coeff = Fraction(c)
            for v, e in zip(m[::2], m[1::2]):
                if v in vals:
                    coeff *= Fraction(vals[v]) ** e
                    if coeff == 0:
                        break
                else:
                    rest.append(v)
                    rest.append(e)
            if coeff == 0:
                continue
            key = tuple(rest)
            s = out.get(key, 0) + coeff
            if s:
                out[key] = _norm_coeff(s)
            else:
                out.pop(key, None)
        return SparsePoly(out)

    def compose(self, mapping: dict) -> SparsePoly:
        """Substitute polynomials for variables (names mapped to SparsePoly)."""
        images = {var_id(k): v for k, v in mapping.items()}
        powers: dict = {}
        result = SparsePoly()
        for m, c in self.terms.items():
            term = SparsePoly.const(c)
            rest = []
            for v, e in zip(m[::2], m[1::2]):
                if v in images:
                    key = (v, e)
                    if key not in powers:
                        powers[key] = images[v] ** e
                    term = term * powers[key]
                else:
                    rest.append(v)
                    rest.append(e)
            if rest:
                term = term.mul_mono(tuple(rest))
            result = result + term
        return result

    # -- comparison
    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): other} if other != 0 else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            if not m:
                body = _coeff_str(a)
            elif a == 1:
                body = mono_str(m)
            else:
                body = f"{_coeff_str(a)}*{mono_str(m)}"
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self):
        return f"SparsePoly({str(self)!r})"


def _univariate_gcd(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Monic gcd of two polynomials in the same single variable."""
    a, b = f, g
    while not b.is_zero():
        _, r = _univariate_divmod(a, b)
        a, b = b, r
    lc = a.leading_term()[1]
    return a.scale(Fraction(1) / lc)


def _univariate_divmod(f: SparsePoly, g: SparsePoly):
    lm, lc = g.leading_term()
    rem = f
    quot = SparsePoly()
    while not rem.is_zero() and rem.degree() >= g.degree():
        m, c = rem.leading_term()
        t = mono_div(m, lm)
        q = SparsePoly({t: _norm_coeff(Fraction(c) / lc)})
        quot = quot + q
        rem = rem - q * g
    return quot, rem


# -- fraction field --------------------------------------------------------

_ONE = SparsePoly({(): 1})


class RatExpr:
    """Element ``num/den`` of the fraction field of the polynomial ring.

    Denominators are kept monic (leading coefficient 1 under the canonical
    term order) with monomial content and exact common factors cancelled.
    """

    __slots__ = ("num", "den")
    __hash__ = None  # equality is semantic, no canonical hash

    def __init__(self, num, den=None, *, _trusted=False):
        if not isinstance(num, SparsePoly):
            num = SparsePoly.const(num)
        if den is None:
            self.num, self.den = num, _ONE
            return
        if not isinstance(den, SparsePoly):
            den = SparsePoly.const(den)
        if _trusted:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(num, den)

    @classmethod
    def var(cls, name: str) -> RatExpr:
        return cls(SparsePoly.var(name))

    # -- predicates
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    def as_poly(self) -> SparsePoly:
        if not self.den.is_constant():
            raise ValueError(f"{self} is not a polynomial")
        return self.num.scale(Fraction(1) / self.den.constant_value())

    def variables(self) -> set[str]:
        return self.num.variables() | self.den.variables()

    # -- arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, RatExpr):
            return other
        if isinstance(other, SparsePoly):
            return RatExpr(other)
        if isinstance(other, (int, Fraction)):
            return RatExpr(SparsePoly.const(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        d1, d2 = self.den, other.den
        if d1 == d2:
            if d1 is _ONE or d1.is_constant():
                return RatExpr(self.num + other.num, d1, _trusted=True)
            return RatExpr(self.num + other.num, d1)
        if d1.is_monomial() and d2.is_monomial():
            (m1, c1), (m2, c2) = d1.leading_term(), d2.leading_term()
            lcm = mono_lcm(m1, m2)
            n = self.num.mul_mono(mono_div(lcm, m1), Fraction(1) / c1) + other.num.mul_mono(
                mono_div(lcm, m2), Fraction(1) / c2
            )
            return RatExpr(n, SparsePoly({lcm: 1}))
        if d1.is_constant() or d2.is_constant():
            return RatExpr(self.num * d2 + other.num * d1, d1 * d2)
        q = d2.try_divide(d1) if len(d2) >= len(d1) else d1.try_divide(d2)
        if q is not None:
            if len(d2) >= len(d1):
                return RatExpr(self.num * q + other.num, d2)
            return RatExpr(self.num + other.num * q, d1)
        return RatExpr(self.num * d2 + other.num * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return RatExpr(-self.num, self.den, _trusted=True)

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
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatExpr(SparsePoly())
            return RatExpr(self.num.scale(other), self.den, _trusted=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RatExpr(SparsePoly())
        if self.den is _ONE and other.den is _ONE:
            return RatExpr(self.num * other.num)
        return RatExpr(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatExpr:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatExpr(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RatExpr(self.num.scale(Fraction(1) / Fraction(other)), self.den, _trusted=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatExpr(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatExpr(self.num**n, self.den**n, _trusted=self.den.is_constant())

    # -- evaluation
    def subs(self, assign: dict) -> RatExpr:
        """Partial substitution of rationals for variables."""
        d = self.den.subs(assign)
        if d.is_zero():
            raise DenominatorVanishes(f"denominator {self.den} vanishes under {assign}")
        return RatExpr(self.num.subs(assign), d)

    def evaluate(self, assign: dict) -> Fraction:
        r = self.subs(assign)
        if not r.is_constant():
            missing = sorted(r.variables())
            raise ValueError(f"unassigned variables: {', '.join(missing)}")
        return r.constant_value()

    def compose(self, mapping: dict) -> RatExpr:
        return RatExpr(self.num.compose(mapping), self.den.compose(mapping))

    # -- comparison
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __str__(self):
        if self.den == _ONE:
            return str(self.num)
        n = str(self.num)
        if len(self.num) > 1:
            n = f"({n})"
        d = str(self.den)
        m, _ = self.den.leading_term()
        if not (len(self.den) == 1 and len(m) == 2):
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatExpr({str(self)!r})"


def _normalize(num: SparsePoly, den: SparsePoly):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return SparsePoly(), _ONE
    if den.is_constant():
        c = den.constant_value()
        return (num if c == 1 else num.scale(1 / c)), _ONE
    g = mono_gcd(num.monomial_content(), den.monomial_content())
    if g:
        num, den = num.div_mono(g), den.div_mono(g)
    _, lc = den.leading_term()
    if lc != 1:
        inv = Fraction(1) / lc
        num, den = num.scale(inv), den.scale(inv)
    if den.is_constant():
        return num, _ONE
    if den.is_monomial():
        return num, den
    q = num.try_divide(den)
    if q is not None:
        return q, _ONE
    if len(num) > 1:
        q = den.try_divide(num)
        if q is not None:
            lc = q.leading_term()[1]
            return SparsePoly.const(Fraction(1) / lc), q.scale(Fraction(1) / lc)
    nv, dv = num.variables(), den.variables()
    if len(dv) == 1 and nv == dv:
        g = _univariate_gcd(num, den)
        if not g.is_constant():
            num, den = num.divexact(g), den.divexact(g)
            lc = den.leading_term()[1]
            num, den = num.scale(Fraction(1) / lc), den.scale(Fraction(1) / lc)
    return num, den


# -- coercion and module-level operations ----------------------------------


def as_ratexpr(x) -> RatExpr:
    if isinstance(x, RatExpr):
        return x
    if isinstance(x, SparsePoly):
        return RatExpr(x)
    if isinstance(x, bool):
        raise TypeError("booleans are not ring elements")
    if isinstance(x, (int, Fraction)):
        return RatExpr(SparsePoly.const(x))
    if isinstance(x, Rational):
        return RatExpr(SparsePoly.const(Fraction(x)))
    if isinstance(x, str):
        return parse(x)
    raise TypeError(f"cannot interpret {x!r} as a ring element")


ZERO = RatExpr(SparsePoly())
ONE = RatExpr(_ONE)


def frac_eq(a, b) -> bool:
    return as_ratexpr(a) == as_ratexpr(b)


def frac_reduce(a) -> RatExpr:
    a = as_ratexpr(a)
    return RatExpr(a.num, a.den)


def substitute(a, assign: dict):
    """Substitute rationals; returns a ``Fraction`` once no variable remains."""
    r = as_ratexpr(a).subs(assign)
    return r.constant_value() if r.is_constant() else r


def format_rational(q) -> str:
    return _coeff_str(q)


# -- parser ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*/^()−]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        if m.group("num"):
            out.append(("num", m.group("num")))
        elif m.group("name"):
            out.append(("name", m.group("name")))
        else:
            op = m.group("op")
            out.append(("op", "-" if op == "−" else op))
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    """Recursive-descent parser; juxtaposition means multiplication."""

    def __init__(self, text, leaf):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.leaf = leaf

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                v = v + rhs if val == "+" else v - rhs
            else:
                return v

    def term(self):
        v = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                v = v * rhs if val == "*" else v / rhs
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                v = v * self.unary()
            else:
                return v

    def unary(self):
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            v = self.unary()
            return -v if val == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            k2, v2 = self.peek()
            if k2 == "op" and v2 in "+-":
                self.take()
                sign = -1 if v2 == "-" else 1
            k3, v3 = self.take()
            if k3 != "num" or not v3.isdigit():
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            return base ** (sign * int(v3))
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.leaf(Fraction(val))
        if kind == "name":
            return self.leaf(val)
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def _leaf(x):
    if isinstance(x, str):
        return RatExpr.var(x)
    return RatExpr(SparsePoly.const(x))


def parse(text: str) -> RatExpr:
    """Parse a rational expression such as ``"(a*t_y^2 + b t_1 t_y)/t_1"``."""
    if not isinstance(text, str):
        return as_ratexpr(text)
    try:
        return _Parser(text, _leaf).parse()
    except ZeroDivisionError as exc:
        raise ParseError(f"division by zero in {text!r}") from exc


def parse_poly(text: str) -> SparsePoly:
    r = parse(text)
    if not r.is_polynomial():
        raise ParseError(f"{text!r} is not a polynomial")
    return r.as_poly()


def parse_rational(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    r = parse(text)
    if not r.is_constant():
        raise ParseError(f"{text!r} is not a rational number")
    return r.constant_value()
