"""Built-in Hopf algebras, coalgebras and cocycles."""

from __future__ import annotations

import re
from fractions import Fraction

from .arith import ONE, ZERO, RatExpr, SparsePoly, as_ratexpr, register_variables
from .errors import InvalidGroupTable, ZeroParameter
from .hopf import CoalgebraData, HopfData
from .twist import Cocycle

SWEEDLER_LABELS = ("1", "x", "y", "z")
PRESETS = ("sweedler", "groupAlgebra", "groupFunctionAlgebra", "matrixCoalgebra", "trivialField")


# -- Sweedler's four-dimensional algebra ------------------------------------


def _param(value, name):
    if value is None:
        return RatExpr.var(name)
    return as_ratexpr(value)


def sweedler_hopf() -> HopfData:
    """``H4`` with basis ``1, x, y, z = xy``."""
    register_variables(f"t_{lab}" for lab in SWEEDLER_LABELS)
    one, x, y, z = range(4)
    delta = [
        (one, one, one, 1),
        (x, x, x, 1),
        (y, one, y, 1),
        (y, y, x, 1),
        (z, x, z, 1),
        (z, z, one, 1),
    ]
    coalg = CoalgebraData(SWEEDLER_LABELS, delta, [1, 1, 0, 0], name="sweedler")
    mult = [(one, j, j, 1) for j in range(4)] + [(j, one, j, 1) for j in range(1, 4)]
    mult += [
        (x, x, one, 1),
        (x, y, z, 1),
        (x, z, y, 1),
        (y, x, z, -1),
        (z, x, y, -1),
    ]
    antipode = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, -1, 0],
    ]
    return HopfData(coalg, mult, [1, 0, 0, 0], antipode, name="sweedler")


def sweedler_cocycle(h: HopfData, a=None, b=None, c=None) -> Cocycle:
    a, b, c = _param(a, "a"), _param(b, "b"), _param(c, "c")
    if a.is_zero():
        raise ZeroParameter("sweedler cocycle needs a != 0")
    m = [[ZERO] * 4 for _ in range(4)]
    m[0] = [ONE, ONE, ZERO, ZERO]
    for i in range(1, 4):
        m[i][0] = h.counit[i]
    m[1][1] = a
    m[2][1], m[2][2], m[2][3] = b, c, -c
    m[3][1], m[3][2], m[3][3] = b, c, -a * c
    return Cocycle(h, m)


def sweedler(a=None, b=None, c=None):
    """``(H4, α_{a,b,c})``; omitted parameters stay symbolic."""
    register_variables(f"t_{lab}" for lab in SWEEDLER_LABELS)
    register_variables(n for n, v in (("a", a), ("b", b), ("c", c)) if v is None)
    h = sweedler_hopf()
    return h, sweedler_cocycle(h, a, b, c)


# -- groups -------------------------------------------------------------------


class Group:
    """Finite group from a multiplication table over ``labels``."""

    def __init__(self, labels, table):
        self.labels = tuple(str(x) for x in labels)
        n = len(self.labels)
        if n == 0:
            raise InvalidGroupTable("empty group")
        if len(set(self.labels)) != n:
            raise InvalidGroupTable("repeated element labels")
        idx = {lab: i for i, lab in enumerate(self.labels)}
        try:
            tab = [[r if isinstance(r, int) else idx[str(r)] for r in row] for row in table]
        except KeyError as exc:
            raise InvalidGroupTable(f"unknown element {exc.args[0]!r} in table") from exc
        if len(tab) != n or any(len(r) != n for r in tab):
            raise InvalidGroupTable("table must be square of the group order")
        if any(not 0 <= v < n for r in tab for v in r):
            raise InvalidGroupTable("table entry out of range")
        self.table = tab
        ids = [e for e in range(n) if all(tab[e][g] == g and tab[g][e] == g for g in range(n))]
        if not ids:
            raise InvalidGroupTable("no identity element")
        self.e = ids[0]
        for g in range(n):
            for h in range(n):
                for k in range(n):
                    if tab[tab[g][h]][k] != tab[g][tab[h][k]]:
                        raise InvalidGroupTable(f"not associative at ({self.labels[g]},{self.labels[h]},{self.labels[k]})")
        inv = []
        for g in range(n):
            cands = [h for h in range(n) if tab[g][h] == self.e and tab[h][g] == self.e]
            if not cands:
                raise InvalidGroupTable(f"{self.labels[g]} has no inverse")
            inv.append(cands[0])
        self.inv = inv
        self.order = n

    def mul(self, g, h):
        return self.table[g][h]

    @classmethod
    def cyclic(cls, n: int) -> Group:
        if n < 1:
            raise InvalidGroupTable("cyclic group order must be positive")
        labels = ["e"] + ["g" if k == 1 else f"g{k}" for k in range(1, n)]
        return cls(labels, [[(i + j) % n for j in range(n)] for i in range(n)])


_CYCLIC_RE = re.compile(r"Z(?:/)?(\d+)\Z")


def parse_group(spec) -> Group:
    """``"Z<n>"`` / ``"Z/<n>"``, a ``Group``, or ``{"elements": [...], "table": [[...]]}``."""
    if isinstance(spec, Group):
        return spec
    if isinstance(spec, str):
        m = _CYCLIC_RE.match(spec.strip())
        if not m:
            raise InvalidGroupTable(f"unknown group description {spec!r}")
        return Group.cyclic(int(m.group(1)))
    if isinstance(spec, dict):
        return Group(spec["elements"], spec["table"])
    raise InvalidGroupTable(f"unknown group description {spec!r}")


def group_algebra(group="Z2") -> HopfData:
    """``k[G]`` with grouplike basis."""
    G = parse_group(group)
    n = G.order
    delta = [(g, g, g, 1) for g in range(n)]
    coalg = CoalgebraData(G.labels, delta, [1] * n, name=f"k[{group if isinstance(group, str) else 'G'}]")
    mult = [(g, h, G.mul(g, h), 1) for g in range(n) for h in range(n)]
    unit = [1 if g == G.e else 0 for g in range(n)]
    antipode = [[1 if i == G.inv[j] else 0 for i in range(n)] for j in range(n)]
    h = HopfData(coalg, mult, unit, antipode)
    h.group = G
    return h


def group_function_algebra(group="Z2") -> HopfData:
    """``k^G`` with basis of indicator functions ``δ_g``."""
    G = parse_group(group)
    n = G.order
    delta = [(g, h, G.mul(G.inv[h], g), 1) for g in range(n) for h in range(n)]
    counit = [1 if g == G.e else 0 for g in range(n)]
    coalg = CoalgebraData(G.labels, delta, counit, name=f"k^{group if isinstance(group, str) else 'G'}")
    mult = [(g, g, g, 1) for g in range(n)]
    antipode = [[1 if i == G.inv[j] else 0 for i in range(n)] for j in range(n)]
    h = HopfData(coalg, mult, [1] * n, antipode)
    h.group = G
    return h


def group_cocycle(h: HopfData, values) -> Cocycle:
    """Cocycle on ``k[G]`` from ``values[g][h]`` (indices or labels as keys)."""
    if isinstance(values, dict):
        d = h.dim
        m = [[ONE] * d for _ in range(d)]
        for (g, k), v in values.items():
            m[h.index(g)][h.index(k)] = as_ratexpr(v)
        return Cocycle(h, m)
    return Cocycle(h, values)


def carry_cocycle(h: HopfData, u) -> Cocycle:
    """``α(g^i, g^j) = u^{⌊(i+j)/n⌋}`` on a cyclic group algebra."""
    n = h.dim
    u = as_ratexpr(u)
    return Cocycle(h, [[u if i + j >= n else ONE for j in range(n)] for i in range(n)])


def matrix_coalgebra(n: int = 2) -> CoalgebraData:
    """Dual of ``M_n``: ``Δ(X_ij) = Σ_k X_ik ⊗ X_kj``; labels ``"11", "12", ...``."""
    if n < 1:
        raise ValueError("matrix size must be positive")
    sep = "" if n < 10 else "_"
    labels = [f"{i}{sep}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    pos = {(i, j): (i - 1) * n + (j - 1) for i in range(1, n + 1) for j in range(1, n + 1)}
    delta = [
        (pos[i, j], pos[i, k], pos[k, j], 1)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        for k in range(1, n + 1)
    ]
    counit = [1 if i == j else 0 for i in range(1, n + 1) for j in range(1, n + 1)]
    return CoalgebraData(labels, delta, counit, name=f"M{n}^*")


def trivial_field() -> HopfData:
    coalg = CoalgebraData(["1"], [(0, 0, 0, 1)], [1], name="k")
    return HopfData(coalg, [(0, 0, 0, 1)], [1], [[1]], name="k")


def build(kind: str, **params):
    """Build a preset; returns ``(HopfData or CoalgebraData, Cocycle or None)``."""
    if kind == "sweedler":
        return sweedler(params.get("a"), params.get("b"), params.get("c"))
    if kind == "groupAlgebra":
        h = group_algebra(params.get("group", "Z2"))
        alpha = params.get("cocycle")
        if alpha is None and params.get("u") is not None:
            return h, carry_cocycle(h, params["u"])
        return h, (group_cocycle(h, alpha) if alpha is not None else Cocycle.trivial(h))
    if kind == "groupFunctionAlgebra":
        h = group_function_algebra(params.get("group", "Z2"))
        return h, Cocycle.trivial(h)
    if kind == "matrixCoalgebra":
        return matrix_coalgebra(int(params.get("n", 2))), None
    if kind == "trivialField":
        h = trivial_field()
        return h, Cocycle.trivial(h)
    raise ValueError(f"unknown preset {kind!r}")


# -- expected values ------------------------------------------------------------


def sweedler_expected_tables():
    """Reference values for H4 with symbolic ``a, b, c``.

    ``sigma`` maps label pairs to σ-values, ``twisted`` maps label pairs to the
    α-twisted products (coordinate dicts), and ``mu`` lists
    ``(name, lhs, rhs)`` where ``lhs`` is a free polynomial and ``rhs`` either
    the expected coefficient of ``⊗1`` or a second free polynomial with equal image.
    """
    from .identities import FreePoly

    sweedler()
    P = RatExpr.var
    a, b, c = P("a"), P("b"), P("c")
    t1, tx, ty, tz = P("t_1"), P("t_x"), P("t_y"), P("t_z")
    s_yy = (a * ty * ty + b * t1 * ty + c * t1 * t1) / t1
    s_xy = (a * tx * ty - t1 * tz) / t1
    s_yx = (b * t1 * tx + a * tx * ty + t1 * tz) / t1
    s_zz = -(tz * tz + b * tx * tz + a * c * tx * tx) / t1
    sigma = {
        ("x", "x"): a * tx * tx / t1,
        ("y", "y"): s_yy,
        ("z", "y"): s_yy,
        ("y", "z"): -s_yy,
        ("x", "y"): s_xy,
        ("x", "z"): -s_xy,
        ("y", "x"): s_yx,
        ("z", "x"): s_yx,
        ("z", "z"): s_zz,
    }
    eps = {"1": ONE, "x": ONE, "y": ZERO, "z": ZERO}
    for lab in SWEEDLER_LABELS:
        sigma[("1", lab)] = eps[lab] * t1
        sigma[(lab, "1")] = eps[lab] * t1
    sigma_inv_unit = {}
    for lab in SWEEDLER_LABELS:
        sigma_inv_unit[("1", lab)] = eps[lab] / t1
        sigma_inv_unit[(lab, "1")] = eps[lab] / t1

    twisted = {
        ("x", "x"): {"1": a},
        ("x", "y"): {"z": ONE},
        ("x", "z"): {"y": a},
        ("y", "x"): {"1": b, "z": -ONE},
        ("y", "y"): {"1": c},
        ("y", "z"): {"x": -c, "y": b},
        ("z", "x"): {"x": b, "y": -a},
        ("z", "y"): {"x": c},
        ("z", "z"): {"1": -a * c, "z": b},
    }

    def fp(text):
        return FreePoly.parse(text, SWEEDLER_LABELS)

    disc = (b * b - 4 * a * c) / a
    T = fp("X_x X_y + X_y X_x")
    U = fp("X_x X_x X_z + X_x X_z X_x")
    V = fp("X_x X_z X_x X_z")
    X2 = fp("X_x X_x")
    E2X2 = fp("X_1 X_1 X_x X_x")
    XY = fp("X_x X_y")
    EZ = fp("X_1 X_z")
    mu = [
        ("X^2", X2, a * tx * tx),
        ("Y^2", fp("X_y X_y"), a * ty * ty + b * t1 * ty + c * t1 * t1),
        ("T", T, tx * (2 * a * ty + b * t1)),
        ("U", U, a * tx * tx * (2 * tz + b * tx)),
        ("V", V, a * tx * tx * (tz * tz + b * tx * tz + a * c * tx * tx)),
        ("(ZX)^2", fp("X_z X_x X_z X_x"), a * tx * tx * (tz * tz + b * tx * tz + a * c * tx * tx)),
        ("4X^2V", X2 * V * 4, U * U - fp("X_x X_x X_x X_x X_x X_x").scale(disc)),
        ("T^2-4X^2Y^2", T * T - X2 * fp("X_y X_y") * 4, E2X2.scale(disc)),
        ("EZ-XY", EZ - XY, t1 * tz - a * tx * ty),
        ("EU-X^2T", fp("X_1") * U - X2 * T, 2 * a * tx * tx * (t1 * tz - a * tx * ty)),
    ]
    return {"sigma": sigma, "sigma_inv_unit": sigma_inv_unit, "twisted": twisted, "mu": mu}


def group_niceness_witnesses(h: HopfData, alpha: Cocycle):
    """Pairs ``(Z, expected coefficient of ⊗1)`` for ``Z_g`` and ``Z_{g,h}``."""
    from .identities import FreePoly

    G = h.group
    n = G.order
    a = alpha.values
    t = [RatExpr.var(f"t_{lab}") for lab in G.labels]
    out = []
    for g in range(n):
        gi = G.inv[g]
        out.append((("Z", G.labels[g]), FreePoly({(g, gi): 1}), a[g][gi] * t[g] * t[gi]))
    for g in range(n):
        for k in range(n):
            ghi = G.inv[G.mul(g, k)]
            expected = a[g][G.inv[g]] * a[k][ghi] * t[g] * t[k] * t[ghi]
            out.append((("Z", G.labels[g], G.labels[k]), FreePoly({(g, k, ghi): 1}), expected))
    return out


def numeric(value) -> Fraction:
    return as_ratexpr(value).constant_value()


__all__ = [
    "Group",
    "PRESETS",
    "SWEEDLER_LABELS",
    "build",
    "carry_cocycle",
    "group_algebra",
    "group_cocycle",
    "group_function_algebra",
    "group_niceness_witnesses",
    "matrix_coalgebra",
    "parse_group",
    "sweedler",
    "sweedler_cocycle",
    "sweedler_expected_tables",
    "sweedler_hopf",
    "trivial_field",
    "SparsePoly",
]
