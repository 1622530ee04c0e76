"""Command-line front end: ``hopftwist <command> [options]``.

Exit codes: 0 success or true verdict, 1 false verdict, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .arith import parse
from .errors import (
    CocycleCheckFailed,
    DenominatorVanishes,
    HopfTwistError,
    InvalidHopfData,
    NotConvolutionInvertible,
    NotLazy,
    ParseError,
    ResourceLimit,
)
from .hopf import CoalgebraData, HopfData, format_report, right_integral_space, theta, tinv, validate_hopf
from .identities import (
    FreePoly,
    center_membership,
    identity_search,
    is_central,
    is_coinvariant,
    is_identity,
    mu_alpha,
)
from .presets import (
    PRESETS,
    SWEEDLER_LABELS,
    build,
    group_niceness_witnesses,
    parse_group,
    sweedler_expected_tables,
)
from .twist import (
    Cocycle,
    center,
    check_cocycle,
    check_normalized,
    lazy_transport,
    specialize,
    trace_gram_det,
    twist,
    universal_sigma,
)

SWEEDLER_ALIASES = {"E": "1", "X": "x", "Y": "y", "Z": "z"}


class Result:
    def __init__(self, report, code, text):
        self.report = report
        self.code = code
        self.text = text


class InputError(HopfTwistError):
    pass


# -- loading -------------------------------------------------------------------


def _number_or_none(s):
    if s is None:
        return None
    return parse(s)


def load_subject(args):
    """``(algebra, cocycle or None)`` from ``--preset`` / ``--hopf`` / ``--cocycle``."""
    cocycle_data = io.load_json(args.cocycle) if getattr(args, "cocycle", None) else None
    if args.hopf:
        h = io.hopf_from_json(io.load_json(args.hopf))
        alpha = None
    elif args.preset:
        params = {}
        if args.preset == "sweedler":
            params = {"a": _number_or_none(args.a), "b": _number_or_none(args.b), "c": _number_or_none(args.c)}
        elif args.preset in ("groupAlgebra", "groupFunctionAlgebra"):
            if args.group_table:
                params["group"] = parse_group(io.load_json(args.group_table))
            else:
                params["group"] = args.group or "Z2"
            if args.u is not None:
                params["u"] = parse(args.u)
        elif args.preset == "matrixCoalgebra":
            params["n"] = args.n
        h, alpha = build(args.preset, **params)
    elif cocycle_data is not None and isinstance(cocycle_data.get("hopf"), dict):
        h = io.hopf_from_json(cocycle_data["hopf"])
        alpha = None
    else:
        raise InputError("give --preset NAME or --hopf FILE")
    if cocycle_data is not None:
        if not isinstance(h, HopfData):
            raise InputError("a cocycle needs a Hopf algebra")
        alpha = io.cocycle_from_json(cocycle_data, h)
    if alpha is None and isinstance(h, HopfData):
        alpha = Cocycle.trivial(h)
    return h, alpha


def require_hopf(h):
    if not isinstance(h, HopfData):
        raise InputError("this command needs a Hopf algebra, not a bare coalgebra")
    h.require_valid()
    return h


def load_poly(args, h) -> FreePoly:
    aliases = SWEEDLER_ALIASES if tuple(h.labels) == SWEEDLER_LABELS else None
    if args.poly_text:
        return FreePoly.parse(args.poly_text, h.labels, aliases)
    if args.poly:
        data = io.load_json(args.poly)
        if "text" in data and "terms" not in data:
            return FreePoly.parse(data["text"], h.labels, aliases)
        return io.freepoly_from_json(data, h.dim)
    raise InputError("give --poly FILE or --poly-text TEXT")


def load_assignment(args) -> dict:
    out = {}
    if args.assign:
        out.update(io.assignment_from_json(io.load_json(args.assign)))
    for item in args.set or []:
        if "=" not in item:
            raise InputError(f"--set expects NAME=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        r = parse(v)
        if not r.is_constant():
            raise InputError(f"value for {k} must be a rational number")
        out[k.strip()] = r.constant_value()
    return out


def _twisted(h, alpha):
    return twist(require_hopf(h), alpha)


def _table_json(alg):
    labs = alg.labels
    return {f"{labs[i]},{labs[j]}": io.vector_to_json(labs, alg.table[i][j]) for i in range(alg.dim) for j in range(alg.dim)}


def _table_text(alg):
    labs = alg.labels
    lines = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            v = alg.table[i][j]
            terms = [f"({io.coeff_str(c)})*{labs[k]}" for k, c in enumerate(v) if not c.is_zero()]
            lines.append(f"{labs[i]} * {labs[j]} = {' + '.join(terms) if terms else '0'}")
    unit = [f"({io.coeff_str(c)})*{labs[k]}" for k, c in enumerate(alg.unit) if not c.is_zero()]
    lines.append(f"unit = {' + '.join(unit)}")
    return "\n".join(lines)


# -- commands ------------------------------------------------------------------


def cmd_validate(args):
    h, _ = load_subject(args)
    if isinstance(h, CoalgebraData):
        rep = [{"axiom": ax, "basis": h.labels[i]} for ax, i in h.report]
        kind = "coalgebra"
    else:
        rep = validate_hopf(h)
        kind = "Hopf algebra"
    ok = not rep
    report = {"command": "validate", "valid": ok, "violations": rep}
    coalg = h if isinstance(h, CoalgebraData) else h.coalg
    text = f"valid {kind}" if ok else f"invalid {kind}: " + format_report(coalg, h.report)
    return Result(report, 0 if ok else 1, text)


def cmd_cocycle_check(args):
    h, alpha = load_subject(args)
    require_hopf(h)
    cc = check_cocycle(alpha)
    nn = check_normalized(alpha)
    report = {
        "command": "cocycle-check",
        "cocycle": cc.ok,
        "witness": list(cc.witness) if cc.witness else None,
        "normalized": nn.ok,
        "normalizationWitness": nn.witness,
    }
    text = "is a two-cocycle" if cc else f"not a two-cocycle: fails at {cc.witness}"
    text += "; normalized" if nn else f"; not normalized (at {nn.witness})"
    return Result(report, 0 if cc else 1, text)


def cmd_twist_table(args):
    h, alpha = load_subject(args)
    try:
        alg = _twisted(h, alpha)
    except CocycleCheckFailed as exc:
        return Result({"command": "twist-table", "cocycle": False, "witness": exc.witness}, 1, str(exc))
    report = {"command": "twist-table", "table": _table_json(alg), "unit": io.vector_to_json(alg.labels, alg.unit)}
    return Result(report, 0, _table_text(alg))


def _sigma_lines(h, m, name):
    labs = h.labels
    return [f"{name}({labs[i]},{labs[j]}) = {io.coeff_str(m.values[i][j])}" for i in range(h.dim) for j in range(h.dim)]


def cmd_sigma(args):
    h, alpha = load_subject(args)
    s = universal_sigma(require_hopf(h), alpha)
    report = {"command": "sigma", **io.sigma_to_json(s)}
    text = "\n".join(_sigma_lines(h, s.sigma, "sigma") + _sigma_lines(h, s.sigma_inv, "sigmaInv"))
    return Result(report, 0, text)


def cmd_sigma_spec(args):
    if args.sigma:
        s = io.sigma_from_json(io.load_json(args.sigma))
    else:
        h, alpha = load_subject(args)
        s = universal_sigma(require_hopf(h), alpha)
    assign = load_assignment(args)
    try:
        alg = specialize(s, assign)
    except DenominatorVanishes as exc:
        report = {"command": "sigma-spec", "ok": False, "entry": exc.entry}
        return Result(report, 2, f"error: {exc}")
    report = {"command": "sigma-spec", "ok": True, "table": _table_json(alg), "unit": io.vector_to_json(alg.labels, alg.unit)}
    return Result(report, 0, _table_text(alg))


def cmd_theta(args):
    h, _ = load_subject(args)
    coalg = h.coalg if isinstance(h, HopfData) else h
    coalg.require_valid()
    th = theta(coalg, full=args.full)
    report = {"command": "theta", "full": bool(args.full), "theta": str(th)}
    return Result(report, 0, str(th))


def cmd_tinv(args):
    h, _ = load_subject(args)
    coalg = h.coalg if isinstance(h, HopfData) else h
    coalg.require_valid()
    g = tinv(coalg)
    report = {"command": "tinv", "tinv": io.linmap_to_json(g)}
    text = "\n".join(f"tinv({lab}) = {io.coeff_str(v)}" for lab, v in zip(coalg.labels, g.values))
    return Result(report, 0, text)


def cmd_integrals(args):
    h, _ = load_subject(args)
    basis = right_integral_space(require_hopf(h))
    report = {"command": "integrals", "dimension": len(basis), "basis": [io.linmap_to_json(n) for n in basis]}
    lines = [f"dimension {len(basis)}"]
    for n in basis:
        lines.append("N: " + ", ".join(f"{lab} -> {io.coeff_str(v)}" for lab, v in zip(h.labels, n.values)))
    return Result(report, 0, "\n".join(lines))


def _verdict(args, name, fn, yes, no):
    h, alpha = load_subject(args)
    alg = _twisted(h, alpha)
    p = load_poly(args, h)
    ok = fn(p, alg)
    report = {"command": name, "verdict": ok, "image": io.tensor_to_json(mu_alpha(p, alg))}
    return Result(report, 0 if ok else 1, yes if ok else no)


def cmd_identity_test(args):
    return _verdict(args, "identity-test", is_identity, "is an H-identity", "is not an H-identity")


def cmd_coinvariant_test(args):
    return _verdict(args, "coinvariant-test", is_coinvariant, "is coinvariant", "is not coinvariant")


def cmd_central_test(args):
    if args.membership:
        return _verdict(
            args,
            "central-test",
            center_membership,
            "lies in the center of the universal algebra",
            "does not lie in the center of the universal algebra",
        )
    return _verdict(args, "central-test", is_central, "is a central polynomial", "is not a central polynomial")


def cmd_identity_search(args):
    h, alpha = load_subject(args)
    alg = _twisted(h, alpha)
    res = identity_search(args.degree, alg, threads=args.threads)
    report = {
        "command": "identity-search",
        "degree": res.degree,
        "kernelDim": res.kernel_dim,
        "basis": [io.freepoly_to_json(p) for p in res.basis],
        "verified": res.verified,
    }
    lines = [f"degree {res.degree}: kernel dimension {res.kernel_dim} ({res.n_cols} words, {res.n_rows} rows)"]
    if args.show:
        lines += ["  " + p.to_str(h.labels) for p in res.basis]
    return Result(report, 0, "\n".join(lines))


def cmd_center(args):
    h, alpha = load_subject(args)
    alg = _twisted(h, alpha)
    z = center(alg)
    vecs = [io.vector_to_json(alg.labels, v) for v in z]
    report = {"command": "center", "dimension": len(z), "basis": vecs}
    lines = [f"center dimension {len(z)}"] + [
        "  " + " + ".join(f"({c})*{k}" for k, c in v.items()) for v in vecs
    ]
    return Result(report, 0, "\n".join(lines))


def cmd_trace_det(args):
    h, alpha = load_subject(args)
    alg = _twisted(h, alpha)
    d = trace_gram_det(alg)
    report = {"command": "trace-det", "det": io.coeff_str(d), "nonzero": not d.is_zero()}
    return Result(report, 0, io.coeff_str(d))


def cmd_lazy_transport(args):
    h, alpha = load_subject(args)
    require_hopf(h)
    if args.lam_file:
        lam = io.linmap_from_json(io.load_json(args.lam_file), h.coalg)
    elif args.lam:
        lam = io.linmap_from_json([s.strip() for s in args.lam.split(",")], h.coalg)
    else:
        raise InputError("give --lam v1,v2,... or --lam-file FILE")
    try:
        beta = lazy_transport(alpha, lam)
    except NotLazy as exc:
        return Result({"command": "lazy-transport", "lazy": False, "witness": exc.witness}, 1, str(exc))
    report = {"command": "lazy-transport", "lazy": True, "beta": io.matrix_to_json(beta.values)}
    return Result(report, 0, "\n".join(_sigma_lines(h, beta, "beta")))


def cmd_preset_tables(args):
    if args.preset in (None, "sweedler"):
        t = sweedler_expected_tables()
        report = {
            "command": "preset-tables",
            "preset": "sweedler",
            "sigma": {f"{x},{y}": io.coeff_str(v) for (x, y), v in sorted(t["sigma"].items())},
            "twisted": {f"{x},{y}": {k: io.coeff_str(c) for k, c in v.items()} for (x, y), v in sorted(t["twisted"].items())},
            "mu": [
                {
                    "name": name,
                    "poly": io.freepoly_to_json(lhs),
                    "equals": io.freepoly_to_json(rhs) if isinstance(rhs, FreePoly) else {"1": io.coeff_str(rhs)},
                }
                for name, lhs, rhs in t["mu"]
            ],
        }
        lines = [f"sigma({k}) = {v}" for k, v in report["sigma"].items()]
        lines += [f"{k.replace(',', ' . ')} = {v}" for k, v in report["twisted"].items()]
        lines += [f"mu({r['name']})" for r in report["mu"]]
        return Result(report, 0, "\n".join(lines))
    if args.preset == "groupAlgebra":
        h, alpha = load_subject(args)
        rows = group_niceness_witnesses(h, alpha)
        report = {
            "command": "preset-tables",
            "preset": "groupAlgebra",
            "niceness": [
                {"name": "_".join(name), "poly": io.freepoly_to_json(p), "equals": {h.labels[h.unit_index()]: io.coeff_str(v)}}
                for name, p, v in rows
            ],
        }
        text = "\n".join(f"mu({'_'.join(n)}) = ({io.coeff_str(v)}) ⊗ 1" for n, _, v in rows)
        return Result(report, 0, text)
    raise InputError(f"no expected tables for preset {args.preset}")


COMMANDS = {
    "validate": (cmd_validate, "check the Hopf algebra (or coalgebra) axioms"),
    "cocycle-check": (cmd_cocycle_check, "check the cocycle and normalization equations"),
    "twist-table": (cmd_twist_table, "multiplication table of the twisted algebra"),
    "sigma": (cmd_sigma, "universal cocycle and its convolution inverse"),
    "sigma-spec": (cmd_sigma_spec, "specialize the universal cocycle at rational values"),
    "theta": (cmd_theta, "canonical determinant of the coalgebra"),
    "tinv": (cmd_tinv, "convolution inverse of the generic map t"),
    "integrals": (cmd_integrals, "basis of right integrals"),
    "identity-test": (cmd_identity_test, "decide whether a polynomial is an H-identity"),
    "coinvariant-test": (cmd_coinvariant_test, "decide coinvariance in the universal algebra"),
    "central-test": (cmd_central_test, "decide whether a polynomial is central"),
    "identity-search": (cmd_identity_search, "all identities of a given degree"),
    "center": (cmd_center, "center of the twisted algebra"),
    "trace-det": (cmd_trace_det, "determinant of the trace form"),
    "lazy-transport": (cmd_lazy_transport, "transport a cocycle along a lazy linear form"),
    "preset-tables": (cmd_preset_tables, "expected-value tables of a preset"),
}


def _add_common(p):
    g = p.add_argument_group("algebra")
    g.add_argument("--preset", choices=PRESETS)
    g.add_argument("--hopf", metavar="FILE", help="Hopf algebra or coalgebra JSON")
    g.add_argument("--cocycle", metavar="FILE", help="cocycle JSON")
    g.add_argument("--a", help="sweedler parameter a (symbolic if omitted)")
    g.add_argument("--b", help="sweedler parameter b")
    g.add_argument("--c", help="sweedler parameter c")
    g.add_argument("--group", help="group for group presets, e.g. Z3")
    g.add_argument("--group-table", metavar="FILE", help='group JSON {"elements": [...], "table": [[...]]}')
    g.add_argument("--u", help="carry cocycle value u on a cyclic group algebra")
    g.add_argument("--n", type=int, default=2, help="matrix coalgebra size")
    o = p.add_argument_group("output")
    o.add_argument("--json", action="store_true", help="print the machine-readable report")
    o.add_argument("--out", metavar="FILE", help="also write the JSON report to FILE")
    o.add_argument("--verify", metavar="REPORT", help="compare against a saved JSON report")
    o.add_argument("--threads", type=int, default=None, help="worker cap for column evaluation")


def make_parser():
    parser = argparse.ArgumentParser(prog="hopftwist", description="Exact computations with twisted Hopf algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        if name in ("identity-test", "coinvariant-test", "central-test"):
            p.add_argument("--poly", metavar="FILE", help="polynomial JSON")
            p.add_argument("--poly-text", metavar="TEXT", help='polynomial such as "X_x X_x - X_1 X_1"')
        if name == "central-test":
            p.add_argument("--membership", action="store_true", help="test membership in the center instead")
        if name == "theta":
            p.add_argument("--full", action="store_true", help="full determinant of M instead of the reduced norm")
        if name == "sigma-spec":
            p.add_argument("--sigma", metavar="FILE", help="saved sigma report")
            p.add_argument("--assign", metavar="FILE", help='assignment JSON {"t_x": "2"}')
            p.add_argument("--set", action="append", metavar="NAME=VALUE")
        if name == "identity-search":
            p.add_argument("--degree", type=int, required=True)
            p.add_argument("--show", action="store_true", help="print the kernel basis")
        if name == "lazy-transport":
            p.add_argument("--lam", help="comma-separated values of the linear form")
            p.add_argument("--lam-file", metavar="FILE")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    fn = COMMANDS[args.command][0]
    try:
        res = fn(args)
    except (
        InputError,
        ParseError,
        InvalidHopfData,
        ResourceLimit,
        NotConvolutionInvertible,
        CocycleCheckFailed,
        HopfTwistError,
        FileNotFoundError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    blob = io.dumps(res.report)
    if args.out:
        Path(args.out).write_text(blob)
    if args.verify:
        try:
            saved = io.dumps(io.load_json(args.verify))
        except (FileNotFoundError, ParseError) as exc:
            print(f"error: {exc}", file=stderr)
            return 2
        same = saved == blob
        print("verified: report reproduced" if same else "verify failed: report differs", file=stdout)
        return 0 if same else 1
    if res.code == 2 and not args.json:
        print(res.text, file=stderr)
    else:
        print(blob if args.json else res.text, file=stdout, end="" if args.json else "\n")
    return res.code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
