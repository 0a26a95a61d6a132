"""Command-line front end.

Exit status: 0 on success, 1 on a kernel error (error JSON on stderr),
2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import (
    build_II,
    build_infinitesimal,
    build_jackson,
    build_kummer_witt,
    build_polynomial,
    check_confluence,
    is_central,
    normal_form,
    specialize,
)
from .algebra.expr import parse_expression, parse_scalar
from .algebra.presentation import QPresentation
from .arith import CyclotomicField, PrimeContext
from .classify import RamificationInput, report as classify_report
from .elliptic import ThetaVector, analyze_curve, brauer_class, load_curve, render_report, residue_root
from .errors import KernelError, ParseError
from .modules import Character, deformation_shape, ext1, one_dim_locus, tangent_matrix
from .modules.tables import reference_jackson_ext

PRESETS = ("jackson", "kw", "iq", "ii", "polynomial")
SYMBOLS = ("a", "b", "u", "v")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "yes", "1"):
        return True
    if t in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


# presentation input ---------------------------------------------------------

def _load_json(text: str):
    path = Path(text)
    try:
        if path.exists():
            return json.loads(path.read_text())
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc


def build_presentation(args) -> QPresentation:
    if args.input:
        return QPresentation.from_json(_load_json(args.input))
    if not args.preset:
        raise ParseError("either --preset or --input is required")
    K = CyclotomicField(args.zeta_order)
    scalar = lambda text: parse_scalar(text, None if "@" in str(text) else K)
    if args.preset == "jackson":
        pres = build_jackson(args.r, scalar(args.x), K.zeta())
    elif args.preset == "kw":
        pres = build_kummer_witt(args.zeta_order, args.r, scalar(args.x), K.zeta())
    elif args.preset == "iq":
        q = scalar(args.q) if args.q else K.zeta()
        pres = build_infinitesimal(args.gens, q, args.mode)
    elif args.preset == "ii":
        lam = scalar(args.lam) if args.lam else K.zeta()
        pres = build_II(args.p, lam, args.form)
    else:
        pres = build_polynomial(K, args.gens)
    if args.reduce_at:
        pres = specialize(pres, PrimeContext(args.reduce_at, args.zeta_order))
    return pres


def _add_presentation_args(p):
    p.add_argument("--preset", choices=PRESETS)
    p.add_argument("--input", help="presentation JSON (file path or inline)")
    p.add_argument("--zeta-order", type=int, default=3)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--x", default="1")
    p.add_argument("--q")
    p.add_argument("--gens", type=int, default=3)
    p.add_argument("--mode", choices=("wrap", "truncate"), default="wrap")
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--lam")
    p.add_argument("--form", choices=("shifted", "raw"), default="shifted")
    p.add_argument("--reduce-at", type=int, help="specialize to the residue field at this prime")


# characters -----------------------------------------------------------------

def _symbol_values(pres: QPresentation) -> dict:
    """Generic values for a, b, u, v on the plane e_0 = 0 of the Jackson locus."""
    F = pres.field
    x = pres.rule(2, 1).tail.get(0, F.zero) if pres.num_gens == 3 else F.zero
    a, u = F(2), F(3)
    if x:
        return {"a": a, "b": x / a, "u": u, "v": x / u}
    return {"a": a, "b": F.zero, "u": u, "v": F.zero}


def parse_character(text: str, pres: QPresentation) -> Character:
    values = []
    symbols = None
    for tok in str(text).split(","):
        t = tok.strip()
        neg = t.startswith("-") and t[1:] in SYMBOLS
        name = t[1:] if neg else t
        if name in SYMBOLS:
            if pres.family != "jackson":
                raise ParseError("symbolic entries are only allowed with the jackson preset")
            symbols = symbols or _symbol_values(pres)
            values.append(-symbols[name] if neg else symbols[name])
        else:
            values.append(parse_scalar(t, pres.field))
    return Character(values, pres.field)


# output ---------------------------------------------------------------------

def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _table(rows: list[tuple]) -> str:
    if not rows:
        return ""
    width = max(len(str(k)) for k, _ in rows)
    return "\n".join(f"{str(k).ljust(width)}  {v}" for k, v in rows)


# commands -------------------------------------------------------------------

def cmd_present(args):
    pres = build_presentation(args)
    data = pres.to_json()
    text = "\n".join([f"field: {pres.field.describe()}", f"generators: {pres.num_gens}"]
                     + pres.relation_strings())
    return data, text


def cmd_normal_form(args):
    pres = build_presentation(args)
    nf = normal_form(args.expression, pres)
    return {"normal_form": str(nf), "terms": nf.to_json()}, str(nf)


def cmd_confluence(args):
    pres = build_presentation(args)
    witnesses = check_confluence(pres)
    data = {"confluent": not witnesses, "witnesses": [w.to_json() for w in witnesses]}
    lines = [f"confluent: {not witnesses}"] + [f"{w.triple}: {w.difference}" for w in witnesses]
    return data, "\n".join(lines)


def cmd_central(args):
    pres = build_presentation(args)
    poly = parse_expression(args.expression, pres)
    central = is_central(poly, pres)
    return {"expression": str(poly), "central": central}, f"{poly}: {'central' if central else 'not central'}"


def cmd_locus(args):
    pres = build_presentation(args)
    locus = one_dim_locus(pres)
    lines = [f"case: {locus.case}"] + [c.describe() for c in locus.components]
    return locus.to_json(), "\n".join(lines)


def cmd_ext(args):
    pres = build_presentation(args)
    M, N = parse_character(args.m, pres), parse_character(args.n, pres)
    res = ext1(pres, M, N)
    data = {"M": M.to_json(), "N": N.to_json(), **res.to_json()}
    if pres.family == "jackson" and not M[0] and not N[0]:
        s = 1 / pres.rule(1, 0).q
        x = pres.rule(2, 1).tail.get(0, pres.field.zero)
        ref = reference_jackson_ext(s, x, M[1], M[2], N[1], N[2])
        data["reference_row"] = None if ref is None else {"row": ref[0], "dimension": ref[1]}
    return data, f"dim Ext^1(M, N) = {res.dimension}"


def cmd_tangent(args):
    pres = build_presentation(args)
    chars = [parse_character(c, pres) for c in args.chars.split(";")]
    labels = [f"M{i + 1}" for i in range(len(chars))]
    tangent = tangent_matrix(pres, chars)
    shape = deformation_shape(tangent, labels)
    data = {"modules": [c.to_json() for c in chars], "tangent": tangent, "shape": shape.to_json()}
    text = "\n".join([" ".join(str(x) for x in row) for row in tangent] + [shape.render()])
    return data, text


def cmd_classify(args):
    inp = RamificationInput(n=args.n, v_x=args.v_x, q_divides_n=args.ell_divides_n, e_abs=args.e_abs)
    data = classify_report(inp)
    return data, _table(sorted(data.items()))


def cmd_curve_analyze(args):
    data = load_curve(args.curve)
    theta = None
    if args.theta:
        from .elliptic.fibre import build_special_fibre
        F = build_special_fibre(data.p, data.f, data.d).field
        theta = ThetaVector(data.p, [parse_scalar(t, F) for t in args.theta.split(",")])
    report = analyze_curve(data, theta)
    return report, render_report(report)


def cmd_brauer(args):
    if args.generic:
        K = CyclotomicField(args.w)
        zeta = K.zeta()
    else:
        zeta = residue_root(args.p, args.w)
        K = zeta.field
    theta = ThetaVector(args.p, [parse_scalar(t, K) for t in args.theta.split(",")])
    pairs = [(args.i, args.j)] if args.i is not None else [(0, 1), (0, 2), (1, 2)]
    out = [brauer_class(theta, i, j, args.w, args.p, zeta).to_json() for i, j in pairs]
    text = "\n".join(f"({q['i']},{q['j']}) a = {q['a']} rank {q['rank']} azumaya {q['azumaya']} {q['kind']}"
                     for q in out)
    return {"field": K.describe(), "quotients": out}, text


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jackson-space", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, func, extra in (
        ("present", cmd_present, None),
        ("normal-form", cmd_normal_form, "expression"),
        ("confluence", cmd_confluence, None),
        ("central", cmd_central, "expression"),
        ("locus", cmd_locus, None),
    ):
        p = sub.add_parser(name, parents=[common])
        _add_presentation_args(p)
        if extra:
            p.add_argument(extra)
        p.set_defaults(func=func)

    p = sub.add_parser("ext", parents=[common])
    _add_presentation_args(p)
    p.add_argument("--m", required=True, help="quotient character, comma separated")
    p.add_argument("--n", required=True, help="submodule character, comma separated")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("tangent", parents=[common])
    _add_presentation_args(p)
    p.add_argument("--chars", required=True, help="characters separated by ';'")
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("classify", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--v-x", type=int, required=True)
    p.add_argument("--ell-divides-n", type=_bool, required=True)
    p.add_argument("--e-abs", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("curve-analyze", parents=[common])
    p.add_argument("curve", help="fixture path or label")
    p.add_argument("--theta", help="comma separated theta_0..theta_{p-1}")
    p.set_defaults(func=cmd_curve_analyze)

    p = sub.add_parser("brauer", parents=[common])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--generic", action="store_true", help="work over Q(zeta_w) instead of the residue field")
    p.set_defaults(func=cmd_brauer)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        data, text = args.func(args)
    except ParseError as exc:
        print(dump({"error": exc.name, "message": str(exc)}), file=err)
        return 2
    except KernelError as exc:
        print(dump({"error": exc.name, "message": str(exc)}), file=err)
        return 1
    except (OSError, ValueError) as exc:
        print(dump({"error": type(exc).__name__, "message": str(exc)}), file=err)
        return 2
    print(dump(data) if args.format == "json" else text, file=out)
    return 0


def main() -> None:
    raise SystemExit(run())
