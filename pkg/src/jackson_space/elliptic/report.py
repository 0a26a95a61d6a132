"""Curve analysis report: checks, special fibre, Ext table, Brauer data."""

from __future__ import annotations

from ..modules.ext import ext1
from .curves import CurveReductionData, curve_torsion_test, exclusion_check, fixture_checks
from .fibre import ThetaVector, brauer_class, build_special_fibre


def default_theta(p: int, field) -> ThetaVector:
    """All-ones placeholder: theta is data, never computed from the curve."""
    return ThetaVector(p, tuple(field.one for _ in range(p)), {"label": "unit placeholder"})


def analyze_curve(data: CurveReductionData, theta: ThetaVector | None = None) -> dict:
    pres = build_special_fibre(data.p, data.f, data.d)
    F = pres.field
    zeta = 1 / pres.rule(1, 0).q
    theta = theta or default_theta(data.p, F)
    theta = ThetaVector(data.p, tuple(F(t) for t in theta.coeffs), theta.provenance)
    # N = (0, 0, theta_{p-1}) and its mirror
    t2 = theta.slot(2)
    mods = [(F.zero, F.zero, t2), (F.zero, F.zero, zeta ** (2 - data.p) * t2)]
    labels = ["N", "N_perp"]
    table = [[ext1(pres, a, b).dimension for b in mods] for a in mods]
    brauer = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        q = brauer_class(theta, i, j, data.w, data.p, zeta)
        brauer.append({"i": i, "j": j, "azumaya": q.azumaya, "rank": q.rank, "kind": q.kind})
    report = {
        "curve": data.to_json(),
        "checks": fixture_checks(data),
        "fibre_presentation": pres.to_json(),
        "fibre_relations": pres.relation_strings(),
        "w": data.w,
        "ext_tables": {"labels": labels, "modules": [[x.to_json() for x in m] for m in mods], "dimensions": table},
        "theta": theta.to_json(),
        "brauer": brauer,
    }
    if data.reduction == "additive" and data.p in (5, 7) and data.weierstrass:
        report["additive_torsion_test"] = curve_torsion_test(data)
    report["exclusion_violations"] = exclusion_check(data)
    return report


def render_report(report: dict) -> str:
    c = report["curve"]
    lines = [
        f"curve {c['label']}  p = {c['p']}  Kodaira {c['kodaira']}  f = {c['f']}  d = {c['d']}  w = {report['w']}",
        f"torsion: {c['torsion']['structure']}",
        "checks:",
    ]
    lines += [f"  {ch['name']}: {'ok' if ch['ok'] else 'FAILED'}" for ch in report["checks"]]
    if "additive_torsion_test" in report:
        lines.append(f"additive torsion test: {report['additive_torsion_test']}")
    lines.append("special fibre:")
    lines += [f"  {r}" for r in report["fibre_relations"]]
    ext = report["ext_tables"]
    lines.append("Ext^1 table (" + ", ".join(ext["labels"]) + "):")
    lines += ["  " + " ".join(str(x) for x in row) for row in ext["dimensions"]]
    lines.append("Brauer quotients:")
    lines += [f"  ({b['i']},{b['j']}) rank {b['rank']} {b['kind']}" for b in report["brauer"]]
    return "\n".join(lines)
