"""Reduction data of elliptic curves at l = p and the consistency checks on it."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from pathlib import Path

from ..arith.finite_field import FiniteField
from ..errors import BadPrime, InconsistentPair, InvalidModule
from ..kodaira import KodairaSymbol

FIXTURE_ENV = "JACKSON_FIXTURES"
PACKAGED_FIXTURES = Path(__file__).with_name("fixtures")
REDUCTIONS = ("good_ordinary", "good_supersingular", "split_multiplicative",
              "nonsplit_multiplicative", "additive")


@dataclass
class CurveReductionData:
    label: str
    p: int
    kodaira: KodairaSymbol
    f: int
    d: int
    v_j: int | None
    v_delta_min: int
    component_group_order: int
    weierstrass: tuple | None = None
    torsion_structure: str = "0"
    torsion_points: list = field(default_factory=list)
    reduction: str | None = None

    def __post_init__(self):
        if isinstance(self.kodaira, str):
            self.kodaira = KodairaSymbol.parse(self.kodaira)
        if self.reduction is None:
            self.reduction = {"good": "good_ordinary", "multiplicative": "split_multiplicative",
                              "additive": "additive"}[self.kodaira.reduction]
        if self.reduction not in REDUCTIONS:
            raise ValueError(f"unknown reduction kind {self.reduction!r}")

    @property
    def w(self) -> int:
        return self.f + self.d

    @property
    def has_p_torsion(self) -> bool:
        return self.torsion_structure not in ("0", "", None)

    @classmethod
    def from_json(cls, data: dict) -> "CurveReductionData":
        torsion = data.get("torsion") or {}
        w = data.get("weierstrass")
        return cls(
            label=data["label"], p=int(data["p"]), kodaira=data["kodaira"],
            f=int(data["f"]), d=int(data["d"]),
            v_j=None if data.get("v_j") is None else int(data["v_j"]),
            v_delta_min=int(data["v_delta_min"]),
            component_group_order=int(data.get("component_group_order", 1)),
            weierstrass=tuple(int(a) for a in w) if w else None,
            torsion_structure=str(torsion.get("structure", "0")),
            torsion_points=[list(pt) for pt in torsion.get("points", [])],
            reduction=data.get("reduction"),
        )

    def to_json(self) -> dict:
        return {
            "label": self.label, "p": self.p, "kodaira": str(self.kodaira),
            "f": self.f, "d": self.d, "v_j": self.v_j, "v_delta_min": self.v_delta_min,
            "component_group_order": self.component_group_order,
            "weierstrass": list(self.weierstrass) if self.weierstrass else None,
            "torsion": {"structure": self.torsion_structure, "points": self.torsion_points},
            "reduction": self.reduction,
        }


def fixture_dir() -> Path:
    env = os.environ.get(FIXTURE_ENV)
    return Path(env) if env else PACKAGED_FIXTURES


def load_curve(ref) -> CurveReductionData:
    """Load from a path, or by label from the fixture directory."""
    path = Path(ref)
    if not path.exists():
        path = fixture_dir() / f"{Path(str(ref)).stem}.json"
    with open(path) as fh:
        return CurveReductionData.from_json(json.load(fh))


def fixture_labels() -> list[str]:
    return sorted(p.stem for p in fixture_dir().glob("*.json"))


# Weierstrass invariants ----------------------------------------------------

def discriminant(a1, a2, a3, a4, a6) -> int:
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def c4_invariant(a1, a2, a3, a4, a6) -> int:
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    return b2 * b2 - 24 * b4


def valuation(x, p: int) -> int | None:
    """p-adic valuation of a nonzero rational; None for zero."""
    x = Fraction(x)
    if not x:
        return None
    v, num, den = 0, x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


# checks --------------------------------------------------------------------

def ogg_check(data: CurveReductionData) -> bool:
    return data.f + data.d == data.v_delta_min + 1


def conductor_of_type(p: int, reduction: str):
    """Conductor exponent for p >= 3; a (lo, hi) range for additive at p = 3."""
    if p < 3:
        raise BadPrime("p = 2 is not covered")
    kind = {"good_ordinary": "good", "good_supersingular": "good",
            "split_multiplicative": "multiplicative",
            "nonsplit_multiplicative": "multiplicative"}.get(reduction, reduction)
    if kind == "good":
        return 0
    if kind == "multiplicative":
        return 1
    if kind != "additive":
        raise ValueError(f"unknown reduction {reduction!r}")
    return 2 if p >= 5 else (2, 5)


def conductor_matches(data: CurveReductionData) -> bool:
    expected = conductor_of_type(data.p, data.reduction)
    if isinstance(expected, tuple):
        return expected[0] <= data.f <= expected[1]
    return data.f == expected


def exclusion_check(data: CurveReductionData) -> list[str]:
    """Violations for a curve declared to carry a K-rational p-torsion point (e = 1)."""
    out = []
    if data.reduction == "good_supersingular":
        out.append("good supersingular reduction is impossible")
    if data.reduction == "nonsplit_multiplicative":
        out.append("non-split multiplicative reduction is impossible")
    if data.reduction == "additive" and data.p not in (2, 3, 5, 7):
        out.append(f"additive reduction is impossible for p = {data.p}")
    return out


# additive d/f tables -------------------------------------------------------

_P3_TYPES = {"II": (1, "gt2"), "III": (2, "eq2"), "IV": (3, "gt2"), "IV*": (7, "gt2")}


def _d_of_type(kodaira: KodairaSymbol, v_j: int | None) -> int:
    if kodaira.kind == "I*":
        return 5 + (kodaira.n if kodaira.n else (-v_j if v_j and v_j < 0 else 0))
    return kodaira.components


def allowed_d_additive(p: int, f: int, kodaira=None, d: int | None = None,
                       v_j: int | None = None) -> set[int]:
    """Admissible component counts d for additive reduction.

    With ``kodaira`` the answer is the singleton dictated by the type, after
    checking it against f (and d when given); InconsistentPair otherwise.
    """
    if isinstance(kodaira, str):
        kodaira = KodairaSymbol.parse(kodaira)
    if kodaira is not None and kodaira.reduction != "additive":
        raise InconsistentPair(f"{kodaira} is not an additive type")
    if p >= 5:
        if f != 2:
            raise InconsistentPair(f"additive reduction at p = {p} forces f = 2, got {f}")
        if kodaira is None:
            allowed = {1, 2, 3, 5, 7, 8, 9}
            if v_j is not None and v_j < 0:
                allowed.add(5 - v_j)
        else:
            allowed = {_d_of_type(kodaira, v_j)}
    elif p == 3:
        if not 2 <= f <= 5:
            raise InconsistentPair(f"additive reduction at p = 3 forces 2 <= f <= 5, got {f}")
        if kodaira is None:
            allowed = {1, 3, 7, 9} if f > 2 else {2, 5, 6, 7, 8, 9}
        elif kodaira.kind == "I*":
            if f != 2:
                raise InconsistentPair(f"{kodaira} at p = 3 forces f = 2, got {f}")
            allowed = {5 + kodaira.n}
        elif str(kodaira) in _P3_TYPES:
            dd, rule = _P3_TYPES[str(kodaira)]
            if (rule == "eq2") != (f == 2):
                raise InconsistentPair(f"{kodaira} at p = 3 is incompatible with f = {f}")
            allowed = {dd}
        else:
            raise InconsistentPair(f"{kodaira} does not occur at p = 3 in the additive table")
    else:
        raise BadPrime("p = 2 is not covered")
    if d is not None and d not in allowed:
        raise InconsistentPair(f"d = {d} is not admissible (allowed {sorted(allowed)})")
    return allowed


def fixture_checks(data: CurveReductionData) -> list[dict]:
    checks = [
        {"name": "ogg", "ok": ogg_check(data)},
        {"name": "conductor", "ok": conductor_matches(data)},
        {"name": "exclusion", "ok": not exclusion_check(data), "violations": exclusion_check(data)},
    ]
    if data.reduction == "additive":
        try:
            allowed_d_additive(data.p, data.f, data.kodaira, data.d, data.v_j)
            ok, msg = True, ""
        except InconsistentPair as exc:
            ok, msg = False, str(exc)
        checks.append({"name": "additive_table", "ok": ok, "detail": msg})
    elif data.reduction.endswith("multiplicative"):
        checks.append({"name": "d_equals_minus_v_j", "ok": data.v_j is not None and data.d == -data.v_j})
    return checks


# additive torsion test -----------------------------------------------------

def change_coordinates(coeffs, r: int, s: int, t: int) -> tuple:
    """x = x' + r, y = y' + s x' + t (u = 1)."""
    a1, a2, a3, a4, a6 = coeffs
    return (
        a1 + 2 * s,
        a2 - s * a1 + 3 * r - s * s,
        a3 + r * a1 + 2 * t,
        a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
        a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1,
    )


def normalize_model(coeffs, p: int) -> tuple:
    """First (r, s, t) in [0, p)^3 moving every coefficient into pZ."""
    for r, s, t in product(range(p), repeat=3):
        new = change_coordinates(coeffs, r, s, t)
        if all(a % p == 0 for a in new):
            return new
    raise InvalidModule(f"no integral translation puts the model into the maximal ideal at {p}")


def torsion_parameter(p: int, a4, a6, field: FiniteField | None = None):
    """The residue a = 3 a4 / 5 (p = 5) or 4 a6 / 7 (p = 7)."""
    if p not in (5, 7):
        raise BadPrime(f"the additive torsion test applies to p = 5, 7 only, got {p}")
    field = field or FiniteField(p)
    if field.p != p:
        raise BadPrime(f"residue field characteristic {field.p} differs from p = {p}")
    value = Fraction(3 * Fraction(a4), 5) if p == 5 else Fraction(4 * Fraction(a6), 7)
    return field(value)


def additive_torsion_test(p: int, a4, a6, field: FiniteField | None = None) -> bool:
    """Whether T - a T^p has a root T != 0 in k, i.e. a T^{p-1} = 1 is solvable."""
    field = field or FiniteField(p)
    a = torsion_parameter(p, a4, a6, field)
    if not a:
        return False
    # x is a (p-1)-th power in F_q iff x^((q-1)/(p-1)) = 1
    return (1 / a) ** ((field.order - 1) // (p - 1)) == field.one


def curve_torsion_test(data: CurveReductionData, field: FiniteField | None = None) -> bool:
    if not data.weierstrass:
        raise InvalidModule(f"{data.label} has no Weierstrass model")
    a1, a2, a3, a4, a6 = normalize_model(data.weierstrass, data.p)
    return additive_torsion_test(data.p, a4, a6, field)
