"""Ramification and fibre-type decisions from valuation data."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra.families import build_jackson, build_kummer_witt
from .algebra.presentation import QPresentation
from .algebra.rewriting import shift_generator, specialize
from .arith.cyclotomic import CyclotomicField
from .arith.residue import PrimeContext
from .errors import WrongRegime
from .kodaira import KodairaSymbol
from .modules.locus import shift_candidates

FIBRE_TAGS = ("Polynomial", "QuantumAffine", "GenericJackson", "WeylOverLine", "Affine3", "GenericKW")


@dataclass(frozen=True)
class RamificationInput:
    n: int
    v_x: int
    q_divides_n: bool
    e_abs: int = 1
    residue_char: int | None = None

    def __post_init__(self):
        if self.v_x < 0:
            raise ValueError("v_x must be non-negative (x is taken integral)")
        if self.e_abs < 1:
            raise ValueError("e_abs must be at least 1")


@dataclass(frozen=True)
class FibreType:
    tag: str
    parameters: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"tag": self.tag, **self.parameters}


def classify_cyclotomic_ramification(p: int, e_abs: int, q_divides_p: bool) -> str:
    if not q_divides_p:
        return "unramified"
    if p == 2:
        return "ramified"
    return "unramified" if e_abs % (p - 1) == 0 else "ramified"


def normalize_generator(v_x: int, n: int) -> int:
    return v_x % n


def classify_kummer_ramification(inp: RamificationInput) -> str:
    if inp.v_x == 0:
        return "unramified"
    if inp.v_x % inp.n == 0:
        return "unramified_after_generator_change"
    return "ramified"


def classify_fibre(inp: RamificationInput) -> FibreType:
    if not inp.q_divides_n:
        return FibreType("GenericJackson" if inp.v_x == 0 else "QuantumAffine")
    return FibreType("WeylOverLine" if inp.v_x == 0 else "Affine3")


def semistability_verdict(fibre: FibreType, v_x: int, n: int) -> str:
    if fibre.tag == "GenericJackson":
        return "semistable"
    if fibre.tag == "QuantumAffine":
        return "semistable_after_change" if v_x % n == 0 else "non_semistable"
    raise WrongRegime(f"{fibre.tag} arises only when the residue characteristic divides n")


def kida_unramified(kodaira: KodairaSymbol, p: int, n_j: int | None = None) -> bool:
    if isinstance(kodaira, str):
        kodaira = KodairaSymbol.parse(kodaira)
    n = kodaira.n if n_j is None else n_j
    if kodaira.kind == "I" and kodaira.n == 0:
        return True
    if p >= 3:
        return kodaira.kind == "I" and n % p == 0
    if kodaira.kind == "I":
        return n % 2 == 0
    if kodaira.kind == "I*":
        return kodaira.n == 0 or n % 2 == 1
    return False


# specialize-then-inspect path ---------------------------------------------

def inspect_fibre(pres: QPresentation) -> FibreType:
    """Read the fibre type off the scalars of a reduced presentation."""
    one = pres.field.one
    commuting = all(r.q == one for r in pres.rules.values())
    tails = not pres.is_tail_free()
    params = {"field": pres.field.describe()}
    if pres.family == "jackson":
        params["q"] = str(1 / pres.rule(1, 0).q)
        if commuting:
            return FibreType("WeylOverLine" if tails else "Affine3", params)
        return FibreType("GenericJackson" if tails else "QuantumAffine", params)
    if commuting:
        return FibreType("Polynomial", params)
    if not tails:
        return FibreType("QuantumAffine", params)
    # affine tails may be an artefact of the basis: try e_k -> e_k + c
    for k, c in shift_candidates(pres):
        if shift_generator(pres, k, c).is_tail_free():
            return FibreType("QuantumAffine", {**params, "shift": f"e{k} -> e{k} + {c}"})
    return FibreType("GenericKW", params)


def jackson_fibre_by_specialization(n: int, r: int, v_x: int, ell: int, unit: int = 1) -> FibreType:
    """Build Jackson over Q(zeta_n) with x = ell^v_x * unit and reduce at ell."""
    K = CyclotomicField(n)
    pres = build_jackson(r, K(ell**v_x * unit), K.zeta())
    return inspect_fibre(specialize(pres, PrimeContext(ell, n)))


def classify_kw_fibre(zeta_bar_is_one: bool, x_bar_is_zero: bool) -> FibreType:
    if zeta_bar_is_one:
        return FibreType("Polynomial")
    if x_bar_is_zero:
        return FibreType("QuantumAffine")
    return FibreType("GenericKW")


def kw_fibre_by_specialization(n: int, r: int, v_x: int, ell: int, unit: int = 1) -> FibreType:
    K = CyclotomicField(n)
    pres = build_kummer_witt(n, r, K(ell**v_x * unit), K.zeta())
    return inspect_fibre(specialize(pres, PrimeContext(ell, n)))


def report(inp: RamificationInput) -> dict:
    """CLI-facing summary: ramification, fibre and semistability verdict."""
    fibre = classify_fibre(inp)
    out = {"ramification": classify_kummer_ramification(inp), "fibre": fibre.tag}
    try:
        out["verdict"] = semistability_verdict(fibre, inp.v_x, inp.n)
    except WrongRegime:
        out["verdict"] = None
    return out
