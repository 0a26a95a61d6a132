"""Special fibres II_w, theta-element families, hyperplanes and quantum-plane quotients."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import lcm

from ..algebra.families import build_II
from ..algebra.presentation import NCPolynomial, QPresentation
from ..arith import QQ
from ..arith.finite_field import FiniteField
from ..arith.residue import residue_degree_of, smallest_root_of_unity, split_prime_part
from ..errors import IndexOutOfRange, InvalidModule, LengthMismatch
from ..modules.characters import Character, validate_module


def residue_root(p: int, w: int, field: FiniteField | int | None = None):
    """zeta_w reduced mod p: the fixed root of order w' (w without its p-part)."""
    m = field.m if isinstance(field, FiniteField) else int(field or 1)
    _, w_prime = split_prime_part(w, p)
    m = lcm(m, residue_degree_of(p, w_prime))
    return smallest_root_of_unity(FiniteField(p, m), w_prime)


def build_special_fibre(p: int, f: int, d: int, field: FiniteField | int | None = None) -> QPresentation:
    """II_{f+d} over k(zeta_bar_{f+d}); the residue field is extended as needed."""
    w = f + d
    if w < 1:
        raise ValueError("w = f + d must be at least 1")
    zeta = residue_root(p, w, field)
    pres = build_II(p, zeta, "shifted")
    pres.params = dict(pres.params, w=w, f=f, d=d, zeta_order=zeta.multiplicative_order())
    return pres


@dataclass
class ThetaVector:
    p: int
    coeffs: tuple
    provenance: dict | None = None

    def __post_init__(self):
        self.coeffs = tuple(self.coeffs)
        if len(self.coeffs) != self.p:
            raise LengthMismatch(f"theta needs exactly p = {self.p} coefficients, got {len(self.coeffs)}")

    @property
    def field(self):
        for c in self.coeffs:
            if hasattr(c, "field"):
                return c.field
        return QQ

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def slot(self, gen: int):
        """Coefficient attached to e_0, e_1, e_2 = e_{p-1}."""
        if not 0 <= gen <= 2:
            raise IndexOutOfRange(f"generator index {gen} outside 0..2")
        return self.coeffs[(0, 1, self.p - 1)[gen]]

    def scaled(self, c) -> "ThetaVector":
        return ThetaVector(self.p, tuple(c * t for t in self.coeffs), self.provenance)

    def to_json(self) -> dict:
        data = {"p": self.p, "coeffs": [_json(c) for c in self.coeffs]}
        if self.provenance:
            data["provenance"] = self.provenance
        return data


def _json(c):
    return c.to_json() if hasattr(c, "to_json") else str(c)


@dataclass
class NFamily:
    p: int
    delta_E: object
    z: tuple
    theta: ThetaVector
    zeta_w: object
    valid: list = dc_field(default_factory=list)
    empty: bool = False

    @property
    def members(self) -> list[Character]:
        return [Character((self.delta_E, zj, tj)) for zj, tj in zip(self.z, self.theta.coeffs)]

    def mirrored(self, exponent: int | None = None) -> "NFamily":
        """Rescale every theta_j by zeta^exponent (default 2 - p)."""
        e = 2 - self.p if exponent is None else exponent
        return build_n_family(self.p, self.zeta_w, self.delta_E, self.z, self.theta.scaled(self.zeta_w ** e))

    def same_members(self, other: "NFamily") -> bool:
        return [tuple(m) for m in self.members] == [tuple(m) for m in other.members]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "members": [m.to_json() for m in self.members],
            "valid": self.valid,
            "empty": self.empty,
        }


def build_n_family(p: int, zeta_w, delta_E, z, theta: ThetaVector) -> NFamily:
    z = tuple(z)
    if len(z) != p or len(theta.coeffs) != p:
        raise LengthMismatch(f"z and theta must both have length p = {p}")
    pres = build_II(p, zeta_w, "shifted")
    F = zeta_w.field
    fam = NFamily(p, F(delta_E), tuple(F(v) for v in z), ThetaVector(p, tuple(F(t) for t in theta.coeffs),
                                                                      theta.provenance), zeta_w)
    fam.valid = [validate_module(pres, m) for m in fam.members]
    # every z_j nonzero with (1 - zeta) Delta_E != 0 leaves no member at all
    fam.empty = bool((1 - zeta_w) * fam.delta_E) and all(fam.z)
    return fam


def theta_hyperplane(theta: ThetaVector) -> NCPolynomial:
    """H = theta_0 e_0 + theta_1 e_1 + theta_{p-1} e_2."""
    F = theta.field
    h = NCPolynomial.zero(F, 3)
    for k in range(3):
        c = F(theta.slot(k))
        if c:
            h = h + NCPolynomial.gen(F, 3, k, c)
    return h


# quantum-plane quotients ---------------------------------------------------

PAIR_EXPONENT = {(0, 1): lambda p: 1, (0, 2): lambda p: p - 1, (1, 2): lambda p: p - 2}


class _PlaneRewriter:
    """Words in a = e_i, b = e_j with b a -> (1/q) a b, a^w -> theta_i, b^w -> theta_j."""

    def __init__(self, q_swap, w: int, ti, tj, one):
        self.q_swap, self.w, self.ti, self.tj, self.one = q_swap, w, ti, tj, one
        self.memo: dict = {}

    def _step(self, word: tuple):
        w = self.w
        for pos in range(len(word)):
            if word[pos:pos + 2] == (1, 0):
                return [(self.q_swap, word[:pos] + (0, 1) + word[pos + 2:])]
            for letter, value in ((0, self.ti), (1, self.tj)):
                if word[pos:pos + w] == (letter,) * w:
                    return [(value, word[:pos] + word[pos + w:])] if value else []
        return None

    def normal_form(self, word: tuple) -> dict:
        word = tuple(word)
        if word in self.memo:
            return self.memo[word]
        step = self._step(word)
        if step is None:
            out = {word: self.one}
        else:
            out = {}
            for c, sub in step:
                for mono, coeff in self.normal_form(sub).items():
                    v = out.get(mono, 0 * self.one) + c * coeff
                    if v:
                        out[mono] = v
                    else:
                        out.pop(mono, None)
        self.memo[word] = out
        return out

    def overlaps_resolve(self) -> bool:
        w = self.w
        # b a^w and b^w a: swap first versus power rule first
        for word in ((1,) + (0,) * w, (1,) * w + (0,)):
            swap_pos = word.index(0) - 1
            swapped = [(self.q_swap, word[:swap_pos] + (0, 1) + word[swap_pos + 2:])]
            if self._reduce_all(swapped) != self._reduce_all(self._alt(word)):
                return False
        return True

    def _alt(self, word: tuple):
        w = self.w
        if word[1:] == (0,) * w:
            return [(self.ti, word[:1])] if self.ti else []
        return [(self.tj, word[w:])] if self.tj else []

    def _reduce_all(self, terms) -> dict:
        out: dict = {}
        for c, sub in terms or []:
            for mono, coeff in self.normal_form(sub).items():
                out[mono] = out.get(mono, 0 * self.one) + c * coeff
        return {m: v for m, v in out.items() if v}

    def irreducible_words(self) -> list[tuple]:
        """Breadth-first enumeration of words containing no left-hand side."""
        found, frontier = [()], [()]
        while frontier:
            nxt = []
            for word in frontier:
                for letter in (0, 1):
                    cand = word + (letter,)
                    if self._step(cand) is None:
                        nxt.append(cand)
            found.extend(nxt)
            frontier = nxt
        return found


@dataclass
class QuantumPlaneQuotient:
    i: int
    j: int
    w: int
    p: int
    exponent: int
    q_power: object
    theta_i: object
    theta_j: object
    basis: list
    confluent: bool

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def azumaya(self) -> bool:
        return bool(self.theta_i * self.theta_j)

    @property
    def kind(self) -> str:
        if not self.azumaya:
            return "not Azumaya"
        order = self.q_power.multiplicative_order() if hasattr(self.q_power, "multiplicative_order") else None
        if self.q_power == self.q_power.field.one:
            return "commutative"
        if order is not None and order != self.w:
            return f"q of order {order} < w"
        return "quaternion" if self.w == 2 else f"cyclic of degree {self.w}"

    def to_json(self) -> dict:
        return {
            "i": self.i, "j": self.j, "w": self.w, "a": self.exponent,
            "q_power": _json(self.q_power),
            "theta_i": _json(self.theta_i), "theta_j": _json(self.theta_j),
            "azumaya": self.azumaya, "rank": self.rank, "kind": self.kind,
            "confluent": self.confluent,
        }


def brauer_class(theta: ThetaVector, i: int, j: int, w: int, p: int, zeta_w) -> QuantumPlaneQuotient:
    """Q_{i,j} / (e_i^w = theta_i, e_j^w = theta_j), with e_i e_j = zeta_w^a e_j e_i."""
    if (i, j) not in PAIR_EXPONENT:
        raise IndexOutOfRange(f"pair ({i}, {j}) is not one of (0,1), (0,2), (1,2)")
    if w < 1:
        raise ValueError("w must be at least 1")
    F = zeta_w.field
    a = PAIR_EXPONENT[(i, j)](p)
    q_power = zeta_w ** a
    ti, tj = F(theta.slot(i)), F(theta.slot(j))
    rw = _PlaneRewriter(1 / q_power, w, ti, tj, F.one)
    confluent = rw.overlaps_resolve()
    basis = rw.irreducible_words()
    if confluent and len(basis) != w * w:
        raise InvalidModule(f"basis enumeration gave {len(basis)} words, expected {w * w}")
    return QuantumPlaneQuotient(i, j, w, p, a, q_power, ti, tj, basis, confluent)
