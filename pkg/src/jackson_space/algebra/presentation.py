"""Presentations by q-commutation rules with affine tails, and PBW normal forms.

A rule for the pair j > i reads

    e_j e_i = q * e_i e_j + sum_k c_k e_k + c

and is used left to right, so normal monomials are e_0^a0 ... e_{g-1}^a{g-1}.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Mapping

from ..arith.cyclotomic import CyclotomicField
from ..arith.finite_field import FiniteField
from ..errors import DivisionByZero, IndexOutOfRange, NonTerminating, ParseError

FUEL = 10**6

Monomial = tuple[int, ...]

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


# scalars ------------------------------------------------------------------

def field_to_json(field) -> dict:
    return field.to_json()


def field_from_json(data: Mapping):
    try:
        kind = data["type"]
        if kind == "cyclotomic":
            return CyclotomicField(int(data["n"]))
        if kind == "finite":
            return FiniteField(int(data["p"]), int(data.get("m", 1)))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad field descriptor {data!r}") from exc
    raise ParseError(f"unknown field type {data.get('type')!r}")


def scalar_to_json(x):
    return x.to_json()


def scalar_from_json(field, value):
    try:
        if isinstance(field, CyclotomicField):
            if isinstance(value, list):
                return field.from_polynomial([Fraction(v) for v in value])
            return field(Fraction(value))
        if isinstance(value, list):
            return field.from_coeffs(value)
        return field.from_code(int(value)) if field.m > 1 else field(int(value))
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar {value!r} for {field.describe()}") from exc


# polynomials --------------------------------------------------------------

class NCPolynomial:
    """Linear combination of normal (sorted) monomials."""

    __slots__ = ("field", "num_gens", "terms")

    def __init__(self, field, num_gens: int, terms: Mapping[Monomial, object] | None = None):
        self.field = field
        self.num_gens = num_gens
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, field, num_gens: int) -> "NCPolynomial":
        return cls(field, num_gens)

    @classmethod
    def constant(cls, field, num_gens: int, c=1) -> "NCPolynomial":
        return cls(field, num_gens, {(0,) * num_gens: field(c)})

    @classmethod
    def gen(cls, field, num_gens: int, k: int, c=1) -> "NCPolynomial":
        if not 0 <= k < num_gens:
            raise IndexOutOfRange(f"generator index {k} out of range for {num_gens} generators")
        exps = [0] * num_gens
        exps[k] = 1
        return cls(field, num_gens, {tuple(exps): field(c)})

    @classmethod
    def monomial(cls, field, exps: Iterable[int], c=1) -> "NCPolynomial":
        exps = tuple(int(a) for a in exps)
        return cls(field, len(exps), {exps: field(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _combine(self, other: "NCPolynomial", sign: int) -> "NCPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c if sign > 0 else -c)
        return NCPolynomial(self.field, self.num_gens, out)

    def __add__(self, other: "NCPolynomial") -> "NCPolynomial":
        return self._combine(other, 1)

    def __sub__(self, other: "NCPolynomial") -> "NCPolynomial":
        return self._combine(other, -1)

    def __neg__(self) -> "NCPolynomial":
        return NCPolynomial(self.field, self.num_gens, {m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "NCPolynomial":
        c = self.field(c)
        return NCPolynomial(self.field, self.num_gens, {m: c * v for m, v in self.terms.items()})

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, mono: Iterable[int]):
        return self.terms.get(tuple(mono), self.field.zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self.num_gens == other.num_gens and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-a for a in t[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            word = "*".join(f"e{k}" if a == 1 else f"e{k}^{a}" for k, a in enumerate(mono) if a)
            cs = str(c)
            if not word:
                parts.append(cs)
            elif cs == "1":
                parts.append(word)
            elif cs == "-1":
                parts.append("-" + word)
            elif any(ch in cs.lstrip("-") for ch in "+- "):
                parts.append(f"({cs})*{word}")
            else:
                parts.append(f"{cs}*{word}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"NCPolynomial({self})"

    def to_json(self) -> list:
        return [{"mono": list(m), "coeff": c.to_json()} for m, c in self.sorted_terms()]


# presentations ------------------------------------------------------------

@dataclass(frozen=True)
class Rule:
    """e_j e_i = q e_i e_j + sum tail[k] e_k + const, with j > i."""

    j: int
    i: int
    q: object
    tail: Mapping[int, object] = dc_field(default_factory=dict)
    const: object = None

    def tail_poly(self, field, g: int) -> NCPolynomial:
        poly = NCPolynomial.zero(field, g)
        for k, c in self.tail.items():
            poly = poly + NCPolynomial.gen(field, g, k, c)
        if self.const is not None and self.const:
            poly = poly + NCPolynomial.constant(field, g, self.const)
        return poly

    def has_tail(self) -> bool:
        return any(self.tail.values()) or bool(self.const)


class QPresentation:
    """Algebra on e_0..e_{g-1} with one q-commutation rule per pair."""

    def __init__(self, field, num_gens: int, rules: Iterable[Rule] = (),
                 labels: list[str] | None = None, family: str | None = None,
                 params: Mapping | None = None):
        self.field = field
        self.num_gens = int(num_gens)
        g = self.num_gens
        table: dict[tuple[int, int], Rule] = {}
        for rule in rules:
            if not (0 <= rule.i < rule.j < g):
                raise IndexOutOfRange(f"rule indices ({rule.j}, {rule.i}) invalid for {g} generators")
            q = field(rule.q)
            if not q:
                raise DivisionByZero(f"q-coefficient of pair ({rule.j}, {rule.i}) is zero")
            tail = {}
            for k, c in rule.tail.items():
                if not 0 <= k < g:
                    raise IndexOutOfRange(f"tail generator {k} out of range")
                c = field(c)
                if c:
                    tail[int(k)] = c
            const = field(rule.const) if rule.const is not None else field.zero
            table[(rule.j, rule.i)] = Rule(rule.j, rule.i, q, tail, const)
        for j in range(g):
            for i in range(j):
                if (j, i) not in table:
                    table[(j, i)] = Rule(j, i, field.one, {}, field.zero)
        self.rules = table
        self.labels = list(labels) if labels else [f"e{k}" for k in range(g)]
        self.family = family
        self.params = dict(params or {})
        self._cache: dict[tuple[Monomial, int], dict] = {}
        self._fuel = FUEL

    def rule(self, j: int, i: int) -> Rule:
        return self.rules[(j, i)]

    def ordered_rules(self) -> list[Rule]:
        return [self.rules[key] for key in sorted(self.rules, key=lambda t: (-t[0], t[1]))]

    def q(self, j: int, i: int):
        return self.rules[(j, i)].q

    def is_tail_free(self) -> bool:
        return not any(r.has_tail() for r in self.rules.values())

    # arithmetic ----------------------------------------------------------

    def one(self) -> NCPolynomial:
        return NCPolynomial.constant(self.field, self.num_gens)

    def gen(self, k: int) -> NCPolynomial:
        return NCPolynomial.gen(self.field, self.num_gens, k)

    def _spend(self) -> None:
        self._fuel -= 1
        if self._fuel < 0:
            raise NonTerminating(f"rewriting exceeded {FUEL} steps; presentation is malformed")

    def _mul_gen(self, mono: Monomial, k: int) -> dict:
        """Normal form of (monomial) * e_k as a dict."""
        key = (mono, k)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        last = max((t for t, a in enumerate(mono) if a), default=-1)
        if last <= k:
            m = list(mono)
            m[k] += 1
            result = {tuple(m): self.field.one}
        else:
            self._spend()
            rule = self.rules[(last, k)]
            rest = list(mono)
            rest[last] -= 1
            rest = tuple(rest)
            result: dict = {}
            # rest * (q e_k e_last + tail)
            for m1, c1 in self._mul_gen(rest, k).items():
                for m2, c2 in self._mul_gen(m1, last).items():
                    _acc(result, m2, rule.q * c1 * c2)
            for s, cs in rule.tail.items():
                for m1, c1 in self._mul_gen(rest, s).items():
                    _acc(result, m1, cs * c1)
            if rule.const:
                _acc(result, rest, rule.const)
            result = {m: c for m, c in result.items() if c}
        self._cache[key] = result
        return result

    def _mul_word(self, poly: dict, word: Iterable[int]) -> dict:
        for k in word:
            if not 0 <= k < self.num_gens:
                raise IndexOutOfRange(f"generator index {k} out of range for {self.num_gens} generators")
            out: dict = {}
            for m, c in poly.items():
                for m2, c2 in self._mul_gen(m, k).items():
                    _acc(out, m2, c * c2)
            poly = {m: c for m, c in out.items() if c}
        return poly

    def multiply(self, a: NCPolynomial, b: NCPolynomial) -> NCPolynomial:
        self._fuel = FUEL
        out: dict = {}
        for mb, cb in b.terms.items():
            word = [k for k, e in enumerate(mb) for _ in range(e)]
            for m, c in self._mul_word(dict(a.terms), word).items():
                _acc(out, m, c * cb)
        return NCPolynomial(self.field, self.num_gens, out)

    def power(self, a: NCPolynomial, e: int) -> NCPolynomial:
        result = self.one()
        for _ in range(e):
            result = self.multiply(result, a)
        return result

    def word(self, word: Iterable[int], c=1) -> NCPolynomial:
        """Normal form of c * e_{w0} e_{w1} ..."""
        self._fuel = FUEL
        start = {(0,) * self.num_gens: self.field(c)}
        return NCPolynomial(self.field, self.num_gens, self._mul_word(start, list(word)))

    # serialization -------------------------------------------------------

    def to_json(self) -> dict:
        relations = []
        for r in self.ordered_rules():
            tail = [{"gen": k, "coeff": r.tail[k].to_json()} for k in sorted(r.tail)]
            if r.const:
                tail.append({"const": True, "coeff": r.const.to_json()})
            relations.append({"j": r.j, "i": r.i, "q": r.q.to_json(), "tail": tail})
        data = {"field": self.field.to_json(), "gens": self.num_gens, "relations": relations}
        if self.family:
            data["family"] = self.family
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "QPresentation":
        try:
            field = field_from_json(data["field"])
            g = int(data["gens"])
            rules = []
            for rel in data.get("relations", []):
                tail, const = {}, None
                for item in rel.get("tail", []):
                    c = scalar_from_json(field, item["coeff"])
                    if "gen" in item:
                        tail[int(item["gen"])] = c
                    else:
                        const = c
                rules.append(Rule(int(rel["j"]), int(rel["i"]), scalar_from_json(field, rel["q"]), tail, const))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed presentation: {exc}") from exc
        return cls(field, g, rules, family=data.get("family"))

    def relation_strings(self) -> list[str]:
        out = []
        for r in self.ordered_rules():
            rhs = NCPolynomial.monomial(self.field, [1 if t in (r.i, r.j) else 0 for t in range(self.num_gens)], r.q)
            rhs = rhs + r.tail_poly(self.field, self.num_gens)
            out.append(f"{self.labels[r.j]}*{self.labels[r.i]} = {rhs}")
        return out

    def __repr__(self) -> str:
        return f"QPresentation({self.family or 'custom'}, g={self.num_gens}, {self.field.describe()})"


def _acc(d: dict, m, c) -> None:
    if m in d:
        d[m] = d[m] + c
    else:
        d[m] = c
