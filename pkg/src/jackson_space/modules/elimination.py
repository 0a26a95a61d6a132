"""Exact decomposition of the character variety by elimination and case splits.

Used for presentations outside the hand-classified shapes.  Each relation
gives one equation (1 - q) x_i x_j - sum t_k x_k - c = 0 in commuting
unknowns.  The solver repeatedly

* solves an equation for a variable whose coefficient is a nonzero scalar,
* splits on a variable dividing every term of an equation,
* splits A u w + B u + C w + D = 0 when A D = B C (a product of lines),
* over a finite field, splits a univariate equation on its roots,

and otherwise keeps the remaining equations as implicit constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..algebra.presentation import QPresentation
from ..errors import UnrecognizedFamily


class CPoly:
    """Commutative polynomial: {exponent tuple: nonzero coefficient}."""

    __slots__ = ("field", "g", "terms")

    def __init__(self, field, g: int, terms: dict | None = None):
        self.field, self.g = field, g
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, field, g: int, c) -> "CPoly":
        return cls(field, g, {(0,) * g: field(c)})

    @classmethod
    def var(cls, field, g: int, k: int, c=1) -> "CPoly":
        e = [0] * g
        e[k] = 1
        return cls(field, g, {tuple(e): field(c)})

    def __add__(self, other: "CPoly") -> "CPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, self.field.zero) + c
        return CPoly(self.field, self.g, out)

    def __neg__(self) -> "CPoly":
        return CPoly(self.field, self.g, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "CPoly") -> "CPoly":
        return self + (-other)

    def __mul__(self, other) -> "CPoly":
        if not isinstance(other, CPoly):
            return CPoly(self.field, self.g, {m: c * other for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, self.field.zero) + c1 * c2
        return CPoly(self.field, self.g, out)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, CPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def variables(self) -> list[int]:
        return sorted({k for m in self.terms for k, e in enumerate(m) if e})

    def is_const(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant(self):
        return self.terms.get((0,) * self.g, self.field.zero)

    def split_var(self, k: int) -> dict[int, "CPoly"]:
        """Write self = sum_e coeff_e * x_k^e."""
        parts: dict = {}
        for m, c in self.terms.items():
            rest = m[:k] + (0,) + m[k + 1:]
            parts.setdefault(m[k], {})[rest] = c
        return {e: CPoly(self.field, self.g, t) for e, t in parts.items()}

    def substitute(self, k: int, value: "CPoly") -> "CPoly":
        out = CPoly(self.field, self.g)
        powers = {0: CPoly.const(self.field, self.g, 1)}
        for e, coeff in self.split_var(k).items():
            while max(powers) < e:
                powers[max(powers) + 1] = powers[max(powers)] * value
            out = out + coeff * powers[e]
        return out

    def divide_var(self, k: int) -> "CPoly":
        return CPoly(self.field, self.g, {m[:k] + (m[k] - 1,) + m[k + 1:]: c for m, c in self.terms.items()})

    def evaluate(self, point) -> object:
        total = self.field.zero
        for m, c in self.terms.items():
            term = c
            for k, e in enumerate(m):
                if e:
                    term = term * point[k] ** e
            total = total + term
        return total

    def monic(self) -> "CPoly":
        if not self.terms:
            return self
        lead = self.terms[max(self.terms)]
        return self * (1 / lead)

    def sort_key(self):
        return sorted((m, c.sort_key()) for m, c in self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), t[0]), reverse=False):
            mono = "*".join(f"e{k}" if e == 1 else f"e{k}^{e}" for k, e in enumerate(m) if e)
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"({cs})*{mono}" if " " in cs else f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def relation_polys(pres: QPresentation) -> list[CPoly]:
    F, g = pres.field, pres.num_gens
    eqs = []
    for r in pres.ordered_rules():
        e = CPoly.var(F, g, r.i) * CPoly.var(F, g, r.j) * (1 - r.q)
        for k, t in r.tail.items():
            e = e - CPoly.var(F, g, k, t)
        e = e - CPoly.const(F, g, r.const)
        if e:
            eqs.append(e)
    return eqs


@dataclass
class VarietyComponent:
    """{e_k = subs[k](free)} cut by the residual equations ``eqs`` in the free unknowns."""

    subs: dict
    eqs: list
    num_gens: int
    field: object

    @property
    def free_vars(self) -> list[int]:
        return [k for k in range(self.num_gens) if k not in self.subs]

    @property
    def kind(self) -> str:
        if self.eqs:
            return "conic" if len(self.eqs) == 1 and self.eqs[0].degree == 2 and len(self.free_vars) == 2 else "variety"
        if all(v.is_const() for v in self.subs.values()):
            n = len(self.free_vars)
            if self.num_gens == 3:
                return ("point", "line", "plane", "space")[n]
            return "point" if n == 0 else ("space" if n == self.num_gens else "subspace")
        if all(v.degree <= 1 for v in self.subs.values()):
            return "affine subspace"
        return "graph"

    def coordinates(self, point) -> list:
        return [self.subs[k].evaluate(point) if k in self.subs else point[k] for k in range(self.num_gens)]

    def contains(self, values) -> bool:
        values = list(values)
        for k, v in self.subs.items():
            if v.evaluate(values) != values[k]:
                return False
        return all(not e.evaluate(values) for e in self.eqs)

    def points_over(self, field=None):
        field = field or self.field
        free = self.free_vars
        base = [field.zero] * self.num_gens
        for vals in product(list(field.elements()), repeat=len(free)):
            point = list(base)
            for k, v in zip(free, vals):
                point[k] = v
            if all(not e.evaluate(point) for e in self.eqs):
                yield tuple(self.coordinates(point))

    def within(self, other: "VarietyComponent") -> bool:
        """Formal containment: other's equations vanish identically on self's parametrization."""
        if self.eqs:
            return self == other

        def pull(poly: CPoly) -> CPoly:
            for k, v in self.subs.items():
                poly = poly.substitute(k, v)
            return poly

        for k, v in other.subs.items():
            if pull(CPoly.var(self.field, self.num_gens, k) - v):
                return False
        return all(not pull(e) for e in other.eqs)

    def translate(self, k: int, c) -> "VarietyComponent":
        """Image under e_k -> e_k + c."""
        g, F = self.num_gens, self.field
        shifted_var = CPoly.var(F, g, k) - CPoly.const(F, g, c)
        if k in self.subs:
            subs = {j: v for j, v in self.subs.items()}
            subs[k] = subs[k] + CPoly.const(F, g, c)
            return VarietyComponent(subs, list(self.eqs), g, F)
        subs = {j: v.substitute(k, shifted_var) for j, v in self.subs.items()}
        eqs = [e.substitute(k, shifted_var) for e in self.eqs]
        return VarietyComponent(subs, eqs, g, F)

    def describe(self) -> str:
        parts = [f"e{k} = {v}" for k, v in sorted(self.subs.items())]
        parts += [f"{e} = 0" for e in self.eqs]
        return f"{self.kind}: " + (", ".join(parts) if parts else "all of affine space")

    def to_json(self) -> dict:
        return {
            "type": self.kind,
            "equations": [f"e{k} - ({v})" if not v.is_const() else f"e{k} - {v}" for k, v in sorted(self.subs.items())]
            + [str(e) for e in self.eqs],
            "fixed": {str(k): v.constant().to_json() for k, v in sorted(self.subs.items()) if v.is_const()},
        }

    def _key(self):
        return (tuple(sorted((k, str(v)) for k, v in self.subs.items())), tuple(sorted(str(e) for e in self.eqs)))

    def __eq__(self, other) -> bool:
        return isinstance(other, VarietyComponent) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


def _assign(eqs: list, subs: dict, k: int, value: CPoly):
    eqs = [e.substitute(k, value) for e in eqs]
    subs = {j: v.substitute(k, value) for j, v in subs.items()}
    subs[k] = value
    return eqs, subs


def _linear_solve(e: CPoly, k: int):
    parts = e.split_var(k)
    if set(parts) != {0, 1} and set(parts) != {1}:
        return None
    lead = parts[1]
    if not lead.is_const() or k in (parts.get(0) or CPoly(e.field, e.g)).variables():
        return None
    c = lead.constant()
    rest = parts.get(0, CPoly(e.field, e.g))
    return rest * (-1 / c)


def _bilinear_split(e: CPoly):
    """A u w + B u + C w + D with A D = B C: return the two linear factors' solutions."""
    vs = e.variables()
    if e.degree != 2 or len(vs) != 2:
        return None
    u, w = vs
    g, F = e.g, e.field

    def coeff(exps):
        m = [0] * g
        for k, n in exps:
            m[k] = n
        return e.terms.get(tuple(m), F.zero)

    known = {tuple(sorted(((u, 1), (w, 1)))), ((u, 1),), ((w, 1),), ()}
    for m in e.terms:
        key = tuple((k, n) for k, n in enumerate(m) if n)
        if key not in known:
            return None
    A, B, C, D = coeff([(u, 1), (w, 1)]), coeff([(u, 1)]), coeff([(w, 1)]), coeff([])
    if not A or A * D != B * C:
        return None
    # A (u + C/A)(w + B/A)
    return [(u, CPoly.const(F, g, -C / A)), (w, CPoly.const(F, g, -B / A))]


MAX_BRANCHES = 20000


def _solve(eqs: list, subs: dict, out: list, depth: int = 0) -> None:
    if len(out) > MAX_BRANCHES or depth > 200:
        raise UnrecognizedFamily("case split did not terminate within budget")
    eqs = [e for e in eqs if e]
    if any(e.is_const() for e in eqs):
        return
    if not eqs:
        out.append((subs, []))
        return
    eqs = sorted(set(e.monic() for e in eqs), key=lambda e: (e.degree, len(e.terms), e.sort_key()))
    # linear equations first, then splits, then graph elimination
    for pass_ in ("linear", "split", "graph"):
        for idx, e in enumerate(eqs):
            others = eqs[:idx] + eqs[idx + 1:]
            if pass_ == "split":
                for k in e.variables():
                    if all(m[k] for m in e.terms):
                        zero = CPoly(e.field, e.g)
                        _solve(*_assign(eqs, subs, k, zero), out, depth + 1)
                        _solve(others + [e.divide_var(k)], subs, out, depth + 1)
                        return
                split = _bilinear_split(e)
                if split:
                    for k, value in split:
                        _solve(*_assign(others, subs, k, value), out, depth + 1)
                    return
                vs = e.variables()
                if len(vs) == 1 and getattr(e.field, "order", None):
                    # univariate over a finite field: branch on its roots
                    k = vs[0]
                    point = [e.field.zero] * e.g
                    for root in e.field.elements():
                        point[k] = root
                        if not e.evaluate(point):
                            _solve(*_assign(others, subs, k, CPoly.const(e.field, e.g, root)), out, depth + 1)
                    return
                continue
            if pass_ == "linear" and e.degree != 1:
                continue
            for k in reversed(e.variables()):
                value = _linear_solve(e, k)
                if value is not None:
                    _solve(*_assign(others, subs, k, value), out, depth + 1)
                    return
    out.append((subs, eqs))


def decompose(pres: QPresentation) -> list[VarietyComponent]:
    raw: list = []
    _solve(relation_polys(pres), {}, raw)
    comps = []
    for subs, eqs in raw:
        comp = VarietyComponent(dict(sorted(subs.items())), list(eqs), pres.num_gens, pres.field)
        if comp not in comps:
            comps.append(comp)
    kept = []
    for idx, comp in enumerate(comps):
        if any(j != idx and comp.within(other) and not (other.within(comp) and j > idx)
               for j, other in enumerate(comps)):
            continue
        kept.append(comp)
    return kept
