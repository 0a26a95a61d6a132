"""Symbolic description of the locus of one-dimensional modules."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from ..algebra.presentation import QPresentation
from ..algebra.rewriting import shift_generator
from ..errors import UnrecognizedFamily
from .elimination import decompose

KINDS = ("space", "plane", "line", "point", "conic", "subspace")


@dataclass
class Component:
    """Affine coordinate subspace {e_k = fixed[k]}, optionally cut by e_i e_j = c."""

    kind: str
    fixed: dict
    num_gens: int
    conic: tuple | None = None  # (i, j, c)

    def contains(self, values) -> bool:
        for k, v in self.fixed.items():
            if values[k] != v:
                return False
        if self.conic is not None:
            i, j, c = self.conic
            return values[i] * values[j] == c
        return True

    def free(self) -> list[int]:
        return [k for k in range(self.num_gens) if k not in self.fixed]

    def translate(self, k: int, c) -> "Component":
        fixed = dict(self.fixed)
        if k in fixed:
            fixed[k] = fixed[k] + c
        conic = self.conic
        if conic is not None and k in conic[:2]:
            raise UnrecognizedFamily("translation along a conic coordinate is not supported")
        return Component(self.kind, fixed, self.num_gens, conic)

    def within(self, other: "Component") -> bool:
        """Containment of coordinate subspaces (conics only contain themselves)."""
        if other.conic is not None:
            return self == other
        if self.conic is not None:
            return all(k in self.fixed and self.fixed[k] == v for k, v in other.fixed.items())
        return all(k in self.fixed and self.fixed[k] == v for k, v in other.fixed.items())

    def points_over(self, field):
        free = self.free()
        for vals in product(list(field.elements()), repeat=len(free)):
            point = [None] * self.num_gens
            for k, v in self.fixed.items():
                point[k] = field(v)
            for k, v in zip(free, vals):
                point[k] = v
            if self.contains(point):
                yield tuple(point)

    def describe(self) -> str:
        eqs = [f"e{k} = {v}" for k, v in sorted(self.fixed.items())]
        if self.conic is not None:
            i, j, c = self.conic
            eqs.append(f"e{i}*e{j} = {c}")
        return f"{self.kind}: " + (", ".join(eqs) if eqs else "all of affine space")

    def to_json(self) -> dict:
        data = {"type": self.kind, "fixed": {str(k): v.to_json() for k, v in sorted(self.fixed.items())}}
        if self.conic is not None:
            i, j, c = self.conic
            data["conic"] = {"i": i, "j": j, "c": c.to_json()}
        return data

    def __eq__(self, other) -> bool:
        return (isinstance(other, Component) and self.kind == other.kind and self.fixed == other.fixed
                and self.conic == other.conic)


@dataclass
class LocusDescription:
    components: list
    field: object
    num_gens: int
    case: str = ""

    def contains(self, chi) -> bool:
        values = tuple(self.field(v) for v in chi)
        return any(c.contains(values) for c in self.components)

    def points_over(self, field=None) -> set:
        field = field or self.field
        pts = set()
        for comp in self.components:
            pts.update(comp.points_over(field))
        return pts

    def to_json(self) -> dict:
        return {
            "ambient": self.field.to_json(),
            "gens": self.num_gens,
            "case": self.case,
            "components": [c.to_json() for c in self.components],
        }


def _kind(num_free: int, g: int) -> str:
    if g != 3:
        return "point" if num_free == 0 else ("space" if num_free == g else "subspace")
    return ("point", "line", "plane", "space")[num_free]


def _subspace(fixed: dict, g: int) -> Component:
    return Component(_kind(g - len(fixed), g), fixed, g)


def _prune(components: list) -> list:
    out = []
    for idx, comp in enumerate(components):
        if any(comp.within(other) and not (other.within(comp) and j > idx)
               for j, other in enumerate(components) if j != idx):
            continue
        if comp not in out:
            out.append(comp)
    return out


def _tail_free_locus(pres: QPresentation) -> list:
    g = pres.num_gens
    zero = pres.field.zero
    edges = {(i, j) for (j, i), r in pres.rules.items() if r.q != pres.field.one}
    maximal = []
    for size in range(g, -1, -1):
        for support in combinations(range(g), size):
            s = set(support)
            if any(i in s and j in s for i, j in edges):
                continue
            if any(s <= m for m in maximal):
                continue
            maximal.append(s)
    return [_subspace({k: zero for k in range(g) if k not in s}, g) for s in maximal]


def _jackson_shape(pres: QPresentation):
    """Rules (1,0), (2,0) tail-free and (2,1) with tail in e_0 only."""
    if pres.num_gens != 3:
        return None
    r10, r20, r21 = pres.rule(1, 0), pres.rule(2, 0), pres.rule(2, 1)
    if r10.has_tail() or r20.has_tail() or set(r21.tail) - {0}:
        return None
    F = pres.field
    alpha, beta, gamma = 1 - r10.q, 1 - r20.q, 1 - r21.q
    x = r21.tail.get(0, F.zero)
    c = r21.const
    zero = F.zero
    comps = []
    if alpha and beta:
        # e0 = 0 slice: gamma e1 e2 = c
        if gamma:
            if c:
                comps.append(Component("conic", {0: zero}, 3, (1, 2, c / gamma)))
            else:
                comps += [_subspace({0: zero, 1: zero}, 3), _subspace({0: zero, 2: zero}, 3)]
        elif not c:
            comps.append(_subspace({0: zero}, 3))
        # e0 != 0: e1 = e2 = 0 and x e0 + c = 0
        if x:
            comps.append(_subspace({0: -c / x, 1: zero, 2: zero}, 3))
        elif not c:
            comps.append(_subspace({1: zero, 2: zero}, 3))
    elif not alpha and not beta and not gamma:
        if x:
            comps.append(_subspace({0: -c / x}, 3))
        elif not c:
            comps.append(_subspace({}, 3))
    else:
        return None
    return comps


def shift_candidates(pres: QPresentation):
    for r in pres.rules.values():
        if r.q == pres.field.one:
            continue
        denom = 1 - r.q
        if r.j in r.tail:
            yield r.i, r.tail[r.j] / denom
        if r.i in r.tail:
            yield r.j, r.tail[r.i] / denom


def _case_label(pres: QPresentation) -> str:
    if pres.is_tail_free():
        ones = sorted(f"({j},{i})" for (j, i), r in pres.rules.items() if r.q == pres.field.one)
        return "tail-free; commuting pairs " + (", ".join(ones) if ones else "none")
    r21 = pres.rule(2, 1) if pres.num_gens == 3 else None
    if r21 is not None:
        x = r21.tail.get(0, pres.field.zero)
        q2 = r21.q
        s = 1 / pres.rule(1, 0).q
        char = pres.field.characteristic
        parts = ["x != 0" if x else "x = 0"]
        if q2 != pres.field.one:
            parts.append("zeta^{2r} != 1")
        elif s == pres.field.one:
            parts.append("zeta^r = 1")
        else:
            parts.append("zeta^r = -1")
        parts.append(f"char {char}")
        return "jackson; " + ", ".join(parts)
    return ""


def one_dim_locus(pres: QPresentation) -> LocusDescription:
    """Exact union of components carrying every one-dimensional module."""
    if pres.is_tail_free():
        comps = _tail_free_locus(pres)
        return LocusDescription(_prune(comps), pres.field, pres.num_gens, _case_label(pres))
    comps = _jackson_shape(pres)
    if comps is not None:
        return LocusDescription(_prune(comps), pres.field, 3, _case_label(pres))
    for k, c in shift_candidates(pres):
        shifted = shift_generator(pres, k, c)
        if shifted.is_tail_free():
            comps = [comp.translate(k, c) for comp in _tail_free_locus(shifted)]
            label = f"translate of tail-free locus by e{k} -> e{k} + {c}"
            return LocusDescription(_prune(comps), pres.field, pres.num_gens, label)
    comps = decompose(pres)
    return LocusDescription(comps, pres.field, pres.num_gens, "general elimination")


def points_of(chars) -> set:
    return {tuple(c) for c in chars}
