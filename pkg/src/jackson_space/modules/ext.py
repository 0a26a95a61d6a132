"""Ext^1 between one-dimensional modules via upper-triangular extensions.

For characters chi (quotient) and psi (submodule) an extension is
rho(e) = [[psi(e), delta(e)], [0, chi(e)]].  The (1,2) entry of a rule
e_j e_i = q e_i e_j + sum t_k e_k + c gives the linear condition

    (psi_j - q chi_j) delta_i + (chi_i - q psi_i) delta_j - sum t_k delta_k = 0,

and the coboundaries are the multiples of chi - psi.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..algebra.presentation import QPresentation
from ..arith.linalg import nullspace, rank
from ..errors import InvalidModule, LengthMismatch
from .characters import Character, validate_module

OBSTRUCTION_FLAG = "modulo possible obstructions"


@dataclass
class ExtResult:
    dimension: int
    cocycle_basis: list
    coboundary_dim: int
    cocycle_dim: int = 0

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "coboundary_dim": self.coboundary_dim,
            "cocycle_dim": self.cocycle_dim,
            "cocycle_basis": [[c.to_json() for c in v] for v in self.cocycle_basis],
        }


def extension_equations(pres: QPresentation, chi: Character, psi: Character) -> list[list]:
    F = pres.field
    rows = []
    for r in pres.ordered_rules():
        row = [F.zero] * pres.num_gens
        row[r.i] = row[r.i] + (psi[r.j] - r.q * chi[r.j])
        row[r.j] = row[r.j] + (chi[r.i] - r.q * psi[r.i])
        for k, t in r.tail.items():
            row[k] = row[k] - t
        rows.append(row)
    return rows


def _coerce(pres: QPresentation, chi) -> Character:
    chi = chi if isinstance(chi, Character) else Character(chi)
    if len(chi) != pres.num_gens:
        raise LengthMismatch(f"character has {len(chi)} values, expected {pres.num_gens}")
    chi = Character(chi.values, pres.field)
    if not validate_module(pres, chi):
        raise InvalidModule(f"{chi} is not a module over the presentation")
    return chi


def ext1(pres: QPresentation, M, N) -> ExtResult:
    """Ext^1(M, N): extensions with N as submodule and M as quotient."""
    chi, psi = _coerce(pres, M), _coerce(pres, N)
    F = pres.field
    g = pres.num_gens
    rows = extension_equations(pres, chi, psi)
    cocycles = nullspace(rows, g, F.zero, F.one)
    cob = [a - b for a, b in zip(chi, psi)]
    cob_dim = 1 if any(cob) else 0
    basis = []
    span = [cob] if cob_dim else []
    current = cob_dim
    for v in cocycles:
        if rank(span + [v], g) > current:
            span.append(v)
            basis.append(v)
            current += 1
    return ExtResult(len(cocycles) - cob_dim, basis, cob_dim, len(cocycles))


def tangent_matrix(pres: QPresentation, family) -> list[list[int]]:
    return [[ext1(pres, a, b).dimension for b in family] for a in family]


@dataclass
class DeformationShape:
    size: int
    diagonal: list
    off_diagonal: dict
    labels: list
    obstruction_status: str = OBSTRUCTION_FLAG
    entries: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "labels": self.labels,
            "diagonal": self.diagonal,
            "off_diagonal": {f"{i},{j}": n for (i, j), n in sorted(self.off_diagonal.items())},
            "entries": self.entries,
            "obstruction_status": self.obstruction_status,
        }

    def render(self) -> str:
        width = max(len(e) for row in self.entries for e in row)
        lines = ["  ".join(e.ljust(width) for e in row) for row in self.entries]
        return "\n".join(lines + [f"({self.obstruction_status})"])


def _diag_entry(i: int, d: int, label: str) -> str:
    if d == 0:
        return f"End({label})"
    if d == 1:
        return f"End({label}) (x) k'[[t_{i}{i}]]"
    vars_ = ",".join(f"t_{k}" for k in range(1, d + 1))
    return f"End({label}) (x) k'<<{vars_}>>"


def _off_entry(i: int, j: int, d: int, a: str, b: str) -> str:
    if d == 0:
        return f"Hom({a},{b})"
    if d == 1:
        return f"Hom({a},{b}) (x) <t_{i}{j}>"
    gens = ",".join(f"t_{i}{j}^{k}" for k in range(1, d + 1))
    return f"Hom({a},{b}) (x) <{gens}>"


def deformation_shape(tangent: list[list[int]], labels: list[str] | None = None) -> DeformationShape:
    s = len(tangent)
    if any(len(row) != s for row in tangent):
        raise LengthMismatch("tangent matrix must be square")
    labels = list(labels) if labels else [f"M{i + 1}" for i in range(s)]
    diag = [tangent[i][i] for i in range(s)]
    off = {(i + 1, j + 1): tangent[i][j] for i in range(s) for j in range(s) if i != j}
    entries = [[_diag_entry(i + 1, tangent[i][i], labels[i]) if i == j
                else _off_entry(i + 1, j + 1, tangent[i][j], labels[i], labels[j])
                for j in range(s)] for i in range(s)]
    return DeformationShape(s, diag, off, labels, OBSTRUCTION_FLAG, entries)


def mirror(chi, zeta, p: int) -> Character:
    """Rescale the e_2 slot by zeta^{2-p}."""
    values = tuple(chi)
    if len(values) != 3:
        raise LengthMismatch("mirror is defined on three-generator characters")
    return Character((values[0], values[1], values[2] * zeta ** (2 - p)))
