"""One-dimensional modules (characters) and the brute-force point oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..algebra.presentation import QPresentation
from ..errors import FieldTooLarge, LengthMismatch

MAX_TUPLES = 10**6


@dataclass(frozen=True)
class Character:
    """Scalars chi(e_0), ..., chi(e_{g-1})."""

    values: tuple

    def __init__(self, values, field=None):
        values = tuple(values)
        if field is not None:
            values = tuple(field(v) for v in values)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __iter__(self):
        return iter(self.values)

    @property
    def field(self):
        return self.values[0].field

    def key(self) -> tuple:
        return tuple(v.sort_key() for v in self.values)

    def to_json(self) -> list:
        return [v.to_json() for v in self.values]

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def relation_values(pres: QPresentation, chi: Character) -> list:
    """Each rule evaluated at chi: (1 - q) chi_i chi_j - tail(chi)."""
    out = []
    for r in pres.ordered_rules():
        val = (1 - r.q) * chi[r.i] * chi[r.j] - r.const
        for k, c in r.tail.items():
            val = val - c * chi[k]
        out.append(val)
    return out


def validate_module(pres: QPresentation, chi: Character) -> bool:
    if len(chi) != pres.num_gens:
        raise LengthMismatch(f"character has {len(chi)} values, presentation has {pres.num_gens} generators")
    chi = Character(chi.values, pres.field)
    return not any(relation_values(pres, chi))


def enumerate_points(pres: QPresentation, limit: int = MAX_TUPLES) -> list[Character]:
    """Every character over the (finite) coefficient field, by exhaustive scan."""
    field = pres.field
    if getattr(field, "order", None) is None:
        raise FieldTooLarge("enumeration needs a finite coefficient field")
    total = field.order**pres.num_gens
    if total > limit:
        raise FieldTooLarge(f"{total} tuples exceeds the enumeration bound {limit}")
    elems = list(field.elements())
    rules = pres.ordered_rules()
    out = []
    for values in product(elems, repeat=pres.num_gens):
        ok = True
        for r in rules:
            val = (1 - r.q) * values[r.i] * values[r.j] - r.const
            for k, c in r.tail.items():
                val = val - c * values[k]
            if val:
                ok = False
                break
        if ok:
            out.append(Character(values))
    return out
