"""Normal forms, overlap checking and centrality for q-presentations."""

from __future__ import annotations

from dataclasses import dataclass

from ..arith.residue import PrimeContext, reduce_scalar
from ..arith.cyclotomic import CyclotomicField
from .presentation import NCPolynomial, QPresentation, Rule


@dataclass(frozen=True)
class OverlapWitness:
    triple: tuple[int, int, int]
    difference: NCPolynomial

    def to_json(self) -> dict:
        return {"triple": list(self.triple), "difference": str(self.difference)}


def normal_form(expr, pres: QPresentation) -> NCPolynomial:
    """Normal form of an expression.

    ``expr`` may be a word (sequence of generator indices), a list of
    (coefficient, word) pairs, a string such as ``"e2*e1 - z*e0"``, or an
    NCPolynomial whose monomials are read as words.
    """
    if isinstance(expr, str):
        from .expr import parse_expression

        return parse_expression(expr, pres)
    if isinstance(expr, NCPolynomial):
        return pres.multiply(pres.one(), expr)
    expr = list(expr)
    if all(isinstance(k, int) for k in expr):
        return pres.word(expr)
    out = NCPolynomial.zero(pres.field, pres.num_gens)
    for c, word in expr:
        out = out + pres.word(word, c)
    return out


def commutator(pres: QPresentation, a: NCPolynomial, b: NCPolynomial) -> NCPolynomial:
    return pres.multiply(a, b) - pres.multiply(b, a)


def check_confluence(pres: QPresentation) -> list[OverlapWitness]:
    """Resolve every overlap e_k e_j e_i (k > j > i) both ways; return the failures."""
    witnesses = []
    g = pres.num_gens
    for k in range(g):
        for j in range(k):
            for i in range(j):
                r_kj, r_ji = pres.rule(k, j), pres.rule(j, i)
                left = pres.word([j, k, i], r_kj.q)
                left = left + pres.multiply(r_kj.tail_poly(pres.field, g), pres.gen(i))
                right = pres.word([k, i, j], r_ji.q)
                right = right + pres.multiply(pres.gen(k), r_ji.tail_poly(pres.field, g))
                diff = left - right
                if diff:
                    witnesses.append(OverlapWitness((k, j, i), diff))
    return witnesses


def is_central(poly: NCPolynomial, pres: QPresentation) -> bool:
    return all(not commutator(pres, poly, pres.gen(k)) for k in range(pres.num_gens))


def _map_presentation(pres: QPresentation, f, field, family=None) -> QPresentation:
    rules = []
    for r in pres.ordered_rules():
        rules.append(Rule(r.j, r.i, f(r.q), {k: f(c) for k, c in r.tail.items()}, f(r.const)))
    return QPresentation(field, pres.num_gens, rules, pres.labels, family or pres.family, pres.params)


def specialize(pres: QPresentation, ctx: PrimeContext) -> QPresentation:
    """Reduce every scalar of the presentation modulo the prime of ``ctx``."""
    if isinstance(pres.field, CyclotomicField):
        ctx = ctx.extended(pres.field.n)
    field = ctx.field
    reduced = _map_presentation(pres, lambda c: field(reduce_scalar(ctx, c)), field)
    reduced.params = {**pres.params, "reduced_at": ctx.residue_char}
    return reduced


def shift_generator(pres: QPresentation, k: int, c) -> QPresentation:
    """Presentation obtained by the substitution e_k -> e_k + c."""
    c = pres.field(c)
    g = pres.num_gens
    rules = []
    for r in pres.ordered_rules():
        tail = dict(r.tail)
        const = r.const + (tail.get(k, pres.field.zero) * c)
        if k == r.i:
            # e_j(e_i + c) - q(e_i + c)e_j = e_j e_i - q e_i e_j + c(1 - q) e_j
            tail[r.j] = tail.get(r.j, pres.field.zero) - c * (1 - r.q)
        elif k == r.j:
            tail[r.i] = tail.get(r.i, pres.field.zero) - c * (1 - r.q)
        rules.append(Rule(r.j, r.i, r.q, tail, const))
    return QPresentation(pres.field, g, rules, pres.labels, pres.family, pres.params)


def relations_equal(a: QPresentation, b: QPresentation) -> bool:
    if a.num_gens != b.num_gens or a.field != b.field:
        return False
    return a.to_json()["relations"] == b.to_json()["relations"]
