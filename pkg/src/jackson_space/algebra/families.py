"""Constructors for the named q-commutation families.

Each family is written in the literature as e_i e_j - Q e_j e_i - (1 - Q) T
for i < j; it is stored here in the oriented form

    e_j e_i = Q^-1 e_i e_j - Q^-1 (1 - Q) T.
"""

from __future__ import annotations

from ..arith.residue import is_primitive_root
from ..errors import NotPrimitive
from .presentation import QPresentation, Rule


def _oriented(field, i: int, j: int, Q, tail: dict | None = None, const=None) -> Rule:
    """Rule for e_i e_j - Q e_j e_i - (1 - Q)(tail + const) = 0, i < j."""
    Q = field(Q)
    qinv = 1 / Q
    scale = -qinv * (1 - Q)
    t = {k: scale * field(c) for k, c in (tail or {}).items()}
    c = scale * field(const) if const is not None else None
    return Rule(j, i, qinv, t, c)


def _str(x) -> str:
    return str(x)


def build_kummer_witt(n: int, r: int, x, zeta, require_primitive: bool = False) -> QPresentation:
    """Kummer-Witt algebra of level r on e_0..e_{n-1}.

    The tail of the pair i < j is (1 - zeta^{r(j-i)}) x^w e_{(i+j) mod n},
    with w = 1 when i + j >= n and w = 0 otherwise.
    """
    if n < 2:
        raise ValueError("Kummer-Witt algebras need n >= 2")
    field = zeta.field
    x = field(x)
    if zeta**n != field.one:
        raise NotPrimitive(f"{zeta} is not an {n}-th root of unity")
    if require_primitive and not is_primitive_root(zeta**r, n):
        raise NotPrimitive(f"zeta^{r} is not a primitive {n}-th root of unity")
    rules = []
    for i in range(n):
        for j in range(i + 1, n):
            Q = zeta ** (r * (j - i))
            coeff = x if i + j >= n else field.one
            rules.append(_oriented(field, i, j, Q, {(i + j) % n: coeff}))
    return QPresentation(field, n, rules, family="kummer_witt",
                         params={"n": n, "r": r, "x": _str(x), "zeta": _str(zeta)})


def build_jackson(r: int, x, zeta) -> QPresentation:
    """Jackson algebra: e_0e_1 = z^r e_1e_0, e_2e_0 = z^r e_0e_2,
    e_2e_1 = z^{2r} e_1e_2 + x e_0 + x(1 - z^{2r})."""
    field = zeta.field
    x = field(x)
    zr = zeta**r
    omega = 1 - zr * zr
    rules = [
        Rule(1, 0, 1 / zr),
        Rule(2, 0, zr),
        Rule(2, 1, zr * zr, {0: x}, x * omega),
    ]
    return QPresentation(field, 3, rules, family="jackson",
                         params={"r": r, "x": _str(x), "zeta": _str(zeta)})


def build_infinitesimal(n: int, q, mode: str = "wrap") -> QPresentation:
    """I_q on e_0..e_{n-1}; tail (1 - q^{j-i}) e_{i+j}.

    ``mode="wrap"`` reads i+j modulo n; ``mode="truncate"`` drops the tail
    when i + j >= n.
    """
    if mode not in ("wrap", "truncate"):
        raise ValueError(f"unknown mode {mode!r}")
    field = q.field
    rules = []
    for i in range(n):
        for j in range(i + 1, n):
            if i + j >= n and mode == "truncate":
                tail = {}
            else:
                tail = {(i + j) % n: field.one}
            rules.append(_oriented(field, i, j, q ** (j - i), tail))
    return QPresentation(field, n, rules, family="infinitesimal",
                         params={"n": n, "q": _str(q), "mode": mode})


def build_II(p: int, lam, form: str = "shifted") -> QPresentation:
    """The three-generator algebra on e_0, e_1, e_2 := e_{p-1}.

    ``raw`` keeps the affine tails of the I_lambda relations; ``shifted`` is
    the form after e_0 -> e_0 + 1.
    """
    if p < 3:
        raise ValueError("p must be at least 3")
    field = lam.field
    if form == "raw":
        rules = [
            _oriented(field, 0, 1, lam, {1: 1}),
            _oriented(field, 0, 2, lam ** (p - 1), {2: 1}),
            _oriented(field, 1, 2, lam ** (p - 2)),
        ]
    elif form == "shifted":
        rules = [
            Rule(1, 0, 1 / lam),
            Rule(2, 0, lam ** (1 - p)),
            Rule(2, 1, lam ** (2 - p)),
        ]
    else:
        raise ValueError(f"unknown form {form!r}")
    return QPresentation(field, 3, rules, family=f"II_{form}",
                         params={"p": p, "lambda": _str(lam), "form": form})


def build_quantum_affine(field, qs: dict[tuple[int, int], object], g: int = 3) -> QPresentation:
    """Tail-free presentation; ``qs[(j, i)]`` is the coefficient of e_j e_i = q e_i e_j."""
    rules = [Rule(j, i, q) for (j, i), q in qs.items()]
    return QPresentation(field, g, rules, family="quantum_affine")


def build_polynomial(field, g: int = 3) -> QPresentation:
    return QPresentation(field, g, [], family="polynomial")
