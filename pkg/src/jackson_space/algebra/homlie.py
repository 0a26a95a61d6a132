"""The hom-Lie bracket on span(e_0..e_{n-1}), e_i = t^i Delta, Delta = a(id - sigma)."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import IndexOutOfRange
from .presentation import NCPolynomial


def hom_lie_bracket(i: int, j: int, n: int, q, a, mode: str = "truncating", x=None) -> NCPolynomial:
    """<e_i, e_j> = a (q^i - q^j) e_{i+j}.

    Truncating mode kills e_{i+j} when i + j >= n; wrapping mode replaces it
    by x^{(i+j) // n} e_{(i+j) mod n}.
    """
    field = q.field
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"indices ({i}, {j}) out of range for n={n}")
    coeff = field(a) * (q**i - q**j)
    s = i + j
    if s >= n:
        if mode == "truncating":
            return NCPolynomial.zero(field, n)
        if mode != "wrapping":
            raise ValueError(f"unknown mode {mode!r}")
        coeff = coeff * field(x if x is not None else 1) ** (s // n)
        s %= n
    return NCPolynomial.gen(field, n, s, coeff)


def _qpow(k: int) -> str:
    return "1" if k == 0 else ("q" if k == 1 else f"q^{k}")


def symbolic_bracket(i: int, j: int, n: int, mode: str = "truncating") -> str:
    """The entry with a and q kept as symbols, e.g. "a(1-q)e_1"."""
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"indices ({i}, {j}) out of range for n={n}")
    if i == j:
        return "0"
    s = i + j
    if s >= n:
        if mode == "truncating":
            return "0"
        wraps = s // n
        s %= n
        xs = "x" if wraps == 1 else f"x^{wraps}"
        return f"a({_qpow(i)}-{_qpow(j)}){xs}e_{s}"
    return f"a({_qpow(i)}-{_qpow(j)})e_{s}"


@dataclass
class HomLieBracketTable:
    n: int
    q: object
    a: object
    mode: str = "truncating"
    x: object = None

    def entry(self, i: int, j: int) -> NCPolynomial:
        return hom_lie_bracket(i, j, self.n, self.q, self.a, self.mode, self.x)

    def bracket(self, u: dict, v: dict) -> dict:
        """Bilinear extension to vectors given as {index: scalar}."""
        out: dict = {}
        for i, ci in u.items():
            for j, cj in v.items():
                for mono, c in self.entry(i, j).terms.items():
                    k = mono.index(1)
                    out[k] = out.get(k, self.q.field.zero) + ci * cj * c
        return {k: c for k, c in out.items() if c}

    def sigma(self, u: dict) -> dict:
        return {k: c * self.q**k for k, c in u.items()}

    def jacobi_defects(self, multiplier=1) -> list[tuple[int, int, int]]:
        """Basis triples where the cyclic hom-Jacobi sum is nonzero."""
        bad = []
        field = self.q.field
        m = field(multiplier)
        for a in range(self.n):
            for b in range(self.n):
                for c in range(self.n):
                    total: dict = {}
                    for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
                        eu, inner = {u: field.one}, self.bracket({v: field.one}, {w: field.one})
                        for part, scale in ((self.bracket(self.sigma(eu), inner), field.one),
                                            (self.bracket(eu, inner), m)):
                            for k, val in part.items():
                                total[k] = total.get(k, field.zero) + scale * val
                    if any(total.values()):
                        bad.append((a, b, c))
        return bad

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "entries": [[str(self.entry(i, j)) for j in range(self.n)] for i in range(self.n)],
        }
