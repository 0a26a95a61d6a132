"""Exact arithmetic in Q(zeta_n), reduced modulo the n-th cyclotomic polynomial.

Elements are coordinate vectors in the power basis 1, z, ..., z^(phi(n)-1),
with ``fractions.Fraction`` coefficients.  Because the representation is
fully reduced, equality is coefficient-wise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from sympy import Poly, Symbol, cyclotomic_poly, totient

from ..errors import DivisionByZero, MismatchedOrder

_T = Symbol("t")


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    coeffs = Poly(cyclotomic_poly(n, _T), _T).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


def _strip(poly: list) -> list:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    # a, b lowest-degree-first lists of Fractions; b nonzero
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(_strip(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a.pop()
    return q, a


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


class CyclotomicField:
    """The field Q(zeta_n) in the power basis of a fixed primitive root."""

    characteristic = 0
    order = None

    _cache: dict[int, "CyclotomicField"] = {}

    def __new__(cls, n: int):
        n = int(n)
        field = cls._cache.get(n)
        if field is None:
            field = super().__new__(cls)
            field._setup(n)
            cls._cache[n] = field
        return field

    def _setup(self, n: int) -> None:
        self.n = n
        self.degree = int(totient(n))
        self.modulus = cyclotomic_coefficients(n)
        d = self.degree
        # reduction of t^k for d <= k < 2d - 1, as coordinate vectors
        red = []
        cur = [Fraction(-c) for c in self.modulus[:d]]  # t^d
        for _ in range(max(d - 1, 0)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * self.modulus[i]
        self._reduce_table = red
        self.zero = CyclotomicElement(self, (Fraction(0),) * d)
        self.one = self([1])

    def __reduce__(self):
        return (CyclotomicField, (self.n,))

    def __repr__(self) -> str:
        return f"CyclotomicField({self.n})"

    def __call__(self, value) -> "CyclotomicElement":
        if isinstance(value, CyclotomicElement):
            if value.field is not self:
                raise MismatchedOrder(f"element of Q(zeta_{value.n}) used in Q(zeta_{self.n})")
            return value
        if isinstance(value, (int, Rational)):
            coeffs = [Fraction(0)] * self.degree
            coeffs[0] = Fraction(value)
            return CyclotomicElement(self, tuple(coeffs))
        if isinstance(value, (list, tuple)):
            return self.from_polynomial(value)
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    def from_polynomial(self, coeffs) -> "CyclotomicElement":
        """Reduce sum_k coeffs[k] * t^k modulo Phi_n."""
        poly = [Fraction(c) for c in coeffs]
        if len(poly) > self.degree:
            _, poly = _poly_divmod(poly, [Fraction(c) for c in self.modulus])
        poly = poly + [Fraction(0)] * (self.degree - len(poly))
        return CyclotomicElement(self, tuple(poly))

    def zeta(self, exponent: int = 1) -> "CyclotomicElement":
        """The class of zeta_n ** exponent (negative exponents allowed)."""
        e = exponent % self.n
        return self.from_polynomial([0] * e + [1])

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("cyclotomic", self.n))

    def to_json(self) -> dict:
        return {"type": "cyclotomic", "n": self.n}

    def describe(self) -> str:
        return f"Q(zeta_{self.n})"


class CyclotomicElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    @property
    def n(self) -> int:
        return self.field.n

    def _coerce(self, other) -> "CyclotomicElement":
        if isinstance(other, CyclotomicElement):
            if other.field is not self.field:
                raise MismatchedOrder(f"orders {self.n} and {other.n} differ")
            return other
        return self.field(other)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return CyclotomicElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return CyclotomicElement(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = prod[:d]
        for k, c in enumerate(prod[d:]):
            if c:
                row = self.field._reduce_table[k]
                for i in range(d):
                    out[i] += c * row[i]
        return CyclotomicElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        # extended Euclid: s * self + u * Phi_n = 1
        r0 = _strip([Fraction(c) for c in self.field.modulus])
        r1 = _strip(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, _strip(r)
            s0, s1 = s1, _strip(_poly_sub(s0, _poly_mul(q, s1)))
        c = r1[0]
        return self.field.from_polynomial([x / c for x in s1])

    def __truediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicElement):
            return other.field == self.field and other.coeffs == self.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self) -> int:
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.field.n, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def sort_key(self):
        return tuple(self.coeffs)

    def __repr__(self) -> str:
        return f"CyclotomicElement({self.n}, {str(self)!r})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self):
        return [str(c) for c in self.coeffs]


def cyclotomic_arith(a: CyclotomicElement, b: CyclotomicElement, op: str) -> CyclotomicElement:
    """Apply ``op`` in {add, sub, mul, inv}; ``inv`` ignores ``b`` apart from the order check."""
    if a.n != b.n:
        raise MismatchedOrder(f"orders {a.n} and {b.n} differ")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {op!r}")
