"""Finite fields F_{p^m} with a deterministic primitive modulus.

An element is stored as an integer code: the coefficient vector
(c_0, ..., c_{m-1}) of its polynomial representative is read as the base-p
digits of the code.  Comparing codes gives the total order used whenever a
canonical choice of element is needed.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from sympy import factorint, isprime

from ..errors import BadPrime, DivisionByZero, MismatchedOrder

_TABLE_LIMIT = 1 << 16


def _digits(code: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _undigits(digits, p: int) -> int:
    code = 0
    for c in reversed(digits):
        code = code * p + c
    return code


def _polymulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k]
        if c:
            for i in range(m + 1):
                prod[k - m + i] = (prod[k - m + i] - c * modulus[i]) % p
    return prod[:m]


def _polypowmod(a: list[int], e: int, modulus: tuple[int, ...], p: int) -> list[int]:
    m = len(modulus) - 1
    result = [1] + [0] * (m - 1)
    while e:
        if e & 1:
            result = _polymulmod(result, a, modulus, p)
        a = _polymulmod(a, a, modulus, p)
        e >>= 1
    return result


@lru_cache(maxsize=None)
def primitive_modulus(p: int, m: int) -> tuple[int, ...]:
    """First monic primitive polynomial of degree m over F_p, coefficients lowest first.

    Candidates are scanned with the low coefficients (c_0, ..., c_{m-1}) read
    as a base-p number in increasing order.
    """
    if m == 1:
        # x - g for the smallest primitive root g
        g = _smallest_primitive_root(p)
        return ((-g) % p, 1)
    order = p**m - 1
    primes = list(factorint(order))
    x = [0, 1] + [0] * (m - 2)
    one = [1] + [0] * (m - 1)
    for low in product(range(p), repeat=m):
        low = tuple(reversed(low))
        if low[0] == 0:
            continue
        modulus = low + (1,)
        if _polypowmod(x, order, modulus, p) != one:
            continue
        if all(_polypowmod(x, order // r, modulus, p) != one for r in primes):
            return modulus
    raise AssertionError(f"no primitive polynomial found for p={p}, m={m}")


@lru_cache(maxsize=None)
def _smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    primes = list(factorint(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in primes):
            return g
    raise AssertionError(p)


class FiniteField:
    """F_{p^m}; instances are cached so identity comparison is meaningful."""

    _cache: dict[tuple[int, int], "FiniteField"] = {}

    def __new__(cls, p: int, m: int = 1):
        p, m = int(p), int(m)
        key = (p, m)
        field = cls._cache.get(key)
        if field is None:
            if not isprime(p):
                raise BadPrime(f"{p} is not prime")
            if m < 1:
                raise ValueError(f"extension degree must be positive, got {m}")
            field = super().__new__(cls)
            field._setup(p, m)
            cls._cache[key] = field
        return field

    def _setup(self, p: int, m: int) -> None:
        self.p = p
        self.m = m
        self.characteristic = p
        self.order = p**m
        self.degree = m
        self.modulus = primitive_modulus(p, m)
        self._exp = self._log = None
        if self.order <= _TABLE_LIMIT:
            self._build_tables()
        self.zero = FiniteFieldElement(self, 0)
        self.one = FiniteFieldElement(self, 1)

    def _build_tables(self) -> None:
        q = self.order
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        cur = [1] + [0] * (self.m - 1)
        gen = [0, 1] + [0] * (self.m - 2) if self.m > 1 else [(-self.modulus[0]) % self.p]
        for k in range(q - 1):
            code = _undigits(cur, self.p)
            exp[k] = code
            log[code] = k
            cur = _polymulmod(cur, gen, self.modulus, self.p) if self.m > 1 else [cur[0] * gen[0] % self.p]
        for k in range(q - 1, 2 * (q - 1)):
            exp[k] = exp[k - (q - 1)]
        self._exp, self._log = exp, log

    def __reduce__(self):
        return (FiniteField, (self.p, self.m))

    def __repr__(self) -> str:
        return f"FiniteField({self.p}, {self.m})"

    def describe(self) -> str:
        return f"F_{self.order}" if self.m == 1 else f"F_{self.p}^{self.m}"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (other.p, other.m) == (self.p, self.m)

    def __hash__(self) -> int:
        return hash(("gf", self.p, self.m))

    def to_json(self) -> dict:
        return {"type": "finite", "p": self.p, "m": self.m}

    def __call__(self, value) -> "FiniteFieldElement":
        if isinstance(value, FiniteFieldElement):
            if value.field is not self:
                raise MismatchedOrder(f"element of {value.field.describe()} used in {self.describe()}")
            return value
        if isinstance(value, int):
            return FiniteFieldElement(self, value % self.p)
        if isinstance(value, (list, tuple)):
            return self.from_coeffs(value)
        # Fractions: reduce numerator and denominator
        num = getattr(value, "numerator", None)
        den = getattr(value, "denominator", None)
        if num is not None and den is not None:
            if den % self.p == 0:
                raise DivisionByZero(f"denominator {den} vanishes mod {self.p}")
            return FiniteFieldElement(self, num * pow(den, -1, self.p) % self.p)
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    def from_coeffs(self, coeffs) -> "FiniteFieldElement":
        """Element with polynomial representative sum coeffs[k] x^k (reduced if long)."""
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.m:
            # reduce x^k for k >= m
            acc = [0] * self.m
            xpow = [1] + [0] * (self.m - 1)
            x = [0, 1] + [0] * (self.m - 2) if self.m > 1 else [(-self.modulus[0]) % self.p]
            for c in coeffs:
                if c:
                    acc = [(a + c * b) % self.p for a, b in zip(acc, xpow)]
                xpow = _polymulmod(xpow, x, self.modulus, self.p) if self.m > 1 else [xpow[0] * x[0] % self.p]
            coeffs = acc
        coeffs = coeffs + [0] * (self.m - len(coeffs))
        return FiniteFieldElement(self, _undigits(coeffs, self.p))

    def from_code(self, code: int) -> "FiniteFieldElement":
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} out of range for {self.describe()}")
        return FiniteFieldElement(self, code)

    def generator(self) -> "FiniteFieldElement":
        """The class of x, a primitive element (for m = 1 the smallest primitive root)."""
        if self.m == 1:
            return FiniteFieldElement(self, _smallest_primitive_root(self.p))
        return FiniteFieldElement(self, self.p)

    def elements(self):
        for code in range(self.order):
            yield FiniteFieldElement(self, code)

    def nonzero_elements(self):
        for code in range(1, self.order):
            yield FiniteFieldElement(self, code)

    def _mul_codes(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.m == 1:
            return a * b % self.p
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        p, m = self.p, self.m
        return _undigits(_polymulmod(_digits(a, p, m), _digits(b, p, m), self.modulus, p), p)

    def _add_codes(self, a: int, b: int, sign: int = 1) -> int:
        if self.m == 1:
            return (a + sign * b) % self.p
        p, m = self.p, self.m
        da, db = _digits(a, p, m), _digits(b, p, m)
        return _undigits([(x + sign * y) % p for x, y in zip(da, db)], p)

    def _inv_code(self, a: int) -> int:
        if not a:
            raise DivisionByZero(f"inverse of zero in {self.describe()}")
        if self.m == 1:
            return pow(a, -1, self.p)
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self._pow_code(a, self.order - 2)

    def _pow_code(self, a: int, e: int) -> int:
        if self.m == 1:
            return pow(a, e, self.p) if a else (1 if e == 0 else 0)
        if not a:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_codes(result, base)
            base = self._mul_codes(base, base)
            e >>= 1
        return result


class FiniteFieldElement:
    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def coeffs(self) -> list[int]:
        return _digits(self.code, self.field.p, self.field.m)

    @property
    def value(self) -> list[int]:
        return self.coeffs

    def _coerce(self, other) -> "FiniteFieldElement":
        if isinstance(other, FiniteFieldElement):
            if other.field is not self.field:
                raise MismatchedOrder(f"{self.field.describe()} and {other.field.describe()} differ")
            return other
        return self.field(other)

    def is_zero(self) -> bool:
        return self.code == 0

    def __bool__(self) -> bool:
        return self.code != 0

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return FiniteFieldElement(self.field, self.field._add_codes(self.code, other.code))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return FiniteFieldElement(self.field, self.field._add_codes(self.code, other.code, -1))

    def __rsub__(self, other):
        return self.field(other) - self

    def __neg__(self):
        return FiniteFieldElement(self.field, self.field._add_codes(0, self.code, -1))

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return FiniteFieldElement(self.field, self.field._mul_codes(self.code, other.code))

    __rmul__ = __mul__

    def inverse(self) -> "FiniteFieldElement":
        return FiniteFieldElement(self.field, self.field._inv_code(self.code))

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
        return FiniteFieldElement(self.field, self.field._pow_code(self.code, e))

    def frobenius(self) -> "FiniteFieldElement":
        return self ** self.field.p

    def multiplicative_order(self) -> int:
        if not self.code:
            raise DivisionByZero("zero has no multiplicative order")
        order = self.field.order - 1
        for r, k in factorint(order).items():
            for _ in range(k):
                if (self ** (order // r)).code == 1:
                    order //= r
                else:
                    break
        return order

    def __eq__(self, other) -> bool:
        if isinstance(other, FiniteFieldElement):
            return other.field == self.field and other.code == self.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("gf", self.field.p, self.field.m, self.code))

    def __lt__(self, other: "FiniteFieldElement") -> bool:
        return self.code < other.code

    def sort_key(self):
        return self.code

    def __repr__(self) -> str:
        return f"FiniteFieldElement({self.field.describe()}, {self})"

    def __str__(self) -> str:
        if self.field.m == 1:
            return str(self.code)
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
                terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        return self.code if self.field.m == 1 else self.coeffs
