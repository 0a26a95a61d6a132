"""Reduction of cyclotomic scalars modulo a prime above ell."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from sympy import isprime, n_order, totient

from ..errors import BadPrime, NotReducible
from .cyclotomic import CyclotomicElement
from .finite_field import FiniteField, FiniteFieldElement


def split_prime_part(n: int, ell: int) -> tuple[int, int]:
    """Write n = ell^k * n' with ell not dividing n'; return (k, n')."""
    k = 0
    while n % ell == 0:
        n //= ell
        k += 1
    return k, n


def residue_degree_of(ell: int, n: int) -> int:
    """Degree of the residue field of Q(zeta_n) at a prime above ell."""
    _, n_prime = split_prime_part(n, ell)
    return 1 if n_prime == 1 else int(n_order(ell, n_prime))


def ramification_index_of(ell: int, n: int) -> int:
    k, _ = split_prime_part(n, ell)
    return int(totient(ell**k)) if k else 1


@lru_cache(maxsize=None)
def smallest_root_of_unity(field: FiniteField, order: int) -> FiniteFieldElement:
    """Smallest-code element of exact multiplicative order ``order``."""
    if (field.order - 1) % order:
        raise ValueError(f"{field.describe()} has no element of order {order}")
    # elements of exact order n are g^(k(q-1)/n) with gcd(k, n) = 1
    base = field.generator() ** ((field.order - 1) // order)
    return min((base**k for k in range(1, order + 1) if gcd(k, order) == 1), key=lambda x: x.code)


class PrimeContext:
    """A prime above ``residue_char`` in Q(zeta_n), with its residue field.

    The residue degree is raised to the least common multiple of the
    requested degree and the degree forced by zeta_n, so that the image of
    zeta_n always lives in the residue field.
    """

    def __init__(self, residue_char: int, n: int = 1, residue_degree: int = 1,
                 ramification_index: int | None = None):
        if not isprime(residue_char):
            raise BadPrime(f"{residue_char} is not prime")
        self.residue_char = int(residue_char)
        self.n = int(n)
        self.residue_degree = lcm(int(residue_degree), residue_degree_of(self.residue_char, self.n))
        if ramification_index is None:
            ramification_index = ramification_index_of(self.residue_char, self.n)
        self.ramification_index = int(ramification_index)
        self.field = FiniteField(self.residue_char, self.residue_degree)

    def __repr__(self) -> str:
        return (f"PrimeContext(residue_char={self.residue_char}, n={self.n}, "
                f"residue_degree={self.residue_degree}, ramification_index={self.ramification_index})")

    @property
    def reduction_of_zeta(self) -> FiniteFieldElement:
        return reduce_zeta(self, self.n, 1)

    def extended(self, n: int) -> "PrimeContext":
        """Context able to host the image of zeta_n as well."""
        return PrimeContext(self.residue_char, lcm(self.n, n), self.residue_degree, self.ramification_index)

    def reduce(self, x) -> FiniteFieldElement:
        """Residue of a rational or of an element of Q(zeta_n)."""
        return reduce_scalar(self, x)


def _zeta_image(ctx: PrimeContext, n: int) -> FiniteFieldElement:
    _, n_prime = split_prime_part(n, ctx.residue_char)
    field = ctx.field
    if (field.order - 1) % n_prime:
        field = FiniteField(ctx.residue_char, lcm(field.m, residue_degree_of(ctx.residue_char, n_prime)))
    return smallest_root_of_unity(field, n_prime)


def reduce_zeta(ctx: PrimeContext, n: int, exponent: int) -> FiniteFieldElement:
    """Image of zeta_n ** exponent: a fixed root of Phi_{n'} raised to ``exponent``.

    Here n' is n with its residue-characteristic part removed; the root is
    the smallest-code element of order n' in the residue field.
    """
    return _zeta_image(ctx, n) ** (exponent % n)


def _reduce_rational(field: FiniteField, c: Fraction) -> FiniteFieldElement:
    c = Fraction(c)
    if c.denominator % field.p == 0:
        raise NotReducible(f"{c} has a denominator divisible by {field.p}")
    return field(c.numerator * pow(c.denominator, -1, field.p))


def reduce_scalar(ctx: PrimeContext, x) -> FiniteFieldElement:
    if isinstance(x, FiniteFieldElement):
        return x
    if isinstance(x, CyclotomicElement):
        z = _zeta_image(ctx, x.n)
        acc = z.field.zero
        zk = z.field.one
        for c in x.coeffs:
            if c:
                acc = acc + _reduce_rational(z.field, c) * zk
            zk = zk * z
        return acc
    return _reduce_rational(ctx.field, Fraction(x))


def is_primitive_root(x, n: int) -> bool:
    """True iff x^n = 1 and x^d != 1 for every proper divisor d of n."""
    if n < 1 or not x:
        return False
    one = x.field.one
    if x**n != one:
        return False
    return all(x**d != one for d in range(1, n) if n % d == 0)
