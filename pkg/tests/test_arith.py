from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jackson_space.arith import (
    CyclotomicField,
    FiniteField,
    PrimeContext,
    cyclotomic_arith,
    is_primitive_root,
    reduce_scalar,
    reduce_zeta,
)
from jackson_space.errors import BadPrime, DivisionByZero, MismatchedOrder, NotReducible

from oracles import mult_order_mod, padded, sympy_add, sympy_mul

ORDERS = [1, 2, 3, 4, 5, 6, 7, 8, 9, 12]


def cyc_elements(n):
    d = CyclotomicField(n).degree
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(coeff, min_size=d, max_size=d).map(CyclotomicField(n))


@st.composite
def cyc_triple(draw):
    n = draw(st.sampled_from(ORDERS))
    elem = cyc_elements(n)
    return n, draw(elem), draw(elem), draw(elem)


def test_i_squared_is_minus_one():
    K = CyclotomicField(4)
    assert cyclotomic_arith(K.zeta(), K.zeta(), "mul") == K(-1)


def test_cube_roots_sum():
    K = CyclotomicField(3)
    assert cyclotomic_arith(K.zeta(), K.zeta(2), "add") == K(-1)


def test_fifth_roots_product():
    K = CyclotomicField(5)
    assert cyclotomic_arith(K.zeta(2), K.zeta(4), "mul") == K.zeta()


def test_mismatched_orders():
    with pytest.raises(MismatchedOrder):
        cyclotomic_arith(CyclotomicField(3).zeta(), CyclotomicField(4).zeta(), "add")


def test_inverse_of_zero():
    K = CyclotomicField(5)
    with pytest.raises(DivisionByZero):
        cyclotomic_arith(K.zero, K.zero, "inv")


@pytest.mark.parametrize("n", ORDERS)
def test_zeta_is_root_of_cyclotomic_polynomial(n):
    K = CyclotomicField(n)
    z = K.zeta()
    assert z**n == K.one
    value = K.zero
    for k, c in enumerate(K.modulus):
        value = value + c * z**k
    assert value == K.zero
    assert len(K.zero.coeffs) == K.degree


@given(cyc_triple())
def test_ring_axioms(data):
    n, a, b, c = data
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == a.field.zero


@given(cyc_triple())
def test_product_matches_sympy(data):
    n, a, b, _ = data
    d = a.field.degree
    assert list((a * b).coeffs) == padded(sympy_mul(a, b, n), d)
    assert list((a + b).coeffs) == padded(sympy_add(a, b), d)


@given(cyc_triple())
def test_inverse(data):
    n, a, _, _ = data
    if a:
        assert a * a.inverse() == a.field.one


def test_primitive_root_examples():
    K6, K5 = CyclotomicField(6), CyclotomicField(5)
    assert not is_primitive_root(K6.zeta(2), 6)
    assert is_primitive_root(K5.zeta(), 5)
    F7 = FiniteField(7)
    # 2 has order 3 mod 7
    assert mult_order_mod(2, 7) == 3
    assert is_primitive_root(F7(2), 3)
    assert not is_primitive_root(F7(2), 6)


@pytest.mark.parametrize("p,m", [(2, 1), (2, 3), (3, 2), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1)])
def test_finite_field_axioms_and_frobenius(p, m):
    F = FiniteField(p, m)
    elems = list(F.elements())
    assert len(elems) == p**m
    fixed = [x for x in elems if x.frobenius() == x]
    assert len(fixed) == p
    images = {x.frobenius() for x in elems}
    assert len(images) == len(elems)
    for x in elems[:12]:
        for y in elems[:12]:
            assert (x * y).frobenius() == x.frobenius() * y.frobenius()
            assert (x + y).frobenius() == x.frobenius() + y.frobenius()
        if x:
            assert x * x.inverse() == F.one
    assert F.generator().multiplicative_order() == p**m - 1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_prime_field_matches_modular_integers(p):
    F = FiniteField(p)
    for a in range(p):
        for b in range(p):
            assert F(a) * F(b) == F(a * b % p)
            assert F(a) - F(b) == F((a - b) % p)
        if a:
            assert F(a).multiplicative_order() == mult_order_mod(a, p)


def test_field_errors():
    with pytest.raises(BadPrime):
        FiniteField(6)
    with pytest.raises(DivisionByZero):
        FiniteField(5)(Fraction(1, 5))
    with pytest.raises(DivisionByZero):
        FiniteField(5).zero.inverse()


def test_reduce_zeta_examples():
    ctx = PrimeContext(5, 5)
    assert reduce_zeta(ctx, 5, 1) == ctx.field.one
    ctx7 = PrimeContext(7, 3)
    img = reduce_zeta(ctx7, 3, 1)
    assert img in (ctx7.field(2), ctx7.field(4))
    assert img.multiplicative_order() == 3
    assert reduce_zeta(ctx7, 3, 0) == ctx7.field.one


@pytest.mark.parametrize("ell,n", [(7, 3), (5, 4), (11, 5), (3, 4), (2, 7), (3, 8), (13, 12), (2, 9)])
def test_reduce_zeta_multiplicative_and_order(ell, n):
    ctx = PrimeContext(ell, n)
    for a in range(n):
        for b in range(n):
            assert reduce_zeta(ctx, n, a) * reduce_zeta(ctx, n, b) == reduce_zeta(ctx, n, a + b)
    assert reduce_zeta(ctx, n, 1).multiplicative_order() == n


@pytest.mark.parametrize("ell,n", [(3, 6), (2, 12), (5, 10), (3, 9), (7, 7)])
def test_reduce_zeta_ell_dividing_n(ell, n):
    m_prime = n
    while m_prime % ell == 0:
        m_prime //= ell
    img = reduce_zeta(PrimeContext(ell, n), n, 1)
    assert m_prime % img.multiplicative_order() == 0


@given(st.sampled_from([(7, 3), (5, 4), (13, 6), (11, 10)]), st.data())
def test_reduce_scalar_is_ring_map(case, data):
    ell, n = case
    ctx = PrimeContext(ell, n)
    coeff = st.integers(min_value=-20, max_value=20)
    d = CyclotomicField(n).degree
    a = CyclotomicField(n)(data.draw(st.lists(coeff, min_size=d, max_size=d)))
    b = CyclotomicField(n)(data.draw(st.lists(coeff, min_size=d, max_size=d)))
    assert reduce_scalar(ctx, a * b) == reduce_scalar(ctx, a) * reduce_scalar(ctx, b)
    assert reduce_scalar(ctx, a + b) == reduce_scalar(ctx, a) + reduce_scalar(ctx, b)


def test_not_reducible():
    with pytest.raises(NotReducible):
        reduce_scalar(PrimeContext(3, 3), Fraction(1, 3))


@pytest.mark.parametrize("p,m", [(7, 1), (5, 2), (3, 2), (2, 4), (11, 1), (3, 3), (13, 1)])
def test_smallest_root_matches_scan(p, m):
    from jackson_space.arith.residue import smallest_root_of_unity

    F = FiniteField(p, m)
    for order in range(1, F.order):
        if (F.order - 1) % order:
            continue
        scan = min((x for x in F.nonzero_elements() if x.multiplicative_order() == order),
                   key=lambda x: x.code)
        assert smallest_root_of_unity(F, order) == scan
