from .cyclotomic import CyclotomicElement, CyclotomicField, cyclotomic_arith
from .finite_field import FiniteField, FiniteFieldElement, primitive_modulus
from .residue import PrimeContext, is_primitive_root, reduce_scalar, reduce_zeta

QQ = CyclotomicField(1)

__all__ = [
    "CyclotomicElement",
    "CyclotomicField",
    "FiniteField",
    "FiniteFieldElement",
    "PrimeContext",
    "QQ",
    "cyclotomic_arith",
    "is_primitive_root",
    "primitive_modulus",
    "reduce_scalar",
    "reduce_zeta",
]
