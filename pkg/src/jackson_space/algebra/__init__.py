from .families import (
    build_II,
    build_infinitesimal,
    build_jackson,
    build_kummer_witt,
    build_polynomial,
    build_quantum_affine,
)
from .homlie import HomLieBracketTable, hom_lie_bracket, symbolic_bracket
from .presentation import NCPolynomial, QPresentation, Rule
from .rewriting import (
    OverlapWitness,
    check_confluence,
    is_central,
    normal_form,
    relations_equal,
    shift_generator,
    specialize,
)
