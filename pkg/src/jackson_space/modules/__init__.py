from .characters import Character, enumerate_points, relation_values, validate_module
from .ext import DeformationShape, ExtResult, deformation_shape, ext1, mirror, tangent_matrix
from .elimination import CPoly, VarietyComponent, decompose
from .locus import Component, LocusDescription, one_dim_locus, points_of
from .tables import predict_fibre_ext, reference_fibre_ext, reference_jackson_ext
