"""Aspherical parameters, crystals and supports for cyclotomic rational Cherednik algebras."""
from .errors import *  # noqa: F401,F403
from .scalar import KAPPA, ExactScalar, as_scalar, parse_scalar
from .parameters import (
    CParams, HParams, SParams, HyperplaneParams, c_to_h, h_to_c, h_to_s, s_to_h, c_to_s, s_to_c,
    lambda_classical, lambda_quantum, is_aspherical_c, is_aspherical_s,
    enumerate_aspherical_hyperplanes, rectangle_bound,
)
from .multipartition import Box, MultiPartition, enumerate_multipartitions, parse_multipartition
from .crystal import Convention, ZClass, e_tilde, f_tilde, depth_by_descent, signature
from .supports import closed_form_depth, singular_family, support_table
from .quiver import QuiverData, cyclic_quiver, classify_root, slice_quiver
from .ideals import grass_chain, cherednik_chain, annihilated_simples, k0_kernel, e_membership

__version__ = "0.1.0"
