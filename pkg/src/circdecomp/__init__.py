"""Hamilton cycle decompositions of 4-regular circulants and of tensor products G x H."""

from .decomposition import Decomposition, Q2Certificate
from .errors import CircDecompError
from .gamma import GammaGraph, LabelMap, to_gamma, transpose
from .graph_core import CirculantSpec, MultiGraph, build_circulant, cycle_graph, tensor_product
from .lift import decompose_4regular, decompose_4regular_full, lift_decomposition
from .pairing import JumpPairing, check_property_q, split_by_pairing
from .product import ProductDecomposition, decompose_cn_cross_g, decompose_product
from .verify import (
    brute_force_decomposition,
    find_q2_certificate,
    verify_hamilton_decomposition,
    verify_q1,
    verify_q2_certificate,
)

__all__ = [
    "CircDecompError",
    "CirculantSpec",
    "Decomposition",
    "GammaGraph",
    "JumpPairing",
    "LabelMap",
    "MultiGraph",
    "ProductDecomposition",
    "Q2Certificate",
    "brute_force_decomposition",
    "build_circulant",
    "check_property_q",
    "cycle_graph",
    "decompose_4regular",
    "decompose_4regular_full",
    "decompose_cn_cross_g",
    "decompose_product",
    "find_q2_certificate",
    "lift_decomposition",
    "split_by_pairing",
    "tensor_product",
    "to_gamma",
    "transpose",
    "verify_hamilton_decomposition",
    "verify_q1",
    "verify_q2_certificate",
]
