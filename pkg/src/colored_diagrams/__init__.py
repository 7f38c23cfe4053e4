"""Generating series of diagonally colored Young diagrams, computed three ways."""

from .partitions import (ColoringContext, Partition, PartitionTuple, color_weight,
                         enumerate_partitions, z_brute, z_tuple)
from .series import (MultiSeries, ZLaurentSeries, series_add, series_invert, series_mul,
                     specialize_uniform, z_constant_term, zl_mul)
from .frobenius import (ColoredFPartition, FrobeniusCoordinates, from_frobenius, h1_series,
                        h2_series, to_colored_fpartition, to_frobenius, z_via_constant_term)
from .identities import (cartan_matrix, core_sum, j_to_m, jacobi_triple_product_check,
                         m_to_j, product_n2, product_n3, quadratic_identity_check,
                         theta_closed_form)
from .abacus import (BeadWindow, CoreQuotient, beta_window, core_charges, core_series_brute,
                     from_core_quotient, n_core, n_quotient)

__all__ = [
    "ColoringContext", "Partition", "PartitionTuple", "color_weight", "enumerate_partitions",
    "z_brute", "z_tuple", "MultiSeries", "ZLaurentSeries", "series_add", "series_invert",
    "series_mul", "specialize_uniform", "z_constant_term", "zl_mul", "ColoredFPartition",
    "FrobeniusCoordinates", "from_frobenius", "h1_series", "h2_series",
    "to_colored_fpartition", "to_frobenius", "z_via_constant_term", "cartan_matrix",
    "core_sum", "j_to_m", "jacobi_triple_product_check", "m_to_j", "product_n2",
    "product_n3", "quadratic_identity_check", "theta_closed_form", "BeadWindow",
    "CoreQuotient", "beta_window", "core_charges", "core_series_brute",
    "from_core_quotient", "n_core", "n_quotient",
]

__version__ = "0.1.0"
