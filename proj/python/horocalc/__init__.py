"""Root-system, flag-variety and horospherical computations."""

from ._core import (
    cartan_matrix,
    color_partition_check,
    components_disjoint,
    fano_index,
    fano_index_vector,
    fibration_dim_identity,
    flag_dim,
    odd_grassmannian_dim,
    orbit_dimension,
    parabolic_quotient_dim,
    pasquier_table,
    positive_root_count,
    positive_roots,
    run_cli,
    spinor_check,
    subdiagram_components,
    vmrt_stratify,
)

__all__ = [
    "cartan_matrix",
    "color_partition_check",
    "components_disjoint",
    "fano_index",
    "fano_index_vector",
    "fibration_dim_identity",
    "flag_dim",
    "odd_grassmannian_dim",
    "orbit_dimension",
    "parabolic_quotient_dim",
    "pasquier_table",
    "positive_root_count",
    "positive_roots",
    "run_cli",
    "spinor_check",
    "subdiagram_components",
    "vmrt_stratify",
]
