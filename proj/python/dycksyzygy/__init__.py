"""Dyck pattern calculus for GL-invariant ideals of a matrix coordinate ring."""

from ._core import (
    BettiTable,
    DyckPath,
    DyckPattern,
    HilbertSeries,
    Partition,
    a_to_b,
    b_side_patterns,
    b_to_a,
    betti_table,
    cube_complex_check,
    eagon_northcott_betti,
    euler_check,
    general_ideal_terms,
    hilbert_series_kac,
    hilbert_series_simple,
    homology_classes,
    is_admissible,
    kac_class,
    kac_patterns,
    label_of,
    leq,
    make_path,
    make_pattern,
    parse_partition,
    render_svg,
    schur_dim,
    simple_in_kac_basis,
    ssyt_count,
    syzygy_patterns,
    union_of,
)

__all__ = [
    "BettiTable",
    "DyckPath",
    "DyckPattern",
    "HilbertSeries",
    "Partition",
    "a_to_b",
    "b_side_patterns",
    "b_to_a",
    "betti_table",
    "cube_complex_check",
    "eagon_northcott_betti",
    "euler_check",
    "general_ideal_terms",
    "hilbert_series_kac",
    "hilbert_series_simple",
    "homology_classes",
    "is_admissible",
    "kac_class",
    "kac_patterns",
    "label_of",
    "leq",
    "make_path",
    "make_pattern",
    "parse_partition",
    "render_svg",
    "schur_dim",
    "simple_in_kac_basis",
    "ssyt_count",
    "syzygy_patterns",
    "union_of",
]
