"""Geometric discord (GD) and measurement-induced nonlocality (MIN) of
bipartite density matrices, with the bound entangled state families they
are usually studied on."""

from ._qcorr import (
    BlochForm,
    DegenerateMarginal,
    DensityMatrix,
    DimensionError,
    DomainError,
    MeasureEstimate,
    Measurement,
    ParseError,
    SampleReport,
    UnsupportedDimension,
    ValidationReport,
    apply_measurement,
    benatti_4x4,
    bloch_decompose,
    bloch_reconstruct,
    classify_horodecki_3x3,
    gd_candidate_3x3,
    gd_exact_2xn,
    gd_lower_bound,
    horodecki_2x4,
    horodecki_3x3,
    horodecki_4x4_key,
    is_ppt,
    isotropic,
    marginal,
    min_exact,
    min_exact_2d_block,
    min_exact_nondegenerate,
    min_upper_bound,
    negativity,
    normalized_distance,
    partial_transpose,
    preserves_marginal,
    sample_gd,
    sample_min,
    state,
    upb_pyramid,
    upb_tiles,
    validate,
    werner,
)

__version__ = "0.1.0"
