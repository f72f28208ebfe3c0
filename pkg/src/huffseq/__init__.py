"""huffseq: delta-correlated sequence families, correlation analysis, and
the two-mask de-correlation imaging protocol."""

from .core import (
    DEFAULT_TOL,
    FIB_INDEX_LIMIT,
    ArgumentError,
    DomainError,
    Sequence,
    approx_equal,
    as_array,
    dft,
    fib_poly,
    from_json_obj,
    kron,
    offset,
    outer,
    quantize_round,
    scale,
    to_json_obj,
)
from .families import (
    FAMILY_INFO,
    family_ids,
    fixture_description,
    fixture_names,
    fixtures,
    gen_fibonacci,
    gen_h11,
    gen_h13a,
    gen_h13b,
    gen_h17,
    gen_h17_matched,
    gen_h9a,
    gen_h9b,
    gen_h_arb,
    gen_h_plus,
    gen_h_tan,
    gen_he4,
    gen_he6,
    gen_perfect_arb,
    gen_perfect_fib,
    generate,
)
from .analysis import (
    CanonicalReport,
    CorrelationProfile,
    autocorr,
    dual_autocorr,
    dual_cross_spectrum,
    is_canonical,
    is_perfect,
    merit_factor,
    merit_factor_exact,
    nd_autocorr,
    periodic_autocorr,
    spectral_flatness,
    xcorr,
)
from .decorrelate import (
    DoseReport,
    MaskSet,
    ReconError,
    blur,
    delta_correlation_residual,
    dose,
    end_term_bound,
    measure,
    min_pedestal,
    pedestal_masks,
    recombine,
    recon_error,
    reconstruct,
    split_complex,
    split_signs,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
