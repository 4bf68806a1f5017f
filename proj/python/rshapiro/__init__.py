"""Rudin-Shapiro polynomial toolkit.

Constructions, certified level-crossing counts, exact coefficient identities,
and value-distribution statistics, backed by the C++ core.
"""

from ._core import (  # noqa: F401
    CapacityError,
    Crossing,
    CrossingReport,
    Histogram1D,
    Histogram2D,
    MahlerReport,
    MomentReport,
    RootFindingError,
    RSPair,
    SignChangeArgumentReport,
    SignSequence,
    Theorem21Report,
    Theorem22Report,
    __version__,
    autocorrelation,
    band_mass,
    build_rs_pair,
    check_antisymmetry,
    check_eq_1_2,
    check_lemma_3_1,
    check_parallelogram,
    count_level_crossings,
    count_rs_crossings,
    eval_point,
    eval_unit_circle,
    grs_coefficient,
    mahler_quadrature,
    mahler_via_roots,
    modulus_squared_point,
    moment,
    planar_distribution,
    polynomial_roots,
    set_fft_threads,
    value_distribution,
    verify_sign_change_argument,
    verify_theorem_2_1,
    verify_theorem_2_2,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
