"""Ternary fat Cantor sets, Riesz-product Fourier tables, and Riesz-pair bounds.

The heavy lifting lives in the C++ extension ``rieszpair._core``; this package
re-exports it and adds small conveniences for exact rational values, which the
extension reports as lowest-terms fraction strings.
"""

from fractions import Fraction

from ._core import (
    AlphaPoint,
    CantorParams,
    DensityVerdict,
    FourierTable,
    IndexSet,
    IntervalSet,
    MinEigenPair,
    RestrictedGram,
    SobolevProbe,
    TranslationCheck,
    all_eigenvalues,
    alpha_sequence,
    build_gram,
    build_table,
    choose_depth,
    coefficient,
    density_vs_measure,
    enumerate_members,
    is_cover,
    level_coefficient_direct,
    level_coefficient_exact,
    level_set,
    min_eigenpair,
    parse_index_set,
    parseval_partial,
    sobolev_partial_sums,
    sobolev_threshold_exponent,
    thue_morse_bit,
    translation_inequality_check,
    truncate,
    upper_beurling_estimate,
)

__all__ = [
    "AlphaPoint",
    "CantorParams",
    "DensityVerdict",
    "FourierTable",
    "IndexSet",
    "IntervalSet",
    "MinEigenPair",
    "RestrictedGram",
    "SobolevProbe",
    "TranslationCheck",
    "all_eigenvalues",
    "alpha",
    "alpha_sequence",
    "build_gram",
    "build_table",
    "choose_depth",
    "coefficient",
    "density_vs_measure",
    "enumerate_members",
    "fraction",
    "is_cover",
    "level_coefficient_direct",
    "level_coefficient_exact",
    "level_set",
    "min_eigenpair",
    "parse_index_set",
    "parseval_partial",
    "sobolev_partial_sums",
    "sobolev_threshold_exponent",
    "thue_morse_bit",
    "translation_inequality_check",
    "truncate",
    "upper_beurling_estimate",
]


def fraction(text):
    """Exact Fraction from a 'num/den' string as returned by the extension."""
    return Fraction(text)


def alpha(gamma, n, frequencies=None, eps=1e-12):
    """alpha(B, F_n) for one truncation bound.

    ``gamma`` is a fraction string ('3/4' or '0.75'), ``frequencies`` an
    IndexSet (Thue-Morse when omitted). Returns the AlphaPoint.
    """
    params = CantorParams(gamma)
    if frequencies is None:
        frequencies = IndexSet.thue_morse()
    points = alpha_sequence(params, frequencies, [n], eps)
    return points[0]
