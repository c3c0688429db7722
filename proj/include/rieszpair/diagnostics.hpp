#pragma once

#include "rieszpair/cantor_set.hpp"
#include "rieszpair/riesz_coeffs.hpp"
#include "rieszpair/symbolic_sequences.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rieszpair {

/// Decay exponent 1 - log 2 / log 3 governing the Sobolev regularity of
/// chi_B for the ternary construction.
double sobolev_threshold_exponent();

/// Weighted Parseval partial sums sum_{0<|k|<=K} chi_hat(k)^2 |k|^{2s} along
/// a cutoff schedule. Finite sums cannot decide H^s membership; the growth
/// ratios between consecutive cutoffs are reported as the boundedness
/// signature (ratios falling toward 1 below the threshold exponent).
struct SobolevProbe {
    Rational gamma;
    double s = 0.0;
    std::vector<std::int64_t> cutoffs;
    std::vector<double> partial_sums;
    std::vector<double> growth_ratios;  // partial_sums[i] / partial_sums[i-1]
    double p = 0.0;                     // sobolev_threshold_exponent()
    double c = 0.0;                     // 4 (1-gamma)^(1-p)

    std::string to_json() const;
};

SobolevProbe sobolev_partial_sums(const FourierTable& table, double s,
                                  std::vector<std::int64_t> cutoffs);

/// Exact-arithmetic verification of the translation-difference inequality:
/// with sigma_j = (1-gamma)/3^j all measures are rationals, and
///   mu((S_j+sigma_j) d S_j)           <= 2 (1-gamma) (2/3)^j
///   mu((S_J+sigma_j) d S_J) + 2 mu(S_J d B) <= 4 (1-gamma) (2/3)^j
/// where mu(S_J d B) = (1-gamma)(2/3)^J enters through its closed form, so
/// the infinite set B itself is never materialized.
struct TranslationCheck {
    int j = 0;      // translation step
    int level = 0;  // materialization level J >= j
    Rational sigma;
    Rational step_symdiff;      // mu((S_j+sigma_j) d S_j), exact
    Rational step_bound;        // 2 (1-gamma) (2/3)^j
    Rational shifted_symdiff;   // mu((S_J+sigma_j) d S_J), exact
    Rational level_residual;    // mu(S_J d B) = (1-gamma)(2/3)^J
    Rational combined;          // shifted_symdiff + 2 * level_residual
    Rational total_bound;       // 4 (1-gamma) (2/3)^j
    bool step_ok = false;
    bool combined_ok = false;

    bool passed() const { return step_ok && combined_ok; }
    std::string to_json() const;
};

TranslationCheck translation_inequality_check(const CantorParams& params, int j, int level,
                                              int max_depth = kDefaultMaxDepth);

/// One-directional density screen: a Riesz pair requires the upper Beurling
/// density not to exceed mu(B), so an estimate above gamma (beyond the
/// finite-window slack 4/k) forces alpha to vanish. The converse direction
/// is not decided here.
struct DensityVerdict {
    Rational estimate;
    Rational gamma;
    Rational slack;  // 4 / window_len
    std::int64_t window_len = 0;
    bool alpha_must_vanish = false;
    std::string verdict;  // "alpha must vanish" | "no obstruction"

    std::string to_json() const;
};

DensityVerdict density_vs_measure(const IndexSet& set, const CantorParams& params,
                                  std::int64_t window_len, std::int64_t search_lo,
                                  std::int64_t search_hi);

}  // namespace rieszpair
