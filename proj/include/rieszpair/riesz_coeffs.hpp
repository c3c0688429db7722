#pragma once

#include "rieszpair/cantor_set.hpp"
#include "rieszpair/rational.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rieszpair {

/// Cached Fourier transform of the characteristic function of B on the
/// symmetric range |k| <= max_freq, computed from the truncated cosine
/// product. Every entry carries the same certified absolute error bound.
struct FourierTable {
    Rational gamma;
    std::int64_t max_freq = 0;  // K
    int depth = 0;              // truncation depth J of the cosine product
    double eps = 0.0;           // requested relative tail bound
    double err_bound = 0.0;     // certified |table - exact| <= err_bound, = gamma*eps
    std::vector<double> values; // size 2K+1, entry for k at index k+K

    double at(std::int64_t k) const;
};

/// gamma * prod_{j=1..depth} cos(2 pi x_j k). The argument x_j*k is reduced
/// modulo 1 in exact arithmetic before the cosine is evaluated, so accuracy
/// does not degrade with |k|.
double coefficient(const CantorParams& params, std::int64_t k, int depth);

/// Smallest depth J whose product tail is certified below eps for every
/// |k| <= max_freq, via 1 - cos t <= t^2/2 and the exact geometric tail of
/// sum x_j^2.
int choose_depth(const CantorParams& params, std::int64_t max_freq, double eps);

/// Tabulates coefficient() for |k| <= max_freq at the depth chosen by
/// choose_depth. Entries are filled in parallel (threads = 0 picks the
/// hardware count); the result is deterministic and exactly even in k.
FourierTable build_table(const CantorParams& params, std::int64_t max_freq, double eps,
                         unsigned threads = 0);

/// Fourier coefficient of the level-J set S_J from the closed form
/// 2^J sin(pi k L_J)/(pi k) * prod_{j<=J} cos(2 pi x_j k); the measure
/// 2^J L_J at k = 0. Works at any level, nothing is materialized.
double level_coefficient_exact(const CantorParams& params, int level, std::int64_t k);

/// Brute-force oracle: integrates exp(-2 pi i k x) over every arc of the
/// materialized level set and sums. Subject to the level_set depth limit.
double level_coefficient_direct(const CantorParams& params, int level, std::int64_t k,
                                int max_depth = kDefaultMaxDepth);

/// sum_{|k| <= cutoff} table[k]^2, the Parseval partial sum.
double parseval_partial(const FourierTable& table, std::int64_t cutoff);
double parseval_partial(const FourierTable& table);

/// Cache file round trip. Doubles are stored as hex floats so a re-read is
/// bit-identical. load_table returns nullopt for missing or corrupt files.
void save_table(const FourierTable& table, const std::filesystem::path& path);
std::optional<FourierTable> load_table(const std::filesystem::path& path);

/// Canonical cache filename for the key (gamma, max_freq, eps).
std::string table_cache_filename(const CantorParams& params, std::int64_t max_freq, double eps);

}  // namespace rieszpair
