#pragma once

#include "rieszpair/riesz_coeffs.hpp"
#include "rieszpair/symbolic_sequences.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace rieszpair {

/// Principal submatrix of the Laurent operator of chi_B restricted to a
/// finite index set G: entry (p, q) = chi_hat(G[q] - G[p]). Symmetric with
/// constant diagonal gamma; spectrum sits in [0, 1] up to table error.
struct RestrictedGram {
    std::vector<std::int64_t> indices;
    Eigen::MatrixXd entries;
    Rational gamma;
    std::int64_t table_max_freq = 0;
    double table_eps = 0.0;

    std::size_t size() const { return indices.size(); }
};

/// Assembles the restricted matrix from a coefficient table. Indices must be
/// strictly ascending and nonempty; throws std::out_of_range when the widest
/// lag exceeds the tabulated range.
RestrictedGram build_gram(const FourierTable& table, std::vector<std::int64_t> indices);

struct MinEigenPair {
    double value = 0.0;
    Eigen::VectorXd vector;  // unit norm
    double residual = 0.0;   // achieved ||M v - lambda v||_2
    double norm_bound = 0.0; // infinity norm of M used in the residual gate
};

/// Smallest eigenvalue and a unit eigenvector of the restricted matrix,
/// with the residual contract ||M v - lambda v|| <= 1e-8 ||M||. Throws
/// std::runtime_error reporting the achieved residual on failure.
MinEigenPair min_eigenpair(const RestrictedGram& gram);

/// Full eigenvalue list, ascending (no eigenvectors).
std::vector<double> all_eigenvalues(const RestrictedGram& gram);

struct AlphaPoint {
    std::int64_t n = 0;      // truncation bound: F_n = F intersect [0, n]
    std::size_t set_size = 0;
    double alpha = 0.0;
};

/// alpha(B, F_n) along an ascending schedule of truncation bounds, all read
/// from one coefficient table (which must cover max(schedule)).
std::vector<AlphaPoint> alpha_sequence(const FourierTable& table, const IndexSet& frequencies,
                                       const std::vector<std::int64_t>& schedule);

/// Convenience overload that builds the table itself.
std::vector<AlphaPoint> alpha_sequence(const CantorParams& params, const IndexSet& frequencies,
                                       const std::vector<std::int64_t>& schedule,
                                       double eps = 1e-12);

}  // namespace rieszpair
