#include "rieszpair/spectral_gap.hpp"

#include <lapacke.h>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rieszpair {

RestrictedGram build_gram(const FourierTable& table, std::vector<std::int64_t> indices) {
    if (indices.empty()) throw std::invalid_argument("build_gram: index set is empty");
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i] <= indices[i - 1])
            throw std::invalid_argument("build_gram: indices must be strictly ascending");
    if (indices.back() - indices.front() > table.max_freq)
        throw std::out_of_range("build_gram: lag " +
                                std::to_string(indices.back() - indices.front()) +
                                " exceeds tabulated range " + std::to_string(table.max_freq));

    const auto n = static_cast<Eigen::Index>(indices.size());
    RestrictedGram gram;
    gram.gamma = table.gamma;
    gram.table_max_freq = table.max_freq;
    gram.table_eps = table.eps;
    gram.entries.resize(n, n);
    for (Eigen::Index q = 0; q < n; ++q) {
        for (Eigen::Index p = 0; p <= q; ++p) {
            const double v = table.at(indices[static_cast<std::size_t>(q)] -
                                      indices[static_cast<std::size_t>(p)]);
            gram.entries(p, q) = v;
            gram.entries(q, p) = v;
        }
    }
    gram.indices = std::move(indices);
    return gram;
}

namespace {

double infinity_norm(const Eigen::MatrixXd& m) {
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

MinEigenPair min_eigenpair(const RestrictedGram& gram) {
    const auto n = static_cast<lapack_int>(gram.size());
    if (n < 1) throw std::invalid_argument("min_eigenpair: matrix size must be >= 1");

    Eigen::MatrixXd work = gram.entries;  // dsyevr destroys its input
    Eigen::VectorXd vec(n);
    double value = 0.0;
    lapack_int found = 0;
    std::vector<lapack_int> isuppz(2);
    const lapack_int info =
        LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, work.data(), n, 0.0, 0.0, 1, 1,
                       0.0, &found, &value, vec.data(), n, isuppz.data());
    if (info != 0 || found != 1)
        throw std::runtime_error("min_eigenpair: dsyevr failed with info=" + std::to_string(info));

    MinEigenPair out;
    out.vector = vec / vec.norm();
    out.value = value;
    out.norm_bound = infinity_norm(gram.entries);
    out.residual = (gram.entries * out.vector - value * out.vector).norm();
    if (out.residual > 1e-8 * std::max(out.norm_bound, 1e-300))
        throw std::runtime_error("min_eigenpair: residual " + std::to_string(out.residual) +
                                 " exceeds 1e-8 * " + std::to_string(out.norm_bound));
    return out;
}

std::vector<double> all_eigenvalues(const RestrictedGram& gram) {
    const auto n = static_cast<lapack_int>(gram.size());
    if (n < 1) throw std::invalid_argument("all_eigenvalues: matrix size must be >= 1");

    Eigen::MatrixXd work = gram.entries;
    std::vector<double> values(static_cast<std::size_t>(n));
    lapack_int found = 0;
    std::vector<lapack_int> isuppz(static_cast<std::size_t>(2 * n));
    const lapack_int info =
        LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'N', 'A', 'L', n, work.data(), n, 0.0, 0.0, 0, 0,
                       0.0, &found, values.data(), nullptr, n, isuppz.data());
    if (info != 0)
        throw std::runtime_error("all_eigenvalues: dsyevr failed with info=" +
                                 std::to_string(info));
    values.resize(static_cast<std::size_t>(found));
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<AlphaPoint> alpha_sequence(const FourierTable& table, const IndexSet& frequencies,
                                       const std::vector<std::int64_t>& schedule) {
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw std::invalid_argument("alpha_sequence: schedule must be ascending");

    std::vector<AlphaPoint> out;
    out.reserve(schedule.size());
    for (const std::int64_t n : schedule) {
        if (n < 0) throw std::invalid_argument("alpha_sequence: truncation bound must be >= 0");
        auto members = enumerate(frequencies, 0, n);
        if (members.empty())
            throw std::invalid_argument("alpha_sequence: no frequencies in [0, " +
                                        std::to_string(n) + "]");
        const auto gram = build_gram(table, std::move(members));
        const auto pair = min_eigenpair(gram);
        out.push_back({n, gram.size(), pair.value});
    }
    return out;
}

std::vector<AlphaPoint> alpha_sequence(const CantorParams& params, const IndexSet& frequencies,
                                       const std::vector<std::int64_t>& schedule, double eps) {
    if (schedule.empty()) return {};
    const auto table = build_table(params, schedule.back(), eps);
    return alpha_sequence(table, frequencies, schedule);
}

}  // namespace rieszpair
