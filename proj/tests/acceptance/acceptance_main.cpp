// Acceptance suite: runs every headline requirement end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.
//
// Usage: acceptance [--quick]
//   --quick caps the monotonicity grid at n = 1023 for a fast local gate; the
//   default runs the full grid (10 gammas x truncations up to n = 4095).

#include "rieszpair/diagnostics.hpp"
#include "rieszpair/experiments.hpp"
#include "rieszpair/spectral_gap.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

using namespace rieszpair;

namespace {

Rational rat(std::int64_t num, std::int64_t den) { return make_rational(num, den); }

struct Gate {
    int failures = 0;

    void report(int id, const char* description, bool ok, const std::string& detail) {
        std::printf("[%s] criterion %2d: %s  (%s)\n", ok ? "PASS" : "FAIL", id, description,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// Spectrum/residual audit shared by criteria 1, 2, 6 and reported as 9.
struct SpectrumAudit {
    double min_eig = std::numeric_limits<double>::infinity();
    double max_eig = -std::numeric_limits<double>::infinity();
    double worst_residual_ratio = 0.0;
    int grams = 0;

    void record(const RestrictedGram& gram, const MinEigenPair& pair) {
        const auto values = all_eigenvalues(gram);
        min_eig = std::min(min_eig, values.front());
        max_eig = std::max(max_eig, values.back());
        worst_residual_ratio =
            std::max(worst_residual_ratio, pair.residual / (1e-8 * pair.norm_bound));
        ++grams;
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    Gate gate;
    SpectrumAudit audit;
    CoeffCache cache;  // in-memory; criteria share tables by (gamma, K, eps)
    const double eps = 1e-12;
    const IndexSet tm = IndexSet::thue_morse();

    // 1. Headline reproduction: alpha(B, F_4095) at gamma = 3/4.
    {
        Timer timer;
        const CantorParams params(rat(3, 4));
        const auto table = cache.lookup(params, 4095, eps);
        const auto gram = build_gram(*table, enumerate(tm, 0, 4095));
        const auto pair = min_eigenpair(gram);
        audit.record(gram, pair);
        const bool ok = std::abs(pair.value - 0.085512) <= 5e-4 && gram.size() == 2048;
        gate.report(1, "alpha(B, F_4095) = 0.085512 +- 5e-4 at gamma = 3/4", ok,
                    "alpha = " + fmt(pair.value) + ", size " + std::to_string(gram.size()) +
                        ", " + fmt(timer.seconds()) + "s");
    }

    // 2. Vanishing regime: gamma = 1/4 collapses to machine zero.
    {
        Timer timer;
        const CantorParams params(rat(1, 4));
        const auto table = cache.lookup(params, 4095, eps);
        const auto gram = build_gram(*table, enumerate(tm, 0, 4095));
        const auto pair = min_eigenpair(gram);
        audit.record(gram, pair);
        const bool ok = std::abs(pair.value) <= 1e-10;
        gate.report(2, "|alpha(B, F_4095)| <= 1e-10 at gamma = 1/4", ok,
                    "alpha = " + fmt(pair.value) + ", " + fmt(timer.seconds()) + "s");
    }

    // 3. Oracle equivalence: closed-form level transform vs direct integration.
    {
        Timer timer;
        double worst_ratio = 0.0;
        for (const auto& g : {rat(1, 4), rat(1, 2), rat(3, 4)}) {
            const CantorParams params(g);
            for (int level = 1; level <= 12; ++level) {
                const double tol = 1e-12 * std::ldexp(1.0, level);
                for (std::int64_t k = -256; k <= 256; ++k) {
                    const double diff = std::abs(level_coefficient_exact(params, level, k) -
                                                 level_coefficient_direct(params, level, k));
                    worst_ratio = std::max(worst_ratio, diff / tol);
                }
            }
        }
        gate.report(3, "|exact - direct| <= 1e-12 * 2^J for J <= 12, |k| <= 256",
                    worst_ratio <= 1.0,
                    "worst ratio " + fmt(worst_ratio) + ", " + fmt(timer.seconds()) + "s");
    }

    // 4. Parseval band at K = 65536.
    {
        Timer timer;
        bool ok = true;
        std::string detail;
        for (const auto& g : {rat(1, 4), rat(3, 4)}) {
            const CantorParams params(g);
            const auto table = cache.lookup(params, 65536, eps);
            const double sum = parseval_partial(*table);
            const double gamma = to_double(g);
            ok = ok && sum >= 0.9 * gamma && sum <= gamma + 1e-6;
            detail += "gamma " + to_fraction_string(g) + ": " + fmt(sum) + "  ";
        }
        gate.report(4, "sum_{|k|<=65536} chi^2 in [0.9 gamma, gamma + 1e-6]", ok,
                    detail + fmt(timer.seconds()) + "s");
    }

    // 5. Exact translation-inequality suite, zero numerical tolerance.
    {
        Timer timer;
        bool ok = true;
        for (const auto& g : {rat(1, 4), rat(1, 2), rat(3, 4)}) {
            const CantorParams params(g);
            for (int j = 1; j <= 10; ++j) {
                const auto check = translation_inequality_check(params, j, 12);
                ok = ok && check.step_ok && check.combined_ok;
            }
        }
        gate.report(5, "exact rational bounds for j = 1..10, J = 12, three gammas", ok,
                    fmt(timer.seconds()) + "s");
    }

    // 6. Monotonicity of alpha(B, F_n) over the full gamma grid.
    std::vector<AlphaPoint> convexity_row;  // gamma = 3/4 data reused by criterion 10
    {
        Timer timer;
        auto schedule = default_schedule();
        if (quick)
            schedule.erase(std::remove_if(schedule.begin(), schedule.end(),
                                          [](std::int64_t n) { return n > 1023; }),
                           schedule.end());
        bool ok = true;
        std::string violator;
        std::vector<std::pair<Rational, double>> final_alphas;
        for (const Rational& g : default_gamma_grid()) {
            const CantorParams params(g);
            const auto table = cache.lookup(params, schedule.back(), eps);
            std::vector<AlphaPoint> points;
            for (const std::int64_t n : schedule) {
                const auto gram = build_gram(*table, enumerate(tm, 0, n));
                const auto pair = min_eigenpair(gram);
                audit.record(gram, pair);
                points.push_back({n, gram.size(), pair.value});
            }
            for (std::size_t i = 1; i < points.size(); ++i) {
                if (points[i].alpha > points[i - 1].alpha + 1e-7) {
                    ok = false;
                    violator = "gamma " + to_fraction_string(g) + " at n = " +
                               std::to_string(points[i].n);
                }
            }
            final_alphas.emplace_back(g, points.back().alpha);
            if (g == rat(3, 4)) convexity_row = points;
        }

        // Necessary-condition consistency at n = 4095: a density estimate
        // above gamma + 0.05, beyond its finite-window slack 4/k, forces
        // alpha down to machine scale. Convergence at n = 1023 is too
        // shallow near the threshold, so the quick gate skips this part.
        if (!quick) {
            const Rational estimate = upper_beurling_estimate(
                tm, 4096, -(std::int64_t(1) << 20), std::int64_t(1) << 20);
            const Rational slack = rat(4, 4096);
            for (const auto& [g, alpha] : final_alphas) {
                if (estimate - slack > g + rat(1, 20) && !(alpha <= 1e-6)) {
                    ok = false;
                    violator = "density consistency at gamma " + to_fraction_string(g) +
                               ": alpha = " + fmt(alpha);
                }
            }
        }
        gate.report(6,
                    quick ? "alpha nonincreasing in n (quick gate, n <= 1023)"
                          : "alpha nonincreasing in n over the full grid (n <= 4095); "
                            "density consistency at n = 4095",
                    ok, (ok ? "slack 1e-7 held" : violator) + ", " + fmt(timer.seconds()) + "s");
    }

    // 7. Syndetic cover of the integers by {F, 1+F, 2+F}.
    {
        Timer timer;
        const std::vector<IndexSet> three = {tm, IndexSet::shifted(tm, 1),
                                             IndexSet::shifted(tm, 2)};
        const auto three_result = is_cover(three, -1000000, 1000000);
        const std::vector<IndexSet> two = {tm, IndexSet::shifted(tm, 1)};
        const auto two_result = is_cover(two, -1000000, 1000000);
        const bool ok = three_result.covered && !two_result.covered;
        gate.report(7, "{F,1+F,2+F} covers [-1e6, 1e6]; {F,1+F} fails with witness", ok,
                    "witness " + std::to_string(two_result.first_uncovered) + ", " +
                        fmt(timer.seconds()) + "s");
    }

    // 8. Upper Beurling density of Thue-Morse near 1/2.
    {
        Timer timer;
        const Rational estimate =
            upper_beurling_estimate(tm, 4096, -(std::int64_t(1) << 20), std::int64_t(1) << 20);
        const bool ok = estimate >= rat(1, 2) && estimate <= rat(13, 25);
        gate.report(8, "Beurling estimate (k = 4096, search 2^20) in [0.5, 0.52]", ok,
                    to_fraction_string(estimate) + " = " + fmt(to_double(estimate)) + ", " +
                        fmt(timer.seconds()) + "s");
    }

    // 9. Spectrum window and residual contract over every Gram matrix built above.
    {
        const bool ok = audit.min_eig >= -1e-7 && audit.max_eig <= 1.0 + 1e-7 &&
                        audit.worst_residual_ratio <= 1.0;
        gate.report(9, "all eigenvalues in [-1e-7, 1+1e-7]; residual <= 1e-8 ||M||", ok,
                    std::to_string(audit.grams) + " grams, spectrum [" + fmt(audit.min_eig) +
                        ", " + fmt(audit.max_eig) + "], worst residual ratio " +
                        fmt(audit.worst_residual_ratio));
    }

    // 10. Convexity-of-log-alpha evidence for gamma = 3/4, reported not asserted.
    {
        bool data_ok = !convexity_row.empty();
        std::string detail = "second differences of log10 alpha vs L:";
        std::vector<double> log_alpha;
        for (const auto& point : convexity_row) {
            data_ok = data_ok && std::isfinite(point.alpha) && point.alpha > 0;
            if (point.alpha > 0) log_alpha.push_back(std::log10(point.alpha));
        }
        for (std::size_t i = 2; i < log_alpha.size(); ++i)
            detail += " " + fmt(log_alpha[i] - 2 * log_alpha[i - 1] + log_alpha[i - 2]);
        gate.report(10, "trend data reported for gamma = 3/4 (limit/convexity not asserted)",
                    data_ok, detail);
        std::printf("note: the n -> infinity limit and the spectral-envelope convexity theorem "
                    "are out of computational scope by design; the row above is evidence, not "
                    "a claim.\n");
    }

    std::printf("%d of 10 criteria passed\n", 10 - gate.failures);
    return gate.failures;
}
