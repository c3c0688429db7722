#include "rieszpair/diagnostics.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace rieszpair {

double sobolev_threshold_exponent() { return 1.0 - std::log(2.0) / std::log(3.0); }

SobolevProbe sobolev_partial_sums(const FourierTable& table, double s,
                                  std::vector<std::int64_t> cutoffs) {
    if (s < 0) throw std::invalid_argument("sobolev_partial_sums: s must be >= 0");
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        if (cutoffs[i] < 1 || cutoffs[i] > table.max_freq)
            throw std::out_of_range("sobolev_partial_sums: cutoff outside tabulated range");
        if (i > 0 && cutoffs[i] <= cutoffs[i - 1])
            throw std::invalid_argument("sobolev_partial_sums: cutoffs must be ascending");
    }

    SobolevProbe probe;
    probe.gamma = table.gamma;
    probe.s = s;
    probe.p = sobolev_threshold_exponent();
    probe.c = 4.0 * std::pow(1.0 - to_double(table.gamma), 1.0 - probe.p);

    double sum = 0.0;
    std::int64_t k = 1;
    for (const std::int64_t cutoff : cutoffs) {
        for (; k <= cutoff; ++k) {
            const double v = table.at(k);
            sum += 2.0 * v * v * std::pow(static_cast<double>(k), 2.0 * s);
        }
        probe.partial_sums.push_back(sum);
    }
    probe.cutoffs = std::move(cutoffs);
    for (std::size_t i = 1; i < probe.partial_sums.size(); ++i)
        probe.growth_ratios.push_back(probe.partial_sums[i] / probe.partial_sums[i - 1]);
    return probe;
}

std::string SobolevProbe::to_json() const {
    nlohmann::json j;
    j["gamma"] = to_fraction_string(gamma);
    j["s"] = s;
    j["threshold_p"] = p;
    j["bound_constant_c"] = c;
    j["cutoffs"] = cutoffs;
    j["partial_sums"] = partial_sums;
    j["growth_ratios"] = growth_ratios;
    return j.dump(2);
}

TranslationCheck translation_inequality_check(const CantorParams& params, int j, int level,
                                              int max_depth) {
    if (j < 1) throw std::invalid_argument("translation_inequality_check: j must be >= 1");
    if (level < j)
        throw std::invalid_argument("translation_inequality_check: level must be >= j");

    const Rational one_minus = 1 - params.gamma();
    const auto pow23 = [&](int e) {
        Rational r = one_minus;
        for (int i = 0; i < e; ++i) r = r * 2 / 3;
        return r;  // (1-gamma) (2/3)^e
    };

    TranslationCheck check;
    check.j = j;
    check.level = level;
    check.sigma = params.gap_length(j);

    const IntervalSet step_set = level_set(params, j, max_depth);
    check.step_symdiff = step_set.symmetric_difference(step_set.translate(check.sigma)).measure();
    check.step_bound = 2 * pow23(j);
    check.step_ok = check.step_symdiff <= check.step_bound;

    const IntervalSet deep_set = level_set(params, level, max_depth);
    check.shifted_symdiff =
        deep_set.symmetric_difference(deep_set.translate(check.sigma)).measure();
    check.level_residual = pow23(level);
    check.combined = check.shifted_symdiff + 2 * check.level_residual;
    check.total_bound = 4 * pow23(j);
    check.combined_ok = check.combined <= check.total_bound;
    return check;
}

std::string TranslationCheck::to_json() const {
    nlohmann::json out;
    out["j"] = j;
    out["level"] = level;
    out["sigma"] = to_fraction_string(sigma);
    out["step_symdiff"] = to_fraction_string(step_symdiff);
    out["step_bound"] = to_fraction_string(step_bound);
    out["shifted_symdiff"] = to_fraction_string(shifted_symdiff);
    out["level_residual"] = to_fraction_string(level_residual);
    out["combined"] = to_fraction_string(combined);
    out["total_bound"] = to_fraction_string(total_bound);
    out["step_symdiff_float"] = to_double(step_symdiff);
    out["combined_float"] = to_double(combined);
    out["step_ok"] = step_ok;
    out["combined_ok"] = combined_ok;
    out["passed"] = passed();
    return out.dump(2);
}

DensityVerdict density_vs_measure(const IndexSet& set, const CantorParams& params,
                                  std::int64_t window_len, std::int64_t search_lo,
                                  std::int64_t search_hi) {
    DensityVerdict verdict;
    verdict.estimate = upper_beurling_estimate(set, window_len, search_lo, search_hi);
    verdict.gamma = params.gamma();
    verdict.slack = Rational(BigInt(4), BigInt(window_len));
    verdict.window_len = window_len;
    verdict.alpha_must_vanish = verdict.estimate > verdict.gamma + verdict.slack;
    verdict.verdict = verdict.alpha_must_vanish ? "alpha must vanish" : "no obstruction";
    return verdict;
}

std::string DensityVerdict::to_json() const {
    nlohmann::json out;
    out["estimate"] = to_fraction_string(estimate);
    out["estimate_float"] = to_double(estimate);
    out["gamma"] = to_fraction_string(gamma);
    out["window_len"] = window_len;
    out["slack"] = to_fraction_string(slack);
    out["alpha_must_vanish"] = alpha_must_vanish;
    out["verdict"] = verdict;
    out["note"] = "necessary condition only: a pass does not certify alpha > 0";
    return out.dump(2);
}

}  // namespace rieszpair
