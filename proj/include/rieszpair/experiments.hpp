#pragma once

#include "rieszpair/cantor_set.hpp"
#include "rieszpair/riesz_coeffs.hpp"
#include "rieszpair/symbolic_sequences.hpp"

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace rieszpair {

enum class ExperimentId {
    fig1,   // coefficient stream k = 1..4095 for gamma = 1/4
    fig2,   // coefficient stream k = 1..4095 for gamma = 3/4
    fig34,  // alpha(B, F_n) over the gamma grid and the dyadic schedule
    alpha,  // one alpha(B, F_n) computation, optional eigenvector dump
    coeffs, // generic coefficient table export
    density,
    sobolev,
    cover,
    check_theorem31,
};

const char* to_string(ExperimentId id);
ExperimentId experiment_from_string(const std::string& name);

/// Everything one harness invocation needs. Fields irrelevant to the chosen
/// experiment are ignored. Empty grid/schedule fall back to the defaults.
struct ExperimentSpec {
    ExperimentId id = ExperimentId::coeffs;
    Rational gamma = make_rational(3, 4);
    std::vector<Rational> gamma_grid;
    std::int64_t max_freq = 4095;
    double eps = 1e-12;
    std::vector<std::int64_t> schedule;
    std::string f_descriptor = "thue-morse";
    std::filesystem::path out_path;   // empty -> content-derived default name
    std::filesystem::path cache_dir;  // empty -> in-memory cache only
    bool dump_eigvec = false;
    std::int64_t alpha_n = 4095;
    double sobolev_s = 0.3;
    std::vector<std::int64_t> sobolev_cutoffs;  // empty -> dyadic 16..65536
    std::int64_t window_len = 4096;
    std::int64_t search_lo = -(std::int64_t(1) << 20);
    std::int64_t search_hi = (std::int64_t(1) << 20);
    std::int64_t cover_lo = -1000000;
    std::int64_t cover_hi = 1000000;
    int check_j_max = 10;
    int check_level = 12;
};

struct RunSummary {
    double wall_seconds = 0.0;
    int cache_hits = 0;
    int cache_misses = 0;
    std::string headline;
    std::vector<std::filesystem::path> outputs;
};

/// Coefficient-table cache: per-process memoization plus an optional disk
/// directory. Concurrent lookups of one key block on a single computation;
/// corrupt or mismatched disk entries are recomputed with a warning.
class CoeffCache {
public:
    explicit CoeffCache(std::filesystem::path dir = {});

    std::shared_ptr<const FourierTable> lookup(const CantorParams& params, std::int64_t max_freq,
                                               double eps);

    int hits() const { return hits_.load(); }
    int misses() const { return misses_.load(); }

private:
    std::filesystem::path dir_;
    std::mutex mutex_;
    std::map<std::string, std::shared_future<std::shared_ptr<const FourierTable>>> inflight_;
    std::atomic<int> hits_{0};
    std::atomic<int> misses_{0};
};

/// Builds an IndexSet from a CLI descriptor: "thue-morse", "arith:j:n", or
/// "bits:<csv-file>" (a bit window as written by write_bit_window).
IndexSet parse_index_set(const std::string& descriptor);

std::vector<Rational> default_gamma_grid();       // 1/20, 3/20, ..., 19/20
std::vector<std::int64_t> default_schedule();     // 2^m - 1, m = 3..12
std::vector<std::int64_t> default_sobolev_cutoffs();

/// Flat key=value config file; unknown keys are rejected. Keys mirror the
/// CLI flags (gamma, K, eps, schedule, F, out, cache, ...).
ExperimentSpec load_config(const std::filesystem::path& path);
void apply_config_line(ExperimentSpec& spec, const std::string& key, const std::string& value);

/// Runs one experiment end to end: computes, writes artifact files
/// atomically, and returns the summary.
RunSummary run(const ExperimentSpec& spec);

}  // namespace rieszpair
