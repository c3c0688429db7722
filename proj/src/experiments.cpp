#include "rieszpair/experiments.hpp"

#include "rieszpair/diagnostics.hpp"
#include "rieszpair/spectral_gap.hpp"

#include <json.hpp>

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace rieszpair {

namespace fs = std::filesystem;

const char* to_string(ExperimentId id) {
    switch (id) {
        case ExperimentId::fig1: return "fig1";
        case ExperimentId::fig2: return "fig2";
        case ExperimentId::fig34: return "fig34";
        case ExperimentId::alpha: return "alpha";
        case ExperimentId::coeffs: return "coeffs";
        case ExperimentId::density: return "density";
        case ExperimentId::sobolev: return "sobolev";
        case ExperimentId::cover: return "cover";
        case ExperimentId::check_theorem31: return "check-theorem31";
    }
    return "unknown";
}

ExperimentId experiment_from_string(const std::string& name) {
    for (ExperimentId id :
         {ExperimentId::fig1, ExperimentId::fig2, ExperimentId::fig34, ExperimentId::alpha,
          ExperimentId::coeffs, ExperimentId::density, ExperimentId::sobolev, ExperimentId::cover,
          ExperimentId::check_theorem31}) {
        if (name == to_string(id)) return id;
    }
    throw std::invalid_argument("unknown experiment '" + name + "'");
}

// ---------------------------------------------------------------------------
// Cache
// ---------------------------------------------------------------------------

CoeffCache::CoeffCache(fs::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) fs::create_directories(dir_);
}

std::shared_ptr<const FourierTable> CoeffCache::lookup(const CantorParams& params,
                                                       std::int64_t max_freq, double eps) {
    const std::string key = table_cache_filename(params, max_freq, eps);

    std::shared_future<std::shared_ptr<const FourierTable>> future;
    std::promise<std::shared_ptr<const FourierTable>> promise;
    bool owner = false;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = inflight_.find(key);
        if (it != inflight_.end()) {
            future = it->second;
        } else {
            future = promise.get_future().share();
            inflight_.emplace(key, future);
            owner = true;
        }
    }

    if (!owner) {
        hits_.fetch_add(1);
        return future.get();
    }

    try {
        std::shared_ptr<const FourierTable> table;
        if (!dir_.empty()) {
            const fs::path file = dir_ / key;
            if (auto loaded = load_table(file)) {
                if (loaded->gamma == params.gamma() && loaded->max_freq == max_freq &&
                    loaded->eps == eps) {
                    hits_.fetch_add(1);
                    table = std::make_shared<FourierTable>(std::move(*loaded));
                } else {
                    std::cerr << "warning: cache header mismatch in " << file.string()
                              << ", recomputing\n";
                }
            } else if (fs::exists(file)) {
                std::cerr << "warning: corrupt cache file " << file.string() << ", recomputing\n";
            }
        }
        if (!table) {
            misses_.fetch_add(1);
            auto built = std::make_shared<FourierTable>(build_table(params, max_freq, eps));
            if (!dir_.empty()) {
                const fs::path file = dir_ / key;
                const fs::path tmp = file.string() + ".tmp." + std::to_string(::getpid());
                save_table(*built, tmp);
                fs::rename(tmp, file);
            }
            table = std::move(built);
        }
        promise.set_value(table);
        return table;
    } catch (...) {
        promise.set_exception(std::current_exception());
        std::lock_guard<std::mutex> lock(mutex_);
        inflight_.erase(key);
        throw;
    }
}

// ---------------------------------------------------------------------------
// Descriptors, defaults, config
// ---------------------------------------------------------------------------

IndexSet parse_index_set(const std::string& descriptor) {
    if (descriptor == "thue-morse") return IndexSet::thue_morse();

    if (descriptor.rfind("arith:", 0) == 0) {
        const auto rest = descriptor.substr(6);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("index set 'arith:j:n' needs two fields");
        const std::int64_t j = std::stoll(rest.substr(0, colon));
        const std::int64_t n = std::stoll(rest.substr(colon + 1));
        return IndexSet::arithmetic(j, n);
    }

    if (descriptor.rfind("bits:", 0) == 0) {
        const fs::path file = descriptor.substr(5);
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open bit file " + file.string());
        std::string line;
        std::getline(in, line);  // "n,bit" header
        std::vector<std::uint8_t> bits;
        std::int64_t start = 0;
        bool first = true;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("malformed bit file line: " + line);
            const std::int64_t n = std::stoll(line.substr(0, comma));
            const int bit = std::stoi(line.substr(comma + 1));
            if (first) {
                start = n;
                first = false;
            } else if (n != start + static_cast<std::int64_t>(bits.size())) {
                throw std::invalid_argument("bit file indices must be contiguous");
            }
            bits.push_back(bit ? 1 : 0);
        }
        if (bits.empty()) throw std::invalid_argument("bit file " + file.string() + " is empty");
        return IndexSet::explicit_window(start, std::move(bits));
    }

    throw std::invalid_argument("unknown index set descriptor '" + descriptor +
                                "' (expected thue-morse | arith:j:n | bits:file)");
}

std::vector<Rational> default_gamma_grid() {
    std::vector<Rational> grid;
    for (int i = 1; i <= 19; i += 2) grid.push_back(make_rational(i, 20));
    return grid;
}

std::vector<std::int64_t> default_schedule() {
    std::vector<std::int64_t> schedule;
    for (int m = 3; m <= 12; ++m) schedule.push_back((std::int64_t(1) << m) - 1);
    return schedule;
}

std::vector<std::int64_t> default_sobolev_cutoffs() {
    std::vector<std::int64_t> cutoffs;
    for (int m = 4; m <= 16; ++m) cutoffs.push_back(std::int64_t(1) << m);
    return cutoffs;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& value, Parse parse) {
    std::vector<T> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse(item));
    }
    return out;
}

bool parse_bool(const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw std::invalid_argument("expected boolean, got '" + value + "'");
}

}  // namespace

void apply_config_line(ExperimentSpec& spec, const std::string& key, const std::string& value) {
    if (key == "experiment") spec.id = experiment_from_string(value);
    else if (key == "gamma") spec.gamma = parse_rational(value);
    else if (key == "gamma_grid")
        spec.gamma_grid = parse_list<Rational>(value, [](const std::string& s) {
            return parse_rational(s);
        });
    else if (key == "K") spec.max_freq = std::stoll(value);
    else if (key == "eps") spec.eps = std::stod(value);
    else if (key == "schedule")
        spec.schedule = parse_list<std::int64_t>(value, [](const std::string& s) {
            return std::stoll(s);
        });
    else if (key == "F") spec.f_descriptor = value;
    else if (key == "out") spec.out_path = value;
    else if (key == "cache") spec.cache_dir = value;
    else if (key == "eigvec") spec.dump_eigvec = parse_bool(value);
    else if (key == "n") spec.alpha_n = std::stoll(value);
    else if (key == "s") spec.sobolev_s = std::stod(value);
    else if (key == "cutoffs")
        spec.sobolev_cutoffs = parse_list<std::int64_t>(value, [](const std::string& s) {
            return std::stoll(s);
        });
    else if (key == "window") spec.window_len = std::stoll(value);
    else if (key == "search_lo") spec.search_lo = std::stoll(value);
    else if (key == "search_hi") spec.search_hi = std::stoll(value);
    else if (key == "cover_lo") spec.cover_lo = std::stoll(value);
    else if (key == "cover_hi") spec.cover_hi = std::stoll(value);
    else if (key == "j_max") spec.check_j_max = std::stoi(value);
    else if (key == "level") spec.check_level = std::stoi(value);
    else throw std::invalid_argument("unknown config key '" + key + "'");
}

ExperimentSpec load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path.string());
    ExperimentSpec spec;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        apply_config_line(spec, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void atomic_write(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string gamma_slug(const Rational& gamma) {
    return numerator(gamma).str() + "-" + denominator(gamma).str();
}

void provenance(std::ostringstream& out, const std::string& kind,
                const std::vector<std::pair<std::string, std::string>>& fields) {
    out << "# rieszpair " << kind << " v1\n";
    for (const auto& [key, value] : fields) out << "# " << key << " = " << value << "\n";
    out << "# generated_at = " << timestamp_utc() << "\n";
}

std::string schedule_string(const std::vector<std::int64_t>& schedule) {
    std::ostringstream os;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (i) os << ",";
        os << schedule[i];
    }
    return os.str();
}

struct RunContext {
    const ExperimentSpec& spec;
    CoeffCache cache;
    RunSummary summary;
};

fs::path resolve_out(const ExperimentSpec& spec, const std::string& fallback) {
    return spec.out_path.empty() ? fs::path(fallback) : spec.out_path;
}

void run_coeffs(RunContext& ctx, const Rational& gamma, std::int64_t k_lo,
                const std::string& default_name) {
    const ExperimentSpec& spec = ctx.spec;
    const CantorParams params(gamma);
    const auto table = ctx.cache.lookup(params, spec.max_freq, spec.eps);

    std::ostringstream body;
    provenance(body, "coeffs",
               {{"gamma", to_fraction_string(gamma)},
                {"K", std::to_string(spec.max_freq)},
                {"J", std::to_string(table->depth)},
                {"eps", format_double(spec.eps)},
                {"err_bound", format_double(table->err_bound)}});
    body << "k,coeff\n";
    for (std::int64_t k = k_lo; k <= spec.max_freq; ++k)
        body << k << "," << format_double(table->at(k)) << "\n";

    const fs::path out = resolve_out(spec, default_name);
    atomic_write(out, body.str());
    ctx.summary.outputs.push_back(out);
    ctx.summary.headline = "coeffs gamma=" + to_fraction_string(gamma) +
                           " K=" + std::to_string(spec.max_freq) +
                           " J=" + std::to_string(table->depth);
}

void run_fig34(RunContext& ctx) {
    const ExperimentSpec& spec = ctx.spec;
    const auto grid = spec.gamma_grid.empty() ? default_gamma_grid() : spec.gamma_grid;
    const auto schedule = spec.schedule.empty() ? default_schedule() : spec.schedule;
    const IndexSet freq = parse_index_set(spec.f_descriptor);

    // Headline the gamma = 3/4 row when the grid has it, else the last row.
    std::ostringstream rows;
    std::string headline, depths;
    bool headline_pinned = false;
    for (const Rational& gamma : grid) {
        const CantorParams params(gamma);
        const auto table = ctx.cache.lookup(params, schedule.back(), spec.eps);
        if (!depths.empty()) depths += ",";
        depths += std::to_string(table->depth);
        const auto points = alpha_sequence(*table, freq, schedule);
        for (const AlphaPoint& point : points) {
            const double L = std::log2(static_cast<double>(point.n) + 1.0);
            rows << to_fraction_string(gamma) << "," << point.n << "," << format_double(L) << ","
                 << format_double(point.alpha) << ","
                 << (point.alpha > 0 ? format_double(std::log10(point.alpha)) : "nan") << "\n";
            if (point.n == schedule.back() && !headline_pinned) {
                headline = "alpha(gamma=" + to_fraction_string(gamma) +
                           ",n=" + std::to_string(point.n) + ") = " + format_double(point.alpha);
                headline_pinned = gamma == make_rational(3, 4);
            }
        }
    }
    ctx.summary.headline = headline;

    std::ostringstream body;
    provenance(body, "alpha-grid",
               {{"gamma_grid",
                 [&] {
                     std::ostringstream os;
                     for (std::size_t i = 0; i < grid.size(); ++i) {
                         if (i) os << ",";
                         os << to_fraction_string(grid[i]);
                     }
                     return os.str();
                 }()},
                {"F", spec.f_descriptor},
                {"K", std::to_string(schedule.back())},
                {"J", depths},
                {"eps", format_double(spec.eps)},
                {"schedule", schedule_string(schedule)}});
    body << "gamma,n,L,alpha,log10_alpha\n" << rows.str();

    const fs::path out = resolve_out(spec, "alpha_grid.csv");
    atomic_write(out, body.str());
    ctx.summary.outputs.push_back(out);
}

void run_alpha(RunContext& ctx) {
    const ExperimentSpec& spec = ctx.spec;
    const CantorParams params(spec.gamma);
    const IndexSet freq = parse_index_set(spec.f_descriptor);
    const auto table = ctx.cache.lookup(params, spec.alpha_n, spec.eps);

    auto members = enumerate(freq, 0, spec.alpha_n);
    if (members.empty())
        throw std::invalid_argument("alpha: no frequencies of F in [0, " +
                                    std::to_string(spec.alpha_n) + "]");
    const auto gram = build_gram(*table, std::move(members));
    const auto pair = min_eigenpair(gram);

    std::ostringstream body;
    provenance(body, "alpha",
               {{"gamma", to_fraction_string(spec.gamma)},
                {"F", spec.f_descriptor},
                {"n", std::to_string(spec.alpha_n)},
                {"K", std::to_string(spec.alpha_n)},
                {"J", std::to_string(table->depth)},
                {"eps", format_double(spec.eps)}});
    body << "n,size,alpha,residual\n";
    body << spec.alpha_n << "," << gram.size() << "," << format_double(pair.value) << ","
         << format_double(pair.residual) << "\n";

    const fs::path out =
        resolve_out(spec, "alpha_g" + gamma_slug(spec.gamma) + "_n" +
                              std::to_string(spec.alpha_n) + ".csv");
    atomic_write(out, body.str());
    ctx.summary.outputs.push_back(out);

    if (spec.dump_eigvec) {
        std::ostringstream vec;
        provenance(vec, "alpha-eigvec",
                   {{"gamma", to_fraction_string(spec.gamma)},
                    {"F", spec.f_descriptor},
                    {"n", std::to_string(spec.alpha_n)},
                    {"alpha", format_double(pair.value)}});
        vec << "index,coefficient\n";
        for (std::size_t i = 0; i < gram.indices.size(); ++i)
            vec << gram.indices[i] << ","
                << format_double(pair.vector(static_cast<Eigen::Index>(i))) << "\n";
        fs::path vec_out = out;
        vec_out.replace_extension();
        vec_out += "_eigvec.csv";
        atomic_write(vec_out, vec.str());
        ctx.summary.outputs.push_back(vec_out);
    }

    ctx.summary.headline = "alpha = " + format_double(pair.value) +
                           " (size " + std::to_string(gram.size()) + ", residual " +
                           format_double(pair.residual) + ")";
}

void run_density(RunContext& ctx) {
    const ExperimentSpec& spec = ctx.spec;
    const CantorParams params(spec.gamma);
    const IndexSet set = parse_index_set(spec.f_descriptor);
    const auto verdict =
        density_vs_measure(set, params, spec.window_len, spec.search_lo, spec.search_hi);

    nlohmann::json out = nlohmann::json::parse(verdict.to_json());
    out["F"] = spec.f_descriptor;
    out["search"] = {spec.search_lo, spec.search_hi};

    const fs::path path = resolve_out(spec, "density_g" + gamma_slug(spec.gamma) + ".json");
    atomic_write(path, out.dump(2) + "\n");
    ctx.summary.outputs.push_back(path);
    ctx.summary.headline = "density estimate " + format_short(to_double(verdict.estimate)) +
                           " vs gamma " + to_fraction_string(spec.gamma) + ": " + verdict.verdict;
}

void run_sobolev(RunContext& ctx) {
    const ExperimentSpec& spec = ctx.spec;
    const CantorParams params(spec.gamma);
    auto cutoffs = spec.sobolev_cutoffs.empty() ? default_sobolev_cutoffs() : spec.sobolev_cutoffs;
    const auto table = ctx.cache.lookup(params, cutoffs.back(), spec.eps);
    const auto probe = sobolev_partial_sums(*table, spec.sobolev_s, std::move(cutoffs));

    nlohmann::json out = nlohmann::json::parse(probe.to_json());
    out["K"] = table->max_freq;
    out["J"] = table->depth;
    out["eps"] = table->eps;

    const fs::path path = resolve_out(spec, "sobolev_g" + gamma_slug(spec.gamma) + ".json");
    atomic_write(path, out.dump(2) + "\n");
    ctx.summary.outputs.push_back(path);
    ctx.summary.headline =
        "sobolev s=" + format_short(spec.sobolev_s) + " final growth ratio " +
        (probe.growth_ratios.empty() ? "n/a" : format_short(probe.growth_ratios.back()));
}

void run_cover(RunContext& ctx) {
    const ExperimentSpec& spec = ctx.spec;
    const IndexSet base = parse_index_set(spec.f_descriptor);
    const std::vector<IndexSet> sets = {base, IndexSet::shifted(base, 1),
                                        IndexSet::shifted(base, 2)};
    const auto result = is_cover(sets, spec.cover_lo, spec.cover_hi);

    nlohmann::json out;
    out["F"] = spec.f_descriptor;
    out["shifts"] = {0, 1, 2};
    out["window"] = {spec.cover_lo, spec.cover_hi};
    out["covered"] = result.covered;
    if (!result.covered) out["first_uncovered"] = result.first_uncovered;

    const fs::path path = resolve_out(spec, "cover.json");
    atomic_write(path, out.dump(2) + "\n");
    ctx.summary.outputs.push_back(path);
    ctx.summary.headline = result.covered
                               ? "{F,1+F,2+F} covers the window"
                               : "uncovered at " + std::to_string(result.first_uncovered);
}

void run_check_theorem31(RunContext& ctx) {
    const ExperimentSpec& spec = ctx.spec;
    const CantorParams params(spec.gamma);

    nlohmann::json out;
    out["gamma"] = to_fraction_string(spec.gamma);
    out["level"] = spec.check_level;
    out["checks"] = nlohmann::json::array();
    bool all_ok = true;
    for (int j = 1; j <= spec.check_j_max; ++j) {
        const auto check = translation_inequality_check(params, j, spec.check_level);
        all_ok = all_ok && check.passed();
        out["checks"].push_back(nlohmann::json::parse(check.to_json()));
    }
    out["all_passed"] = all_ok;

    const fs::path path =
        resolve_out(spec, "check_theorem31_g" + gamma_slug(spec.gamma) + ".json");
    atomic_write(path, out.dump(2) + "\n");
    ctx.summary.outputs.push_back(path);
    ctx.summary.headline = std::string(all_ok ? "all" : "NOT all") + " translation bounds hold (j <= " +
                           std::to_string(spec.check_j_max) + ", level " +
                           std::to_string(spec.check_level) + ")";
}

}  // namespace

RunSummary run(const ExperimentSpec& spec) {
    const auto start = std::chrono::steady_clock::now();
    RunContext ctx{spec, CoeffCache(spec.cache_dir), RunSummary{}};

    switch (spec.id) {
        case ExperimentId::fig1:
            run_coeffs(ctx, make_rational(1, 4), 1, "coeffs_gamma025.csv");
            break;
        case ExperimentId::fig2:
            run_coeffs(ctx, make_rational(3, 4), 1, "coeffs_gamma075.csv");
            break;
        case ExperimentId::coeffs:
            run_coeffs(ctx, spec.gamma, 0,
                       "coeffs_g" + gamma_slug(spec.gamma) + "_K" +
                           std::to_string(spec.max_freq) + ".csv");
            break;
        case ExperimentId::fig34: run_fig34(ctx); break;
        case ExperimentId::alpha: run_alpha(ctx); break;
        case ExperimentId::density: run_density(ctx); break;
        case ExperimentId::sobolev: run_sobolev(ctx); break;
        case ExperimentId::cover: run_cover(ctx); break;
        case ExperimentId::check_theorem31: run_check_theorem31(ctx); break;
    }

    ctx.summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ctx.summary.cache_hits = ctx.cache.hits();
    ctx.summary.cache_misses = ctx.cache.misses();
    return ctx.summary;
}

}  // namespace rieszpair
