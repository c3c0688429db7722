#include "rieszpair/experiments.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace rieszpair;

namespace {
namespace fs = std::filesystem;

Rational rat(std::int64_t num, std::int64_t den) { return make_rational(num, den); }

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string drop_timestamp(const std::string& content) {
    std::istringstream in(content);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("# generated_at", 0) != 0) out << line << "\n";
    return out.str();
}

}  // namespace

TEST_CASE("experiment id round trip") {
    for (const char* name : {"fig1", "fig2", "fig34", "alpha", "coeffs", "density", "sobolev",
                             "cover", "check-theorem31"})
        CHECK(std::string(to_string(experiment_from_string(name))) == name);
    CHECK_THROWS_AS(experiment_from_string("fig9"), std::invalid_argument);
}

TEST_CASE("defaults match the experiment descriptions") {
    const auto grid = default_gamma_grid();
    REQUIRE(grid.size() == 10);
    CHECK(grid.front() == rat(1, 20));
    CHECK(grid[2] == rat(1, 4));
    CHECK(grid[7] == rat(3, 4));
    CHECK(grid.back() == rat(19, 20));

    const auto schedule = default_schedule();
    REQUIRE(schedule.size() == 10);
    CHECK(schedule.front() == 7);
    CHECK(schedule.back() == 4095);
}

TEST_CASE("index set descriptors") {
    CHECK(parse_index_set("thue-morse").describe() == "thue-morse");
    CHECK(parse_index_set("arith:1:3").describe() == "arith:1:3");
    CHECK_THROWS_AS(parse_index_set("fibonacci"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index_set("arith:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index_set("bits:/no/such/file.csv"), std::invalid_argument);

    TempDir dir("rieszpair_bits");
    const fs::path bits = dir.path / "window.csv";
    {
        std::ofstream out(bits);
        out << "n,bit\n3,1\n4,0\n5,1\n";
    }
    const IndexSet set = parse_index_set("bits:" + bits.string());
    CHECK(set.contains(3));
    CHECK_FALSE(set.contains(4));
    CHECK(set.contains(5));
    CHECK_FALSE(set.contains(6));
}

TEST_CASE("coefficient cache: disk round trip and key discipline") {
    TempDir dir("rieszpair_cache_rt");
    const CantorParams params(rat(3, 4));

    CoeffCache first(dir.path);
    const auto built = first.lookup(params, 64, 1e-12);
    CHECK(first.misses() == 1);
    CHECK(first.hits() == 0);
    const auto memo = first.lookup(params, 64, 1e-12);
    CHECK(first.hits() == 1);
    CHECK(memo.get() == built.get());

    CoeffCache second(dir.path);
    const auto reloaded = second.lookup(params, 64, 1e-12);
    CHECK(second.misses() == 0);
    CHECK(second.hits() == 1);
    CHECK(reloaded->values == built->values);

    // different eps is a different key
    const auto other = second.lookup(params, 64, 1e-10);
    CHECK(second.misses() == 1);
    CHECK(other->eps == 1e-10);

    // corrupt entry falls back to recomputation
    CoeffCache third(dir.path);
    std::ofstream(dir.path / table_cache_filename(params, 64, 1e-12), std::ios::trunc)
        << "garbage";
    const auto recomputed = third.lookup(params, 64, 1e-12);
    CHECK(third.misses() == 1);
    CHECK(recomputed->values == built->values);
}

TEST_CASE("coefficient cache: racing lookups compute once") {
    CoeffCache cache;  // memory only
    const CantorParams params(rat(1, 2));

    std::vector<std::shared_ptr<const FourierTable>> results(8);
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t)
        threads.emplace_back(
            [&, t] { results[static_cast<std::size_t>(t)] = cache.lookup(params, 2048, 1e-12); });
    for (auto& th : threads) th.join();

    CHECK(cache.misses() == 1);
    for (const auto& r : results) {
        REQUIRE(r != nullptr);
        CHECK(r.get() == results[0].get());
    }
}

TEST_CASE("config files load and flags override") {
    TempDir dir("rieszpair_config");
    const fs::path file = dir.path / "run.conf";
    {
        std::ofstream out(file);
        out << "# comment line\n"
            << "experiment = alpha\n"
            << "gamma = 1/4\n"
            << "n = 255\n"
            << "eps = 1e-10\n"
            << "F = arith:0:2\n"
            << "schedule = 7, 15, 31\n";
    }
    ExperimentSpec spec = load_config(file);
    CHECK(spec.id == ExperimentId::alpha);
    CHECK(spec.gamma == rat(1, 4));
    CHECK(spec.alpha_n == 255);
    CHECK(spec.eps == 1e-10);
    CHECK(spec.f_descriptor == "arith:0:2");
    CHECK(spec.schedule == std::vector<std::int64_t>{7, 15, 31});

    apply_config_line(spec, "gamma", "3/4");  // flag override path
    CHECK(spec.gamma == rat(3, 4));
    CHECK_THROWS_AS(apply_config_line(spec, "frobnicate", "1"), std::invalid_argument);

    const fs::path bad = dir.path / "bad.conf";
    std::ofstream(bad) << "gamma 3/4\n";
    CHECK_THROWS_AS(load_config(bad), std::invalid_argument);
}

TEST_CASE("coeffs experiment: K = 0 emits the single dc line, deterministically") {
    TempDir dir("rieszpair_run_coeffs");
    ExperimentSpec spec;
    spec.id = ExperimentId::coeffs;
    spec.gamma = rat(1, 2);
    spec.max_freq = 0;
    spec.out_path = dir.path / "dc.csv";

    const RunSummary summary = run(spec);
    REQUIRE(summary.outputs.size() == 1);
    const std::string first = read_file(spec.out_path);
    CHECK(first.find("k,coeff\n0,0.5\n") != std::string::npos);
    CHECK(first.find("# gamma = 1/2") != std::string::npos);

    run(spec);
    CHECK(drop_timestamp(read_file(spec.out_path)) == drop_timestamp(first));
}

TEST_CASE("alpha experiment writes results and the eigenvector dump") {
    TempDir dir("rieszpair_run_alpha");
    ExperimentSpec spec;
    spec.id = ExperimentId::alpha;
    spec.gamma = rat(3, 4);
    spec.alpha_n = 255;
    spec.dump_eigvec = true;
    spec.out_path = dir.path / "alpha.csv";
    spec.cache_dir = dir.path / "cache";

    const RunSummary summary = run(spec);
    REQUIRE(summary.outputs.size() == 2);
    CHECK(summary.headline.find("alpha = 0.163459") != std::string::npos);
    CHECK(summary.cache_misses == 1);

    // 128 member frequencies -> 128 eigenvector rows
    const std::string vec = read_file(summary.outputs[1]);
    int rows = 0;
    for (char c : vec)
        if (c == '\n') ++rows;
    CHECK(rows >= 128);

    // cached rerun
    const RunSummary again = run(spec);
    CHECK(again.cache_hits == 1);
    CHECK(again.cache_misses == 0);
}

TEST_CASE("fig34 experiment: quick grid stays monotone per gamma") {
    TempDir dir("rieszpair_run_fig34");
    ExperimentSpec spec;
    spec.id = ExperimentId::fig34;
    spec.gamma_grid = {rat(1, 4), rat(3, 4)};
    spec.schedule = {7, 15, 31, 63};
    spec.out_path = dir.path / "grid.csv";

    const RunSummary summary = run(spec);
    CHECK(summary.headline.find("alpha(gamma=3/4,n=63)") != std::string::npos);

    std::istringstream in(read_file(spec.out_path));
    std::string line;
    int rows = 0;
    double prev_alpha = 2.0;
    std::string prev_gamma;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("gamma,", 0) == 0) continue;
        ++rows;
        std::istringstream cells(line);
        std::string gamma, n, L, alpha, log_alpha;
        std::getline(cells, gamma, ',');
        std::getline(cells, n, ',');
        std::getline(cells, L, ',');
        std::getline(cells, alpha, ',');
        std::getline(cells, log_alpha, ',');
        if (gamma != prev_gamma) {
            prev_gamma = gamma;
            prev_alpha = 2.0;
        }
        const double a = std::stod(alpha);
        CHECK(a <= prev_alpha + 1e-7);
        prev_alpha = a;
    }
    CHECK(rows == 8);
}

TEST_CASE("diagnostics experiments produce valid JSON artifacts") {
    TempDir dir("rieszpair_run_diag");

    ExperimentSpec cover;
    cover.id = ExperimentId::cover;
    cover.cover_lo = -10000;
    cover.cover_hi = 10000;
    cover.out_path = dir.path / "cover.json";
    run(cover);
    const auto cover_json = nlohmann::json::parse(read_file(cover.out_path));
    CHECK(cover_json["covered"] == true);

    ExperimentSpec check;
    check.id = ExperimentId::check_theorem31;
    check.gamma = rat(3, 4);
    check.check_j_max = 6;
    check.check_level = 8;
    check.out_path = dir.path / "check.json";
    const auto check_summary = run(check);
    const auto check_json = nlohmann::json::parse(read_file(check.out_path));
    CHECK(check_json["all_passed"] == true);
    CHECK(check_json["checks"].size() == 6);
    CHECK(check_summary.headline.find("all translation bounds hold") != std::string::npos);

    ExperimentSpec density;
    density.id = ExperimentId::density;
    density.gamma = rat(1, 4);
    density.window_len = 1024;
    density.search_lo = -(1 << 16);
    density.search_hi = 1 << 16;
    density.out_path = dir.path / "density.json";
    run(density);
    const auto density_json = nlohmann::json::parse(read_file(density.out_path));
    CHECK(density_json["alpha_must_vanish"] == true);

    ExperimentSpec sobolev;
    sobolev.id = ExperimentId::sobolev;
    sobolev.gamma = rat(1, 2);
    sobolev.sobolev_cutoffs = {16, 64, 256, 1024};
    sobolev.out_path = dir.path / "sobolev.json";
    run(sobolev);
    const auto sobolev_json = nlohmann::json::parse(read_file(sobolev.out_path));
    CHECK(sobolev_json["partial_sums"].size() == 4);
}

TEST_CASE("run validates its index set descriptor") {
    ExperimentSpec spec;
    spec.id = ExperimentId::alpha;
    spec.f_descriptor = "nonsense";
    CHECK_THROWS_AS(run(spec), std::invalid_argument);
}
