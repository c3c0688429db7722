#include "rieszpair/riesz_coeffs.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rieszpair {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Rational> gap_offsets(const CantorParams& params, int depth) {
    std::vector<Rational> x(static_cast<std::size_t>(depth) + 1);
    for (int j = 1; j <= depth; ++j) x[static_cast<std::size_t>(j)] = params.gap_offset(j);
    return x;
}

double cosine_product(const std::vector<Rational>& offsets, std::int64_t k, int depth) {
    double prod = 1.0;
    const BigInt kk(k < 0 ? -k : k);  // cosine is even
    for (int j = 1; j <= depth; ++j) {
        const Rational u = frac_mod1(offsets[static_cast<std::size_t>(j)] * kk);
        prod *= std::cos(kTwoPi * to_double(u));
    }
    return prod;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

double FourierTable::at(std::int64_t k) const {
    if (k < -max_freq || k > max_freq)
        throw std::out_of_range("FourierTable::at: frequency " + std::to_string(k) +
                                " outside tabulated range " + std::to_string(max_freq));
    return values[static_cast<std::size_t>(k + max_freq)];
}

double coefficient(const CantorParams& params, std::int64_t k, int depth) {
    if (depth < 1) throw std::invalid_argument("coefficient: depth must be >= 1");
    return to_double(params.gamma()) * cosine_product(gap_offsets(params, depth), k, depth);
}

int choose_depth(const CantorParams& params, std::int64_t max_freq, double eps) {
    if (eps <= 0) throw std::invalid_argument("choose_depth: eps must be positive");
    const double g = to_double(params.gamma());
    const double K2 = static_cast<double>(max_freq) * static_cast<double>(max_freq);

    // Tail of sum_{j>J} x_j^2 in closed form:
    //   x_j^2 = g^2 4^-j/4 + g(1-g) 6^-j + (1-g)^2 9^-j
    //   sum_{j>J} = g^2 4^-J/12 + g(1-g) 6^-J/5 + (1-g)^2 9^-J/8.
    // Each 1 - cos(2 pi x_j k) <= 2 pi^2 x_j^2 k^2, so the product tail is
    // below 2 pi^2 K^2 * tail(J) once that quantity is < 1.
    const double a4 = g * g / 12.0;
    const double a6 = g * (1.0 - g) / 5.0;
    const double a9 = (1.0 - g) * (1.0 - g) / 8.0;

    double p4 = 1.0, p6 = 1.0, p9 = 1.0;
    for (int J = 1; J <= 4096; ++J) {
        p4 /= 4.0;
        p6 /= 6.0;
        p9 /= 9.0;
        const double tail = 2.0 * std::numbers::pi * std::numbers::pi * std::max(K2, 1.0) *
                            (a4 * p4 + a6 * p6 + a9 * p9);
        if (tail <= eps && tail < 1.0) return J;
    }
    throw std::runtime_error("choose_depth: no admissible depth below 4096");
}

FourierTable build_table(const CantorParams& params, std::int64_t max_freq, double eps,
                         unsigned threads) {
    if (max_freq < 0) throw std::invalid_argument("build_table: max_freq must be >= 0");

    FourierTable table;
    table.gamma = params.gamma();
    table.max_freq = max_freq;
    table.depth = choose_depth(params, max_freq, eps);
    table.eps = eps;
    table.err_bound = to_double(params.gamma()) * eps;
    table.values.assign(static_cast<std::size_t>(2 * max_freq + 1), 0.0);

    const auto offsets = gap_offsets(params, table.depth);
    const double g = to_double(params.gamma());

    auto fill = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t k = lo; k < hi; ++k) {
            const double v = g * cosine_product(offsets, k, table.depth);
            table.values[static_cast<std::size_t>(max_freq + k)] = v;
            table.values[static_cast<std::size_t>(max_freq - k)] = v;
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::int64_t count = max_freq + 1;
    if (threads <= 1 || count < 256) {
        fill(0, count);
    } else {
        const auto n = std::min<std::int64_t>(threads, count);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n));
        for (std::int64_t t = 0; t < n; ++t) {
            const std::int64_t lo = count * t / n;
            const std::int64_t hi = count * (t + 1) / n;
            pool.emplace_back(fill, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return table;
}

double level_coefficient_exact(const CantorParams& params, int level, std::int64_t k) {
    if (level < 0) throw std::invalid_argument("level_coefficient_exact: level must be >= 0");
    const Rational len = params.interval_length(level);
    const double scale = std::ldexp(1.0, level);  // 2^level
    if (k == 0) return scale * to_double(len);

    // The transform is even, so work with |k|; that keeps the reduced sine
    // argument away from the cancellation-prone neighborhood of 2 pi when k
    // is negative and |k| L_J is tiny. sin has period 2 pi, so reduce
    // |k| L_J modulo 2 exactly first; an exactly integral argument means an
    // exact zero.
    const std::int64_t ka = k < 0 ? -k : k;
    const Rational arg = mod(Rational(BigInt(ka)) * len, Rational(2));
    if (arg == 0 || arg == 1) return 0.0;
    const double sinc = std::sin(std::numbers::pi * to_double(arg)) /
                        (std::numbers::pi * static_cast<double>(ka));
    return scale * sinc * cosine_product(gap_offsets(params, level), ka, level);
}

double level_coefficient_direct(const CantorParams& params, int level, std::int64_t k,
                                int max_depth) {
    const IntervalSet s = level_set(params, level, max_depth);
    if (k == 0) return to_double(s.measure());

    // Real part of integral over [a,b] of e^{-2 pi i k x} dx, summed over the
    // arcs: sum (sin(2 pi k b) - sin(2 pi k a)) / (2 pi k). The products k*a,
    // k*b are reduced modulo 1 exactly before leaving rational arithmetic.
    const BigInt kk(k);
    double sum = 0.0;
    for (const Arc& arc : s.arcs()) {
        const double ta = kTwoPi * to_double(frac_mod1(Rational(kk) * arc.lo));
        const double tb = kTwoPi * to_double(frac_mod1(Rational(kk) * arc.hi));
        sum += std::sin(tb) - std::sin(ta);
    }
    return sum / (kTwoPi * static_cast<double>(k));
}

double parseval_partial(const FourierTable& table, std::int64_t cutoff) {
    if (cutoff < 0 || cutoff > table.max_freq)
        throw std::out_of_range("parseval_partial: cutoff outside tabulated range");
    double sum = table.at(0) * table.at(0);
    for (std::int64_t k = 1; k <= cutoff; ++k) {
        const double v = table.at(k);
        sum += 2.0 * v * v;
    }
    return sum;
}

double parseval_partial(const FourierTable& table) {
    return parseval_partial(table, table.max_freq);
}

// ---------------------------------------------------------------------------
// Cache files
// ---------------------------------------------------------------------------

namespace {
constexpr const char* kCacheMagic = "rieszpair-fourier-table v1";

std::string hex_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%a", v);
    return buf;
}
}  // namespace

void save_table(const FourierTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("save_table: cannot open " + path.string());
    out << kCacheMagic << "\n";
    out << "gamma " << to_fraction_string(table.gamma) << "\n";
    out << "K " << table.max_freq << "\n";
    out << "J " << table.depth << "\n";
    out << "eps " << hex_double(table.eps) << "\n";
    out << "err_bound " << hex_double(table.err_bound) << "\n";
    for (std::int64_t k = 0; k <= table.max_freq; ++k) out << hex_double(table.at(k)) << "\n";
    if (!out) throw std::runtime_error("save_table: write failed for " + path.string());
}

std::optional<FourierTable> load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;

    std::string line;
    if (!std::getline(in, line) || line != kCacheMagic) return std::nullopt;

    FourierTable table;
    std::string key, value;
    try {
        if (!(in >> key >> value) || key != "gamma") return std::nullopt;
        table.gamma = parse_rational(value);
        if (!(in >> key >> table.max_freq) || key != "K" || table.max_freq < 0) return std::nullopt;
        if (!(in >> key >> table.depth) || key != "J") return std::nullopt;
        if (!(in >> key >> value) || key != "eps") return std::nullopt;
        table.eps = std::strtod(value.c_str(), nullptr);
        if (!(in >> key >> value) || key != "err_bound") return std::nullopt;
        table.err_bound = std::strtod(value.c_str(), nullptr);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }

    table.values.assign(static_cast<std::size_t>(2 * table.max_freq + 1), 0.0);
    for (std::int64_t k = 0; k <= table.max_freq; ++k) {
        if (!(in >> value)) return std::nullopt;
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (end == value.c_str()) return std::nullopt;
        table.values[static_cast<std::size_t>(table.max_freq + k)] = v;
        table.values[static_cast<std::size_t>(table.max_freq - k)] = v;
    }
    return table;
}

std::string table_cache_filename(const CantorParams& params, std::int64_t max_freq, double eps) {
    std::ostringstream name;
    name << "coeffs_g" << numerator(params.gamma()) << "-" << denominator(params.gamma()) << "_K"
         << max_freq << "_eps" << format_double(eps) << ".tbl";
    std::string s = name.str();
    for (char& c : s)
        if (c == '+') c = 'p';
    return s;
}

}  // namespace rieszpair
