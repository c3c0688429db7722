#include "rieszpair/cantor_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rieszpair {

namespace {

Rational pow_rational(std::int64_t base, int exp) {
    BigInt p = 1;
    for (int i = 0; i < exp; ++i) p *= base;
    return Rational(BigInt(1), p);
}

}  // namespace

CantorParams::CantorParams(Rational gamma) : gamma_(std::move(gamma)) {
    if (!(gamma_ > 0 && gamma_ < 1))
        throw std::invalid_argument("CantorParams: gamma must lie strictly between 0 and 1");
}

Rational CantorParams::interval_length(int j) const {
    if (j < 0) throw std::invalid_argument("interval_length: j must be >= 0");
    return gamma_ * pow_rational(2, j) + (1 - gamma_) * pow_rational(3, j);
}

Rational CantorParams::gap_offset(int j) const {
    if (j < 1) throw std::invalid_argument("gap_offset: j must be >= 1");
    return gamma_ * pow_rational(2, j + 1) + (1 - gamma_) * pow_rational(3, j);
}

Rational CantorParams::gap_length(int j) const {
    if (j < 1) throw std::invalid_argument("gap_length: j must be >= 1");
    return (1 - gamma_) * pow_rational(3, j);
}

// ---------------------------------------------------------------------------
// IntervalSet
// ---------------------------------------------------------------------------

namespace {

// Half-open [start, end) segments in [0, 1] used for all mod-1 set algebra.
struct Segment {
    Rational start;
    Rational end;
};

// Reduces closed arcs modulo 1 into sorted, merged half-open segments.
std::vector<Segment> to_segments(const std::vector<Arc>& arcs) {
    std::vector<Segment> raw;
    raw.reserve(arcs.size() + 1);
    for (const Arc& a : arcs) {
        Rational len = a.hi - a.lo;
        if (len <= 0) continue;  // points carry no measure
        if (len >= 1) {
            raw.push_back({Rational(0), Rational(1)});
            continue;
        }
        Rational lo = frac_mod1(a.lo);
        Rational hi = lo + len;
        if (hi > 1) {
            raw.push_back({lo, Rational(1)});
            raw.push_back({Rational(0), hi - 1});
        } else {
            raw.push_back({lo, hi});
        }
    }
    std::sort(raw.begin(), raw.end(),
              [](const Segment& a, const Segment& b) { return a.start < b.start; });
    std::vector<Segment> merged;
    for (Segment& s : raw) {
        if (!merged.empty() && s.start <= merged.back().end) {
            if (s.end > merged.back().end) merged.back().end = s.end;
        } else {
            merged.push_back(std::move(s));
        }
    }
    return merged;
}

std::vector<Arc> to_arcs(const std::vector<Segment>& segments) {
    std::vector<Arc> arcs;
    arcs.reserve(segments.size());
    for (const Segment& s : segments)
        if (s.end > s.start) arcs.push_back({s.start, s.end});
    return arcs;
}

// Sweep over the union of both breakpoint lists; keep(a_in, b_in) selects
// which regions survive.
template <typename Keep>
std::vector<Segment> sweep(const std::vector<Segment>& a, const std::vector<Segment>& b,
                           Keep keep) {
    std::vector<Rational> cuts;
    cuts.reserve(2 * (a.size() + b.size()) + 2);
    for (const Segment& s : a) {
        cuts.push_back(s.start);
        cuts.push_back(s.end);
    }
    for (const Segment& s : b) {
        cuts.push_back(s.start);
        cuts.push_back(s.end);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Segment> out;
    std::size_t ia = 0, ib = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational& lo = cuts[i];
        const Rational& hi = cuts[i + 1];
        while (ia < a.size() && a[ia].end <= lo) ++ia;
        while (ib < b.size() && b[ib].end <= lo) ++ib;
        const bool in_a = ia < a.size() && a[ia].start <= lo && lo < a[ia].end;
        const bool in_b = ib < b.size() && b[ib].start <= lo && lo < b[ib].end;
        if (!keep(in_a, in_b)) continue;
        if (!out.empty() && out.back().end == lo)
            out.back().end = hi;
        else
            out.push_back({lo, hi});
    }
    return out;
}

}  // namespace

IntervalSet IntervalSet::unchecked(std::vector<Arc> arcs) {
    IntervalSet s;
    s.arcs_ = std::move(arcs);
    return s;
}

IntervalSet IntervalSet::from_arcs(std::vector<Arc> arcs) {
    for (const Arc& a : arcs)
        if (a.hi < a.lo) throw std::invalid_argument("IntervalSet: arc with hi < lo");
    return unchecked(to_arcs(to_segments(arcs)));
}

IntervalSet IntervalSet::full_circle() {
    return unchecked({Arc{Rational(0), Rational(1)}});
}

Rational IntervalSet::measure() const {
    Rational total = 0;
    for (const Arc& a : arcs_) total += a.hi - a.lo;
    return total;
}

IntervalSet IntervalSet::translate(const Rational& t) const {
    std::vector<Arc> shifted;
    shifted.reserve(arcs_.size());
    for (const Arc& a : arcs_) shifted.push_back({a.lo + t, a.hi + t});
    return from_arcs(std::move(shifted));
}

IntervalSet IntervalSet::symmetric_difference(const IntervalSet& other) const {
    auto segs = sweep(to_segments(arcs_), to_segments(other.arcs_),
                      [](bool a, bool b) { return a != b; });
    return unchecked(to_arcs(segs));
}

bool IntervalSet::contains(const IntervalSet& other) const {
    auto uncovered = sweep(to_segments(arcs_), to_segments(other.arcs_),
                           [](bool a, bool b) { return b && !a; });
    return uncovered.empty();
}

std::string IntervalSet::to_json() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        if (i) os << ",";
        os << "[\"" << to_fraction_string(arcs_[i].lo) << "\",\""
           << to_fraction_string(arcs_[i].hi) << "\"]";
    }
    os << "]";
    return os.str();
}

IntervalSet level_set(const CantorParams& params, int level, int max_depth) {
    if (level < 0) throw std::invalid_argument("level_set: level must be >= 0");
    if (level > max_depth)
        throw std::out_of_range("level_set: depth " + std::to_string(level) +
                                " exceeds max depth " + std::to_string(max_depth));

    // Left endpoints only: all level-j arcs share length L_j, and each arc
    // [a, a+L_{j-1}] splits into [a, a+L_j] and [a+2x_j, a+2x_j+L_j].
    std::vector<Rational> lows;
    lows.reserve(std::size_t(1) << level);
    lows.push_back(make_rational(-1, 2));
    for (int j = 1; j <= level; ++j) {
        const Rational shift = 2 * params.gap_offset(j);
        std::vector<Rational> next;
        next.reserve(lows.size() * 2);
        for (const Rational& a : lows) {
            next.push_back(a);
            next.push_back(a + shift);
        }
        lows = std::move(next);
    }

    const Rational len = params.interval_length(level);
    std::vector<Arc> arcs;
    arcs.reserve(lows.size());
    for (Rational& a : lows) {
        Rational hi = a + len;
        arcs.push_back({std::move(a), std::move(hi)});
    }
    return IntervalSet::unchecked(std::move(arcs));
}

}  // namespace rieszpair
