#pragma once

#include "rieszpair/rational.hpp"

#include <string>
#include <vector>

namespace rieszpair {

/// Deepest level that may be materialized as an arc list (2^24 arcs).
inline constexpr int kDefaultMaxDepth = 24;

/// Parameters of one ternary fat Cantor set: the target Haar measure gamma.
/// At step j the middle open interval of length (1-gamma)/3^j is removed
/// from each of the 2^(j-1) surviving intervals, so the remaining level-j
/// intervals have length L_j = gamma/2^j + (1-gamma)/3^j.
class CantorParams {
public:
    explicit CantorParams(Rational gamma);

    const Rational& gamma() const { return gamma_; }

    /// L_j, the common length of the 2^j level-j intervals. j >= 0, L_0 = 1.
    Rational interval_length(int j) const;

    /// x_j = (L_{j-1} - L_j)/2 = gamma/2^(j+1) + (1-gamma)/3^j, the offset
    /// from the center of a level-(j-1) interval to the centers of its two
    /// children. j >= 1.
    Rational gap_offset(int j) const;

    /// sigma_j = (1-gamma)/3^j, the length of the gap opened at step j and
    /// the minimal distance between distinct level-j intervals. j >= 1.
    Rational gap_length(int j) const;

private:
    Rational gamma_;
};

/// Closed arc [lo, hi] with exact rational endpoints.
struct Arc {
    Rational lo;
    Rational hi;

    bool operator==(const Arc& other) const { return lo == other.lo && hi == other.hi; }
};

/// Finite union of disjoint closed arcs on the circle R/Z, with exact
/// rational endpoints. Set algebra (translate, symmetric difference,
/// containment) is computed modulo 1; boundary points carry no measure and
/// may land on either side of an operation.
///
/// Two storage conventions coexist: `from_arcs` and all set operations
/// canonicalize into [0, 1] (an arc crossing 0 is split at the seam), while
/// `level_set` keeps the construction window [-1/2, 1/2] so the 2^J level
/// intervals stay individually visible.
class IntervalSet {
public:
    IntervalSet() = default;

    /// Normalizes arbitrary rational arcs modulo 1: splits at the seam,
    /// sorts, merges overlaps. Arcs longer than the whole circle clamp to it.
    static IntervalSet from_arcs(std::vector<Arc> arcs);

    static IntervalSet full_circle();

    const std::vector<Arc>& arcs() const { return arcs_; }
    bool empty() const { return arcs_.empty(); }
    std::size_t arc_count() const { return arcs_.size(); }

    /// Exact total arc length, a rational in [0, 1].
    Rational measure() const;

    /// Rotation by t: every arc shifted modulo 1, re-split at the seam.
    IntervalSet translate(const Rational& t) const;

    /// Exact symmetric difference modulo 1.
    IntervalSet symmetric_difference(const IntervalSet& other) const;

    /// True iff other \ this has measure zero.
    bool contains(const IntervalSet& other) const;

    /// JSON array of endpoint pairs in lowest-terms fraction strings,
    /// e.g. [["1/24","1/2"],["1/2","23/24"]].
    std::string to_json() const;

private:
    friend IntervalSet level_set(const CantorParams&, int, int);
    static IntervalSet unchecked(std::vector<Arc> arcs);

    std::vector<Arc> arcs_;  // sorted by lo, pairwise disjoint mod 1
};

/// The level-J approximation S_J: 2^J disjoint closed arcs of length L_J in
/// [-1/2, 1/2], symmetric about 0. Throws std::out_of_range when J exceeds
/// max_depth (deeper levels are reached through the closed forms instead).
IntervalSet level_set(const CantorParams& params, int level, int max_depth = kDefaultMaxDepth);

}  // namespace rieszpair
