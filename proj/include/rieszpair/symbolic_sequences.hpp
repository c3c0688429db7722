#pragma once

#include "rieszpair/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace rieszpair {

/// Two-sided Thue-Morse bit: binary-digit parity for n >= 0, reflected as
/// t(-1-n) = t(n) for n < 0, matching the bidirectional sequence
/// ...10010110.0110100110010110...
int thue_morse_bit(std::int64_t n);

/// A two-sided 0/1 integer index set given by a pure membership predicate.
/// Immutable and cheap to copy; shifted sets share their base.
class IndexSet {
public:
    static IndexSet thue_morse();
    /// Residue class { m : m = j (mod n) }, n >= 1.
    static IndexSet arithmetic(std::int64_t residue, std::int64_t modulus);
    /// { t + m : m in base }.
    static IndexSet shifted(IndexSet base, std::int64_t offset);
    /// Finite set listed by a bit window starting at `start`.
    static IndexSet explicit_window(std::int64_t start, std::vector<std::uint8_t> bits);

    bool contains(std::int64_t m) const;

    /// Short text form used in output provenance headers, e.g. "thue-morse",
    /// "arith:1:3", "shift:2:(thue-morse)".
    std::string describe() const;

private:
    struct Node;
    explicit IndexSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Members of F in [a, b], ascending.
std::vector<std::int64_t> enumerate(const IndexSet& set, std::int64_t a, std::int64_t b);

/// F intersected with [0, n], as an explicit finite set.
IndexSet truncate(const IndexSet& set, std::int64_t n);

struct CoverResult {
    bool covered = false;
    std::int64_t first_uncovered = 0;  // meaningful only when !covered
};

/// Checks whether the listed sets jointly contain every integer in [a, b];
/// reports the least uncovered integer otherwise.
CoverResult is_cover(const std::vector<IndexSet>& sets, std::int64_t a, std::int64_t b);

/// max over a' in [a, b - k] of |F intersect {a'+1, ..., a'+k}| / k — the
/// finite-window stand-in for the upper Beurling density with window k.
Rational upper_beurling_estimate(const IndexSet& set, std::int64_t window_len, std::int64_t a,
                                 std::int64_t b);

/// CSV dump "n,bit" over [a, b].
void write_bit_window(std::ostream& out, const IndexSet& set, std::int64_t a, std::int64_t b);

}  // namespace rieszpair
