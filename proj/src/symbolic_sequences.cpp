#include "rieszpair/symbolic_sequences.hpp"

#include <bit>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace rieszpair {

int thue_morse_bit(std::int64_t n) {
    if (n < 0) n = -1 - n;
    return std::popcount(static_cast<std::uint64_t>(n)) & 1;
}

// ---------------------------------------------------------------------------
// IndexSet
// ---------------------------------------------------------------------------

namespace {
struct ThueMorseKind {};
struct ArithmeticKind {
    std::int64_t residue;
    std::int64_t modulus;
};
struct ExplicitKind {
    std::int64_t start;
    std::vector<std::uint8_t> bits;
};
}  // namespace

struct IndexSet::Node {
    struct ShiftedKind {
        std::shared_ptr<const Node> base;
        std::int64_t offset;
    };

    std::variant<ThueMorseKind, ArithmeticKind, ShiftedKind, ExplicitKind> kind;

    bool contains(std::int64_t m) const {
        if (const auto* a = std::get_if<ArithmeticKind>(&kind)) {
            return (m - a->residue) % a->modulus == 0;
        }
        if (const auto* s = std::get_if<ShiftedKind>(&kind)) {
            return s->base->contains(m - s->offset);
        }
        if (const auto* e = std::get_if<ExplicitKind>(&kind)) {
            if (m < e->start) return false;
            const auto idx = static_cast<std::uint64_t>(m - e->start);
            return idx < e->bits.size() && e->bits[idx] != 0;
        }
        return thue_morse_bit(m) == 1;
    }

    std::string describe() const {
        if (const auto* a = std::get_if<ArithmeticKind>(&kind))
            return "arith:" + std::to_string(a->residue) + ":" + std::to_string(a->modulus);
        if (const auto* s = std::get_if<ShiftedKind>(&kind))
            return "shift:" + std::to_string(s->offset) + ":(" + s->base->describe() + ")";
        if (const auto* e = std::get_if<ExplicitKind>(&kind))
            return "bits[" + std::to_string(e->start) + "," +
                   std::to_string(e->start + static_cast<std::int64_t>(e->bits.size())) + ")";
        return "thue-morse";
    }
};

IndexSet IndexSet::thue_morse() {
    return IndexSet(std::make_shared<const Node>(Node{ThueMorseKind{}}));
}

IndexSet IndexSet::arithmetic(std::int64_t residue, std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("IndexSet::arithmetic: modulus must be >= 1");
    // Normalize so (m - residue) % modulus == 0 is sign-safe.
    std::int64_t r = residue % modulus;
    if (r < 0) r += modulus;
    return IndexSet(std::make_shared<const Node>(Node{ArithmeticKind{r, modulus}}));
}

IndexSet IndexSet::shifted(IndexSet base, std::int64_t offset) {
    return IndexSet(std::make_shared<const Node>(Node{Node::ShiftedKind{base.node_, offset}}));
}

IndexSet IndexSet::explicit_window(std::int64_t start, std::vector<std::uint8_t> bits) {
    return IndexSet(std::make_shared<const Node>(Node{ExplicitKind{start, std::move(bits)}}));
}

bool IndexSet::contains(std::int64_t m) const { return node_->contains(m); }

std::string IndexSet::describe() const { return node_->describe(); }

// ---------------------------------------------------------------------------
// Window operations
// ---------------------------------------------------------------------------

std::vector<std::int64_t> enumerate(const IndexSet& set, std::int64_t a, std::int64_t b) {
    if (a > b) throw std::invalid_argument("enumerate: window [a,b] requires a <= b");
    std::vector<std::int64_t> out;
    for (std::int64_t m = a; m <= b; ++m)
        if (set.contains(m)) out.push_back(m);
    return out;
}

IndexSet truncate(const IndexSet& set, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("truncate: n must be >= 0");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t m = 0; m <= n; ++m)
        bits[static_cast<std::size_t>(m)] = set.contains(m) ? 1 : 0;
    return IndexSet::explicit_window(0, std::move(bits));
}

CoverResult is_cover(const std::vector<IndexSet>& sets, std::int64_t a, std::int64_t b) {
    if (sets.empty()) throw std::invalid_argument("is_cover: need at least one set");
    if (a > b) throw std::invalid_argument("is_cover: window [a,b] requires a <= b");
    for (std::int64_t m = a; m <= b; ++m) {
        bool hit = false;
        for (const IndexSet& s : sets)
            if (s.contains(m)) {
                hit = true;
                break;
            }
        if (!hit) return {false, m};
    }
    return {true, 0};
}

Rational upper_beurling_estimate(const IndexSet& set, std::int64_t window_len, std::int64_t a,
                                 std::int64_t b) {
    if (window_len < 1)
        throw std::invalid_argument("upper_beurling_estimate: window length must be >= 1");
    if (b - a < window_len)
        throw std::invalid_argument("upper_beurling_estimate: search range shorter than window");

    // Sliding window {a'+1, ..., a'+k} for a' = a .. b-k.
    std::int64_t count = 0;
    for (std::int64_t m = a + 1; m <= a + window_len; ++m)
        if (set.contains(m)) ++count;
    std::int64_t best = count;
    for (std::int64_t start = a + 1; start <= b - window_len; ++start) {
        if (set.contains(start)) --count;
        if (set.contains(start + window_len)) ++count;
        if (count > best) best = count;
    }
    return Rational(BigInt(best), BigInt(window_len));
}

void write_bit_window(std::ostream& out, const IndexSet& set, std::int64_t a, std::int64_t b) {
    if (a > b) throw std::invalid_argument("write_bit_window: window [a,b] requires a <= b");
    out << "n,bit\n";
    for (std::int64_t m = a; m <= b; ++m) out << m << "," << (set.contains(m) ? 1 : 0) << "\n";
}

}  // namespace rieszpair
