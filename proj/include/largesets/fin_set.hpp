#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace largesets {

/// A finite set of naturals, stored as its strictly increasing element
/// sequence. Identified with that sequence throughout: s[0] is min s,
/// concatenation x.s means prepending a smaller element.
class FinSet {
public:
    FinSet() = default;

    /// Rejects anything that is not strictly increasing and non-negative.
    /// Unsorted input is an error, not something to fix up silently.
    explicit FinSet(std::vector<int> elements);

    static FinSet of(std::initializer_list<int> elements);

    /// Set of the bit positions of `mask` (universe must fit in 64 bits).
    static FinSet from_mask(std::uint64_t mask);

    int size() const { return static_cast<int>(xs_.size()); }
    bool empty() const { return xs_.empty(); }
    int operator[](int i) const { return xs_[static_cast<std::size_t>(i)]; }
    int min() const;  // throws on empty
    int max() const;  // throws on empty

    bool contains(int x) const;
    bool subset_of(const FinSet& other) const;
    bool proper_subset_of(const FinSet& other) const;

    FinSet set_minus(const FinSet& other) const;
    FinSet set_union(const FinSet& other) const;
    FinSet intersect(const FinSet& other) const;

    /// Elements strictly greater than `x`.
    FinSet above(int x) const;
    /// Elements strictly below `x`.
    FinSet below(int x) const;

    FinSet drop_min() const;  // throws on empty
    FinSet drop_max() const;  // throws on empty

    /// x . this, requires x < min (throws otherwise).
    FinSet prepend(int x) const;

    /// First n elements (n <= size).
    FinSet prefix(int n) const;

    std::uint64_t to_mask() const;  // requires max < 64

    const std::vector<int>& elements() const { return xs_; }
    auto begin() const { return xs_.begin(); }
    auto end() const { return xs_.end(); }

    /// Container order: element-wise lexicographic with the shorter
    /// sequence first on a tie. Total, so usable as a map key; the
    /// partial lexicographic order of barrier theory lives in
    /// lex_compare below.
    friend bool operator<(const FinSet& a, const FinSet& b) { return a.xs_ < b.xs_; }
    friend bool operator==(const FinSet& a, const FinSet& b) { return a.xs_ == b.xs_; }
    friend bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::vector<int> xs_;
};

enum class Ordering { Less, Equal, Greater };

/// Lexicographic comparison at the least differing position. Defined for
/// equal sets and for prefix-incomparable pairs only; a proper initial
/// segment of the other argument is rejected (the order is total only on
/// prefix-free families).
Ordering lex_compare(const FinSet& s, const FinSet& t);

/// |s| = 1 + min s.
bool is_exactly_omega_large(const FinSet& s);

/// |s| >= 1 + min s.
bool is_omega_large(const FinSet& s);

/// The unique exactly omega-large t with s = t \ {min t}, when it exists
/// (t = {|s|}.s, which is valid iff |s| < min s). s is quasi-exactly
/// omega-large iff the result is nonempty.
std::optional<FinSet> quasi_parent(const FinSet& s);

/// {s0-1, ..., s_{s0-1}-1}: drop the last element and shift down.
/// Requires s exactly omega-large with min s > 0.
FinSet ominus_one(const FinSet& s);

/// |s| >= 2 and s \ {min s} exactly omega-large.
bool is_exactly_omega_plus_one_large(const FinSet& s);

/// All exactly omega-large subsets of [0,N), lexicographically ordered.
std::vector<FinSet> enumerate_exactly_large(int N);

}  // namespace largesets
