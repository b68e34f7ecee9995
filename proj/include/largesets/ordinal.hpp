#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "largesets/bound_fn.hpp"
#include "largesets/fin_set.hpp"

namespace largesets {

/// An ordinal below omega^omega in Cantor normal form: a sum of terms
/// omega^e * c with strictly decreasing exponents and coefficients >= 1.
/// The empty sum is 0. Only construction and comparison are provided;
/// barrier ranks need nothing else.
struct Ordinal {
    std::vector<std::pair<int, long long>> terms;  // (exponent, coefficient), exponents descending

    static Ordinal zero() { return Ordinal{}; }

    /// Validating constructor from a term list.
    static Ordinal from_terms(std::vector<std::pair<int, long long>> terms);

    bool is_zero() const { return terms.empty(); }
    std::string to_string() const;

    friend bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms == b.terms; }
};

/// alpha_s = sum_{i < |s|} omega^{h(min s) - i} * s(i), zero-coefficient
/// terms dropped. Requires s nonempty and |s| <= h(min s).
Ordinal ordinal_rank(const FinSet& s, const BoundFn& h);

/// Standard CNF order: highest exponents first, then coefficients, then
/// the remaining terms.
Ordering ord_compare(const Ordinal& a, const Ordinal& b);

}  // namespace largesets
