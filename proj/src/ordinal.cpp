#include "largesets/ordinal.hpp"

#include <stdexcept>

namespace largesets {

Ordinal Ordinal::from_terms(std::vector<std::pair<int, long long>> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].second < 1)
            throw std::invalid_argument("Ordinal: coefficients must be >= 1");
        if (terms[i].first < 0)
            throw std::invalid_argument("Ordinal: exponents must be >= 0");
        if (i > 0 && terms[i - 1].first <= terms[i].first)
            throw std::invalid_argument("Ordinal: exponents must be strictly decreasing");
    }
    return Ordinal{std::move(terms)};
}

std::string Ordinal::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        out += "w^" + std::to_string(terms[i].first) + "*" + std::to_string(terms[i].second);
    }
    return out;
}

Ordinal ordinal_rank(const FinSet& s, const BoundFn& h) {
    if (s.empty()) throw std::invalid_argument("ordinal_rank: empty set");
    const int top = h(s.min());
    if (s.size() > top)
        throw std::invalid_argument("ordinal_rank: |s| exceeds h(min s)");
    std::vector<std::pair<int, long long>> terms;
    for (int i = 0; i < s.size(); ++i)
        if (s[i] > 0) terms.emplace_back(top - i, s[i]);
    return Ordinal::from_terms(std::move(terms));
}

Ordering ord_compare(const Ordinal& a, const Ordinal& b) {
    const std::size_t n = std::min(a.terms.size(), b.terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.terms[i].first != b.terms[i].first)
            return a.terms[i].first < b.terms[i].first ? Ordering::Less : Ordering::Greater;
        if (a.terms[i].second != b.terms[i].second)
            return a.terms[i].second < b.terms[i].second ? Ordering::Less : Ordering::Greater;
    }
    if (a.terms.size() == b.terms.size()) return Ordering::Equal;
    return a.terms.size() < b.terms.size() ? Ordering::Less : Ordering::Greater;
}

}  // namespace largesets
