#include "largesets/fin_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace largesets {

FinSet::FinSet(std::vector<int> elements) : xs_(std::move(elements)) {
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (xs_[i] < 0)
            throw std::invalid_argument("FinSet: negative element");
        if (i > 0 && xs_[i - 1] >= xs_[i])
            throw std::invalid_argument("FinSet: elements must be strictly increasing");
    }
}

FinSet FinSet::of(std::initializer_list<int> elements) {
    return FinSet(std::vector<int>(elements));
}

FinSet FinSet::from_mask(std::uint64_t mask) {
    std::vector<int> xs;
    for (int i = 0; i < 64; ++i)
        if (mask & (std::uint64_t{1} << i)) xs.push_back(i);
    return FinSet(std::move(xs));
}

int FinSet::min() const {
    if (empty()) throw std::domain_error("FinSet::min on empty set");
    return xs_.front();
}

int FinSet::max() const {
    if (empty()) throw std::domain_error("FinSet::max on empty set");
    return xs_.back();
}

bool FinSet::contains(int x) const {
    return std::binary_search(xs_.begin(), xs_.end(), x);
}

bool FinSet::subset_of(const FinSet& other) const {
    return std::includes(other.xs_.begin(), other.xs_.end(), xs_.begin(), xs_.end());
}

bool FinSet::proper_subset_of(const FinSet& other) const {
    return size() < other.size() && subset_of(other);
}

FinSet FinSet::set_minus(const FinSet& other) const {
    std::vector<int> out;
    std::set_difference(xs_.begin(), xs_.end(), other.xs_.begin(), other.xs_.end(),
                        std::back_inserter(out));
    return FinSet(std::move(out));
}

FinSet FinSet::set_union(const FinSet& other) const {
    std::vector<int> out;
    std::set_union(xs_.begin(), xs_.end(), other.xs_.begin(), other.xs_.end(),
                   std::back_inserter(out));
    return FinSet(std::move(out));
}

FinSet FinSet::intersect(const FinSet& other) const {
    std::vector<int> out;
    std::set_intersection(xs_.begin(), xs_.end(), other.xs_.begin(), other.xs_.end(),
                          std::back_inserter(out));
    return FinSet(std::move(out));
}

FinSet FinSet::above(int x) const {
    std::vector<int> out;
    for (int e : xs_)
        if (e > x) out.push_back(e);
    return FinSet(std::move(out));
}

FinSet FinSet::below(int x) const {
    std::vector<int> out;
    for (int e : xs_)
        if (e < x) out.push_back(e);
    return FinSet(std::move(out));
}

FinSet FinSet::drop_min() const {
    if (empty()) throw std::domain_error("FinSet::drop_min on empty set");
    return FinSet(std::vector<int>(xs_.begin() + 1, xs_.end()));
}

FinSet FinSet::drop_max() const {
    if (empty()) throw std::domain_error("FinSet::drop_max on empty set");
    return FinSet(std::vector<int>(xs_.begin(), xs_.end() - 1));
}

FinSet FinSet::prepend(int x) const {
    if (!empty() && x >= min())
        throw std::invalid_argument("FinSet::prepend: element not below min");
    std::vector<int> out;
    out.reserve(xs_.size() + 1);
    out.push_back(x);
    out.insert(out.end(), xs_.begin(), xs_.end());
    return FinSet(std::move(out));
}

FinSet FinSet::prefix(int n) const {
    if (n < 0 || n > size()) throw std::invalid_argument("FinSet::prefix: bad length");
    return FinSet(std::vector<int>(xs_.begin(), xs_.begin() + n));
}

std::uint64_t FinSet::to_mask() const {
    std::uint64_t mask = 0;
    for (int e : xs_) {
        if (e >= 64) throw std::domain_error("FinSet::to_mask: element >= 64");
        mask |= std::uint64_t{1} << e;
    }
    return mask;
}

std::string FinSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs_[i]);
    }
    out += "}";
    return out;
}

Ordering lex_compare(const FinSet& s, const FinSet& t) {
    int n = std::min(s.size(), t.size());
    for (int i = 0; i < n; ++i) {
        if (s[i] < t[i]) return Ordering::Less;
        if (s[i] > t[i]) return Ordering::Greater;
    }
    if (s.size() == t.size()) return Ordering::Equal;
    throw std::invalid_argument(
        "lex_compare: one set is a proper initial segment of the other");
}

bool is_exactly_omega_large(const FinSet& s) {
    return !s.empty() && s.size() == 1 + s.min();
}

bool is_omega_large(const FinSet& s) {
    return !s.empty() && s.size() >= 1 + s.min();
}

std::optional<FinSet> quasi_parent(const FinSet& s) {
    if (s.empty() || s.size() >= s.min()) return std::nullopt;
    return s.prepend(s.size());
}

FinSet ominus_one(const FinSet& s) {
    if (!is_exactly_omega_large(s))
        throw std::invalid_argument("ominus_one: set not exactly omega-large");
    if (s.min() == 0)
        throw std::invalid_argument("ominus_one: min must be positive");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(s.size()) - 1);
    for (int i = 0; i + 1 < s.size(); ++i) out.push_back(s[i] - 1);
    return FinSet(std::move(out));
}

bool is_exactly_omega_plus_one_large(const FinSet& s) {
    return s.size() >= 2 && is_exactly_omega_large(s.drop_min());
}

namespace {

void emit_tails(int N, int m, std::vector<int>& acc, int next,
                std::vector<FinSet>& out) {
    if (static_cast<int>(acc.size()) == m + 1) {
        out.emplace_back(acc);
        return;
    }
    for (int x = next; x < N; ++x) {
        acc.push_back(x);
        emit_tails(N, m, acc, x + 1, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<FinSet> enumerate_exactly_large(int N) {
    if (N < 1) throw std::invalid_argument("enumerate_exactly_large: N must be >= 1");
    std::vector<FinSet> out;
    // Members with min m are {m} followed by an m-combination of (m, N);
    // ascending m plus lexicographic tails is overall lexicographic order.
    for (int m = 0; m < N; ++m) {
        std::vector<int> acc{m};
        emit_tails(N, m, acc, m + 1, out);
    }
    return out;
}

}  // namespace largesets
