#include "largesets/solution.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace largesets {

std::string SolutionKind::describe() const {
    switch (tag) {
        case Tag::Homogeneous: return "homogeneous";
        case Tag::FreeScalar: return "free";
        case Tag::FreeSetValued: return "free-set";
        case Tag::ThinFor: return "thin-for:" + std::to_string(color);
        case Tag::Thin: return "thin:" + std::to_string(max_color);
        case Tag::Rainbow: return "rainbow";
    }
    return "?";
}

namespace {

/// Member subsets of H, by scanning subsets of H directly (H is small in
/// every caller; the heavy scans go through search.cpp's mask kernels).
template <typename Fn>
void for_each_member_subset(const Coloring& f, const FinSet& H, Fn&& fn) {
    const auto& elems = H.elements();
    const int n = H.size();
    if (n > 30) throw std::invalid_argument("solution predicate: H too large");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> xs;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) xs.push_back(elems[static_cast<std::size_t>(i)]);
        FinSet s(std::move(xs));
        if (f.domain().member(s)) fn(s);
    }
}

}  // namespace

bool is_homogeneous(const Coloring& f, const FinSet& H) {
    bool seen = false;
    long long first = 0;
    bool ok = true;
    for_each_member_subset(f, H, [&](const FinSet& s) {
        const long long c = f.eval(s);
        if (!seen) {
            seen = true;
            first = c;
        } else if (c != first) {
            ok = false;
        }
    });
    if (!seen)
        throw std::invalid_argument("is_homogeneous: no domain member inside " + H.to_string());
    return ok;
}

bool is_free_scalar(const Coloring& f, const FinSet& H) {
    bool ok = true;
    for_each_member_subset(f, H, [&](const FinSet& s) {
        const long long c = f.eval(s);
        if (c >= 0 && c <= static_cast<long long>(INT32_MAX) &&
            H.contains(static_cast<int>(c)) && !s.contains(static_cast<int>(c)))
            ok = false;
    });
    return ok;
}

bool is_free_setvalued(const Coloring& f, const FinSet& H) {
    bool ok = true;
    for_each_member_subset(f, H, [&](const FinSet& s) {
        for (int v : f.eval_set(s))
            if (H.contains(v) && !s.contains(v)) ok = false;
    });
    return ok;
}

bool is_thin_for(const Coloring& f, const FinSet& H, long long c) {
    bool ok = true;
    for_each_member_subset(f, H, [&](const FinSet& s) {
        if (f.eval(s) == c) ok = false;
    });
    return ok;
}

bool is_rainbow(const Coloring& f, const FinSet& H) {
    std::vector<long long> colors;
    for_each_member_subset(f, H, [&](const FinSet& s) { colors.push_back(f.eval(s)); });
    std::sort(colors.begin(), colors.end());
    return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

bool satisfies(const Coloring& f, const SolutionKind& kind, const FinSet& H) {
    switch (kind.tag) {
        case SolutionKind::Tag::Homogeneous: {
            bool seen = false;
            long long first = 0;
            bool ok = true;
            for_each_member_subset(f, H, [&](const FinSet& s) {
                const long long c = f.eval(s);
                if (!seen) {
                    seen = true;
                    first = c;
                } else if (c != first) {
                    ok = false;
                }
            });
            return seen && ok;
        }
        case SolutionKind::Tag::FreeScalar: return is_free_scalar(f, H);
        case SolutionKind::Tag::FreeSetValued: return is_free_setvalued(f, H);
        case SolutionKind::Tag::ThinFor: return is_thin_for(f, H, kind.color);
        case SolutionKind::Tag::Thin: {
            for (long long c = 0; c <= kind.max_color; ++c)
                if (is_thin_for(f, H, c)) return true;
            return false;
        }
        case SolutionKind::Tag::Rainbow: return is_rainbow(f, H);
    }
    return false;
}

}  // namespace largesets
