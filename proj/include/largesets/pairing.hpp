#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "largesets/fin_set.hpp"

namespace largesets {

/// Cantor pairing <x,y> = (x+y)(x+y+1)/2 + y. Tuples are encoded by
/// right-nesting: <a,b,c> = <a,<b,c>>. This is the one fresh-color /
/// matched-color tagging scheme used across the whole artifact, so color
/// tables are bit-identical between runs.
inline std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
    const std::uint64_t s = x + y;
    return s * (s + 1) / 2 + y;
}

inline std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
    // s = floor((sqrt(8z+1)-1)/2), corrected for floating point drift.
    std::uint64_t s = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
    while (s * (s + 1) / 2 > z) --s;
    while ((s + 1) * (s + 2) / 2 <= z) ++s;
    const std::uint64_t y = z - s * (s + 1) / 2;
    return {s - y, y};
}

inline std::uint64_t cantor_pair3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return cantor_pair(a, cantor_pair(b, c));
}

/// Injective code of a finite set: fold <e, acc> + 1 from the last
/// element down. code({}) = 0.
inline std::uint64_t finset_code(const FinSet& s) {
    std::uint64_t acc = 0;
    for (int i = s.size() - 1; i >= 0; --i)
        acc = cantor_pair(static_cast<std::uint64_t>(s[i]), acc) + 1;
    return acc;
}

/// The bijection between N and {(a,b) : a > b >= 0} listing pairs in
/// lexicographic order: (1,0), (2,0), (2,1), (3,0), ...
inline std::uint64_t gt_pair_to_index(int a, int b) {
    return static_cast<std::uint64_t>(a) * (static_cast<std::uint64_t>(a) - 1) / 2 +
           static_cast<std::uint64_t>(b);
}

inline std::pair<int, int> index_to_gt_pair(std::uint64_t i) {
    int a = 1;
    while (gt_pair_to_index(a + 1, 0) <= i) ++a;
    return {a, static_cast<int>(i - gt_pair_to_index(a, 0))};
}

}  // namespace largesets
