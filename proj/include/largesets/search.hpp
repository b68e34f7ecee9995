#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "largesets/coloring.hpp"
#include "largesets/fin_set.hpp"
#include "largesets/solution.hpp"

namespace largesets {

/// The coloring's members and values flattened to bitmask form over a
/// fixed universe, so the exhaustive scans test candidates with a few
/// word operations per member. Built once per search.
struct MaskedColoring {
    int bound = 0;  // universe elements are < bound
    bool set_valued = false;
    std::vector<std::uint64_t> member_masks;
    std::vector<long long> colors;            // scalar values
    std::vector<std::uint64_t> value_masks;   // set values restricted below `bound`

    static MaskedColoring build(const Coloring& f, int bound);
};

bool satisfies_masked(const MaskedColoring& mc, const SolutionKind& kind, std::uint64_t H);

/// Number of m-subsets of an n-set; the rank space of the scans.
std::uint64_t binomial(int n, int m);

/// Lexicographically least H contained in `universe` with |H| = m
/// satisfying the predicate; nullopt when none exists. The parallel
/// kernel partitions the combination rank space in fixed-size blocks, so
/// its answer is byte-identical to the serial reference for any worker
/// count.
std::optional<FinSet> find_solution(const Coloring& f, const SolutionKind& kind, int m,
                                    const FinSet& universe);
std::optional<FinSet> find_solution(const Coloring& f, const SolutionKind& kind, int m, int N);

std::optional<FinSet> find_solution_serial(const Coloring& f, const SolutionKind& kind, int m,
                                           const FinSet& universe);
std::optional<FinSet> find_solution_parallel(const Coloring& f, const SolutionKind& kind, int m,
                                             const FinSet& universe);

/// Every solution of size m, in lexicographic order.
std::vector<FinSet> find_all_solutions(const Coloring& f, const SolutionKind& kind, int m,
                                       const FinSet& universe);
std::vector<FinSet> find_all_solutions_serial(const Coloring& f, const SolutionKind& kind, int m,
                                              const FinSet& universe);

FinSet interval_universe(int lo, int N);  // {lo, ..., N-1}

}  // namespace largesets
