#pragma once

#include <vector>

#include "largesets/coloring.hpp"
#include "largesets/rng.hpp"
#include "largesets/schedule.hpp"

namespace largesets {

/// Seeded instance generators for the verification harnesses and the test
/// corpus. Everything is drawn from one SplitMix64 stream per call, so a
/// (seed, trial) pair pins the instance exactly.

/// Scalar coloring with colors in [0, range). When in_set_bias > 0, that
/// percentage of members get a color drawn from their own elements, which
/// makes free sets common enough to exercise.
Coloring random_scalar(SplitMix64& rng, DomainFamily dom, int N, int range, int in_set_bias_pct);

/// k-bounded scalar coloring: members are grouped into blocks of size at
/// most k; each block shares one fresh color.
Coloring random_k_bounded(SplitMix64& rng, DomainFamily dom, int N, int k);

/// Progressive b-constrained set-valued coloring over the domain.
Coloring random_progressive(SplitMix64& rng, DomainFamily dom, int N, const BoundFn& b);

/// Random schedule: `count` distinct elements below element_bound, stages
/// in [1, stage_bound].
EnumerationSchedule random_schedule(SplitMix64& rng, int count, int element_bound,
                                    int stage_bound);

/// The fixed schedule corpus used by gadget acceptance runs: edge cases
/// first, then seeded random ones.
std::vector<EnumerationSchedule> schedule_corpus(std::uint64_t seed, int random_count);

/// 2-bounded coloring family f_n per arity n in [0, max_arity], for the
/// arithmetical-avoidance gadget.
std::vector<Coloring> random_bounded_family(SplitMix64& rng, int max_arity, int N);

}  // namespace largesets
