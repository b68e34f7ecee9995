#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace largesets {

/// A finite stand-in for a c.e. set: the pairs (element, stage) at which
/// elements get enumerated. The denoted set is {element : some event}.
/// Modulus and its stage-truncated approximations are the only things the
/// gadget constructions read off it.
struct EnumerationSchedule {
    std::vector<std::pair<int, int>> events;  // (element, stage >= 1)

    EnumerationSchedule() = default;
    explicit EnumerationSchedule(std::vector<std::pair<int, int>> evts);

    int max_stage() const;

    /// JSON Lines: one {"element": e, "stage": s} per line.
    static EnumerationSchedule load_jsonl(std::istream& in);
    void save_jsonl(std::ostream& out) const;
};

/// Least stage t such that every event (e,u) with e <= x has u <= t;
/// 0 when there is no such event. The settling time of the set below x.
int modulus(const EnumerationSchedule& sched, int x);

/// Modulus of the schedule truncated to events with stage <= n. Monotone
/// non-decreasing in n and equal to modulus() once n reaches max_stage.
int approx_modulus(const EnumerationSchedule& sched, int n, int x);

/// max(1, cumulative max over x' <= x of approx_modulus(n, x')): the
/// approximation normalized to be >= 1 and non-decreasing in x, still
/// non-decreasing in n.
int normalized_approx(const EnumerationSchedule& sched, int n, int x);

/// Fully settled normalized modulus (stage = max_stage).
int normalized_modulus(const EnumerationSchedule& sched, int x);

/// Least n with normalized_approx(n, x) = normalized_modulus(x).
int settling_stage(const EnumerationSchedule& sched, int x);

/// A stack of schedules; level k (1-based) stands in for the k-th jump
/// surrogate. Levels are independent injections, not iterated jumps.
struct LevelFamily {
    std::vector<EnumerationSchedule> levels;

    explicit LevelFamily(std::vector<EnumerationSchedule> ls);

    /// Level k, clamped to the top injected level when k exceeds it.
    const EnumerationSchedule& level(int k) const;
};

}  // namespace largesets
