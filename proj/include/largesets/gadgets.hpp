#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "largesets/barrier.hpp"
#include "largesets/coloring.hpp"
#include "largesets/report.hpp"
#include "largesets/schedule.hpp"

namespace largesets {

/// Named counterexample and lower-bound colorings, plus the two
/// jump-coding barrier constructions. Every gadget carries a verifier
/// that exhaustively checks its claimed property at a horizon; verifier
/// failures are bug certificates, not expected outcomes.

/// f(s) = |s| over all finite sets: no H omits any color up to |H|.
Coloring cex_ts_all_finite();

/// The pairing counterexample: exactly omega-large sets share their color
/// with their min-removed child, so no H containing an exactly
/// omega-large member is a rainbow. 2-bounded. Table-backed at N (the
/// rank bijection needs the horizon).
Coloring cex_rrt_all_finite(int N);

/// f(x0..x_{n-1}) = n-1 when modulus(x0) <= x1, otherwise the largest
/// i < n-1 with modulus(x0) > x_{i+1}. Thin sets for color n-2 dominate
/// the modulus at stride n-1, exactly. Requires n >= 2.
Coloring gadget_ts_fincolors(const EnumerationSchedule& sched, int n);

/// A stage-indexed family of colorings over [N]^arity, eventually
/// constant in the stage. settle_stage bounds where it stops moving.
struct StagedFamily {
    int arity = 0;
    int settle_stage = 0;
    std::function<long long(int stage, const FinSet&)> eval;
};

/// The fincolors gadget with its modulus truncated at a stage: the
/// natural approximation family of gadget_ts_fincolors.
StagedFamily fincolors_staged(const EnumerationSchedule& sched, int n);

/// g(x0..xn) = f_{xn}(x0..x_{n-1}). Rejects families that have not
/// settled within the horizon (checked exhaustively at construction).
Coloring jump_compose(const StagedFamily& family, int N);

/// The composed thin-set instance over [N]^{n+k}: the level-k schedule's
/// fincolors gadget with its stage read from coordinate n; the remaining
/// k-1 appended coordinates are inert, which is what iterating the jump
/// composition over an already-settled function leaves behind.
Coloring layered_fincolors(const LevelFamily& levels, int n, int k);

/// The Schreier thin-set instance: s with min s = x0 > 1 reads
/// layered_fincolors(x0 - k, k) on its tail for k = ceil(x0/2); min <= 1
/// gets color 0.
Coloring gadget_ts_schreier(const LevelFamily& levels);

/// g(n.x) = <n, f_n(x)>: the per-dimension family glued along the
/// Schreier barrier. 2-bounded when each f_n is.
Coloring gadget_rrt_arith(std::vector<Coloring> family);

struct BarrierGadget {
    Barrier barrier;
    Coloring coloring;
};

/// The rainbow-instance barrier: members x.y.s with x < y < min s and
/// |s| = normalized_approx(min s, x)^2; the coloring couples x.y.s with
/// x.z.s when the thin-coloring of s picks out the pair (z-x, y-x).
BarrierGadget gadget_barrier_rrt_jump(const EnumerationSchedule& sched, int N);

/// The progressive-free-set barrier: members x.s with x < min s and
/// |s| = normalized_approx(min s, x); f(x.s) = x + h(s) + 1.
BarrierGadget gadget_barrier_pfs_jump(const EnumerationSchedule& sched, int N);

/// f({x}) = [0, x): no 2-element set is free; the constraint bound really
/// is needed.
Coloring gadget_pfs_unbounded_false();

/// f({x}) = [x+1, modulus(x)]: free sets step over the modulus.
Coloring gadget_pfs_noncomputable_bound(const EnumerationSchedule& sched);

/// C_0 = 1, C_{n+1} = sum C_i * C_{n-i}. Rejects n > 36 (uint64 range).
std::uint64_t catalan(int n);

// --------------------------------------------------------------------
// Verifiers. `failures` must end up zero on faithful constructions;
// `skipped` counts checks whose finite headroom precondition failed.
// --------------------------------------------------------------------

struct GadgetVerifyReport {
    std::string gadget;
    long long checks = 0;
    long long failures = 0;
    long long skipped = 0;
    Json detail = Json::object();

    bool ok() const { return failures == 0; }
    Json to_json() const;
};

/// Colors 0..m all occur on the subsets of every H of size m <= m_cap.
GadgetVerifyReport verify_cex_ts(int N, int m_cap);

/// 2-bounded, and no H containing an exactly omega-large member is a
/// rainbow. Exhaustive over all H within [0,N).
GadgetVerifyReport verify_cex_rrt(int N);

/// (i) headroom implies color n-1 occurs; (ii) every H thin for color
/// n-2 dominates the modulus at stride n-1. Exhaustive over all H.
GadgetVerifyReport verify_fincolors(const EnumerationSchedule& sched, int n, int N);

/// Thinness transfers from the composition to the limit coloring
/// wherever an in-horizon settled stage element is available.
GadgetVerifyReport verify_jump_compose(const StagedFamily& family, int N);

/// Per-slice domination for the Schreier thin-set instance: for every H
/// thin for c and every x0 in H whose slice has pivot color c, the tail
/// of H past x0 and the settling stage dominates the level-k modulus.
GadgetVerifyReport verify_ts_schreier(const LevelFamily& levels, int N);

/// Every rainbow H and every n in H: H past n is an f_n-rainbow.
GadgetVerifyReport verify_rrt_arith(const std::vector<Coloring>& family, int N,
                                    const std::vector<int>& sizes);

/// Barrier axioms at the horizon plus the proof's dichotomy on every
/// rainbow found: around each x, either no coupled pair lands inside
/// (x, x+g(x)) (gap domination), or the tail avoids the coupling color.
GadgetVerifyReport verify_barrier_rrt_jump(const EnumerationSchedule& sched, int N,
                                           const std::vector<int>& sizes);

/// Same shape for the progressive gadget, with f(x.s) > x checked too.
GadgetVerifyReport verify_barrier_pfs_jump(const EnumerationSchedule& sched, int N,
                                           const std::vector<int>& sizes);

/// No free pair exists, exhaustively.
GadgetVerifyReport verify_pfs_unbounded(int N);

/// Every free set steps over the modulus, exhaustively.
GadgetVerifyReport verify_pfs_noncomputable(const EnumerationSchedule& sched, int N);

}  // namespace largesets
