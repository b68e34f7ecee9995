#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "largesets/coloring.hpp"
#include "largesets/fin_set.hpp"
#include "largesets/report.hpp"

namespace largesets {

/// Executable problem reductions: each is a forward instance transform
/// plus a backward solution map. Backward maps read only the solution and
/// static parameters, never the instance, which is the strong-Weihrauch
/// shape; their signatures enforce that.

/// Free set to thin set: a free A loses a nonempty block B and becomes
/// thin for min B. Rejects non-free A or invalid B.
struct ThinWitness {
    FinSet H;
    long long color = 0;
};
ThinWitness red_ts_from_fs(const Coloring& f, const FinSet& A, const FinSet& B);

/// The shift-down recursion from the Ramsey-to-free-set reduction. Defined
/// on exactly omega-large s with min s > 0 (the proof shifts solutions
/// down by one); the recursion is on lexicographically smaller sets and is
/// memoized. `f` must be total on the Schreier members of [0,N).
Coloring red_fs_from_rt(const Coloring& f, int N);

/// Same recursion evaluated naively, no memo; the independent oracle the
/// harness cross-checks against.
long long fs_from_rt_naive(const Coloring& f, const FinSet& s);

/// Backward map: H maps to {x-1 : x in H}.
FinSet backward_shift_down(const FinSet& H);

/// Collision-count recoding: g(s) = number of earlier members (in the
/// domain's lexicographic rank) sharing f's color. Requires f k-bounded
/// within the horizon; a g-homogeneous set is an f-rainbow, backward map
/// the identity.
Coloring red_rrt_from_rt(const Coloring& f, int k, int N);

/// Pointer recoding for 2-bounded f: g(s) = min(t \ s) for the unique
/// earlier color twin t, else 0. A g-free set is an f-rainbow.
Coloring red_rrt2_from_fs(const Coloring& f, int N);

/// Thin-set from rainbows one level up: members x.s of the exactly
/// (omega+1)-large family get matched colors when f(s) encodes the pair
/// {x, other} below min s, fresh colors otherwise.
Coloring red_ts_from_rrt_omegaplus1(const Coloring& f, int N);

/// Backward map for the previous: a rainbow H plus a chosen pair u < v
/// yields the thin witness (H minus [0,v], color <u,v>).
ThinWitness backward_ts_from_rrt(const FinSet& H, int u, int v);

/// Fixed-dimension rainbow instance embedded into the Schreier family:
/// s = x0.u.r with |u| = n and x0 >= n reads f on u and tags the tail.
Coloring red_rrt_dim_embed(const Coloring& f, int k, int n, int N);

/// Backward map: drop everything up to the least element >= n.
FinSet backward_dim_embed(const FinSet& A, int n);

/// Rainbow instance to a progressive set-valued instance over the same
/// barrier: g(s) collects min(t \ s) over later color twins. A set-valued
/// free set is an f-rainbow.
Coloring red_progressive_from_rrt(const Coloring& f, int k, int N);

/// Cofinitely-thin recoding: colors of the shape encode(i, n) collapse to
/// i, so omitting color i means omitting the whole infinite family
/// {encode(i, n) : n} in the source coloring.
long long cofinite_encode(long long i, long long n);
Coloring red_ts_cofinite(const Coloring& f, int N);

/// Solution-mapping verification harness. Per trial: generate an
/// instance, build the forward image, enumerate every target solution of
/// size m within [0,N), map each back, and check the source predicate
/// wherever the reduction's finite-soundness precondition holds. Failures
/// carry a certificate. `corrupt` swaps in the reduction's deliberately
/// broken forward map; the self-test expects failures then.
struct VerifyReport {
    std::string reduction;
    std::uint64_t seed = 0;
    int horizon = 0;
    int size = 0;
    int trials = 0;
    bool corrupt = false;
    long long checks_passed = 0;
    long long checks_failed = 0;
    long long checks_skipped = 0;   // headroom precondition not met
    long long solutions_seen = 0;
    std::vector<Json> certificates;  // one per failure, capped

    Json to_json() const;
};

std::vector<std::string> reduction_names();

VerifyReport verify_reduction(const std::string& name, std::uint64_t seed, int N, int m,
                              int trials, bool corrupt = false);

}  // namespace largesets
