#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "largesets/bound_fn.hpp"
#include "largesets/fin_set.hpp"

namespace largesets {

/// A barrier descriptor over base N: a total membership predicate plus
/// optional bound metadata (B is contained in [N]^{<= bound(.)}). Whether
/// the predicate really describes a barrier is what check_barrier_prefix
/// probes; the descriptor itself promises nothing. Membership must be
/// pure.
struct Barrier {
    std::string name;
    std::function<bool(const FinSet&)> member;
    std::optional<BoundFn> bound;

    /// Members within [0,N), lexicographically ordered.
    std::vector<FinSet> members_within(int N) const;
};

/// The Schreier barrier: exactly omega-large sets, bounded by x+1.
Barrier schreier_barrier();

/// [N]^n.
Barrier fixed_size_barrier(int n);

/// A barrier given by an explicit member table, valid only up to the
/// declared horizon; membership queries beyond it are rejected.
Barrier table_barrier(std::string name, std::vector<FinSet> members, int horizon);

/// JSON Lines: header {"name":..., "horizon":...}, then {"s":[...]} rows.
Barrier load_barrier_jsonl(std::istream& in);
void save_barrier_jsonl(std::ostream& out, const Barrier& b, int horizon);

/// Finite-horizon probe of the Nash-Williams axioms. Subset-freeness is
/// decidable at a horizon and violations are listed exhaustively. The
/// covering axiom quantifies over infinite sets, so a finite check can
/// only confirm: a sequence with no member prefix is "undetermined", not
/// a violation.
struct BarrierReport {
    int horizon = 0;
    std::vector<std::pair<FinSet, FinSet>> subset_violations;  // (s, t) with s proper subset of t
    long long covered = 0;       // nonempty increasing sequences with a member prefix
    long long undetermined = 0;  // nonempty increasing sequences without one
};

BarrierReport check_barrier_prefix(const Barrier& b, int N);

/// True iff every member within [0,N) satisfies |s| <= h(min s).
bool is_omega_bounded_by(const Barrier& b, const BoundFn& h, int N);

}  // namespace largesets
