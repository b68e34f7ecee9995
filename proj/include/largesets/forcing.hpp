#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "largesets/bound_fn.hpp"
#include "largesets/coloring.hpp"
#include "largesets/fin_set.hpp"
#include "largesets/report.hpp"
#include "largesets/rng.hpp"

namespace largesets {

/// Finite combinatorial core of the progressive-free-set forcing: trace
/// properties of conditions, stabilization witnesses with their Catalan
/// bounds, limit colorings, and the compactness form of the forcing
/// question. The reservoir is a finite slice of the proof's infinite one
/// throughout.

struct ConditionViolation {
    FinSet s;
    std::string clause;  // "a" or "b"
};

struct ConditionReport {
    bool ok_a = true;
    bool ok_b = true;
    std::vector<ConditionViolation> violations;

    bool ok() const { return ok_a && ok_b; }
};

/// Exhaustive check of the condition trace properties over [sigma u X]
/// within [0,N):
///   (a) min s in sigma  =>  f(s) /\ X <= s
///   (b) always          =>  f(s) /\ sigma <= s
/// f must be set-valued over a BoundedDepth domain, progressive and
/// b_f-constrained within the horizon; max sigma < min X.
ConditionReport check_condition(const Coloring& f, const BoundFn& b_f, const FinSet& sigma,
                                const FinSet& X, int N);

/// The per-stem color traces I_{t,n} plus their Catalan cardinality
/// bounds. At desk scale the bound is a checkable property of the given
/// reservoir, not a theorem: when it fails we report which (t, n) blew
/// the budget rather than shrinking the reservoir.
struct StabilizationWitness {
    int k = 0;  // stem is [0, k]
    std::map<std::pair<FinSet, int>, FinSet> traces;
    bool valid = true;
    std::vector<std::pair<FinSet, int>> violations;
};

StabilizationWitness compute_stabilization(int k, const FinSet& X, const Coloring& f,
                                           const BoundFn& b_f, int N);

/// g(t) = union over n <= h(min t) - |t| of I_{t,n}; g({}) = {}. Defined
/// on the members of [0,k+1)'s bounded-depth family, b_f^+-constrained.
Coloring limit_coloring(int k, const StabilizationWitness& witness, const BoundFn& h);

/// b+(m) = sum_{n <= h(m)} b(m) * C_n.
long long b_plus(const BoundFn& b, const BoundFn& h, int m);
BoundFn b_plus_fn(const BoundFn& b, const BoundFn& h);

struct PreserveBResult {
    bool ok = true;
    std::vector<ConditionViolation> violations;
};

/// The core preservation lemma, checked exhaustively: given a condition
/// (f, sigma, X), a reservoir slice Y above [0,k] stabilizing it, and a
/// limit-free block rho inside X restricted to [0,k), property (b) holds
/// for (f, sigma u rho, Y). The lemma predicts true; false is a bug
/// certificate. Preconditions (condition properties, witness validity,
/// rho freeness) are rejected loudly.
PreserveBResult verify_preserving_b(const Coloring& f, const BoundFn& b_f, const FinSet& sigma,
                                    const FinSet& X, const FinSet& Y, int k, const FinSet& rho,
                                    int N);

/// A decidable predicate on stems for the forcing question.
struct Phi {
    enum class Kind { True, False, MinSize, Contains };
    Kind kind = Kind::True;
    int param = 0;

    bool eval(const FinSet& s) const;
    std::string describe() const;
    static Phi always() { return {Kind::True, 0}; }
    static Phi never() { return {Kind::False, 0}; }
    static Phi min_size(int m) { return {Kind::MinSize, m}; }
    static Phi contains(int x) { return {Kind::Contains, x}; }
    static Phi parse(const Json& j);
};

struct ForcingAnswer {
    bool value = false;
    bool exceeded_budget = false;
    bool sampled = false;         // sampled runs are evidence, never "verified"
    long long adversaries = 0;    // assignments actually evaluated
    double space_size = 0;        // full adversary space cardinality
    std::optional<Json> counterexample;

    Json to_json() const;
};

/// The compactness form of the forcing question: true iff EVERY
/// b_plus-constrained progressive g on [0,k]'s bounded-depth family (with
/// values inside [0,k]) admits a g-free rho inside X restricted to [0,k)
/// with phi(sigma u rho). Exhaustive over the finite adversary space;
/// refuses budgets it cannot honor unless sampling is requested.
ForcingAnswer forcing_question_finite(const BoundFn& h, const BoundFn& b_plus_bound,
                                      const FinSet& sigma, const FinSet& X, const Phi& phi,
                                      int k, long long max_space,
                                      std::optional<long long> sample_count = std::nullopt,
                                      std::uint64_t sample_seed = 0);

}  // namespace largesets
