#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forcing_instances.hpp"
#include "largesets/forcing.hpp"
#include "largesets/gadgets.hpp"

using namespace largesets;

namespace {

Coloring bounded_table(const BoundFn& h, int N,
                       const std::map<FinSet, FinSet>& overrides) {
    std::map<FinSet, FinSet> table;
    for (const FinSet& s : DomainFamily::bounded_depth(h).members_within(N)) {
        auto it = overrides.find(s);
        table.emplace(s, it != overrides.end() ? it->second : FinSet());
    }
    ColoringMeta meta;
    meta.progressive = true;
    return Coloring::set_table(DomainFamily::bounded_depth(h), table, N, meta);
}

}  // namespace

TEST_CASE("b_plus worked examples and monotonicity") {
    CHECK(b_plus(BoundFn::constant(1), BoundFn::successor(), 2) == 9);  // 1+1+2+5
    CHECK(b_plus(BoundFn::constant(0), BoundFn::successor(), 5) == 0);
    CHECK(b_plus(BoundFn::constant(1), BoundFn::constant(0), 7) == 1);  // C_0 only
    for (int m = 0; m <= 5; ++m) {
        CHECK(b_plus(BoundFn::constant(1), BoundFn::constant(2), m) <=
              b_plus(BoundFn::constant(2), BoundFn::constant(2), m));
        CHECK(b_plus(BoundFn::constant(2), BoundFn::constant(2), m) <=
              b_plus(BoundFn::constant(2), BoundFn::constant(3), m));
    }
}

TEST_CASE("check_condition accepts the easy colorings") {
    const BoundFn h = BoundFn::constant(2);
    const Coloring empty = bounded_table(h, 9, {});
    CHECK(check_condition(empty, BoundFn::constant(1), FinSet::of({0, 1}),
                          FinSet::of({3, 5, 7}), 9)
              .ok());

    std::map<FinSet, FinSet> min_self;
    for (const FinSet& s : DomainFamily::bounded_depth(h).members_within(9))
        if (!s.empty()) min_self.emplace(s, FinSet::of({s.min()}));
    const Coloring min_col = bounded_table(h, 9, min_self);
    CHECK(check_condition(min_col, BoundFn::constant(1), FinSet::of({0, 1}),
                          FinSet::of({3, 5, 7}), 9)
              .ok());
}

TEST_CASE("check_condition reports clause-b violations") {
    const BoundFn h = BoundFn::constant(2);
    // f({3}) = {1} with 1 in sigma: progressive fails... use sigma value >= min:
    // f({3}) = {5}? that's X. Clause b needs a sigma value: sigma = {4}, X = {5,7},
    // f({5}) = {4}: progressive (4 < 5) fails. Instead sigma={4}, f({5,7})={6}? 6 not in sigma.
    // Take sigma = {4}, X = {5,7,8}, f({5}) = {7}: violates (a) for min in sigma? no.
    // Clause a: s = {4,5}, f = {7}: 7 in X, not in s.
    std::map<FinSet, FinSet> bad;
    bad.emplace(FinSet::of({4, 5}), FinSet::of({7}));
    const Coloring f = bounded_table(h, 9, bad);
    const auto rep = check_condition(f, BoundFn::constant(1), FinSet::of({4}),
                                     FinSet::of({5, 7, 8}), 9);
    CHECK_FALSE(rep.ok_a);
    CHECK(rep.ok_b);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations[0].s == FinSet::of({4, 5}));
}

TEST_CASE("check_condition rejects non-progressive and over-wide inputs") {
    const BoundFn h = BoundFn::constant(2);
    std::map<FinSet, FinSet> regress;
    regress.emplace(FinSet::of({5}), FinSet::of({2}));
    const Coloring f = bounded_table(h, 9, regress);
    CHECK_THROWS_AS(check_condition(f, BoundFn::constant(1), FinSet(), FinSet::of({3, 5}), 9),
                    std::invalid_argument);
}

TEST_CASE("stabilization traces and the Catalan bound") {
    const BoundFn h = BoundFn::constant(2);
    // trivial traces
    const Coloring empty = bounded_table(h, 10, {});
    const auto w0 = compute_stabilization(2, FinSet::of({4, 6, 8}), empty,
                                          BoundFn::constant(1), 10);
    CHECK(w0.valid);
    for (const auto& [key, trace] : w0.traces) CHECK(trace.empty());

    // single stem part {0}, n = 1, values vary over 2 > b*C_1 = 1 traces
    std::map<FinSet, FinSet> vary;
    vary.emplace(FinSet::of({0, 4}), FinSet::of({1}));
    vary.emplace(FinSet::of({0, 6}), FinSet::of({2}));
    const Coloring f = bounded_table(h, 10, vary);
    const auto w1 = compute_stabilization(2, FinSet::of({4, 6, 8}), f, BoundFn::constant(1), 10);
    CHECK_FALSE(w1.valid);
    bool found = false;
    for (const auto& [t, n] : w1.violations)
        if (t == FinSet::of({0}) && n == 1) found = true;
    CHECK(found);
    CHECK_THROWS_AS(limit_coloring(2, w1, h), std::invalid_argument);

    // same trace twice stays within the bound
    std::map<FinSet, FinSet> steady;
    steady.emplace(FinSet::of({0, 4}), FinSet::of({1}));
    steady.emplace(FinSet::of({0, 6}), FinSet::of({1}));
    const Coloring g = bounded_table(h, 10, steady);
    const auto w2 = compute_stabilization(2, FinSet::of({4, 6, 8}), g, BoundFn::constant(1), 10);
    CHECK(w2.valid);
    const Coloring limit = limit_coloring(2, w2, h);
    CHECK(limit.eval_set(FinSet::of({0})) == FinSet::of({1}));
    CHECK(limit.eval_set(FinSet()).empty());
    CHECK(validate_constrained(limit, b_plus_fn(BoundFn::constant(1), h), 3).ok);
}

TEST_CASE("preserve-b: rho = {} reduces to clause b, singletons vacuously free") {
    const auto inst = testing::make_preserve_b_instance(7);
    REQUIRE(inst.has_value());
    CHECK(verify_preserving_b(inst->f, inst->b, inst->sigma, inst->X, inst->Y, inst->k,
                              FinSet(), inst->N)
              .ok);
    for (const FinSet& rho : inst->rhos)
        if (rho.size() == 1)
            CHECK(verify_preserving_b(inst->f, inst->b, inst->sigma, inst->X, inst->Y, inst->k,
                                      rho, inst->N)
                      .ok);
}

TEST_CASE("preserve-b randomized suite") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 30 && seed < 200; ++seed) {
        const auto inst = testing::make_preserve_b_instance(seed);
        if (!inst) continue;
        for (const FinSet& rho : inst->rhos) {
            const auto result = verify_preserving_b(inst->f, inst->b, inst->sigma, inst->X,
                                                    inst->Y, inst->k, rho, inst->N);
            CHECK(result.ok);
            ++done;
            if (done >= 30) break;
        }
    }
    CHECK(done >= 30);
}

TEST_CASE("preserve-b rejects a non-free rho") {
    // force a limit trace {1} on stem part {0} and try rho containing 1
    const BoundFn h = BoundFn::constant(2);
    std::map<FinSet, FinSet> steady;
    steady.emplace(FinSet::of({0, 5}), FinSet::of({1}));
    steady.emplace(FinSet::of({0, 7}), FinSet::of({1}));
    const Coloring f = bounded_table(h, 10, steady);
    const FinSet X = FinSet::of({0, 1, 5, 7, 9});
    // rho = {0,1}: limit({0}) = {1} intersect rho = {1}, not inside {0}
    CHECK_THROWS_AS(verify_preserving_b(f, BoundFn::constant(1), FinSet(), X, X.above(3), 3,
                                        FinSet::of({0, 1}), 10),
                    std::invalid_argument);
}

// --------------------------------------------------------------------
// forcing question vs an independent oracle
// --------------------------------------------------------------------

namespace oracle {

using largesets::FinSet;

struct Oracle {
    const BoundFn& h;
    const BoundFn& bp;
    FinSet sigma, Xk;
    const Phi& phi;
    int k;

    std::vector<FinSet> stems;

    bool rho_defeats(const std::map<FinSet, FinSet>& g) const {
        // search free rho by recursion over Xk elements (different shape
        // from the library's mask scan)
        std::vector<int> chosen;
        return try_extend(g, chosen, 0);
    }

    bool try_extend(const std::map<FinSet, FinSet>& g, std::vector<int>& chosen,
                    int idx) const {
        const FinSet rho{std::vector<int>(chosen.begin(), chosen.end())};
        if (free_for(g, rho) && phi.eval(sigma.set_union(rho))) return true;
        for (int i = idx; i < Xk.size(); ++i) {
            chosen.push_back(Xk[i]);
            if (try_extend(g, chosen, i + 1)) {
                chosen.pop_back();
                return true;
            }
            chosen.pop_back();
        }
        return false;
    }

    bool free_for(const std::map<FinSet, FinSet>& g, const FinSet& rho) const {
        for (const auto& [t, v] : g) {
            if (!t.subset_of(rho)) continue;
            for (int e : v)
                if (rho.contains(e) && !t.contains(e)) return false;
        }
        return true;
    }

    bool all_adversaries(std::map<FinSet, FinSet>& g, std::size_t idx) {
        if (idx == stems.size()) return rho_defeats(g);
        const FinSet& t = stems[idx];
        // enumerate value sets recursively: subsets of [min t, k] within bound
        std::vector<int> pool;
        for (int v = t.min(); v <= k; ++v) pool.push_back(v);
        const int cap = bp(t.min());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
            if (__builtin_popcountll(mask) > cap) continue;
            std::vector<int> vals;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (mask & (std::uint64_t{1} << i)) vals.push_back(pool[i]);
            g[t] = FinSet(vals);
            if (!all_adversaries(g, idx + 1)) return false;
        }
        g.erase(t);
        return true;
    }

    bool answer() {
        for (const FinSet& t : DomainFamily::bounded_depth(h).members_within(k + 1))
            if (!t.empty()) stems.push_back(t);
        std::map<FinSet, FinSet> g;
        return all_adversaries(g, 0);
    }
};

}  // namespace oracle

TEST_CASE("forcing question: trivial phis") {
    const BoundFn h = BoundFn::constant(1);
    const BoundFn bp = b_plus_fn(BoundFn::constant(1), h);
    const FinSet X = FinSet::of({0, 1, 2, 5, 6});
    const auto yes = forcing_question_finite(h, bp, FinSet(), X, Phi::always(), 3, 1 << 20);
    CHECK(yes.value);
    CHECK_FALSE(yes.sampled);
    const auto no = forcing_question_finite(h, bp, FinSet(), X, Phi::never(), 3, 1 << 20);
    CHECK_FALSE(no.value);
    CHECK(no.counterexample.has_value());
}

TEST_CASE("forcing question equals the independent oracle on toy instances") {
    int compared = 0;
    SplitMix64 rng(17);
    for (int trial = 0; trial < 24; ++trial) {
        const BoundFn h = trial % 2 == 0 ? BoundFn::constant(1) : BoundFn::constant(2);
        const int k = trial % 2 == 0 ? 3 : 2;
        const BoundFn b = BoundFn::constant(1);
        const BoundFn bp = b_plus_fn(b, h);
        std::vector<int> xs;
        for (int v = 0; v < 7; ++v)
            if (rng.coin()) xs.push_back(v);
        const FinSet X(xs);
        const FinSet sigma;
        for (const Phi& phi : {Phi::always(), Phi::min_size(1), Phi::min_size(2),
                               Phi::contains(X.empty() ? 0 : X[0])}) {
            const auto fast =
                forcing_question_finite(h, bp, sigma, X, phi, k, 1 << 22);
            REQUIRE_FALSE(fast.exceeded_budget);
            oracle::Oracle slow{h, bp, sigma, X.below(k), phi, k, {}};
            CHECK(fast.value == slow.answer());
            ++compared;
        }
    }
    CHECK(compared >= 20);
}

TEST_CASE("forcing question is antitone in the constraint bound") {
    const BoundFn h = BoundFn::constant(1);
    const FinSet X = FinSet::of({0, 1, 2, 4, 6});
    for (const Phi& phi : {Phi::min_size(1), Phi::min_size(2), Phi::contains(1)}) {
        bool previous = true;
        for (int bound = 1; bound <= 4; ++bound) {
            const auto answer = forcing_question_finite(h, BoundFn::constant(bound), FinSet(),
                                                        X, phi, 3, 1 << 22);
            REQUIRE_FALSE(answer.exceeded_budget);
            if (!previous) CHECK_FALSE(answer.value);  // true can only turn false
            previous = answer.value;
        }
    }
}

TEST_CASE("forcing question budget and sampling") {
    const BoundFn h = BoundFn::constant(2);
    const BoundFn bp = BoundFn::constant(4);
    const FinSet X = FinSet::of({0, 1, 2, 3, 5, 6, 7});
    const auto blown = forcing_question_finite(h, bp, FinSet(), X, Phi::always(), 4, 100);
    CHECK(blown.exceeded_budget);
    const auto sampled =
        forcing_question_finite(h, bp, FinSet(), X, Phi::always(), 4, 100, 500, 99);
    CHECK(sampled.value);
    CHECK(sampled.sampled);
    // a sampled counterexample is definitive, not "sampled"
    const auto refuted =
        forcing_question_finite(h, bp, FinSet(), X, Phi::never(), 4, 100, 50, 99);
    CHECK_FALSE(refuted.value);
    CHECK_FALSE(refuted.sampled);
}
