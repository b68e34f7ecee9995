#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "largesets/generators.hpp"
#include "largesets/pairing.hpp"
#include "largesets/reductions.hpp"
#include "largesets/search.hpp"
#include "largesets/solution.hpp"

using namespace largesets;

namespace {

Coloring schreier_table(int N, const std::map<FinSet, long long>& overrides,
                        long long fallback_tag = 1000) {
    std::map<FinSet, long long> table;
    long long i = 0;
    for (const FinSet& s : DomainFamily::schreier().members_within(N)) {
        auto it = overrides.find(s);
        table.emplace(s, it != overrides.end() ? it->second : fallback_tag + i);
        ++i;
    }
    return Coloring::scalar_table(DomainFamily::schreier(), table, N);
}

Coloring schreier_min(int N) {
    std::map<FinSet, long long> table;
    for (const FinSet& s : DomainFamily::schreier().members_within(N))
        table.emplace(s, s.min());
    return Coloring::scalar_table(DomainFamily::schreier(), table, N);
}

}  // namespace

TEST_CASE("red_ts_from_fs worked example and rejections") {
    const Coloring f = schreier_min(8);
    const auto w = red_ts_from_fs(f, FinSet::of({1, 2, 3, 4}), FinSet::of({4}));
    CHECK(w.H == FinSet::of({1, 2, 3}));
    CHECK(w.color == 4);
    CHECK(is_thin_for(f, w.H, w.color));

    // A not free: f({1,2}) = 3 lands inside A
    const Coloring bad = schreier_table(8, {{FinSet::of({1, 2}), 3}});
    CHECK_THROWS_AS(red_ts_from_fs(bad, FinSet::of({1, 2, 3}), FinSet::of({3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(red_ts_from_fs(f, FinSet::of({1, 2}), FinSet()), std::invalid_argument);
    CHECK_THROWS_AS(red_ts_from_fs(f, FinSet::of({1, 2}), FinSet::of({1, 2})),
                    std::invalid_argument);
}

TEST_CASE("fs_from_rt recursion cases") {
    const int N = 8;
    // f(s o- 1) = s_i - 1 for some i < s0  =>  0
    {
        // s = {2,3,5}: s o- 1 = {1,2}; pick f({1,2}) = s_1 - 1 = 2
        const Coloring f = schreier_table(N, {{FinSet::of({1, 2}), 2}});
        const Coloring g = red_fs_from_rt(f, N);
        CHECK(g.eval(FinSet::of({2, 3, 5})) == 0);
    }
    // f(s o- 1) >= s_{s0}  =>  1 (the catch-all)
    {
        const Coloring f = schreier_table(N, {{FinSet::of({1, 2}), 7}});
        const Coloring g = red_fs_from_rt(f, N);
        CHECK(g.eval(FinSet::of({2, 3, 5})) == 1);
    }
    // the catch-all also owns f(s o- 1) = s_{s0} - 1
    {
        const Coloring f = schreier_table(N, {{FinSet::of({1, 2}), 4}});
        const Coloring g = red_fs_from_rt(f, N);
        CHECK(g.eval(FinSet::of({2, 3, 5})) == 1);
    }
    // interior interval: f(s o- 1) in (s_0 - 1, s_1 - 1) = (1, 2) empty for {2,3,5};
    // use s = {2,4,6}: intervals (1,3) and (3,5)
    {
        const Coloring f = schreier_table(N, {{FinSet::of({1, 3}), 2}});
        const Coloring g = red_fs_from_rt(f, N);
        // recursion target {2,3,6}: its own step decides the value
        const long long inner = g.eval(FinSet::of({2, 3, 6}));
        CHECK(g.eval(FinSet::of({2, 4, 6})) == 1 - inner);
    }
    // below s0 - 1: s = {2,3,5} with f({1,2}) = 0 recurses on {1,3}
    {
        const Coloring f = schreier_table(N, {{FinSet::of({1, 2}), 0}, {FinSet::of({0}), 0}});
        const Coloring g = red_fs_from_rt(f, N);
        // {1,3}: s o- 1 = {0}, f = 0 = s_0 - 1  =>  g({1,3}) = 0
        CHECK(g.eval(FinSet::of({1, 3})) == 0);
        CHECK(g.eval(FinSet::of({2, 3, 5})) == 1);
    }
}

TEST_CASE("fs_from_rt memo agrees with the straight-line recursion") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        SplitMix64 rng(seed);
        const int N = 10;
        const Coloring f = random_scalar(rng, DomainFamily::schreier(), N, 4, 0);
        const Coloring g = red_fs_from_rt(f, N);
        for (const FinSet& s : DomainFamily::positive_schreier().members_within(N))
            CHECK(g.eval(s) == fs_from_rt_naive(f, s));
    }
}

TEST_CASE("red_rrt_from_rt worked example") {
    // f({0}) = 7, f({1,2}) = 7, f({1,3}) = 4, rest fresh
    const Coloring f = schreier_table(
        5, {{FinSet::of({0}), 7}, {FinSet::of({1, 2}), 7}, {FinSet::of({1, 3}), 4}});
    const Coloring g = red_rrt_from_rt(f, 2, 5);
    CHECK(g.eval(FinSet::of({0})) == 0);
    CHECK(g.eval(FinSet::of({1, 2})) == 1);
    CHECK(g.eval(FinSet::of({1, 3})) == 0);

    SplitMix64 rng(1);
    const Coloring inj = random_k_bounded(rng, DomainFamily::schreier(), 7, 1);
    const Coloring ginj = red_rrt_from_rt(inj, 2, 7);
    for (const FinSet& s : DomainFamily::schreier().members_within(7))
        CHECK(ginj.eval(s) == 0);

    const Coloring not_bounded = schreier_table(
        6, {{FinSet::of({0}), 7}, {FinSet::of({1, 2}), 7}, {FinSet::of({1, 3}), 7}});
    CHECK_THROWS_AS(red_rrt_from_rt(not_bounded, 2, 6), std::invalid_argument);
}

TEST_CASE("red_rrt2_from_fs worked example") {
    const Coloring f = schreier_table(5, {{FinSet::of({0}), 5}, {FinSet::of({1, 2}), 5}});
    const Coloring g = red_rrt2_from_fs(f, 5);
    CHECK(g.eval(FinSet::of({0})) == 0);
    CHECK(g.eval(FinSet::of({1, 2})) == 0);  // min({0} \ {1,2}) = 0
    CHECK(g.eval(FinSet::of({1, 3})) == 0);  // no earlier twin
}

TEST_CASE("red_ts_from_rrt_omegaplus1 matches pairs below min s") {
    const int N = 8;
    const long long code01 = (long long)cantor_pair(0, 1);
    const Coloring f = schreier_table(N, {{FinSet::of({2, 3, 5}), code01}});
    const Coloring g = red_ts_from_rrt_omegaplus1(f, N);
    CHECK(g.eval(FinSet::of({0, 2, 3, 5})) == g.eval(FinSet::of({1, 2, 3, 5})));
    // an unmatched prefix stays fresh
    CHECK(g.eval(FinSet::of({0, 1, 4})) != g.eval(FinSet::of({0, 1, 5})));
    CHECK(validate_k_bounded(g, 2, N).ok);

    const auto w = backward_ts_from_rrt(FinSet::of({0, 1, 6, 7}), 0, 1);
    CHECK(w.H == FinSet::of({6, 7}));
    CHECK(w.color == code01);
}

TEST_CASE("red_rrt_dim_embed collides exactly on shared tails") {
    const int N = 6, n = 1;
    std::map<FinSet, long long> table;
    long long fresh = 100;
    for (const FinSet& u : DomainFamily::fixed_tuples(n).members_within(N))
        table.emplace(u, (u == FinSet::of({2}) || u == FinSet::of({3})) ? 9 : fresh++);
    const Coloring f = Coloring::scalar_table(DomainFamily::fixed_tuples(n), table, N);
    const Coloring g = red_rrt_dim_embed(f, 2, n, N);
    CHECK(g.eval(FinSet::of({1, 2})) == g.eval(FinSet::of({1, 3})));
    CHECK(g.eval(FinSet::of({2, 3, 4})) != g.eval(FinSet::of({2, 3, 5})));  // tails differ
    CHECK(validate_k_bounded(g, 2, N).ok);
    CHECK(backward_dim_embed(FinSet::of({0, 1, 4, 5}), 1) == FinSet::of({4, 5}));
}

TEST_CASE("red_progressive_from_rrt worked example") {
    const Coloring f = schreier_table(6, {{FinSet::of({1, 2}), 5}, {FinSet::of({1, 3}), 5}});
    const Coloring g = red_progressive_from_rrt(f, 2, 6);
    CHECK(g.eval_set(FinSet::of({1, 2})).contains(3));  // min({1,3} \ {1,2})
    CHECK(g.eval_set(FinSet::of({1, 3})).empty());      // no later twin
    CHECK(validate_progressive(g, 6).ok);
    CHECK(validate_constrained(g, BoundFn::constant(2), 6).ok);

    SplitMix64 rng(2);
    const Coloring inj = random_k_bounded(rng, DomainFamily::schreier(), 6, 1);
    const Coloring ginj = red_progressive_from_rrt(inj, 2, 6);
    for (const FinSet& s : DomainFamily::schreier().members_within(6))
        CHECK(ginj.eval_set(s).empty());
}

TEST_CASE("red_ts_cofinite recodes the encode family") {
    const int N = 6;
    const Coloring f = schreier_table(N, {{FinSet::of({1, 2}), cofinite_encode(3, 5)},
                                          {FinSet::of({0}), 0}});
    const Coloring g = red_ts_cofinite(f, N);
    CHECK(g.eval(FinSet::of({1, 2})) == 3);
    CHECK(g.eval(FinSet::of({0})) == 0);  // 0 is outside the encode range
}

TEST_CASE("verify_reduction smoke runs stay clean") {
    for (const std::string& name : reduction_names()) {
        const VerifyReport report = verify_reduction(name, 3, 9, 4, 6, false);
        CHECK(report.checks_failed == 0);
        CHECK(report.trials == 6);
    }
}

TEST_CASE("corrupted transforms are detected") {
    for (const std::string& name : reduction_names()) {
        const VerifyReport report = verify_reduction(name, 3, 10, 5, 6, true);
        INFO(name);
        CHECK(report.checks_failed > 0);
        CHECK_FALSE(report.certificates.empty());
    }
}

TEST_CASE("table horizon mismatches are rejected, not silently verified") {
    const Coloring f = schreier_table(6, {});
    CHECK_THROWS_AS(red_rrt2_from_fs(f, 5), std::invalid_argument);
    CHECK_THROWS_AS(red_rrt_from_rt(f, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(red_progressive_from_rrt(f, 2, 5), std::invalid_argument);
}

TEST_CASE("unknown reduction names are rejected") {
    CHECK_THROWS_AS(verify_reduction("red_nonsense", 1, 8, 3, 1, false), std::invalid_argument);
}
