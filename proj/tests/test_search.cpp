#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "largesets/gadgets.hpp"
#include "largesets/generators.hpp"
#include "largesets/search.hpp"
#include "largesets/solution.hpp"

using namespace largesets;

namespace {

Coloring schreier_min() {
    return Coloring::scalar(DomainFamily::schreier(),
                            [](const FinSet& s) { return (long long)s.min(); });
}

Coloring schreier_const(long long c) {
    return Coloring::scalar(DomainFamily::schreier(), [c](const FinSet&) { return c; });
}

}  // namespace

TEST_CASE("homogeneity") {
    CHECK(is_homogeneous(schreier_const(4), FinSet::of({0, 1, 2})));
    CHECK(is_homogeneous(schreier_min(), FinSet::of({1, 2, 3})));
    const Coloring parity = Coloring::scalar(
        DomainFamily::all_finite(), [](const FinSet& s) { return (long long)(s.size() % 2); });
    CHECK_FALSE(is_homogeneous(parity, FinSet::of({0, 1, 2})));
    // vacuous homogeneity is rejected: {3,4} holds no exactly large subset
    CHECK_THROWS_AS(is_homogeneous(schreier_min(), FinSet::of({3, 4})), std::invalid_argument);
}

TEST_CASE("scalar freeness") {
    CHECK(is_free_scalar(schreier_min(), FinSet::of({1, 2, 3, 5})));
    const Coloring point3 = Coloring::scalar(DomainFamily::schreier(), [](const FinSet& s) {
        return s == FinSet::of({1, 2}) ? 3LL : 99LL;
    });
    CHECK_FALSE(is_free_scalar(point3, FinSet::of({1, 2, 3})));
    CHECK(is_free_scalar(schreier_const(1000), FinSet::of({0, 1, 2, 3})));
}

TEST_CASE("set-valued freeness") {
    const Coloring empty = Coloring::set_valued(DomainFamily::fixed_tuples(1),
                                                [](const FinSet&) { return FinSet(); });
    CHECK(is_free_setvalued(empty, FinSet::of({0, 3, 9})));
    const Coloring taking5 = Coloring::set_valued(
        DomainFamily::fixed_tuples(1), [](const FinSet& s) {
            return s == FinSet::of({2}) ? FinSet::of({5}) : FinSet();
        });
    CHECK_FALSE(is_free_setvalued(taking5, FinSet::of({2, 5})));
    CHECK(is_free_setvalued(taking5, FinSet::of({2, 6})));
}

TEST_CASE("thinness and rainbows") {
    CHECK(is_thin_for(schreier_const(0), FinSet::of({0, 1, 2}), 1));
    CHECK_FALSE(is_thin_for(schreier_const(0), FinSet::of({0, 1, 2}), 0));
    const Coloring size_color = cex_ts_all_finite();
    CHECK(is_thin_for(size_color, FinSet::of({0, 1, 2}), 5));

    CHECK_FALSE(is_rainbow(schreier_const(0), FinSet::of({1, 2, 3})));
    CHECK(is_rainbow(schreier_min(), FinSet::of({3, 4})));  // no members at all
}

TEST_CASE("free iff punctured-thin, exhaustively at small N") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SplitMix64 rng(seed);
        const int N = 7;
        const Coloring f = random_scalar(rng, DomainFamily::schreier(), N, N + 2, 40);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << N); ++mask) {
            const FinSet H = FinSet::from_mask(mask);
            bool punctured = true;
            for (int x : H)
                if (!is_thin_for(f, H.set_minus(FinSet::of({x})), x)) punctured = false;
            CHECK(is_free_scalar(f, H) == punctured);
        }
    }
}

TEST_CASE("free sets shed blocks into thin sets, exhaustively at N = 8") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        SplitMix64 rng(seed);
        const int N = 8;
        const Coloring f = random_scalar(rng, DomainFamily::schreier(), N, N, 50);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << N); ++mask) {
            const FinSet A = FinSet::from_mask(mask);
            if (!is_free_scalar(f, A)) continue;
            for (std::uint64_t bmask = mask; bmask != 0; bmask = (bmask - 1) & mask) {
                const FinSet B = FinSet::from_mask(bmask);
                if (A.set_minus(B).empty()) continue;
                for (int n : B) CHECK(is_thin_for(f, A.set_minus(B), n));
            }
        }
    }
}

TEST_CASE("find_solution worked examples") {
    CHECK(*find_solution(schreier_const(7), SolutionKind::homogeneous(), 3, 6) ==
          FinSet::of({0, 1, 2}));

    // colors 0..m all occur on any H of size m, so no thin witness below m
    const Coloring size_color = cex_ts_all_finite();
    for (int m = 1; m <= 5; ++m)
        CHECK_FALSE(find_solution(size_color, SolutionKind::thin(m), m, 9).has_value());
}

TEST_CASE("injective coloring: the whole interval is the first rainbow") {
    SplitMix64 rng(2);
    const Coloring f = random_k_bounded(rng, DomainFamily::schreier(), 8, 1);
    CHECK(*find_solution(f, SolutionKind::rainbow(), 8, 8) == interval_universe(0, 8));
}

TEST_CASE("serial and parallel kernels return identical results") {
    SplitMix64 rng(5);
    const int N = 11;
    const Coloring f = random_k_bounded(rng, DomainFamily::schreier(), N, 2);
    const Coloring g = random_scalar(rng, DomainFamily::schreier(), N, N, 60);
    const FinSet universe = interval_universe(0, N);
    for (int m = 2; m <= 6; ++m) {
        for (const auto& kind :
             {SolutionKind::rainbow(), SolutionKind::homogeneous(), SolutionKind::thin_for(3)}) {
            CHECK(find_solution_serial(f, kind, m, universe) ==
                  find_solution_parallel(f, kind, m, universe));
        }
        CHECK(find_solution_serial(g, SolutionKind::free_scalar(), m, universe) ==
              find_solution_parallel(g, SolutionKind::free_scalar(), m, universe));
        CHECK(find_all_solutions_serial(g, SolutionKind::free_scalar(), m, universe) ==
              find_all_solutions(g, SolutionKind::free_scalar(), m, universe));
    }
}

TEST_CASE("find_solution returns the least witness, against a naive rescan") {
    SplitMix64 rng(6);
    const int N = 9, m = 4;
    const FinSet universe = interval_universe(0, N);
    for (int trial = 0; trial < 10; ++trial) {
        const Coloring f = random_scalar(rng, DomainFamily::schreier(), N, N, 50);
        const auto fast = find_solution(f, SolutionKind::free_scalar(), m, universe);
        // naive: scan every mask of popcount m in value order, lex-least first
        std::optional<FinSet> naive;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
            if (__builtin_popcountll(mask) != m) continue;
            const FinSet H = FinSet::from_mask(mask);
            if (!is_free_scalar(f, H)) continue;
            if (!naive || lex_compare(H, *naive) == Ordering::Less) naive = H;
        }
        CHECK(fast == naive);
    }
}

TEST_CASE("direct predicates agree with the masked kernels on every kind") {
    SplitMix64 rng(12);
    const int N = 9;
    const std::vector<Coloring> colorings = {
        random_k_bounded(rng, DomainFamily::schreier(), N, 2),
        random_scalar(rng, DomainFamily::schreier(), N, N, 50),
        random_scalar(rng, DomainFamily::all_finite(), N, 6, 0),
        cex_rrt_all_finite(N),
    };
    const std::vector<SolutionKind> kinds = {
        SolutionKind::homogeneous(), SolutionKind::free_scalar(), SolutionKind::rainbow(),
        SolutionKind::thin_for(2),   SolutionKind::thin(4),
    };
    for (const Coloring& f : colorings) {
        const MaskedColoring mc = MaskedColoring::build(f, N);
        for (std::uint64_t H = 0; H < (std::uint64_t{1} << N); H += 3) {
            const FinSet Hs = FinSet::from_mask(H);
            for (const SolutionKind& kind : kinds)
                CHECK(satisfies(f, kind, Hs) == satisfies_masked(mc, kind, H));
        }
    }
    // set-valued route
    const Coloring g = random_progressive(rng, DomainFamily::bounded_depth(BoundFn::constant(2)),
                                          N, BoundFn::constant(2));
    const MaskedColoring mg = MaskedColoring::build(g, N);
    for (std::uint64_t H = 0; H < (std::uint64_t{1} << N); H += 5) {
        const FinSet Hs = FinSet::from_mask(H);
        CHECK(satisfies(g, SolutionKind::free_set_valued(), Hs) ==
              satisfies_masked(mg, SolutionKind::free_set_valued(), H));
    }
}

TEST_CASE("size-zero searches follow the vacuous/existential split") {
    const Coloring constant =
        Coloring::scalar(DomainFamily::schreier(), [](const FinSet&) { return 3LL; });
    // freeness over an empty H is vacuous
    CHECK(*find_solution(constant, SolutionKind::free_scalar(), 0, 6) == FinSet());
    CHECK(*find_solution(constant, SolutionKind::rainbow(), 0, 6) == FinSet());
    // homogeneity asserts a member exists, so the empty set never qualifies
    CHECK_FALSE(find_solution(constant, SolutionKind::homogeneous(), 0, 6).has_value());
    // oversized requests have no candidates at all
    CHECK_FALSE(find_solution(constant, SolutionKind::rainbow(), 7, 6).has_value());
}
