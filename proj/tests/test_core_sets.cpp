#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "largesets/fin_set.hpp"
#include "largesets/ordinal.hpp"

using namespace largesets;

TEST_CASE("FinSet rejects unsorted and duplicated input") {
    CHECK_THROWS_AS(FinSet::of({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FinSet::of({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FinSet::of({-1, 0}), std::invalid_argument);
    CHECK(FinSet::of({}) == FinSet());
    CHECK(FinSet::of({2, 3, 5}).size() == 3);
}

TEST_CASE("exact and plain omega-largeness") {
    CHECK(is_exactly_omega_large(FinSet::of({0})));
    CHECK(is_exactly_omega_large(FinSet::of({2, 3, 5})));
    CHECK_FALSE(is_exactly_omega_large(FinSet::of({1, 2, 3})));
    CHECK_FALSE(is_exactly_omega_large(FinSet()));

    CHECK(is_omega_large(FinSet::of({1, 2, 3})));
    CHECK_FALSE(is_omega_large(FinSet::of({3, 4})));
    CHECK(is_omega_large(FinSet::of({0})));
}

TEST_CASE("quasi parent") {
    CHECK(*quasi_parent(FinSet::of({3, 7})) == FinSet::of({2, 3, 7}));
    CHECK_FALSE(quasi_parent(FinSet::of({1, 5})).has_value());
    CHECK_FALSE(quasi_parent(FinSet()).has_value());
}

TEST_CASE("quasi parent round trip over the horizon") {
    for (const FinSet& t : enumerate_exactly_large(12)) {
        if (t.size() < 2) continue;
        const auto parent = quasi_parent(t.drop_min());
        REQUIRE(parent.has_value());
        CHECK(*parent == t);
    }
}

TEST_CASE("ominus_one") {
    CHECK(ominus_one(FinSet::of({2, 3, 5})) == FinSet::of({1, 2}));
    CHECK(ominus_one(FinSet::of({1, 4})) == FinSet::of({0}));
    CHECK_THROWS_AS(ominus_one(FinSet::of({0})), std::invalid_argument);
    CHECK_THROWS_AS(ominus_one(FinSet::of({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("ominus_one preserves exact largeness across the horizon") {
    for (int N = 2; N <= 14; ++N)
        for (const FinSet& s : enumerate_exactly_large(N))
            if (s.min() > 0) CHECK(is_exactly_omega_large(ominus_one(s)));
}

TEST_CASE("exactly omega-plus-one largeness") {
    CHECK(is_exactly_omega_plus_one_large(FinSet::of({0, 1, 3})));
    CHECK_FALSE(is_exactly_omega_plus_one_large(FinSet::of({2, 3, 5})));
    CHECK_FALSE(is_exactly_omega_plus_one_large(FinSet::of({5})));
}

TEST_CASE("lex_compare") {
    CHECK(lex_compare(FinSet::of({1, 2}), FinSet::of({1, 3})) == Ordering::Less);
    CHECK(lex_compare(FinSet::of({0}), FinSet::of({1, 2})) == Ordering::Less);
    CHECK(lex_compare(FinSet::of({1, 2}), FinSet::of({1, 2})) == Ordering::Equal);
    CHECK(lex_compare(FinSet::of({2, 3}), FinSet::of({1, 9})) == Ordering::Greater);
    CHECK_THROWS_AS(lex_compare(FinSet::of({1}), FinSet::of({1, 2})), std::invalid_argument);
}

namespace {

/// Independent oracle: filter the whole power set of [0,N).
std::vector<FinSet> brute_force_exactly_large(int N) {
    std::vector<FinSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
        const FinSet s = FinSet::from_mask(mask);
        if (!s.empty() && s.size() == 1 + s.min()) out.push_back(s);
    }
    std::sort(out.begin(), out.end(),
              [](const FinSet& a, const FinSet& b) { return lex_compare(a, b) == Ordering::Less; });
    return out;
}

}  // namespace

TEST_CASE("enumerate_exactly_large worked examples") {
    CHECK(enumerate_exactly_large(2) == std::vector<FinSet>{FinSet::of({0})});
    const auto five = enumerate_exactly_large(5);
    REQUIRE(five.size() == 5);
    CHECK(five[0] == FinSet::of({0}));
    CHECK(five[1] == FinSet::of({1, 2}));
    CHECK(five[2] == FinSet::of({1, 3}));
    CHECK(five[3] == FinSet::of({1, 4}));
    CHECK(five[4] == FinSet::of({2, 3, 4}));
    CHECK(enumerate_exactly_large(6).size() == 8);
}

TEST_CASE("enumerate_exactly_large equals the power-set filter up to 14") {
    for (int N = 1; N <= 14; ++N) {
        const auto fast = enumerate_exactly_large(N);
        const auto slow = brute_force_exactly_large(N);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    }
}

TEST_CASE("ordinal rank worked examples") {
    const BoundFn h = BoundFn::successor();
    const Ordinal a = ordinal_rank(FinSet::of({1, 3}), h);
    CHECK(a.terms == std::vector<std::pair<int, long long>>{{2, 1}, {1, 3}});
    CHECK(ordinal_rank(FinSet::of({0}), h).is_zero());
    const Ordinal c = ordinal_rank(FinSet::of({2, 3, 4}), h);
    CHECK(c.terms == std::vector<std::pair<int, long long>>{{3, 2}, {2, 3}, {1, 4}});
    CHECK_THROWS_AS(ordinal_rank(FinSet::of({1, 2, 3}), h), std::invalid_argument);
}

TEST_CASE("ord_compare worked examples") {
    const BoundFn h = BoundFn::successor();
    const Ordinal zero = Ordinal::zero();
    const Ordinal w2_2w = Ordinal::from_terms({{2, 1}, {1, 2}});
    const Ordinal w2_3w = Ordinal::from_terms({{2, 1}, {1, 3}});
    const Ordinal w3 = Ordinal::from_terms({{3, 1}});
    const Ordinal w2_9 = Ordinal::from_terms({{2, 9}});
    CHECK(ord_compare(zero, w2_2w) == Ordering::Less);
    CHECK(ord_compare(w2_2w, w2_3w) == Ordering::Less);
    CHECK(ord_compare(w3, w2_9) == Ordering::Greater);
    CHECK(ord_compare(w2_2w, w2_2w) == Ordering::Equal);
    (void)h;
}

TEST_CASE("lex order agrees with ordinal rank on the Schreier barrier") {
    const BoundFn h = BoundFn::successor();
    for (int N = 2; N <= 14; ++N) {
        const auto members = enumerate_exactly_large(N);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (i == j) continue;
                const bool lex_less = lex_compare(members[i], members[j]) == Ordering::Less;
                const bool ord_less =
                    ord_compare(ordinal_rank(members[i], h), ordinal_rank(members[j], h)) ==
                    Ordering::Less;
                CHECK(lex_less == ord_less);
            }
        }
    }
}
