#include "largesets/generators.hpp"

#include <algorithm>
#include <map>

namespace largesets {

Coloring random_scalar(SplitMix64& rng, DomainFamily dom, int N, int range,
                       int in_set_bias_pct) {
    std::map<FinSet, long long> table;
    for (const FinSet& s : dom.members_within(N)) {
        long long c;
        if (!s.empty() && static_cast<int>(rng.below(100)) < in_set_bias_pct)
            c = s[rng.range(0, s.size() - 1)];
        else
            c = static_cast<long long>(rng.below(static_cast<std::uint64_t>(range)));
        table.emplace(s, c);
    }
    return Coloring::scalar_table(std::move(dom), std::move(table), N);
}

Coloring random_k_bounded(SplitMix64& rng, DomainFamily dom, int N, int k) {
    std::vector<FinSet> members = dom.members_within(N);
    // Seeded shuffle, then chop into blocks of random size <= k.
    for (std::size_t i = members.size(); i > 1; --i)
        std::swap(members[i - 1], members[rng.below(i)]);
    std::map<FinSet, long long> table;
    long long color = 0;
    std::size_t i = 0;
    while (i < members.size()) {
        const std::size_t block = 1 + rng.below(static_cast<std::uint64_t>(k));
        for (std::size_t j = i; j < std::min(members.size(), i + block); ++j)
            table.emplace(members[j], color);
        ++color;
        i += block;
    }
    ColoringMeta meta;
    meta.k_bounded = k;
    return Coloring::scalar_table(std::move(dom), std::move(table), N, meta);
}

Coloring random_progressive(SplitMix64& rng, DomainFamily dom, int N, const BoundFn& b) {
    std::map<FinSet, FinSet> table;
    for (const FinSet& s : dom.members_within(N)) {
        if (s.empty()) {
            table.emplace(s, FinSet());
            continue;
        }
        const int cap = b(s.min());
        const int want = cap > 0 ? static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 1)) : 0;
        std::vector<int> vals;
        for (int t = 0; t < want * 3 && static_cast<int>(vals.size()) < want; ++t) {
            const int v = rng.range(s.min(), N - 1);
            if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
        }
        std::sort(vals.begin(), vals.end());
        table.emplace(s, FinSet(std::move(vals)));
    }
    ColoringMeta meta;
    meta.progressive = true;
    return Coloring::set_table(std::move(dom), std::move(table), N, meta);
}

EnumerationSchedule random_schedule(SplitMix64& rng, int count, int element_bound,
                                    int stage_bound) {
    std::vector<int> pool;
    for (int e = 0; e < element_bound; ++e) pool.push_back(e);
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);
    std::vector<std::pair<int, int>> events;
    for (int i = 0; i < std::min<int>(count, element_bound); ++i)
        events.emplace_back(pool[static_cast<std::size_t>(i)], rng.range(1, stage_bound));
    return EnumerationSchedule(std::move(events));
}

std::vector<EnumerationSchedule> schedule_corpus(std::uint64_t seed, int random_count) {
    std::vector<EnumerationSchedule> out;
    out.emplace_back();                                                      // empty
    out.emplace_back(std::vector<std::pair<int, int>>{{0, 3}});             // single event
    out.emplace_back(std::vector<std::pair<int, int>>{{2, 5}, {0, 1}});     // the worked example
    out.emplace_back(std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});  // staircase
    out.emplace_back(std::vector<std::pair<int, int>>{{5, 9}, {1, 9}, {3, 2}});
    SplitMix64 rng(seed);
    for (int i = 0; i < random_count; ++i)
        out.push_back(random_schedule(rng, 2 + static_cast<int>(rng.below(4)), 8, 8));
    return out;
}

std::vector<Coloring> random_bounded_family(SplitMix64& rng, int max_arity, int N) {
    std::vector<Coloring> family;
    for (int n = 0; n <= max_arity; ++n)
        family.push_back(random_k_bounded(rng, DomainFamily::fixed_tuples(n), N, 2));
    return family;
}

}  // namespace largesets
