#pragma once

// Seeded generator for preserve-b suite instances, shared between the
// forcing unit tests and the acceptance run.

#include <optional>
#include <vector>

#include "largesets/forcing.hpp"
#include "largesets/generators.hpp"
#include "largesets/search.hpp"
#include "largesets/solution.hpp"

namespace largesets::testing {

struct PreserveBInstance {
    Coloring f;
    BoundFn b;
    FinSet sigma, X, Y;
    int k = 0;
    int N = 0;
    std::vector<FinSet> rhos;  // limit-free blocks to try
};

/// Builds an instance satisfying every precondition of the preservation
/// lemma: (f, sigma, X) a condition, Y = X above k stabilizing [0,k],
/// rho candidates free for the limit coloring. Colors that land in the
/// stem [0,k] are drawn from one small pool per stem part, which keeps
/// the Catalan trace bounds comfortable.
inline std::optional<PreserveBInstance> make_preserve_b_instance(std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int N = 11;
    const BoundFn h = rng.coin() ? BoundFn::constant(2) : BoundFn::constant(3);
    const BoundFn b = rng.coin() ? BoundFn::constant(1) : BoundFn::constant(2);
    const int sigma_size = static_cast<int>(rng.below(3));
    std::vector<int> sig;
    for (int i = 0; i < sigma_size; ++i) sig.push_back(i);
    const FinSet sigma(sig);
    const int k = sigma_size + 1 + static_cast<int>(rng.below(2));  // k <= 4
    if (k > 4) return std::nullopt;

    // X: a couple of elements between sigma and k, everything past k
    std::vector<int> xs;
    for (int v = sigma_size; v < k; ++v)
        if (rng.coin() || v == sigma_size) xs.push_back(v);
    for (int v = k + 1; v < N; ++v) xs.push_back(v);
    const FinSet X(xs);
    const FinSet Y = X.above(k);

    // one small trace pool per nonempty stem part
    const DomainFamily dom = DomainFamily::bounded_depth(h);
    std::map<FinSet, FinSet> pools;
    const FinSet stem_universe = interval_universe(0, k + 1);
    for (const FinSet& t : dom.members_within(k + 1)) {
        if (t.empty()) continue;
        std::vector<int> pool;
        for (int tries = 0; tries < 8 && static_cast<int>(pool.size()) < b(t.min()); ++tries) {
            const int v = rng.range(t.min(), k);
            if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
        }
        std::sort(pool.begin(), pool.end());
        pools.emplace(t, FinSet(pool));
    }

    std::map<FinSet, FinSet> table;
    for (const FinSet& s : dom.members_within(N)) {
        if (s.empty()) {
            table.emplace(s, FinSet());
            continue;
        }
        const int budget = b(s.min());
        std::vector<int> vals;
        const FinSet t = s.intersect(stem_universe);
        if (!t.empty() && rng.coin()) {
            const FinSet& pool = pools.at(t);
            if (!pool.empty()) vals.push_back(pool[static_cast<int>(rng.below(pool.size()))]);
        }
        while (static_cast<int>(vals.size()) < budget && rng.coin()) {
            const int lo = std::max(s.min(), k + 1);
            if (lo >= N) break;
            const int v = rng.range(lo, N - 1);
            if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
        }
        std::sort(vals.begin(), vals.end());
        FinSet value{std::vector<int>(vals.begin(), vals.end())};
        // enforce (a) and (b) of the condition by trimming traces
        if (sigma.contains(s.min()))
            value = value.set_minus(sigma.set_union(X).set_minus(s));
        else
            value = value.set_minus(sigma.set_minus(s));
        table.emplace(s, std::move(value));
    }
    ColoringMeta meta;
    meta.progressive = true;
    PreserveBInstance inst{Coloring::set_table(dom, std::move(table), N, meta),
                           b,
                           sigma,
                           X,
                           Y,
                           k,
                           N,
                           {}};

    if (!check_condition(inst.f, inst.b, inst.sigma, inst.X, N).ok()) return std::nullopt;
    const StabilizationWitness witness = compute_stabilization(k, Y, inst.f, inst.b, N);
    if (!witness.valid) return std::nullopt;
    const Coloring limit = limit_coloring(k, witness, h);

    const FinSet below_k = X.below(k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << below_k.size()); ++mask) {
        std::vector<int> rho;
        for (int i = 0; i < below_k.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) rho.push_back(below_k[i]);
        const FinSet r(rho);
        if (is_free_setvalued(limit, r)) inst.rhos.push_back(r);
    }
    if (inst.rhos.empty()) return std::nullopt;
    return inst;
}

}  // namespace largesets::testing
