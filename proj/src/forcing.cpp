#include "largesets/forcing.hpp"

#include <algorithm>
#include <stdexcept>

#include "largesets/gadgets.hpp"
#include "largesets/search.hpp"
#include "largesets/solution.hpp"

namespace largesets {

namespace {

void require_bounded_domain(const Coloring& f, const char* who) {
    if (!f.is_set_valued() || f.domain().kind() != DomainKind::BoundedDepth)
        throw std::invalid_argument(std::string(who) +
                                    ": set-valued coloring over a bounded-depth family required");
}

/// Domain members contained in `ground`, within [0,N).
std::vector<FinSet> members_inside(const Coloring& f, const FinSet& ground, int N) {
    std::vector<FinSet> out;
    const int n = ground.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> xs;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) xs.push_back(ground[i]);
        if (!xs.empty() && xs.back() >= N) continue;
        FinSet s(std::move(xs));
        if (f.domain().member(s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ConditionReport check_condition(const Coloring& f, const BoundFn& b_f, const FinSet& sigma,
                                const FinSet& X, int N) {
    require_bounded_domain(f, "check_condition");
    if (!sigma.empty() && !X.empty() && sigma.max() >= X.min())
        throw std::invalid_argument("check_condition: max sigma must be below min X");
    if (const auto chk = validate_progressive(f, N); !chk.ok)
        throw std::invalid_argument("check_condition: f is not progressive within horizon");
    if (const auto chk = validate_constrained(f, b_f, N); !chk.ok)
        throw std::invalid_argument("check_condition: f is not b_f-constrained within horizon");

    ConditionReport report;
    const FinSet ground = sigma.set_union(X);
    for (const FinSet& s : members_inside(f, ground, N)) {
        if (s.empty()) continue;
        const FinSet v = f.eval_set(s);
        if (sigma.contains(s.min())) {
            if (!v.intersect(X).subset_of(s)) {
                report.ok_a = false;
                report.violations.push_back({s, "a"});
            }
        }
        if (!v.intersect(sigma).subset_of(s)) {
            report.ok_b = false;
            report.violations.push_back({s, "b"});
        }
    }
    return report;
}

StabilizationWitness compute_stabilization(int k, const FinSet& X, const Coloring& f,
                                           const BoundFn& b_f, int N) {
    require_bounded_domain(f, "compute_stabilization");
    const BoundFn& h = f.domain().depth_bound();
    StabilizationWitness witness;
    witness.k = k;

    const FinSet stem = interval_universe(0, k + 1);
    for (const FinSet& t : members_inside(f, stem, N)) {
        if (t.empty()) continue;
        const int max_n = h(t.min()) - t.size();
        for (int n = 0; n <= max_n; ++n) {
            // I_{t,n} = union over u in [X]^n above t of f(t.u) /\ [0,k]
            FinSet trace;
            const std::vector<int>& xs = X.elements();
            std::vector<int> idx(static_cast<std::size_t>(n));
            // iterate n-combinations of X's elements above max t
            std::vector<int> pool;
            for (int x : xs)
                if (x > t.max() && x < N) pool.push_back(x);
            if (n > static_cast<int>(pool.size())) {
                witness.traces.emplace(std::make_pair(t, n), trace);
                continue;
            }
            for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                std::vector<int> u = t.elements();
                for (int i : idx) u.push_back(pool[static_cast<std::size_t>(i)]);
                const FinSet s(std::move(u));
                trace = trace.set_union(f.eval_set(s).intersect(stem));
                if (n == 0) break;
                int j = n - 1;
                while (j >= 0 && idx[static_cast<std::size_t>(j)] ==
                                     static_cast<int>(pool.size()) - n + j)
                    --j;
                if (j < 0) break;
                ++idx[static_cast<std::size_t>(j)];
                for (int q = j + 1; q < n; ++q)
                    idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
            }
            const long long cap =
                static_cast<long long>(b_f(t.min())) * static_cast<long long>(catalan(n));
            if (trace.size() > cap) {
                witness.valid = false;
                witness.violations.emplace_back(t, n);
            }
            witness.traces.emplace(std::make_pair(t, n), std::move(trace));
        }
    }
    return witness;
}

Coloring limit_coloring(int k, const StabilizationWitness& witness, const BoundFn& h) {
    if (!witness.valid)
        throw std::invalid_argument("limit_coloring: witness cardinality bounds violated");
    const DomainFamily dom = DomainFamily::bounded_depth(h);
    std::map<FinSet, FinSet> table;
    for (const FinSet& t : dom.members_within(k + 1)) {
        if (t.empty()) {
            table.emplace(t, FinSet());
            continue;
        }
        FinSet value;
        const int max_n = h(t.min()) - t.size();
        for (int n = 0; n <= max_n; ++n) {
            auto it = witness.traces.find(std::make_pair(t, n));
            if (it != witness.traces.end()) value = value.set_union(it->second);
        }
        table.emplace(t, std::move(value));
    }
    ColoringMeta meta;
    meta.progressive = true;
    return Coloring::set_table(dom, std::move(table), k + 1, meta);
}

long long b_plus(const BoundFn& b, const BoundFn& h, int m) {
    long long acc = 0;
    for (int n = 0; n <= h(m); ++n)
        acc += static_cast<long long>(b(m)) * static_cast<long long>(catalan(n));
    return acc;
}

BoundFn b_plus_fn(const BoundFn& b, const BoundFn& h) {
    return BoundFn{"bplus(" + b.name + "," + h.name + ")",
                   [b, h](int m) { return static_cast<int>(b_plus(b, h, m)); }};
}

PreserveBResult verify_preserving_b(const Coloring& f, const BoundFn& b_f, const FinSet& sigma,
                                    const FinSet& X, const FinSet& Y, int k, const FinSet& rho,
                                    int N) {
    require_bounded_domain(f, "verify_preserving_b");
    if (!Y.subset_of(X))
        throw std::invalid_argument("verify_preserving_b: Y must be a subset of X");
    if (!Y.empty() && Y.min() <= k)
        throw std::invalid_argument("verify_preserving_b: Y must lie above the stem [0,k]");
    if (!rho.subset_of(X) || (!rho.empty() && rho.max() >= k))
        throw std::invalid_argument("verify_preserving_b: rho must lie in X below k");
    if (const auto cond = check_condition(f, b_f, sigma, X, N); !cond.ok())
        throw std::invalid_argument("verify_preserving_b: (f, sigma, X) is not a condition");

    const StabilizationWitness witness = compute_stabilization(k, Y, f, b_f, N);
    if (!witness.valid)
        throw std::invalid_argument("verify_preserving_b: Y does not stabilize [0,k]");
    const Coloring limit = limit_coloring(k, witness, f.domain().depth_bound());
    if (!is_free_setvalued(limit, rho))
        throw std::invalid_argument("verify_preserving_b: rho is not free for the limit coloring");

    // Property (b) for (f, sigma u rho, Y), exhaustively within [0,N).
    PreserveBResult result;
    const FinSet stem = sigma.set_union(rho);
    const FinSet ground = stem.set_union(Y);
    for (const FinSet& s : members_inside(f, ground, N)) {
        if (s.empty()) continue;
        if (!f.eval_set(s).intersect(stem).subset_of(s)) {
            result.ok = false;
            result.violations.push_back({s, "b"});
        }
    }
    return result;
}

bool Phi::eval(const FinSet& s) const {
    switch (kind) {
        case Kind::True: return true;
        case Kind::False: return false;
        case Kind::MinSize: return s.size() >= param;
        case Kind::Contains: return s.contains(param);
    }
    return false;
}

std::string Phi::describe() const {
    switch (kind) {
        case Kind::True: return "true";
        case Kind::False: return "false";
        case Kind::MinSize: return "min-size:" + std::to_string(param);
        case Kind::Contains: return "contains:" + std::to_string(param);
    }
    return "?";
}

Phi Phi::parse(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "true") return always();
    if (kind == "false") return never();
    if (kind == "min-size") return min_size(j.at("param").get<int>());
    if (kind == "contains") return contains(j.at("param").get<int>());
    throw std::invalid_argument("Phi::parse: unknown kind '" + kind + "'");
}

Json ForcingAnswer::to_json() const {
    Json j;
    j["value"] = value;
    j["status"] = sampled ? "sampled" : (exceeded_budget ? "budget-exceeded" : "verified");
    j["adversaries"] = adversaries;
    j["space_size"] = space_size;
    if (counterexample) j["counterexample"] = *counterexample;
    return j;
}

namespace {

struct AdversarySpace {
    std::vector<FinSet> stems;                  // nonempty domain members of [0,k]
    std::vector<std::vector<FinSet>> choices;   // per stem: candidate values
};

AdversarySpace build_space(const BoundFn& h, const BoundFn& b_plus_bound, int k) {
    AdversarySpace space;
    for (const FinSet& t : DomainFamily::bounded_depth(h).members_within(k + 1)) {
        if (t.empty()) continue;
        std::vector<FinSet> opts;
        // progressive values: subsets of [min t, k] of size <= b+(min t)
        std::vector<int> pool;
        for (int v = t.min(); v <= k; ++v) pool.push_back(v);
        const int cap = static_cast<int>(
            std::min<long long>(b_plus_bound(t.min()), static_cast<long long>(pool.size())));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
            if (__builtin_popcountll(mask) > cap) continue;
            std::vector<int> xs;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (mask & (std::uint64_t{1} << i)) xs.push_back(pool[i]);
            opts.emplace_back(std::move(xs));
        }
        space.stems.push_back(t);
        space.choices.push_back(std::move(opts));
    }
    return space;
}

/// Is there a g-free rho inside Xk with phi(sigma u rho)? g is given as a
/// choice assignment over the space's stems.
bool adversary_defeated(const AdversarySpace& space, const std::vector<std::size_t>& pick,
                        const FinSet& sigma, const FinSet& Xk, const Phi& phi) {
    const int n = Xk.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> xs;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) xs.push_back(Xk[i]);
        const FinSet rho(std::move(xs));
        if (!phi.eval(sigma.set_union(rho))) continue;
        bool free = true;
        for (std::size_t i = 0; i < space.stems.size() && free; ++i) {
            const FinSet& t = space.stems[i];
            if (!t.subset_of(rho)) continue;
            if (!space.choices[i][pick[i]].intersect(rho).subset_of(t)) free = false;
        }
        if (free) return true;
    }
    return false;
}

Json adversary_json(const AdversarySpace& space, const std::vector<std::size_t>& pick) {
    Json g = Json::array();
    for (std::size_t i = 0; i < space.stems.size(); ++i)
        g.push_back(Json{{"s", space.stems[i].elements()},
                         {"colors", space.choices[i][pick[i]].elements()}});
    return g;
}

}  // namespace

ForcingAnswer forcing_question_finite(const BoundFn& h, const BoundFn& b_plus_bound,
                                      const FinSet& sigma, const FinSet& X, const Phi& phi,
                                      int k, long long max_space,
                                      std::optional<long long> sample_count,
                                      std::uint64_t sample_seed) {
    const AdversarySpace space = build_space(h, b_plus_bound, k);
    const FinSet Xk = X.below(k);

    ForcingAnswer answer;
    answer.space_size = 1;
    for (const auto& opts : space.choices)
        answer.space_size *= static_cast<double>(opts.size());

    const bool exhaustive = answer.space_size <= static_cast<double>(max_space);
    if (!exhaustive && !sample_count) {
        answer.exceeded_budget = true;
        return answer;
    }

    std::vector<std::size_t> pick(space.stems.size(), 0);
    if (exhaustive) {
        // odometer over the full product space
        while (true) {
            ++answer.adversaries;
            if (!adversary_defeated(space, pick, sigma, Xk, phi)) {
                answer.value = false;
                answer.counterexample = adversary_json(space, pick);
                return answer;
            }
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == space.choices[i].size()) {
                pick[i] = 0;
                ++i;
            }
            if (i == pick.size()) break;
        }
        answer.value = true;
        return answer;
    }

    answer.sampled = true;
    SplitMix64 rng(sample_seed);
    for (long long trial = 0; trial < *sample_count; ++trial) {
        for (std::size_t i = 0; i < pick.size(); ++i)
            pick[i] = static_cast<std::size_t>(rng.below(space.choices[i].size()));
        ++answer.adversaries;
        if (!adversary_defeated(space, pick, sigma, Xk, phi)) {
            answer.value = false;
            answer.sampled = false;  // a counterexample is definitive
            answer.counterexample = adversary_json(space, pick);
            return answer;
        }
    }
    answer.value = true;
    return answer;
}

}  // namespace largesets
