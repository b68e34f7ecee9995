#include "largesets/reductions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "largesets/generators.hpp"
#include "largesets/pairing.hpp"
#include "largesets/search.hpp"

namespace largesets {

ThinWitness red_ts_from_fs(const Coloring& f, const FinSet& A, const FinSet& B) {
    if (f.is_set_valued()) throw std::invalid_argument("red_ts_from_fs: scalar f required");
    if (B.empty() || !B.subset_of(A))
        throw std::invalid_argument("red_ts_from_fs: B must be a nonempty subset of A");
    const FinSet rest = A.set_minus(B);
    if (rest.empty()) throw std::invalid_argument("red_ts_from_fs: A \\ B must be nonempty");
    if (!is_free_scalar(f, A)) throw std::invalid_argument("red_ts_from_fs: A is not f-free");
    return {rest, B.min()};
}

namespace {

/// One unfolding of the shift-down recursion: either a settled bit, or
/// the lex-smaller set to recurse into (the result is then flipped).
struct FsRtStep {
    int value = -1;
    FinSet next;
};

FsRtStep fs_rt_step(const Coloring& f, const FinSet& s) {
    if (!is_exactly_omega_large(s) || s.min() == 0)
        throw std::invalid_argument("fs_from_rt: set outside the shifted Schreier family");
    const int s0 = s.min();
    const long long F = f.eval(ominus_one(s));

    for (int i = 0; i < s0; ++i)
        if (F == s[i] - 1) return {0, {}};

    if (F < s0 - 1) {
        // {F+1, s_1, ..., s_{F+1}}
        std::vector<int> xs{static_cast<int>(F) + 1};
        for (int i = 1; i <= F + 1; ++i) xs.push_back(s[i]);
        return {-1, FinSet(std::move(xs))};
    }
    for (int i = 0; i + 1 < s0; ++i) {
        if (F > s[i] - 1 && F < s[i + 1] - 1) {
            // replace s_{i+1} by F+1
            std::vector<int> xs = s.elements();
            xs[static_cast<std::size_t>(i) + 1] = static_cast<int>(F) + 1;
            return {-1, FinSet(std::move(xs))};
        }
    }
    if (F > s[s0 - 1] - 1 && F < s[s0] - 1) return {0, {}};
    // F = s_{s0} - 1 or F >= s_{s0}: the recursion's catch-all.
    return {1, {}};
}

long long fs_rt_eval(const Coloring& f, const FinSet& start, std::map<FinSet, long long>* memo) {
    std::vector<FinSet> chain;
    FinSet cur = start;
    long long value = -1;
    while (true) {
        if (memo) {
            auto it = memo->find(cur);
            if (it != memo->end()) {
                value = it->second;
                break;
            }
        }
        const FsRtStep step = fs_rt_step(f, cur);
        if (step.value >= 0) {
            value = step.value;
            if (memo) memo->emplace(cur, value);
            break;
        }
        if (lex_compare(step.next, cur) != Ordering::Less)
            throw std::logic_error("fs_from_rt: recursion target not lex-smaller");
        chain.push_back(cur);
        cur = step.next;
    }
    // Unwind: each chain link contributes one 1 - (...) flip.
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        value = 1 - value;
        if (memo) memo->emplace(*it, value);
    }
    return value;
}

}  // namespace

Coloring red_fs_from_rt(const Coloring& f, int N) {
    if (f.is_set_valued()) throw std::invalid_argument("red_fs_from_rt: scalar f required");
    auto memo = std::make_shared<std::map<FinSet, long long>>();
    const DomainFamily dom = DomainFamily::positive_schreier();
    std::map<FinSet, long long> table;
    for (const FinSet& s : dom.members_within(N)) table.emplace(s, fs_rt_eval(f, s, memo.get()));
    return Coloring::scalar_table(dom, std::move(table), N);
}

long long fs_from_rt_naive(const Coloring& f, const FinSet& s) {
    return fs_rt_eval(f, s, nullptr);
}

FinSet backward_shift_down(const FinSet& H) {
    std::vector<int> xs;
    xs.reserve(static_cast<std::size_t>(H.size()));
    for (int x : H) {
        if (x == 0) throw std::invalid_argument("backward_shift_down: 0 in solution");
        xs.push_back(x - 1);
    }
    return FinSet(std::move(xs));
}

namespace {

void require_fresh_horizon(const Coloring& f, int N, const char* who) {
    if (f.table_horizon() && *f.table_horizon() != N)
        throw std::invalid_argument(std::string(who) +
                                    ": instance table horizon differs from the working horizon; "
                                    "color collisions could straddle it");
}

void require_k_bounded(const Coloring& f, int k, int N, const char* who) {
    const KBoundedCheck chk = validate_k_bounded(f, k, N);
    if (!chk.ok)
        throw std::invalid_argument(std::string(who) + ": instance is not " + std::to_string(k) +
                                    "-bounded within the horizon (color " +
                                    std::to_string(chk.color) + ")");
}

}  // namespace

Coloring red_rrt_from_rt(const Coloring& f, int k, int N) {
    require_fresh_horizon(f, N, "red_rrt_from_rt");
    require_k_bounded(f, k, N, "red_rrt_from_rt");
    const std::vector<FinSet> members = f.domain().members_within(N);
    std::map<long long, long long> seen;  // color -> how many earlier members used it
    std::map<FinSet, long long> table;
    for (const FinSet& s : members) {
        const long long c = f.eval(s);
        table.emplace(s, seen[c]);
        ++seen[c];
    }
    return Coloring::scalar_table(f.domain(), std::move(table), N);
}

Coloring red_rrt2_from_fs(const Coloring& f, int N) {
    require_fresh_horizon(f, N, "red_rrt2_from_fs");
    require_k_bounded(f, 2, N, "red_rrt2_from_fs");
    const std::vector<FinSet> members = f.domain().members_within(N);
    std::map<long long, FinSet> first_with;  // color -> earliest member
    std::map<FinSet, long long> table;
    for (const FinSet& s : members) {
        const long long c = f.eval(s);
        auto it = first_with.find(c);
        if (it == first_with.end()) {
            first_with.emplace(c, s);
            table.emplace(s, 0);
        } else {
            const FinSet diff = it->second.set_minus(s);
            if (diff.empty())
                throw std::logic_error("red_rrt2_from_fs: domain is not an antichain");
            table.emplace(s, diff.min());
        }
    }
    return Coloring::scalar_table(f.domain(), std::move(table), N);
}

namespace {

std::map<FinSet, long long> rank_map(const DomainFamily& dom, int N) {
    std::map<FinSet, long long> ranks;
    long long i = 0;
    for (const FinSet& s : dom.members_within(N)) ranks.emplace(s, i++);
    return ranks;
}

}  // namespace

Coloring red_ts_from_rrt_omegaplus1(const Coloring& f, int N) {
    if (f.is_set_valued())
        throw std::invalid_argument("red_ts_from_rrt_omegaplus1: scalar f required");
    const DomainFamily dom = DomainFamily::exactly_omega_plus_one();
    const auto schreier_rank = rank_map(DomainFamily::schreier(), N);
    const auto own_rank = rank_map(dom, N);
    std::map<FinSet, long long> table;
    for (const auto& [t, rank] : own_rank) {
        const int x = t.min();
        const FinSet s = t.drop_min();
        const long long c = f.eval(s);
        bool matched = false;
        if (c >= 0) {
            const auto [u, v] = cantor_unpair(static_cast<std::uint64_t>(c));
            matched = u < v && v < static_cast<std::uint64_t>(s.min()) &&
                      (static_cast<std::uint64_t>(x) == u || static_cast<std::uint64_t>(x) == v);
        }
        if (matched)
            table.emplace(t, static_cast<long long>(cantor_pair(
                                 0, cantor_pair(static_cast<std::uint64_t>(c),
                                                static_cast<std::uint64_t>(schreier_rank.at(s))))));
        else
            table.emplace(t, static_cast<long long>(
                                 cantor_pair(1, static_cast<std::uint64_t>(rank))));
    }
    return Coloring::scalar_table(dom, std::move(table), N);
}

ThinWitness backward_ts_from_rrt(const FinSet& H, int u, int v) {
    if (!(u < v)) throw std::invalid_argument("backward_ts_from_rrt: need u < v");
    return {H.above(v), static_cast<long long>(cantor_pair(static_cast<std::uint64_t>(u),
                                                           static_cast<std::uint64_t>(v)))};
}

Coloring red_rrt_dim_embed(const Coloring& f, int k, int n, int N) {
    require_k_bounded(f, k, N, "red_rrt_dim_embed");
    if (f.domain().kind() != DomainKind::FixedTuples || f.domain().tuple_arity() != n)
        throw std::invalid_argument("red_rrt_dim_embed: instance must color [N]^n");
    const DomainFamily dom = DomainFamily::schreier();
    const auto own_rank = rank_map(dom, N);
    std::map<FinSet, long long> table;
    for (const auto& [s, rank] : own_rank) {
        const int x0 = s.min();
        if (x0 >= n) {
            std::vector<int> head, tail;
            for (int i = 1; i < s.size(); ++i)
                (i <= n ? head : tail).push_back(s[i]);
            const long long c = f.eval(FinSet(std::move(head)));
            table.emplace(s, static_cast<long long>(cantor_pair(
                                 0, cantor_pair(static_cast<std::uint64_t>(c),
                                                finset_code(FinSet(std::move(tail)))))));
        } else {
            table.emplace(s, static_cast<long long>(
                                 cantor_pair(1, static_cast<std::uint64_t>(rank))));
        }
    }
    return Coloring::scalar_table(dom, std::move(table), N);
}

FinSet backward_dim_embed(const FinSet& A, int n) {
    for (int x : A)
        if (x >= n) return A.above(x);
    throw std::invalid_argument("backward_dim_embed: no element >= n in solution");
}

Coloring red_progressive_from_rrt(const Coloring& f, int k, int N) {
    require_fresh_horizon(f, N, "red_progressive_from_rrt");
    require_k_bounded(f, k, N, "red_progressive_from_rrt");
    const std::vector<FinSet> members = f.domain().members_within(N);
    std::map<FinSet, FinSet> table;
    for (const FinSet& s : members) {
        std::vector<int> vals;
        for (const FinSet& t : members) {
            if (t == s || f.eval(t) != f.eval(s)) continue;
            if (lex_compare(s, t) != Ordering::Less) continue;
            const FinSet diff = t.set_minus(s);
            if (diff.empty())
                throw std::logic_error("red_progressive_from_rrt: domain is not an antichain");
            vals.push_back(diff.min());
        }
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        table.emplace(s, FinSet(std::move(vals)));
    }
    ColoringMeta meta;
    meta.progressive = true;
    meta.constrained_by = "const:" + std::to_string(k);
    return Coloring::set_table(f.domain(), std::move(table), N, meta);
}

long long cofinite_encode(long long i, long long n) {
    return static_cast<long long>(cantor_pair(static_cast<std::uint64_t>(i),
                                              static_cast<std::uint64_t>(n))) +
           1;
}

Coloring red_ts_cofinite(const Coloring& f, int N) {
    if (f.is_set_valued()) throw std::invalid_argument("red_ts_cofinite: scalar f required");
    std::map<FinSet, long long> table;
    for (const FinSet& s : f.domain().members_within(N)) {
        const long long c = f.eval(s);
        if (c >= 1) {
            const auto [i, n] = cantor_unpair(static_cast<std::uint64_t>(c - 1));
            (void)n;
            table.emplace(s, static_cast<long long>(i));
        } else {
            table.emplace(s, c);
        }
    }
    return Coloring::scalar_table(f.domain(), std::move(table), N);
}

// ---------------------------------------------------------------------------
// Verification harness
// ---------------------------------------------------------------------------

namespace {

struct TrialContext {
    VerifyReport* report;
    int trial;
    const Coloring* instance;
    int horizon;
};

void record_failure(TrialContext& ctx, const FinSet& solution, const std::string& violated,
                    const Json& detail) {
    ++ctx.report->checks_failed;
    if (ctx.report->certificates.size() >= 5) return;
    Json cert;
    cert["trial"] = ctx.trial;
    cert["violated"] = violated;
    cert["solution"] = to_json(solution);
    cert["detail"] = detail;
    Json inst = Json::array();
    for (const FinSet& s : ctx.instance->domain().members_within(ctx.horizon)) {
        if (ctx.instance->is_set_valued())
            inst.push_back(Json{{"s", s.elements()}, {"colors", ctx.instance->eval_set(s).elements()}});
        else
            inst.push_back(Json{{"s", s.elements()}, {"color", ctx.instance->eval(s)}});
    }
    cert["instance"] = std::move(inst);
    ctx.report->certificates.push_back(std::move(cert));
}

Coloring constant_scalar(DomainFamily dom, int N, long long value) {
    std::map<FinSet, long long> table;
    for (const FinSet& s : dom.members_within(N)) table.emplace(s, value);
    return Coloring::scalar_table(std::move(dom), std::move(table), N);
}

Coloring empty_set_valued(DomainFamily dom, int N) {
    std::map<FinSet, FinSet> table;
    for (const FinSet& s : dom.members_within(N)) table.emplace(s, FinSet());
    return Coloring::set_table(std::move(dom), std::move(table), N);
}

/// Injective scalar coloring (every set a rainbow, every singleton thin...).
Coloring injective_scalar(DomainFamily dom, int N, long long tag) {
    std::map<FinSet, long long> table;
    long long i = 0;
    for (const FinSet& s : dom.members_within(N)) {
        table.emplace(s, static_cast<long long>(cantor_pair(static_cast<std::uint64_t>(tag),
                                                            static_cast<std::uint64_t>(i))));
        ++i;
    }
    return Coloring::scalar_table(std::move(dom), std::move(table), N);
}

/// Plants one color collision on the two lex-least members avoiding
/// element 0, everything else fresh. Used by corrupted-transform tests.
Coloring planted_collision(DomainFamily dom, int N) {
    std::vector<FinSet> members = dom.members_within(N);
    std::vector<FinSet> targets;
    for (const FinSet& s : members) {
        if (!s.empty() && s.min() > 0 && targets.size() < 2) targets.push_back(s);
    }
    if (targets.size() < 2)
        throw std::logic_error("planted_collision: domain too small");
    std::map<FinSet, long long> table;
    long long fresh = 1;
    for (const FinSet& s : members) {
        if (s == targets[0] || s == targets[1])
            table.emplace(s, 0);
        else
            table.emplace(s, fresh++);
    }
    ColoringMeta meta;
    meta.k_bounded = 2;
    return Coloring::scalar_table(std::move(dom), std::move(table), N, meta);
}

}  // namespace

std::vector<std::string> reduction_names() {
    return {"red_ts_from_fs",       "red_fs_from_rt",
            "red_rrt_from_rt",      "red_rrt2_from_fs",
            "red_ts_from_rrt_omegaplus1", "red_rrt_dim_embed",
            "red_progressive_from_rrt",   "red_ts_cofinite"};
}

VerifyReport verify_reduction(const std::string& name, std::uint64_t seed, int N, int m,
                              int trials, bool corrupt) {
    VerifyReport report;
    report.reduction = name;
    report.seed = seed;
    report.horizon = N;
    report.size = m;
    report.trials = trials;
    report.corrupt = corrupt;

    const FinSet universe = interval_universe(0, N);

    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(trial));

        if (name == "red_ts_from_fs") {
            const Coloring f = random_scalar(rng, DomainFamily::schreier(), N, N, 60);
            TrialContext ctx{&report, trial, &f, N};
            const auto frees =
                find_all_solutions(f, SolutionKind::free_scalar(), m, universe);
            for (const FinSet& A : frees) {
                ++report.solutions_seen;
                std::vector<FinSet> blocks;
                for (int x : A) blocks.push_back(FinSet::of({x}));
                if (A.size() >= 3)
                    blocks.push_back(FinSet(std::vector<int>(A.elements().end() - 2,
                                                             A.elements().end())));
                for (const FinSet& B : blocks) {
                    if (A.set_minus(B).empty()) continue;
                    ThinWitness w{A.set_minus(B), B.min()};
                    if (corrupt) {
                        // wrong witness color: first color present on A \ B
                        bool found = false;
                        for (const FinSet& s : f.domain().members_within(N)) {
                            if (s.subset_of(w.H)) {
                                w.color = f.eval(s);
                                found = true;
                                break;
                            }
                        }
                        if (!found) continue;
                    } else {
                        w = red_ts_from_fs(f, A, B);
                    }
                    if (is_thin_for(f, w.H, w.color))
                        ++report.checks_passed;
                    else
                        record_failure(ctx, A,
                                       "thin(A\\B, min B)",
                                       Json{{"B", B.elements()}, {"color", w.color}});
                }
            }
        } else if (name == "red_fs_from_rt") {
            const int range = 2 + static_cast<int>(rng.below(3));  // R <= 4
            const Coloring f = corrupt
                                   ? constant_scalar(DomainFamily::schreier(), N, 1)
                                   : random_scalar(rng, DomainFamily::schreier(), N, range, 0);
            TrialContext ctx{&report, trial, &f, N};
            const Coloring g = corrupt
                                   ? constant_scalar(DomainFamily::positive_schreier(), N, 0)
                                   : red_fs_from_rt(f, N);
            if (!corrupt) {
                // memoized table vs straight-line recursion, every member
                for (const FinSet& s : g.domain().members_within(N)) {
                    if (g.eval(s) == fs_from_rt_naive(f, s))
                        ++report.checks_passed;
                    else
                        record_failure(ctx, s, "memo = naive recursion", Json::object());
                }
            }
            const auto homs = find_all_solutions(g, SolutionKind::homogeneous(), m,
                                                 interval_universe(1, N));
            for (const FinSet& H : homs) {
                ++report.solutions_seen;
                if (H.max() <= range + 1) {  // headroom: range bound R
                    ++report.checks_skipped;
                    continue;
                }
                const FinSet Hp = backward_shift_down(H);
                for (const FinSet& s : DomainFamily::schreier().members_within(N)) {
                    if (!s.subset_of(Hp)) continue;
                    if (s.max() + 1 >= H.max()) {
                        ++report.checks_skipped;
                        continue;
                    }
                    const long long c = f.eval(s);
                    const bool in_H_minus_s =
                        c >= 0 && c < N && Hp.contains(static_cast<int>(c)) &&
                        !s.contains(static_cast<int>(c));
                    if (!in_H_minus_s)
                        ++report.checks_passed;
                    else
                        record_failure(ctx, H, "f(s) not in H' \\ s",
                                       Json{{"s", s.elements()}, {"f(s)", c}});
                }
            }
        } else if (name == "red_rrt_from_rt") {
            const Coloring f = corrupt ? planted_collision(DomainFamily::schreier(), N)
                                       : random_k_bounded(rng, DomainFamily::schreier(), N, 2);
            TrialContext ctx{&report, trial, &f, N};
            const Coloring g = corrupt ? constant_scalar(DomainFamily::schreier(), N, 0)
                                       : red_rrt_from_rt(f, 2, N);
            const auto homs = find_all_solutions(g, SolutionKind::homogeneous(), m, universe);
            for (const FinSet& H : homs) {
                ++report.solutions_seen;
                if (is_rainbow(f, H))
                    ++report.checks_passed;
                else
                    record_failure(ctx, H, "rainbow(f, H)", Json::object());
            }
        } else if (name == "red_rrt2_from_fs") {
            const Coloring f = corrupt ? planted_collision(DomainFamily::schreier(), N)
                                       : random_k_bounded(rng, DomainFamily::schreier(), N, 2);
            TrialContext ctx{&report, trial, &f, N};
            const Coloring g = corrupt ? constant_scalar(DomainFamily::schreier(), N, 0)
                                       : red_rrt2_from_fs(f, N);
            const auto frees = find_all_solutions(g, SolutionKind::free_scalar(), m, universe);
            for (const FinSet& A : frees) {
                ++report.solutions_seen;
                if (is_rainbow(f, A))
                    ++report.checks_passed;
                else
                    record_failure(ctx, A, "rainbow(f, A)", Json::object());
            }
        } else if (name == "red_ts_from_rrt_omegaplus1") {
            Coloring f = [&] {
                if (corrupt)
                    return constant_scalar(DomainFamily::schreier(), N,
                                           static_cast<long long>(cantor_pair(0, 1)));
                // bias toward pair codes below min s so matches occur
                std::map<FinSet, long long> table;
                for (const FinSet& s : DomainFamily::schreier().members_within(N)) {
                    if (s.min() >= 2 && rng.coin()) {
                        const int v = rng.range(1, s.min() - 1);
                        const int u = rng.range(0, v - 1);
                        table.emplace(s, static_cast<long long>(cantor_pair(
                                             static_cast<std::uint64_t>(u),
                                             static_cast<std::uint64_t>(v))));
                    } else {
                        table.emplace(s, static_cast<long long>(rng.below(40)));
                    }
                }
                return Coloring::scalar_table(DomainFamily::schreier(), std::move(table), N);
            }();
            TrialContext ctx{&report, trial, &f, N};
            const Coloring g = corrupt
                                   ? injective_scalar(DomainFamily::exactly_omega_plus_one(), N, 1)
                                   : red_ts_from_rrt_omegaplus1(f, N);
            const auto rainbows = find_all_solutions(g, SolutionKind::rainbow(), m, universe);
            for (const FinSet& H : rainbows) {
                ++report.solutions_seen;
                for (int i = 0; i < H.size(); ++i) {
                    for (int j = i + 1; j < H.size(); ++j) {
                        const ThinWitness w = backward_ts_from_rrt(H, H[i], H[j]);
                        if (is_thin_for(f, w.H, w.color))
                            ++report.checks_passed;
                        else
                            record_failure(ctx, H, "thin(H \\ [0,v], <u,v>)",
                                           Json{{"u", H[i]}, {"v", H[j]}});
                    }
                }
            }
        } else if (name == "red_rrt_dim_embed") {
            const int n = 1 + static_cast<int>(rng.below(2));
            Coloring f = random_k_bounded(rng, DomainFamily::fixed_tuples(n), N, 2);
            if (corrupt) {
                // force a collision on the two lex-least n-subsets of (n, N)
                std::map<FinSet, long long> table;
                long long fresh = 1;
                int planted = 0;
                for (const FinSet& u : DomainFamily::fixed_tuples(n).members_within(N)) {
                    if (planted < 2 && !u.empty() && u.min() > n) {
                        table.emplace(u, 0);
                        ++planted;
                    } else {
                        table.emplace(u, fresh++);
                    }
                }
                f = Coloring::scalar_table(DomainFamily::fixed_tuples(n), std::move(table), N);
            }
            TrialContext ctx{&report, trial, &f, N};
            const Coloring g = corrupt ? injective_scalar(DomainFamily::schreier(), N, 1)
                                       : red_rrt_dim_embed(f, 2, n, N);
            const auto rainbows = find_all_solutions(g, SolutionKind::rainbow(), m, universe);
            const auto tuples = DomainFamily::fixed_tuples(n).members_within(N);
            for (const FinSet& A : rainbows) {
                ++report.solutions_seen;
                for (std::size_t i = 0; i < tuples.size(); ++i) {
                    if (!tuples[i].subset_of(A)) continue;
                    for (std::size_t j = i + 1; j < tuples.size(); ++j) {
                        if (!tuples[j].subset_of(A)) continue;
                        // headroom: a shared x0 and enough tail room inside A
                        const int lo = std::min(tuples[i].min(), tuples[j].min());
                        const int hi = std::max(tuples[i].max(), tuples[j].max());
                        bool eligible = false;
                        for (int x0 : A) {
                            if (x0 >= lo) break;
                            if (x0 < n) continue;
                            if (A.above(hi).size() >= x0 - n) {
                                eligible = true;
                                break;
                            }
                        }
                        if (!eligible) {
                            ++report.checks_skipped;
                            continue;
                        }
                        if (f.eval(tuples[i]) != f.eval(tuples[j]))
                            ++report.checks_passed;
                        else
                            record_failure(ctx, A, "distinct f-colors on n-subsets",
                                           Json{{"u", tuples[i].elements()},
                                                {"v", tuples[j].elements()}});
                    }
                }
            }
        } else if (name == "red_progressive_from_rrt") {
            const Coloring f = corrupt ? planted_collision(DomainFamily::schreier(), N)
                                       : random_k_bounded(rng, DomainFamily::schreier(), N, 2);
            TrialContext ctx{&report, trial, &f, N};
            const Coloring g = corrupt ? empty_set_valued(DomainFamily::schreier(), N)
                                       : red_progressive_from_rrt(f, 2, N);
            if (!corrupt) {
                if (validate_progressive(g, N).ok)
                    ++report.checks_passed;
                else
                    record_failure(ctx, FinSet(), "g progressive", Json::object());
                if (validate_constrained(g, BoundFn::constant(2), N).ok)
                    ++report.checks_passed;
                else
                    record_failure(ctx, FinSet(), "g 2-constrained", Json::object());
            }
            const auto frees =
                find_all_solutions(g, SolutionKind::free_set_valued(), m, universe);
            for (const FinSet& H : frees) {
                ++report.solutions_seen;
                if (is_rainbow(f, H))
                    ++report.checks_passed;
                else
                    record_failure(ctx, H, "rainbow(f, H)", Json::object());
            }
        } else if (name == "red_ts_cofinite") {
            Coloring f = [&] {
                std::map<FinSet, long long> table;
                long long i = 0;
                for (const FinSet& s : DomainFamily::schreier().members_within(N)) {
                    if (corrupt)
                        table.emplace(s, cofinite_encode(0, i++));
                    else if (rng.coin())
                        table.emplace(s, cofinite_encode(rng.below(3),
                                                         rng.below(static_cast<std::uint64_t>(N))));
                    else
                        table.emplace(s, static_cast<long long>(rng.below(5)));
                }
                return Coloring::scalar_table(DomainFamily::schreier(), std::move(table), N);
            }();
            TrialContext ctx{&report, trial, &f, N};
            const Coloring g = corrupt ? f : red_ts_cofinite(f, N);
            for (long long target = 0; target < 3; ++target) {
                const auto thins =
                    find_all_solutions(g, SolutionKind::thin_for(target), m, universe);
                for (const FinSet& H : thins) {
                    ++report.solutions_seen;
                    bool ok = true;
                    long long bad_n = -1;
                    for (long long nn = 0; nn < 2 * N; ++nn) {
                        if (!is_thin_for(f, H, cofinite_encode(target, nn))) {
                            ok = false;
                            bad_n = nn;
                            break;
                        }
                    }
                    if (ok)
                        ++report.checks_passed;
                    else
                        record_failure(ctx, H, "thin for the whole encode family",
                                       Json{{"i", target}, {"n", bad_n}});
                }
            }
        } else {
            throw std::invalid_argument("verify_reduction: unknown reduction '" + name + "'");
        }
    }
    return report;
}

Json VerifyReport::to_json() const {
    Json j = report_header("verify");
    j["reduction"] = reduction;
    j["seed"] = seed;
    j["horizon"] = horizon;
    j["size"] = size;
    j["trials"] = trials;
    j["corrupt"] = corrupt;
    j["solutions"] = solutions_seen;
    j["passed"] = checks_passed;
    j["failed"] = checks_failed;
    j["skipped"] = checks_skipped;
    j["certificates"] = certificates;
    return j;
}

}  // namespace largesets
