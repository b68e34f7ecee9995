#include "largesets/gadgets.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "largesets/pairing.hpp"
#include "largesets/search.hpp"
#include "largesets/solution.hpp"

namespace largesets {

Coloring cex_ts_all_finite() {
    return Coloring::scalar(DomainFamily::all_finite(),
                            [](const FinSet& s) { return static_cast<long long>(s.size()); });
}

Coloring cex_rrt_all_finite(int N) {
    const DomainFamily dom = DomainFamily::all_finite();
    std::map<FinSet, long long> table;
    long long i = 0;
    for (const FinSet& s : dom.members_within(N)) table.emplace(s, i++);
    // every exactly omega-large s drags its min-removed child onto its own
    // color; this covers {0} forcing f({}) even though {} has no
    // quasi-parent in the operation's sense
    for (const FinSet& s : enumerate_exactly_large(N)) table[s.drop_min()] = table.at(s);
    ColoringMeta meta;
    meta.k_bounded = 2;
    return Coloring::scalar_table(dom, std::move(table), N, meta);
}

namespace {

/// Core of the fincolors gadget with a caller-chosen modulus function.
/// Degenerate arity 1 reads as the single color 0; the barrier gadgets
/// hit it while the normalized bound is still 1.
long long fincolors_color(const std::function<int(int)>& mod, int n, const FinSet& t) {
    if (n == 1) return 0;
    const int m = mod(t[0]);
    if (m <= t[1]) return n - 1;
    int best = 0;
    for (int i = 0; i + 1 < n - 1; ++i)
        if (m > t[i + 2]) best = i + 1;
    return best;
}

}  // namespace

Coloring gadget_ts_fincolors(const EnumerationSchedule& sched, int n) {
    if (n < 2) throw std::invalid_argument("gadget_ts_fincolors: n must be >= 2");
    auto shared = std::make_shared<EnumerationSchedule>(sched);
    return Coloring::scalar(DomainFamily::fixed_tuples(n), [shared, n](const FinSet& t) {
        return fincolors_color([&](int x) { return modulus(*shared, x); }, n, t);
    });
}

StagedFamily fincolors_staged(const EnumerationSchedule& sched, int n) {
    if (n < 2) throw std::invalid_argument("fincolors_staged: n must be >= 2");
    auto shared = std::make_shared<EnumerationSchedule>(sched);
    StagedFamily fam;
    fam.arity = n;
    fam.settle_stage = sched.max_stage();
    fam.eval = [shared, n](int stage, const FinSet& t) {
        return fincolors_color([&](int x) { return approx_modulus(*shared, stage, x); }, n, t);
    };
    return fam;
}

Coloring jump_compose(const StagedFamily& family, int N) {
    const int n = family.arity;
    // Settledness within the horizon is a precondition, not a hope.
    for (const FinSet& t : DomainFamily::fixed_tuples(n).members_within(N)) {
        const long long settled = family.eval(family.settle_stage, t);
        for (int stage = family.settle_stage; stage < N; ++stage)
            if (family.eval(stage, t) != settled)
                throw std::invalid_argument(
                    "jump_compose: family not settled within horizon at " + t.to_string());
    }
    auto eval = family.eval;
    return Coloring::scalar(DomainFamily::fixed_tuples(n + 1), [eval, n](const FinSet& t) {
        return eval(t[n], t.drop_max());
    });
}

Coloring layered_fincolors(const LevelFamily& levels, int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("layered_fincolors: need n, k >= 1");
    auto sched = std::make_shared<EnumerationSchedule>(levels.level(k));
    return Coloring::scalar(DomainFamily::fixed_tuples(n + k), [sched, n](const FinSet& t) {
        const int stage = t[n];
        const FinSet head = t.prefix(n);
        return fincolors_color([&](int x) { return approx_modulus(*sched, stage, x); }, n, head);
    });
}

Coloring gadget_ts_schreier(const LevelFamily& levels) {
    auto shared = std::make_shared<LevelFamily>(levels);
    return Coloring::scalar(DomainFamily::schreier(), [shared](const FinSet& s) -> long long {
        const int x0 = s.min();
        if (x0 <= 1) return 0;
        const int k = (x0 + 1) / 2;
        const int n = x0 - k;
        const EnumerationSchedule& sched = shared->level(k);
        const int stage = s[n + 1];  // coordinate n of the tail tuple
        const FinSet head = FinSet(
            std::vector<int>(s.elements().begin() + 1, s.elements().begin() + 1 + n));
        return fincolors_color([&](int x) { return approx_modulus(sched, stage, x); }, n, head);
    });
}

Coloring gadget_rrt_arith(std::vector<Coloring> family) {
    auto shared = std::make_shared<std::vector<Coloring>>(std::move(family));
    return Coloring::scalar(DomainFamily::schreier(), [shared](const FinSet& s) {
        const int n = s.min();
        if (n >= static_cast<int>(shared->size()))
            throw std::out_of_range("gadget_rrt_arith: no instance for dimension " +
                                    std::to_string(n));
        return static_cast<long long>(
            cantor_pair(static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(
                            (*shared)[static_cast<std::size_t>(n)].eval(s.drop_min()))));
    });
}

namespace {

/// h_{|s|-1}(s): the thin-set coloring the barrier gadgets couple pairs
/// through, evaluated with the fully settled modulus.
long long thin_h_color(const EnumerationSchedule& sched, const FinSet& s) {
    return fincolors_color([&](int x) { return modulus(sched, x); }, s.size(), s);
}

Barrier rrt_jump_barrier(std::shared_ptr<EnumerationSchedule> sched) {
    auto member = [sched](const FinSet& m) {
        if (m.size() < 3) return false;
        const int x = m[0];
        const FinSet s = m.drop_min().drop_min();
        const int g = normalized_approx(*sched, s.min(), x);
        return s.size() == g * g;
    };
    BoundFn bound{"rrt-jump", [sched](int x) {
                      const int g = normalized_modulus(*sched, x);
                      return 2 + g * g;
                  }};
    return Barrier{"rrt-jump", member, bound};
}

Barrier pfs_jump_barrier(std::shared_ptr<EnumerationSchedule> sched) {
    auto member = [sched](const FinSet& m) {
        if (m.size() < 2) return false;
        const int x = m[0];
        const FinSet s = m.drop_min();
        return s.size() == normalized_approx(*sched, s.min(), x);
    };
    BoundFn bound{"pfs-jump",
                  [sched](int x) { return 1 + normalized_modulus(*sched, x); }};
    return Barrier{"pfs-jump", member, bound};
}

}  // namespace

BarrierGadget gadget_barrier_rrt_jump(const EnumerationSchedule& sched, int N) {
    auto shared = std::make_shared<EnumerationSchedule>(sched);
    Barrier barrier = rrt_jump_barrier(shared);
    const DomainFamily dom = DomainFamily::barrier_members(barrier);

    std::map<FinSet, long long> rank;
    long long i = 0;
    for (const FinSet& m : dom.members_within(N)) rank.emplace(m, i++);

    std::map<FinSet, long long> table;
    for (const auto& [m, r] : rank) {
        const int x = m[0], y = m[1];
        const FinSet s = m.drop_min().drop_min();
        const auto [a, b] =
            index_to_gt_pair(static_cast<std::uint64_t>(thin_h_color(*shared, s)));
        long long color = static_cast<long long>(cantor_pair(1, static_cast<std::uint64_t>(r)));
        if (y - x == b && x + a < s.min()) {
            // the partner x.z.s (z = x+a) keeps its fresh color; copy it
            const FinSet partner = s.prepend(x + a).prepend(x);
            color = static_cast<long long>(
                cantor_pair(1, static_cast<std::uint64_t>(rank.at(partner))));
        }
        table.emplace(m, color);
    }
    ColoringMeta meta;
    meta.k_bounded = 2;
    return {std::move(barrier), Coloring::scalar_table(dom, std::move(table), N, meta)};
}

BarrierGadget gadget_barrier_pfs_jump(const EnumerationSchedule& sched, int N) {
    auto shared = std::make_shared<EnumerationSchedule>(sched);
    Barrier barrier = pfs_jump_barrier(shared);
    const DomainFamily dom = DomainFamily::barrier_members(barrier);
    std::map<FinSet, long long> table;
    for (const FinSet& m : dom.members_within(N)) {
        const int x = m[0];
        const FinSet s = m.drop_min();
        table.emplace(m, x + thin_h_color(*shared, s) + 1);
    }
    return {std::move(barrier), Coloring::scalar_table(dom, std::move(table), N)};
}

Coloring gadget_pfs_unbounded_false() {
    return Coloring::set_valued(DomainFamily::fixed_tuples(1), [](const FinSet& s) {
        std::vector<int> xs;
        for (int v = 0; v < s[0]; ++v) xs.push_back(v);
        return FinSet(std::move(xs));
    });
}

Coloring gadget_pfs_noncomputable_bound(const EnumerationSchedule& sched) {
    auto shared = std::make_shared<EnumerationSchedule>(sched);
    ColoringMeta meta;
    meta.progressive = true;
    return Coloring::set_valued(
        DomainFamily::fixed_tuples(1),
        [shared](const FinSet& s) {
            std::vector<int> xs;
            for (int v = s[0] + 1; v <= modulus(*shared, s[0]); ++v) xs.push_back(v);
            return FinSet(std::move(xs));
        },
        meta);
}

std::uint64_t catalan(int n) {
    if (n < 0 || n > 36)
        throw std::invalid_argument("catalan: n out of the uint64-safe range [0, 36]");
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int i = 0; i < n; ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j <= i; ++j)
            acc += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
        c[static_cast<std::size_t>(i) + 1] = acc;
    }
    return c[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// Verifiers
// ---------------------------------------------------------------------------

Json GadgetVerifyReport::to_json() const {
    Json j;
    j["gadget"] = gadget;
    j["checks"] = checks;
    j["failures"] = failures;
    j["skipped"] = skipped;
    j["ok"] = ok();
    j["detail"] = detail;
    return j;
}

GadgetVerifyReport verify_cex_ts(int N, int m_cap) {
    GadgetVerifyReport rep;
    rep.gadget = "cex_ts_all_finite";
    const Coloring f = cex_ts_all_finite();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
        const int m = __builtin_popcountll(mask);
        if (m > m_cap) continue;
        std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
        for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
            const long long c = f.eval(FinSet::from_mask(sub));
            if (c <= m) seen[static_cast<std::size_t>(c)] = 1;
            if (sub == 0) break;
        }
        for (int c = 0; c <= m; ++c) {
            ++rep.checks;
            if (!seen[static_cast<std::size_t>(c)]) ++rep.failures;
        }
    }
    return rep;
}

GadgetVerifyReport verify_cex_rrt(int N) {
    GadgetVerifyReport rep;
    rep.gadget = "cex_rrt_all_finite";
    const Coloring f = cex_rrt_all_finite(N);
    const KBoundedCheck kb = validate_k_bounded(f, 2, N);
    rep.detail["two_bounded"] = kb.ok;
    ++rep.checks;
    if (!kb.ok) ++rep.failures;

    std::vector<long long> color(std::size_t{1} << N);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask)
        color[mask] = f.eval(FinSet::from_mask(mask));

    std::vector<char> exactly_large(std::size_t{1} << N, 0);
    for (const FinSet& s : enumerate_exactly_large(N)) exactly_large[s.to_mask()] = 1;

    for (std::uint64_t H = 0; H < (std::uint64_t{1} << N); ++H) {
        bool has_large = false;
        for (std::uint64_t sub = H; sub != 0 && !has_large; sub = (sub - 1) & H)
            has_large = exactly_large[sub];
        if (!has_large) continue;
        ++rep.checks;
        std::vector<long long> cs;
        for (std::uint64_t sub = H;; sub = (sub - 1) & H) {
            cs.push_back(color[sub]);
            if (sub == 0) break;
        }
        std::sort(cs.begin(), cs.end());
        if (std::adjacent_find(cs.begin(), cs.end()) == cs.end()) ++rep.failures;  // a rainbow
    }
    return rep;
}

GadgetVerifyReport verify_fincolors(const EnumerationSchedule& sched, int n, int N) {
    GadgetVerifyReport rep;
    rep.gadget = "gadget_ts_fincolors:" + std::to_string(n);
    const Coloring f = gadget_ts_fincolors(sched, n);

    // route 1: the coloring itself, evaluated on every n-tuple
    struct Tup {
        std::uint64_t mask;
        long long color;
    };
    std::vector<Tup> tuples;
    for (const FinSet& t : DomainFamily::fixed_tuples(n).members_within(N))
        tuples.push_back({t.to_mask(), f.eval(t)});

    std::vector<int> mod(static_cast<std::size_t>(N));
    for (int x = 0; x < N; ++x) mod[static_cast<std::size_t>(x)] = modulus(sched, x);

    for (std::uint64_t H = 1; H < (std::uint64_t{1} << N); ++H) {
        bool pivot_present = false, top_present = false;
        for (const Tup& t : tuples) {
            if ((t.mask & H) != t.mask) continue;
            if (t.color == n - 2) pivot_present = true;
            if (t.color == n - 1) top_present = true;
        }
        std::vector<int> xs;
        for (int i = 0; i < N; ++i)
            if (H & (std::uint64_t{1} << i)) xs.push_back(i);
        const int sz = static_cast<int>(xs.size());

        // (ii) thin for the pivot color n-2 means stride-(n-1) domination
        // (route 2: modulus arithmetic on windows)
        if (!pivot_present) {
            for (int i = 0; i + n - 1 < sz; ++i) {
                ++rep.checks;
                if (mod[static_cast<std::size_t>(xs[static_cast<std::size_t>(i)])] >
                    xs[static_cast<std::size_t>(i + n - 1)])
                    ++rep.failures;
            }
        }
        // (i) headroom forces the top color n-1 to appear
        bool headroom = false;
        for (int i = 0; i < sz && !headroom; ++i) {
            int above = 0;
            for (int j = i + 1; j < sz; ++j)
                if (xs[static_cast<std::size_t>(j)] >=
                    mod[static_cast<std::size_t>(xs[static_cast<std::size_t>(i)])])
                    ++above;
            headroom = above >= n - 1;
        }
        if (headroom) {
            ++rep.checks;
            if (!top_present) ++rep.failures;
        }
    }
    return rep;
}

GadgetVerifyReport verify_jump_compose(const StagedFamily& family, int N) {
    GadgetVerifyReport rep;
    rep.gadget = "jump_compose";
    const Coloring g = jump_compose(family, N);
    const int n = family.arity;

    struct Tup {
        std::uint64_t mask;
        long long color;
    };
    std::vector<Tup> composed;
    for (const FinSet& t : DomainFamily::fixed_tuples(n + 1).members_within(N))
        composed.push_back({t.to_mask(), g.eval(t)});

    std::vector<std::pair<FinSet, long long>> limits;
    for (const FinSet& u : DomainFamily::fixed_tuples(n).members_within(N))
        limits.emplace_back(u, family.eval(family.settle_stage, u));

    for (std::uint64_t H = 1; H < (std::uint64_t{1} << N); ++H) {
        const FinSet Hs = FinSet::from_mask(H);
        for (const auto& [u, c] : limits) {
            if ((u.to_mask() & H) != u.to_mask()) continue;
            bool witness = false;
            for (int x : Hs)
                if (x > u.max() && x >= family.settle_stage) witness = true;
            if (!witness) {
                ++rep.skipped;
                continue;
            }
            // the limit color c occurs on u, so it must occur for g on H
            bool composite_hit = false;
            for (const Tup& t : composed)
                if ((t.mask & H) == t.mask && t.color == c) composite_hit = true;
            ++rep.checks;
            if (!composite_hit) ++rep.failures;
        }
    }
    return rep;
}

GadgetVerifyReport verify_ts_schreier(const LevelFamily& levels, int N) {
    GadgetVerifyReport rep;
    rep.gadget = "gadget_ts_schreier";
    const Coloring f = gadget_ts_schreier(levels);

    const auto members = DomainFamily::schreier().members_within(N);
    std::vector<std::uint64_t> member_masks;
    std::vector<long long> member_colors;
    long long max_color = 0;
    for (const FinSet& s : members) {
        member_masks.push_back(s.to_mask());
        member_colors.push_back(f.eval(s));
        max_color = std::max(max_color, member_colors.back());
    }

    for (std::uint64_t H = 1; H < (std::uint64_t{1} << N); ++H) {
        std::vector<char> present(static_cast<std::size_t>(max_color) + 1, 0);
        bool any_member = false;
        for (std::size_t i = 0; i < member_masks.size(); ++i)
            if ((member_masks[i] & H) == member_masks[i]) {
                present[static_cast<std::size_t>(member_colors[i])] = 1;
                any_member = true;
            }
        if (!any_member) continue;
        const FinSet Hs = FinSet::from_mask(H);
        for (long long c = 0; c <= max_color; ++c) {
            if (present[static_cast<std::size_t>(c)]) continue;
            // H is thin for c; slices whose pivot color is c must dominate
            for (int x0 : Hs) {
                if (x0 <= 1) continue;
                const int k = (x0 + 1) / 2;
                const int n = x0 - k;
                if (n < 2 || c != n - 2) continue;
                const EnumerationSchedule& sched = levels.level(k);
                const int settle = sched.max_stage();
                std::vector<int> G;
                for (int y : Hs)
                    if (y > x0 && y >= settle) G.push_back(y);
                const int room = static_cast<int>(G.size()) - (n + k);
                for (int i = 0; i <= room; ++i) {
                    ++rep.checks;
                    if (modulus(sched, G[static_cast<std::size_t>(i)]) >
                        G[static_cast<std::size_t>(i + n - 1)])
                        ++rep.failures;
                }
            }
        }
    }
    return rep;
}

GadgetVerifyReport verify_rrt_arith(const std::vector<Coloring>& family, int N,
                                    const std::vector<int>& sizes) {
    GadgetVerifyReport rep;
    rep.gadget = "gadget_rrt_arith";
    const Coloring g = gadget_rrt_arith(family);
    const KBoundedCheck kb = validate_k_bounded(g, 2, N);
    rep.detail["two_bounded"] = kb.ok;
    ++rep.checks;
    if (!kb.ok) ++rep.failures;

    const FinSet universe = interval_universe(0, N);
    for (int m : sizes) {
        for (const FinSet& H : find_all_solutions(g, SolutionKind::rainbow(), m, universe)) {
            for (int n : H) {
                if (n >= static_cast<int>(family.size())) continue;
                ++rep.checks;
                if (!is_rainbow(family[static_cast<std::size_t>(n)], H.above(n)))
                    ++rep.failures;
            }
        }
    }
    return rep;
}

namespace {

/// True when no want-sized subset of G (ascending) has thin_h_color = c.
bool tail_avoids_color(const EnumerationSchedule& sched, const std::vector<int>& G, int want,
                       long long c) {
    if (want > static_cast<int>(G.size())) return true;
    std::vector<int> idx(static_cast<std::size_t>(want));
    for (int i = 0; i < want; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<int> xs;
        for (int i : idx) xs.push_back(G[static_cast<std::size_t>(i)]);
        if (thin_h_color(sched, FinSet(std::move(xs))) == c) return false;
        int j = want - 1;
        while (j >= 0 &&
               idx[static_cast<std::size_t>(j)] == static_cast<int>(G.size()) - want + j)
            --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < want; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
    return true;
}

}  // namespace

GadgetVerifyReport verify_barrier_rrt_jump(const EnumerationSchedule& sched, int N,
                                           const std::vector<int>& sizes) {
    GadgetVerifyReport rep;
    rep.gadget = "gadget_barrier_rrt_jump";
    const BarrierGadget gadget = gadget_barrier_rrt_jump(sched, N);

    const BarrierReport br = check_barrier_prefix(gadget.barrier, N);
    rep.detail["subset_violations"] = static_cast<long long>(br.subset_violations.size());
    ++rep.checks;
    if (!br.subset_violations.empty()) ++rep.failures;

    long long case1 = 0, case2 = 0, unclassified = 0;
    const FinSet universe = interval_universe(0, N);
    for (int m : sizes) {
        for (const FinSet& H :
             find_all_solutions(gadget.coloring, SolutionKind::rainbow(), m, universe)) {
            bool any_pair = false;
            bool all_classified = true;
            for (int x : H) {
                const int g = normalized_modulus(sched, x);
                const int bx = settling_stage(sched, x);
                for (int y : H) {
                    if (y <= x || y >= x + g) continue;
                    for (int z : H) {
                        if (z <= y || z >= x + g) continue;
                        any_pair = true;
                        const long long c =
                            static_cast<long long>(gt_pair_to_index(z - x, y - x));
                        std::vector<int> G;
                        for (int w : H)
                            if (w > std::max(bx, z)) G.push_back(w);
                        ++rep.checks;
                        if (!tail_avoids_color(sched, G, g * g, c)) {
                            ++rep.failures;
                            all_classified = false;
                        }
                    }
                }
            }
            if (!all_classified)
                ++unclassified;
            else if (any_pair)
                ++case1;
            else
                ++case2;
        }
    }
    rep.detail["case1"] = case1;
    rep.detail["case2"] = case2;
    rep.detail["unclassified"] = unclassified;
    if (unclassified > 0) ++rep.failures;
    return rep;
}

GadgetVerifyReport verify_barrier_pfs_jump(const EnumerationSchedule& sched, int N,
                                           const std::vector<int>& sizes) {
    GadgetVerifyReport rep;
    rep.gadget = "gadget_barrier_pfs_jump";
    const BarrierGadget gadget = gadget_barrier_pfs_jump(sched, N);

    const BarrierReport br = check_barrier_prefix(gadget.barrier, N);
    rep.detail["subset_violations"] = static_cast<long long>(br.subset_violations.size());
    ++rep.checks;
    if (!br.subset_violations.empty()) ++rep.failures;

    for (const FinSet& m : gadget.coloring.domain().members_within(N)) {
        ++rep.checks;
        if (gadget.coloring.eval(m) <= m.min()) ++rep.failures;  // f(x.s) > x
    }

    long long case1 = 0, case2 = 0, unclassified = 0;
    const FinSet universe = interval_universe(0, N);
    for (int m : sizes) {
        for (const FinSet& H :
             find_all_solutions(gadget.coloring, SolutionKind::free_scalar(), m, universe)) {
            bool any_inside = false;
            bool all_classified = true;
            for (int x : H) {
                const int g = normalized_modulus(sched, x);
                const int bx = settling_stage(sched, x);
                for (int y : H) {
                    if (y <= x || y >= x + g) continue;
                    any_inside = true;
                    const long long c = y - x - 1;
                    std::vector<int> G;
                    for (int w : H)
                        if (w > std::max(bx, y)) G.push_back(w);
                    ++rep.checks;
                    if (!tail_avoids_color(sched, G, g, c)) {
                        ++rep.failures;
                        all_classified = false;
                    }
                }
            }
            if (!all_classified)
                ++unclassified;
            else if (any_inside)
                ++case1;
            else
                ++case2;
        }
    }
    rep.detail["case1"] = case1;
    rep.detail["case2"] = case2;
    rep.detail["unclassified"] = unclassified;
    if (unclassified > 0) ++rep.failures;
    return rep;
}

GadgetVerifyReport verify_pfs_unbounded(int N) {
    GadgetVerifyReport rep;
    rep.gadget = "gadget_pfs_unbounded_false";
    const Coloring f = gadget_pfs_unbounded_false();
    for (int x = 0; x < N; ++x) {
        for (int y = x + 1; y < N; ++y) {
            ++rep.checks;
            if (is_free_setvalued(f, FinSet::of({x, y}))) ++rep.failures;
        }
    }
    return rep;
}

GadgetVerifyReport verify_pfs_noncomputable(const EnumerationSchedule& sched, int N) {
    GadgetVerifyReport rep;
    rep.gadget = "gadget_pfs_noncomputable_bound";
    if (N > 20) throw std::invalid_argument("verify_pfs_noncomputable: full scan capped at N = 20");
    const Coloring f = gadget_pfs_noncomputable_bound(sched);
    // route 1: literal freeness semantics, f({x}) /\ H <= {x}, with the
    // value sets read off the coloring;
    // route 2: the modulus-domination reading of the same sets.
    std::vector<std::uint64_t> value(static_cast<std::size_t>(N));
    for (int x = 0; x < N; ++x) {
        std::uint64_t mask = 0;
        for (int e : f.eval_set(FinSet::of({x})))
            if (e < N) mask |= std::uint64_t{1} << e;
        value[static_cast<std::size_t>(x)] = mask;
    }
    for (std::uint64_t H = 1; H < (std::uint64_t{1} << N); ++H) {
        bool free = true;
        for (int x = 0; x < N && free; ++x)
            if ((H >> x) & 1)
                free = (value[static_cast<std::size_t>(x)] & H & ~(std::uint64_t{1} << x)) == 0;
        if (!free) continue;
        const FinSet Hs = FinSet::from_mask(H);
        for (int i = 0; i + 1 < Hs.size(); ++i) {
            ++rep.checks;
            if (Hs[i + 1] <= modulus(sched, Hs[i])) ++rep.failures;
        }
    }
    return rep;
}

}  // namespace largesets
