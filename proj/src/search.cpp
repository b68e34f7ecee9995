#include "largesets/search.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace largesets {

MaskedColoring MaskedColoring::build(const Coloring& f, int bound) {
    if (bound < 0 || bound > 30)
        throw std::invalid_argument("MaskedColoring: bound out of range");
    MaskedColoring mc;
    mc.bound = bound;
    mc.set_valued = f.is_set_valued();
    for (const FinSet& s : f.domain().members_within(bound)) {
        mc.member_masks.push_back(s.to_mask());
        if (mc.set_valued) {
            const FinSet v = f.eval_set(s);
            std::uint64_t vm = 0;
            for (int e : v)
                if (e < bound) vm |= std::uint64_t{1} << e;  // bigger values never meet H
            mc.value_masks.push_back(vm);
            mc.colors.push_back(0);
        } else {
            mc.colors.push_back(f.eval(s));
            mc.value_masks.push_back(0);
        }
    }
    return mc;
}

bool satisfies_masked(const MaskedColoring& mc, const SolutionKind& kind, std::uint64_t H) {
    const std::size_t n = mc.member_masks.size();
    switch (kind.tag) {
        case SolutionKind::Tag::Homogeneous: {
            bool seen = false;
            long long first = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if ((mc.member_masks[i] & H) != mc.member_masks[i]) continue;
                if (!seen) {
                    seen = true;
                    first = mc.colors[i];
                } else if (mc.colors[i] != first) {
                    return false;
                }
            }
            return seen;
        }
        case SolutionKind::Tag::FreeScalar: {
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t s = mc.member_masks[i];
                if ((s & H) != s) continue;
                const long long c = mc.colors[i];
                if (c < 0 || c >= mc.bound) continue;
                const std::uint64_t cbit = std::uint64_t{1} << c;
                if ((H & cbit) && !(s & cbit)) return false;
            }
            return true;
        }
        case SolutionKind::Tag::FreeSetValued: {
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t s = mc.member_masks[i];
                if ((s & H) != s) continue;
                if (mc.value_masks[i] & H & ~s) return false;
            }
            return true;
        }
        case SolutionKind::Tag::ThinFor: {
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t s = mc.member_masks[i];
                if ((s & H) == s && mc.colors[i] == kind.color) return false;
            }
            return true;
        }
        case SolutionKind::Tag::Thin: {
            for (long long c = 0; c <= kind.max_color; ++c) {
                bool hit = false;
                for (std::size_t i = 0; i < n && !hit; ++i) {
                    const std::uint64_t s = mc.member_masks[i];
                    hit = (s & H) == s && mc.colors[i] == c;
                }
                if (!hit) return true;
            }
            return false;
        }
        case SolutionKind::Tag::Rainbow: {
            std::vector<long long> cs;
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t s = mc.member_masks[i];
                if ((s & H) == s) cs.push_back(mc.colors[i]);
            }
            std::sort(cs.begin(), cs.end());
            return std::adjacent_find(cs.begin(), cs.end()) == cs.end();
        }
    }
    return false;
}

std::uint64_t binomial(int n, int m) {
    if (m < 0 || m > n) return 0;
    m = std::min(m, n - m);
    std::uint64_t r = 1;
    for (int i = 1; i <= m; ++i) r = r * static_cast<std::uint64_t>(n - m + i) / static_cast<std::uint64_t>(i);
    return r;
}

namespace {

/// Mask of the rank-th m-combination of universe indices, lex order.
std::uint64_t unrank_combination(std::uint64_t rank, int n, int m,
                                 const std::vector<int>& universe) {
    std::uint64_t mask = 0;
    int next = 0;
    for (int picked = 0; picked < m; ++picked) {
        for (int x = next; x < n; ++x) {
            const std::uint64_t block = binomial(n - x - 1, m - picked - 1);
            if (rank < block) {
                mask |= std::uint64_t{1} << universe[static_cast<std::size_t>(x)];
                next = x + 1;
                break;
            }
            rank -= block;
        }
    }
    return mask;
}

constexpr std::uint64_t kNoHit = ~std::uint64_t{0};
constexpr std::uint64_t kBlock = 4096;  // fixed, so results ignore thread count

struct Prepared {
    MaskedColoring mc;
    std::vector<int> elems;
    int n;
    std::uint64_t total;
};

Prepared prepare(const Coloring& f, const SolutionKind& kind, int m, const FinSet& universe) {
    (void)kind;
    if (m < 0) throw std::invalid_argument("find_solution: negative size");
    const int bound = universe.empty() ? 0 : universe.max() + 1;
    Prepared p{MaskedColoring::build(f, bound), universe.elements(), universe.size(),
               binomial(universe.size(), m)};
    return p;
}

}  // namespace

std::optional<FinSet> find_solution_serial(const Coloring& f, const SolutionKind& kind, int m,
                                           const FinSet& universe) {
    const Prepared p = prepare(f, kind, m, universe);
    for (std::uint64_t r = 0; r < p.total; ++r) {
        const std::uint64_t H = unrank_combination(r, p.n, m, p.elems);
        if (satisfies_masked(p.mc, kind, H)) return FinSet::from_mask(H);
    }
    return std::nullopt;
}

std::optional<FinSet> find_solution_parallel(const Coloring& f, const SolutionKind& kind, int m,
                                             const FinSet& universe) {
    const Prepared p = prepare(f, kind, m, universe);
    for (std::uint64_t base = 0; base < p.total; base += kBlock) {
        const std::uint64_t end = std::min(p.total, base + kBlock);
        std::uint64_t best = kNoHit;
#ifdef _OPENMP
#pragma omp parallel for reduction(min : best) schedule(static)
#endif
        for (long long r = static_cast<long long>(base); r < static_cast<long long>(end); ++r) {
            const std::uint64_t H =
                unrank_combination(static_cast<std::uint64_t>(r), p.n, m, p.elems);
            if (satisfies_masked(p.mc, kind, H))
                best = std::min(best, static_cast<std::uint64_t>(r));
        }
        if (best != kNoHit)
            return FinSet::from_mask(unrank_combination(best, p.n, m, p.elems));
    }
    return std::nullopt;
}

std::optional<FinSet> find_solution(const Coloring& f, const SolutionKind& kind, int m,
                                    const FinSet& universe) {
    return find_solution_parallel(f, kind, m, universe);
}

std::optional<FinSet> find_solution(const Coloring& f, const SolutionKind& kind, int m, int N) {
    return find_solution(f, kind, m, interval_universe(0, N));
}

std::vector<FinSet> find_all_solutions_serial(const Coloring& f, const SolutionKind& kind, int m,
                                              const FinSet& universe) {
    const Prepared p = prepare(f, kind, m, universe);
    std::vector<FinSet> out;
    for (std::uint64_t r = 0; r < p.total; ++r) {
        const std::uint64_t H = unrank_combination(r, p.n, m, p.elems);
        if (satisfies_masked(p.mc, kind, H)) out.push_back(FinSet::from_mask(H));
    }
    return out;
}

std::vector<FinSet> find_all_solutions(const Coloring& f, const SolutionKind& kind, int m,
                                       const FinSet& universe) {
    const Prepared p = prepare(f, kind, m, universe);
    std::vector<char> hit(p.total, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long r = 0; r < static_cast<long long>(p.total); ++r) {
        const std::uint64_t H = unrank_combination(static_cast<std::uint64_t>(r), p.n, m, p.elems);
        if (satisfies_masked(p.mc, kind, H)) hit[static_cast<std::size_t>(r)] = 1;
    }
    std::vector<FinSet> out;
    for (std::uint64_t r = 0; r < p.total; ++r)
        if (hit[r]) out.push_back(FinSet::from_mask(unrank_combination(r, p.n, m, p.elems)));
    return out;
}

FinSet interval_universe(int lo, int N) {
    std::vector<int> xs;
    for (int x = lo; x < N; ++x) xs.push_back(x);
    return FinSet(std::move(xs));
}

}  // namespace largesets
