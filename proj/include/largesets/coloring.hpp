#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "largesets/barrier.hpp"
#include "largesets/bound_fn.hpp"
#include "largesets/fin_set.hpp"

namespace largesets {

enum class DomainKind {
    FixedTuples,          // [N]^n
    Schreier,             // [N]^{!w}
    PositiveSchreier,     // [N]^{!w} with min s > 0
    ExactlyOmegaPlusOne,  // x.s with s exactly omega-large, x < min s
    BarrierMembers,       // members of a given barrier
    BoundedDepth,         // [N]^{<= h(.)}
    AllFinite             // [N]^{<w}
};

/// A decidable family of finite sets that a coloring is total on.
class DomainFamily {
public:
    static DomainFamily fixed_tuples(int n);
    static DomainFamily schreier();
    static DomainFamily positive_schreier();
    static DomainFamily exactly_omega_plus_one();
    static DomainFamily barrier_members(Barrier b);
    static DomainFamily bounded_depth(BoundFn h);
    static DomainFamily all_finite();

    DomainKind kind() const { return kind_; }
    bool member(const FinSet& s) const;

    /// All members within [0,N), in lexicographic order. This order fixes
    /// the rank bijections the reductions use.
    std::vector<FinSet> members_within(int N) const;

    int tuple_arity() const;            // FixedTuples only
    const Barrier& barrier() const;     // BarrierMembers only
    const BoundFn& depth_bound() const; // BoundedDepth only

    std::string describe() const;

    /// Parses "tuples:n", "schreier", "positive-schreier", "omega-plus-one",
    /// "bounded:<bound>", "all-finite". BarrierMembers is not parseable; it
    /// is built programmatically.
    static DomainFamily parse(const std::string& text);

private:
    DomainKind kind_;
    int n_ = 0;
    std::optional<BoundFn> h_;
    std::shared_ptr<Barrier> barrier_;

    explicit DomainFamily(DomainKind kind) : kind_(kind) {}
};

struct ColoringMeta {
    std::optional<int> k_bounded;
    std::optional<bool> progressive;
    std::optional<std::string> constrained_by;  // bound name, for reports
};

/// A total coloring of a domain family, scalar- or set-valued. Backed by a
/// pure function or by a finite table; tables must cover every member
/// within their declared horizon or the load fails.
class Coloring {
public:
    static Coloring scalar(DomainFamily dom, std::function<long long(const FinSet&)> eval,
                           ColoringMeta meta = {});
    static Coloring set_valued(DomainFamily dom, std::function<FinSet(const FinSet&)> eval,
                               ColoringMeta meta = {});
    static Coloring scalar_table(DomainFamily dom, std::map<FinSet, long long> table,
                                 int horizon, ColoringMeta meta = {});
    static Coloring set_table(DomainFamily dom, std::map<FinSet, FinSet> table, int horizon,
                              ColoringMeta meta = {});

    bool is_set_valued() const { return set_valued_; }
    const DomainFamily& domain() const { return dom_; }
    const ColoringMeta& meta() const { return meta_; }

    long long eval(const FinSet& s) const;    // scalar only; rejects non-members
    FinSet eval_set(const FinSet& s) const;   // set-valued only

    /// Horizon of the backing table, if table-backed.
    std::optional<int> table_horizon() const { return table_horizon_; }

    /// Materializes the coloring as a table over members within [0,N).
    Coloring freeze(int N) const;

private:
    DomainFamily dom_;
    bool set_valued_ = false;
    std::function<long long(const FinSet&)> scalar_;
    std::function<FinSet(const FinSet&)> setv_;
    ColoringMeta meta_;
    std::optional<int> table_horizon_;

    explicit Coloring(DomainFamily dom) : dom_(std::move(dom)) {}
};

/// Coloring table serialization, JSON Lines. Header declares the domain
/// kind, horizon and value kind; rows are {"s":[...],"color":c} or
/// {"s":[...],"colors":[...]}.
void save_coloring_jsonl(std::ostream& out, const Coloring& f, int horizon);
Coloring load_coloring_jsonl(std::istream& in);

struct KBoundedCheck {
    bool ok = true;
    long long color = 0;             // a violating color when !ok
    std::vector<FinSet> witnesses;   // k+1 members sharing it
};

/// True iff no color has more than k preimages among members within [0,N).
KBoundedCheck validate_k_bounded(const Coloring& f, int k, int N);

struct ProgressiveCheck {
    bool ok = true;
    FinSet member;
    FinSet value;
};

/// Set-valued f is progressive when f(s) is empty or min f(s) >= min s.
/// The empty member counts as progressive only with f({}) = {}.
ProgressiveCheck validate_progressive(const Coloring& f, int N);

struct ConstrainedCheck {
    bool ok = true;
    FinSet member;
};

/// |f(s)| <= b(min s) for every member within [0,N); the empty member is
/// constrained only by f({}) = {}.
ConstrainedCheck validate_constrained(const Coloring& f, const BoundFn& b, int N);

struct ScalarSlice {
    int m = 0;  // member size this slice reads
    int j = 0;  // position within the value set
    Coloring coloring;
};

/// Positional scalar decomposition of a k-constrained set-valued coloring
/// over [N]^{<=n}: f_{m,j}(s) = j-th element of f(s) for |s| = m, else 0.
/// Any H simultaneously free for every slice is set-valued-free for f.
std::vector<ScalarSlice> decompose_setvalued(const Coloring& f, int k, int n, int N);

}  // namespace largesets
