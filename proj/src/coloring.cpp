#include "largesets/coloring.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace largesets {

DomainFamily DomainFamily::fixed_tuples(int n) {
    if (n < 0) throw std::invalid_argument("fixed_tuples: negative arity");
    DomainFamily d(DomainKind::FixedTuples);
    d.n_ = n;
    return d;
}

DomainFamily DomainFamily::schreier() { return DomainFamily(DomainKind::Schreier); }

DomainFamily DomainFamily::positive_schreier() {
    return DomainFamily(DomainKind::PositiveSchreier);
}

DomainFamily DomainFamily::exactly_omega_plus_one() {
    return DomainFamily(DomainKind::ExactlyOmegaPlusOne);
}

DomainFamily DomainFamily::barrier_members(Barrier b) {
    DomainFamily d(DomainKind::BarrierMembers);
    d.barrier_ = std::make_shared<Barrier>(std::move(b));
    return d;
}

DomainFamily DomainFamily::bounded_depth(BoundFn h) {
    DomainFamily d(DomainKind::BoundedDepth);
    d.h_ = std::move(h);
    return d;
}

DomainFamily DomainFamily::all_finite() { return DomainFamily(DomainKind::AllFinite); }

bool DomainFamily::member(const FinSet& s) const {
    switch (kind_) {
        case DomainKind::FixedTuples: return s.size() == n_;
        case DomainKind::Schreier: return is_exactly_omega_large(s);
        case DomainKind::PositiveSchreier:
            return is_exactly_omega_large(s) && s.min() > 0;
        case DomainKind::ExactlyOmegaPlusOne: return is_exactly_omega_plus_one_large(s);
        case DomainKind::BarrierMembers: return barrier_->member(s);
        case DomainKind::BoundedDepth:
            return s.empty() || s.size() <= (*h_)(s.min());
        case DomainKind::AllFinite: return true;
    }
    return false;
}

std::vector<FinSet> DomainFamily::members_within(int N) const {
    if (N < 0 || N > 30)
        throw std::invalid_argument("DomainFamily::members_within: horizon out of range");
    std::vector<FinSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
        FinSet s = FinSet::from_mask(mask);
        if (member(s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int DomainFamily::tuple_arity() const {
    if (kind_ != DomainKind::FixedTuples)
        throw std::logic_error("tuple_arity: not a FixedTuples domain");
    return n_;
}

const Barrier& DomainFamily::barrier() const {
    if (kind_ != DomainKind::BarrierMembers)
        throw std::logic_error("barrier: not a BarrierMembers domain");
    return *barrier_;
}

const BoundFn& DomainFamily::depth_bound() const {
    if (kind_ != DomainKind::BoundedDepth)
        throw std::logic_error("depth_bound: not a BoundedDepth domain");
    return *h_;
}

std::string DomainFamily::describe() const {
    switch (kind_) {
        case DomainKind::FixedTuples: return "tuples:" + std::to_string(n_);
        case DomainKind::Schreier: return "schreier";
        case DomainKind::PositiveSchreier: return "positive-schreier";
        case DomainKind::ExactlyOmegaPlusOne: return "omega-plus-one";
        case DomainKind::BarrierMembers: return "barrier:" + barrier_->name;
        case DomainKind::BoundedDepth: return "bounded:" + h_->name;
        case DomainKind::AllFinite: return "all-finite";
    }
    return "?";
}

DomainFamily DomainFamily::parse(const std::string& text) {
    if (text == "schreier") return schreier();
    if (text == "positive-schreier") return positive_schreier();
    if (text == "omega-plus-one") return exactly_omega_plus_one();
    if (text == "all-finite") return all_finite();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        const std::string arg = text.substr(colon + 1);
        if (head == "tuples") return fixed_tuples(std::stoi(arg));
        if (head == "bounded") return bounded_depth(BoundFn::parse(arg));
    }
    throw std::invalid_argument("DomainFamily::parse: unknown domain '" + text + "'");
}

Coloring Coloring::scalar(DomainFamily dom, std::function<long long(const FinSet&)> eval,
                          ColoringMeta meta) {
    Coloring c(std::move(dom));
    c.set_valued_ = false;
    c.scalar_ = std::move(eval);
    c.meta_ = std::move(meta);
    return c;
}

Coloring Coloring::set_valued(DomainFamily dom, std::function<FinSet(const FinSet&)> eval,
                              ColoringMeta meta) {
    Coloring c(std::move(dom));
    c.set_valued_ = true;
    c.setv_ = std::move(eval);
    c.meta_ = std::move(meta);
    return c;
}

namespace {

template <typename Table>
void require_total(const DomainFamily& dom, const Table& table, int horizon) {
    for (const FinSet& s : dom.members_within(horizon))
        if (table.find(s) == table.end())
            throw std::invalid_argument("coloring table: member " + s.to_string() +
                                        " missing within horizon " + std::to_string(horizon));
}

}  // namespace

Coloring Coloring::scalar_table(DomainFamily dom, std::map<FinSet, long long> table,
                                int horizon, ColoringMeta meta) {
    require_total(dom, table, horizon);
    auto shared = std::make_shared<std::map<FinSet, long long>>(std::move(table));
    Coloring c(std::move(dom));
    c.set_valued_ = false;
    c.scalar_ = [shared](const FinSet& s) {
        auto it = shared->find(s);
        if (it == shared->end())
            throw std::out_of_range("coloring table: no entry for " + s.to_string());
        return it->second;
    };
    c.meta_ = std::move(meta);
    c.table_horizon_ = horizon;
    return c;
}

Coloring Coloring::set_table(DomainFamily dom, std::map<FinSet, FinSet> table, int horizon,
                             ColoringMeta meta) {
    require_total(dom, table, horizon);
    auto shared = std::make_shared<std::map<FinSet, FinSet>>(std::move(table));
    Coloring c(std::move(dom));
    c.set_valued_ = true;
    c.setv_ = [shared](const FinSet& s) {
        auto it = shared->find(s);
        if (it == shared->end())
            throw std::out_of_range("coloring table: no entry for " + s.to_string());
        return it->second;
    };
    c.meta_ = std::move(meta);
    c.table_horizon_ = horizon;
    return c;
}

long long Coloring::eval(const FinSet& s) const {
    if (set_valued_) throw std::logic_error("Coloring::eval on set-valued coloring");
    if (!dom_.member(s))
        throw std::invalid_argument("Coloring::eval: " + s.to_string() + " not in domain");
    return scalar_(s);
}

FinSet Coloring::eval_set(const FinSet& s) const {
    if (!set_valued_) throw std::logic_error("Coloring::eval_set on scalar coloring");
    if (!dom_.member(s))
        throw std::invalid_argument("Coloring::eval_set: " + s.to_string() + " not in domain");
    return setv_(s);
}

Coloring Coloring::freeze(int N) const {
    if (set_valued_) {
        std::map<FinSet, FinSet> table;
        for (const FinSet& s : dom_.members_within(N)) table.emplace(s, setv_(s));
        return set_table(dom_, std::move(table), N, meta_);
    }
    std::map<FinSet, long long> table;
    for (const FinSet& s : dom_.members_within(N)) table.emplace(s, scalar_(s));
    return scalar_table(dom_, std::move(table), N, meta_);
}

void save_coloring_jsonl(std::ostream& out, const Coloring& f, int horizon) {
    nlohmann::json header{{"domain", f.domain().describe()},
                          {"horizon", horizon},
                          {"value_kind", f.is_set_valued() ? "set" : "scalar"}};
    out << header.dump() << "\n";
    for (const FinSet& s : f.domain().members_within(horizon)) {
        if (f.is_set_valued())
            out << nlohmann::json{{"s", s.elements()}, {"colors", f.eval_set(s).elements()}}.dump()
                << "\n";
        else
            out << nlohmann::json{{"s", s.elements()}, {"color", f.eval(s)}}.dump() << "\n";
    }
}

Coloring load_coloring_jsonl(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("coloring file: missing header");
    auto header = nlohmann::json::parse(line);
    const std::string domain_text = header.at("domain").get<std::string>();
    const int horizon = header.at("horizon").get<int>();
    const bool set_valued = header.at("value_kind").get<std::string>() == "set";

    std::map<FinSet, long long> scalar_table;
    std::map<FinSet, FinSet> set_table;
    std::vector<FinSet> keys;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        FinSet s(j.at("s").get<std::vector<int>>());
        keys.push_back(s);
        if (set_valued)
            set_table.emplace(std::move(s), FinSet(j.at("colors").get<std::vector<int>>()));
        else
            scalar_table.emplace(std::move(s), j.at("color").get<long long>());
    }

    // A table over a named barrier carries its own membership: the keys.
    const DomainFamily dom =
        domain_text.rfind("barrier:", 0) == 0
            ? DomainFamily::barrier_members(
                  table_barrier(domain_text.substr(8), keys, horizon))
            : DomainFamily::parse(domain_text);
    if (set_valued) return Coloring::set_table(dom, std::move(set_table), horizon);
    return Coloring::scalar_table(dom, std::move(scalar_table), horizon);
}

KBoundedCheck validate_k_bounded(const Coloring& f, int k, int N) {
    if (f.is_set_valued())
        throw std::invalid_argument("validate_k_bounded: scalar colorings only");
    if (k < 1) throw std::invalid_argument("validate_k_bounded: k must be >= 1");
    std::map<long long, std::vector<FinSet>> preimages;
    for (const FinSet& s : f.domain().members_within(N)) preimages[f.eval(s)].push_back(s);
    for (auto& [color, members] : preimages) {
        if (static_cast<int>(members.size()) > k) {
            KBoundedCheck bad;
            bad.ok = false;
            bad.color = color;
            members.resize(static_cast<std::size_t>(k) + 1);
            bad.witnesses = std::move(members);
            return bad;
        }
    }
    return {};
}

ProgressiveCheck validate_progressive(const Coloring& f, int N) {
    if (!f.is_set_valued())
        throw std::invalid_argument("validate_progressive: set-valued colorings only");
    for (const FinSet& s : f.domain().members_within(N)) {
        const FinSet v = f.eval_set(s);
        if (v.empty()) continue;
        if (s.empty() || v.min() < s.min()) return {false, s, v};
    }
    return {};
}

ConstrainedCheck validate_constrained(const Coloring& f, const BoundFn& b, int N) {
    if (!f.is_set_valued())
        throw std::invalid_argument("validate_constrained: set-valued colorings only");
    for (const FinSet& s : f.domain().members_within(N)) {
        const FinSet v = f.eval_set(s);
        if (s.empty()) {
            if (!v.empty()) return {false, s};
            continue;
        }
        if (v.size() > b(s.min())) return {false, s};
    }
    return {};
}

std::vector<ScalarSlice> decompose_setvalued(const Coloring& f, int k, int n, int N) {
    if (!f.is_set_valued())
        throw std::invalid_argument("decompose_setvalued: set-valued colorings only");
    for (const FinSet& s : f.domain().members_within(N))
        if (f.eval_set(s).size() > k)
            throw std::invalid_argument("decompose_setvalued: |f(" + s.to_string() +
                                        ")| exceeds k within horizon");
    std::vector<ScalarSlice> slices;
    for (int m = 0; m <= n; ++m) {
        for (int j = 0; j < k; ++j) {
            std::map<FinSet, long long> table;
            // m-subsets outside f's domain read as 0, so each slice is
            // total on [N]^m.
            for (const FinSet& s : DomainFamily::fixed_tuples(m).members_within(N)) {
                long long value = 0;
                if (f.domain().member(s)) {
                    const FinSet v = f.eval_set(s);
                    if (j < v.size()) value = v[j];
                }
                table.emplace(s, value);
            }
            slices.push_back(
                {m, j,
                 Coloring::scalar_table(DomainFamily::fixed_tuples(m), std::move(table), N)});
        }
    }
    return slices;
}

}  // namespace largesets
