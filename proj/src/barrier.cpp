#include "largesets/barrier.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace largesets {

std::vector<FinSet> Barrier::members_within(int N) const {
    if (N < 0 || N > 30) throw std::invalid_argument("Barrier::members_within: horizon out of range");
    std::vector<FinSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
        FinSet s = FinSet::from_mask(mask);
        if (member(s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Barrier schreier_barrier() {
    return Barrier{"schreier", [](const FinSet& s) { return is_exactly_omega_large(s); },
                   BoundFn::successor()};
}

Barrier fixed_size_barrier(int n) {
    return Barrier{"tuples:" + std::to_string(n),
                   [n](const FinSet& s) { return s.size() == n; }, BoundFn::constant(n)};
}

Barrier table_barrier(std::string name, std::vector<FinSet> members, int horizon) {
    auto table = std::make_shared<std::set<FinSet>>(members.begin(), members.end());
    return Barrier{std::move(name),
                   [table, horizon](const FinSet& s) {
                       if (!s.empty() && s.max() >= horizon)
                           throw std::out_of_range("table barrier queried beyond its horizon");
                       return table->count(s) > 0;
                   },
                   std::nullopt};
}

Barrier load_barrier_jsonl(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("barrier file: missing header");
    auto header = nlohmann::json::parse(line);
    const std::string name = header.at("name").get<std::string>();
    const int horizon = header.at("horizon").get<int>();
    std::vector<FinSet> members;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        members.emplace_back(j.at("s").get<std::vector<int>>());
    }
    return table_barrier(name, std::move(members), horizon);
}

void save_barrier_jsonl(std::ostream& out, const Barrier& b, int horizon) {
    out << nlohmann::json{{"name", b.name}, {"horizon", horizon}}.dump() << "\n";
    for (const FinSet& s : b.members_within(horizon))
        out << nlohmann::json{{"s", s.elements()}}.dump() << "\n";
}

BarrierReport check_barrier_prefix(const Barrier& b, int N) {
    if (N < 2) throw std::invalid_argument("check_barrier_prefix: N must be >= 2");
    BarrierReport report;
    report.horizon = N;

    const std::vector<FinSet> members = b.members_within(N);
    std::vector<std::uint64_t> masks;
    masks.reserve(members.size());
    for (const FinSet& s : members) masks.push_back(s.to_mask());

    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
            if (i != j && masks[i] != masks[j] && (masks[i] & masks[j]) == masks[i])
                report.subset_violations.emplace_back(members[i], members[j]);

    // Every nonempty subset of [0,N), read in increasing order. Covered
    // means some initial segment is a member; anything else stays open at
    // this horizon because an infinite extension might still hit one.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << N); ++mask) {
        FinSet s = FinSet::from_mask(mask);
        bool covered = false;
        for (int len = 1; len <= s.size() && !covered; ++len)
            covered = b.member(s.prefix(len));
        if (covered)
            ++report.covered;
        else
            ++report.undetermined;
    }
    return report;
}

bool is_omega_bounded_by(const Barrier& b, const BoundFn& h, int N) {
    for (const FinSet& s : b.members_within(N))
        if (!s.empty() && s.size() > h(s.min())) return false;
    return true;
}

}  // namespace largesets
