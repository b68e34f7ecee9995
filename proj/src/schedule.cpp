#include "largesets/schedule.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace largesets {

EnumerationSchedule::EnumerationSchedule(std::vector<std::pair<int, int>> evts)
    : events(std::move(evts)) {
    std::set<int> seen;
    for (const auto& [e, s] : events) {
        if (e < 0) throw std::invalid_argument("EnumerationSchedule: negative element");
        if (s < 1) throw std::invalid_argument("EnumerationSchedule: stage must be >= 1");
        if (!seen.insert(e).second)
            throw std::invalid_argument("EnumerationSchedule: element enumerated twice");
    }
}

int EnumerationSchedule::max_stage() const {
    int m = 0;
    for (const auto& [e, s] : events) m = std::max(m, s);
    return m;
}

EnumerationSchedule EnumerationSchedule::load_jsonl(std::istream& in) {
    std::vector<std::pair<int, int>> evts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        evts.emplace_back(j.at("element").get<int>(), j.at("stage").get<int>());
    }
    return EnumerationSchedule(std::move(evts));
}

void EnumerationSchedule::save_jsonl(std::ostream& out) const {
    for (const auto& [e, s] : events)
        out << nlohmann::json{{"element", e}, {"stage", s}}.dump() << "\n";
}

int modulus(const EnumerationSchedule& sched, int x) {
    int t = 0;
    for (const auto& [e, s] : sched.events)
        if (e <= x) t = std::max(t, s);
    return t;
}

int approx_modulus(const EnumerationSchedule& sched, int n, int x) {
    int t = 0;
    for (const auto& [e, s] : sched.events)
        if (e <= x && s <= n) t = std::max(t, s);
    return t;
}

int normalized_approx(const EnumerationSchedule& sched, int n, int x) {
    int best = 1;
    for (int y = 0; y <= x; ++y) best = std::max(best, approx_modulus(sched, n, y));
    return best;
}

int normalized_modulus(const EnumerationSchedule& sched, int x) {
    return normalized_approx(sched, sched.max_stage(), x);
}

int settling_stage(const EnumerationSchedule& sched, int x) {
    const int target = normalized_modulus(sched, x);
    for (int n = 0; n <= sched.max_stage(); ++n)
        if (normalized_approx(sched, n, x) == target) return n;
    return sched.max_stage();
}

LevelFamily::LevelFamily(std::vector<EnumerationSchedule> ls) : levels(std::move(ls)) {
    if (levels.empty()) throw std::invalid_argument("LevelFamily: at least one level required");
}

const EnumerationSchedule& LevelFamily::level(int k) const {
    if (k < 1) throw std::invalid_argument("LevelFamily::level: k must be >= 1");
    const int idx = std::min<int>(k, static_cast<int>(levels.size())) - 1;
    return levels[static_cast<std::size_t>(idx)];
}

}  // namespace largesets
