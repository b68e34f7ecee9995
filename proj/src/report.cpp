#include "largesets/report.hpp"

namespace largesets {

Json report_header(const std::string& command) {
    Json j;
    j["tool"] = "largesets";
    j["rng"] = SplitMix64::algorithm_id;
    j["command"] = command;
    return j;
}

Json to_json(const FinSet& s) { return Json(s.elements()); }

Json to_json(const Ordinal& a) {
    Json out = Json::array();
    for (const auto& [e, c] : a.terms) out.push_back(Json::array({e, c}));
    return out;
}

Ordinal ordinal_from_json(const Json& j) {
    std::vector<std::pair<int, long long>> terms;
    for (const auto& term : j)
        terms.emplace_back(term.at(0).get<int>(), term.at(1).get<long long>());
    return Ordinal::from_terms(std::move(terms));
}

}  // namespace largesets
