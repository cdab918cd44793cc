#include "latsym/json_io.hpp"

namespace latsym {

namespace {

nlohmann::json poly_terms_to_json(const Poly& p) {
    nlohmann::json terms = nlohmann::json::array();
    // descending lex, matching the printed order
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        nlohmann::json exp = nlohmann::json::object();
        for (const auto& [v, e] : it->first.factors()) exp[v.name()] = e;
        terms.push_back({{"exp", exp}, {"coef", rat_to_string(it->second)}});
    }
    return terms;
}

} // namespace

nlohmann::json ring_elem_to_json(const RingElem& f) {
    nlohmann::json j;
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : f.variables()) vars.push_back(v.name());
    j["vars"] = vars;
    j["num"] = poly_terms_to_json(f.numerator());
    j["den"] = poly_terms_to_json(f.denominator());
    return j;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["identity"] = report.identity_id;
    j["pass"] = report.pass();
    j["instances"] = report.instances_checked;
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : report.failures) {
        fails.push_back({{"instance", f.instance},
                         {"lhs", ring_elem_to_json(f.lhs)},
                         {"rhs", ring_elem_to_json(f.rhs)}});
    }
    j["failures"] = fails;
    j["elapsed_seconds"] = report.elapsed_seconds;
    return j;
}

nlohmann::json table_to_json(const ExpansionTable& table) {
    nlohmann::json j;
    j["source"] = table.source_basis;
    j["target"] = table.target_basis;
    j["lambda"] = table.lambda.to_string();
    j["n"] = table.n;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [mu, c] : table.entries)
        entries.push_back({{"partition", mu.to_string()}, {"coefficient", ring_elem_to_json(c)}});
    j["entries"] = entries;
    return j;
}

} // namespace latsym
