#include "symineq/json_io.hpp"

#include <algorithm>

namespace symineq {

json partition_to_json(const Partition& p) {
    json j = json::array();
    for (int x : p.parts())
        j.push_back(x);
    return j;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array())
        throw domain_error("partition JSON must be an array of integers");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw domain_error("partition JSON must be an array of integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts)); // validates weakly-decreasing, positive
}

json poly_to_json(const MultiPoly& p) {
    json j;
    j["vars"] = p.vars();
    json terms = json::array();
    // leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json t;
        t["e"] = it->first;
        t["c"] = rat_str(it->second);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly poly_from_json(const json& j) {
    if (!j.contains("vars") || !j.contains("terms"))
        throw domain_error("polynomial JSON needs \"vars\" and \"terms\"");
    std::vector<std::string> given = j["vars"].get<std::vector<std::string>>();
    MultiPoly out{given};
    if (out.vars().size() != given.size())
        throw domain_error("duplicate variable in polynomial JSON");
    // map the given order onto the canonical order
    std::vector<std::size_t> where(given.size());
    for (std::size_t i = 0; i < given.size(); ++i)
        where[i] = *out.var_index(given[i]);
    for (const auto& t : j["terms"]) {
        std::vector<int> e_given = t["e"].get<std::vector<int>>();
        if (e_given.size() != given.size())
            throw domain_error("exponent vector length mismatch in polynomial JSON");
        std::vector<int> e(given.size(), 0);
        for (std::size_t i = 0; i < given.size(); ++i)
            e[where[i]] = e_given[i];
        out.add_term(std::move(e), parse_rational(t["c"].get<std::string>()));
    }
    return out;
}

json poly_to_json(const UniPoly& p) {
    return poly_to_json(p.to_multipoly());
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["status"] = status_name(v.status);
    j["certificate"] = v.certificate;
    if (v.witness) {
        json w;
        w["point"] = json::array();
        for (const auto& c : v.witness->point)
            w["point"].push_back(rat_str(c));
        w["value"] = rat_str(v.witness->value);
        j["witness"] = std::move(w);
    }
    j["budget"] = {{"ds_branches", v.ds_branches}, {"samples", v.samples_used}};
    return j;
}

json report_to_json(const LemmaReport& r, bool with_timings) {
    json j;
    j["lemma"] = r.lemma;
    j["overall"] = r.overall();
    json checks = json::array();
    for (const auto& c : r.checks) {
        json cj;
        cj["name"] = c.name;
        cj["status"] = c.status;
        cj["detail"] = c.detail;
        if (with_timings)
            cj["ms"] = c.ms;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::vector<Rational> rationals_from_json(const json& j) {
    std::vector<Rational> out;
    for (const auto& v : j)
        out.push_back(parse_rational(v.get<std::string>()));
    return out;
}

} // namespace symineq
