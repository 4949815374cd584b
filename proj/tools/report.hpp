#ifndef CONVEX_CODES_TOOLS_REPORT_HPP
#define CONVEX_CODES_TOOLS_REPORT_HPP

#include <ostream>
#include <string>

#include <json.hpp>

#include "convex_codes/convex_codes.hpp"

namespace convex_codes::cli {

using Json = nlohmann::ordered_json;

inline Json words_json(const std::vector<Codeword>& ws)
{
    Json a = Json::array();
    for (Codeword w : ws)
        a.push_back(to_string(w));
    return a;
}

inline Json code_json(const Code& c)
{
    return Json{{"n", c.n()}, {"codewords", words_json(c.words())}};
}

inline std::string verdict_certificate(const ContractibilityVerdict& v)
{
    if (v.kind != Contractibility::NotContractible)
        return "";
    if (v.betti_degree == -1)
        return "betti[-1]=1";
    return "betti[" + std::to_string(v.betti_degree) + "]=" + std::to_string(v.betti_value);
}

inline Json certificate_json(const RealizationCertificate& c)
{
    Json checks = Json::array();
    for (const auto& ch : c.checks)
        checks.push_back(Json{{"name", ch.name},
                              {"status", ch.skipped ? "skip" : ch.passed ? "pass" : "fail"},
                              {"detail", ch.detail}});
    return Json{{"method", to_string(c.method)},
                {"dimension", c.dimension},
                {"ambient", to_string(c.ambient)},
                {"valid", c.valid()},
                {"target", words_json(c.target.words())},
                {"achieved", words_json(c.achieved.words())},
                {"checks", checks}};
}

/// Everything `analyze` reports, in a fixed field order.
inline Json analyze_code(const Code& c, std::size_t nonlocal_budget)
{
    Json r;
    r["code"] = code_json(c);
    r["facets"] = words_json(simplicial_complex(c).facets());
    r["violators"] = words_json(simplicial_violators(c));

    const auto local = local_obstructions(c);
    Json lo = Json::array();
    for (const auto& o : local.obstructions)
        lo.push_back(Json{{"sigma", to_string(o.sigma)},
                          {"link_facets", words_json(o.link_complex.facets())},
                          {"verdict", to_string(o.verdict.kind)},
                          {"certificate", verdict_certificate(o.verdict)}});
    r["local_obstructions"] = lo;
    r["local_unknown"] = words_json(local.unknown);

    const auto nl = nonlocal_obstructions(c, nonlocal_budget);
    Json no = Json::array();
    for (const auto& o : nl.obstructions)
        no.push_back(Json{{"sigma1", to_string(o.sigma)},
                          {"sigma2", to_string(o.sigma2)},
                          {"profile1", to_string(o.profile1)},
                          {"profile2", to_string(o.profile2)}});
    r["nonlocal_obstructions"] = no;
    r["nonlocal_search"] =
        Json{{"budget", nonlocal_budget}, {"pairs_examined", nl.pairs_examined}, {"exhausted", nl.exhausted}};

    const auto flags = classify_completeness(c);
    const auto miss = missing_max_intersection(c);
    r["completeness"] = Json{{"intersection_complete", flags.intersection_complete},
                             {"max_intersection_complete", flags.max_intersection_complete},
                             {"missing_intersection", miss ? Json(to_string(*miss)) : Json(nullptr)}};

    try {
        const auto out = realize(c);
        if (!out.applicable()) {
            r["realization"] = Json{{"verdict", "not-applicable"}, {"witness", to_string(*out.not_applicable)}};
        } else {
            const auto& cert = out.realization->certificate;
            r["realization"] = Json{{"verdict", "realizable"},
                                    {"method", to_string(cert.method)},
                                    {"dimension", cert.dimension},
                                    {"ambient", to_string(cert.ambient)},
                                    {"valid", cert.valid()}};
        }
    } catch (const std::length_error& e) {
        r["realization"] = Json{{"verdict", "skipped"}, {"reason", e.what()}};
    }
    return r;
}

namespace detail {

inline std::string scalar(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return "none";
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t k = 0; k < j.size(); ++k)
            s += (k ? ", " : "") + scalar(j[k]);
        return s + "]";
    }
    if (j.is_object()) {
        std::string s;
        for (auto it = j.begin(); it != j.end(); ++it)
            s += (it == j.begin() ? "" : " ") + it.key() + "=" + scalar(it.value());
        return s;
    }
    return j.dump();
}

inline bool all_objects(const Json& a)
{
    for (const auto& x : a)
        if (!x.is_object())
            return false;
    return !a.empty();
}

} // namespace detail

/// Plain-text rendering of a JSON report; carries exactly the same fields and values.
inline void render_text(std::ostream& out, const Json& j, const std::string& indent = "")
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        if (v.is_object()) {
            out << indent << it.key() << ":\n";
            render_text(out, v, indent + "  ");
        } else if (v.is_array() && detail::all_objects(v)) {
            out << indent << it.key() << ":\n";
            for (const auto& x : v)
                out << indent << "  - " << detail::scalar(x) << '\n';
        } else {
            out << indent << it.key() << ": " << detail::scalar(v) << '\n';
        }
    }
}

} // namespace convex_codes::cli

#endif
