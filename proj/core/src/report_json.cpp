#include "boxcalc/report.hpp"

#include <json.hpp>

namespace boxcalc {

namespace {

nlohmann::ordered_json point_to_json(const RatVec& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Rat& x : v) arr.push_back(rat_to_string(x));
    return arr;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["kind"] = report.kind;
    j["dim"] = report.dim;
    nlohmann::ordered_json xs = nlohmann::ordered_json::array();
    for (const IntVec& a : report.X) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const Int& x : a) row.push_back(x.str());
        xs.push_back(row);
    }
    j["X"] = xs;
    j["seed"] = report.seed;
    j["f"] = report.f;
    j["g"] = report.g;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const PointResult& p : report.points) {
        nlohmann::ordered_json pj;
        pj["point"] = point_to_json(p.point);
        if (!p.f.empty()) pj["f"] = p.f;
        pj["lhs_discrete"] = p.lhs_discrete;
        pj["lhs_continuous"] = p.lhs_continuous;
        pj["difference"] = p.difference;
        pj["rhs_total"] = p.rhs_total;
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const TermRecord& t : p.terms) {
            nlohmann::ordered_json tj;
            tj["s_basis"] = t.s_basis;
            tj["s_dim"] = t.s_dim;
            tj["I"] = t.I;
            tj["J"] = t.J;
            tj["sign"] = t.sign;
            tj["value"] = t.value;
            terms.push_back(std::move(tj));
        }
        pj["terms"] = std::move(terms);
        pj["pass"] = p.pass;
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    j["all_pass"] = report.all_pass;
    return j.dump(2) + "\n";
}

}  // namespace boxcalc
