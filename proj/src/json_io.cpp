#include "centerpole/json_io.hpp"

#include <stdexcept>

namespace centerpole {

Json to_json(const LatticePoint& p) {
    Json a = Json::array();
    for (auto c : p.coords()) a.push_back(c);
    return a;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RationalPoint& p) {
    Json a = Json::array();
    for (const auto& c : p.coords()) a.push_back(to_string(c));
    return a;
}

Json to_json(const Hyperplane& h) { return Json{{"normal", to_json(h.normal())}, {"offset", to_json(h.offset())}}; }

Json to_json(const std::vector<LatticePoint>& points) {
    Json a = Json::array();
    for (const auto& p : points) a.push_back(to_json(p));
    return a;
}

Json to_json(const std::vector<RationalPoint>& points) {
    Json a = Json::array();
    for (const auto& p : points) a.push_back(to_json(p));
    return a;
}

LatticePoint lattice_point_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("a lattice point must be a JSON array of integers");
    std::vector<std::int64_t> coords;
    for (const auto& c : j) {
        if (!c.is_number_integer()) throw std::invalid_argument("lattice coordinates must be integers");
        coords.push_back(c.get<std::int64_t>());
    }
    return LatticePoint(std::move(coords));
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()), 10);
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("a rational must be an integer or a \"p/q\" string");
}

RationalPoint rational_point_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("a point must be a JSON array");
    std::vector<Rational> coords;
    for (const auto& c : j) coords.push_back(rational_from_json(c));
    return RationalPoint(std::move(coords));
}

std::vector<LatticePoint> lattice_points_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("a point list must be a JSON array");
    std::vector<LatticePoint> out;
    for (const auto& p : j) out.push_back(lattice_point_from_json(p));
    return out;
}

std::vector<RationalPoint> rational_points_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("a point list must be a JSON array");
    std::vector<RationalPoint> out;
    for (const auto& p : j) out.push_back(rational_point_from_json(p));
    return out;
}

Json to_json(const CoverReport& report) {
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"axis", f.facet.axis},
                            {"level", f.facet.level},
                            {"anchor", f.anchor},
                            {"shape", std::string(to_string(f.shape))},
                            {"reason", f.reason}});
    }
    return Json{{"k", report.k}, {"s", report.s}, {"sets", report.total}, {"failures", failures}};
}

Json to_json(const TShapeCertificate& cert) {
    Json hs = Json::array();
    for (const auto& h : cert.hyperplanes) hs.push_back(to_json(h));
    return Json{{"hyperplanes", hs}, {"assignment", cert.assignment}};
}

Json to_json(const TShapeVerdict& verdict) {
    Json j{{"verdict", verdict.t_shaped ? "yes" : "no"}, {"nodes", verdict.nodes}};
    if (verdict.certificate) j["certificate"] = to_json(*verdict.certificate);
    if (!verdict.note.empty()) j["note"] = verdict.note;
    return j;
}

Json to_json(const TValueReport& report) {
    Json counter = Json::array();
    for (const auto& s : report.counterexamples) counter.push_back(to_json(s));
    return Json{{"n", report.n},
                {"t", report.t},
                {"trials", report.trials},
                {"seed", report.seed},
                {"random_set_size", report.random_set_size},
                {"counterexamples", counter},
                {"witness", to_json(report.witness)},
                {"witness_t_shaped", report.witness_t_shaped},
                {"ok", report.ok()}};
}

Json to_json(const ScanReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"x", to_json(v.x)},
                              {"mirror", to_json(v.mirror)},
                              {"center", v.center_index},
                              {"color", v.color},
                              {"within_documented_region", v.within_documented_region}});
    }
    return Json{{"rule", report.rule},
                {"centers", to_json(report.centers)},
                {"innerRadius", to_json(report.inner_radius)},
                {"samples", report.samples},
                {"seed", report.seed},
                {"checked", report.checked},
                {"violation_count", report.violation_count},
                {"unexplained_count", report.unexplained_count},
                {"violations", violations}};
}

Json to_json(const WindowVerdict& verdict, bool include_witness) {
    Json j{{"kind", to_string(verdict.kind)},
           {"stats",
            {{"vertices", verdict.stats.vertices},
             {"edges", verdict.stats.edges},
             {"components", verdict.stats.components},
             {"decisions", verdict.stats.decisions},
             {"conflicts", verdict.stats.conflicts}}}};
    if (include_witness && verdict.witness) j["witness"] = *verdict.witness;
    return j;
}

Json to_json(const ScheduleRow& row, bool include_witness) {
    Json periods = Json::array();
    for (const auto& p : row.periods) periods.push_back(p ? Json(*p) : Json(nullptr));
    Json j{{"r", row.r}, {"R", row.R}, {"verdict", to_json(row.verdict, include_witness)}};
    if (row.verdict.witness) j["axis_periods"] = periods;
    return j;
}

}  // namespace centerpole
