#include "delpezzo/json_io.hpp"

namespace delpezzo {

Json json_int(const Int& n) {
    if (n.fits_slong_p())
        return n.get_si();
    return n.get_str();
}

Json to_json(const DivisorClass& c) {
    Json a = Json::array();
    for (const auto& ai : c.a)
        a.push_back(json_int(ai));
    return Json{{"d", json_int(c.d)}, {"a", a}};
}

Json to_json(const PointSpec& p) {
    switch (p.kind) {
    case PointSpec::Kind::General:
        return Json{{"kind", "general"}};
    case PointSpec::Kind::OnDistinguished:
        return Json{{"kind", "distinguished"}, {"class", to_json(p.cls)}};
    case PointSpec::Kind::AnticanonicalNode:
        return Json{{"kind", "node"}};
    }
    return Json{{"kind", "?"}};
}

Json to_json(const SeshadriResult& res) {
    Json j{{"value", rat_to_string(res.value)}, {"attained", res.attained}};
    if (res.witness)
        j["witness"] = Json{{"class", to_json(res.witness->first)},
                            {"mult", json_int(res.witness->second)}};
    if (res.family)
        j["family"] = Json{{"shape", res.family->shape}};
    return j;
}

Json to_json(const TableRow& row) {
    Json j = to_json(row.result);
    j["r"] = row.r;
    j["point"] = to_json(row.point);
    return j;
}

Json to_json(const ExclusionReport& rep) {
    Json cases = Json::array();
    for (const auto& c : rep.cases) {
        Json degrees = Json::array(), bounds = Json::array();
        for (const auto& k : c.degrees)
            degrees.push_back(json_int(k));
        for (const auto& b : c.bounds)
            bounds.push_back(json_int(b));
        cases.push_back(Json{{"name", c.name},
                             {"degrees", degrees},
                             {"bounds", bounds},
                             {"total_bound", json_int(c.total_bound)},
                             {"excluded", c.excluded}});
    }
    return Json{{"required_total", json_int(rep.required_total)},
                {"cases", cases},
                {"all_excluded", rep.all_excluded}};
}

Json to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.c)
        coeffs.push_back(rat_to_string(c));
    return Json{{"degree", p.degree()}, {"coefficients_ascending", coeffs}};
}

namespace {

Json to_json(const Cubic& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.c)
        coeffs.push_back(json_int(c));
    return coeffs;
}

} // namespace

Json to_json(const PencilSample& s) {
    Json pts = Json::array();
    for (const auto& p : s.points)
        pts.push_back(Json{{"x", rat_to_string(p.x)}, {"y", rat_to_string(p.y)}});
    return Json{{"points", pts},
                {"f", to_json(s.f)},
                {"g", to_json(s.g)},
                {"discriminant", to_json(s.discriminant)},
                {"degree", s.degree},
                {"squarefree_degree", s.squarefree_degree},
                {"root_count", s.root_count}};
}

Json to_json(const PositivityReport& rep) {
    Json j{{"r", rep.r},
           {"k_squared", json_int(rep.k_squared)},
           {"nef", rep.nef},
           {"pseff", rep.pseff},
           {"rational_positive", rep.rational_positive},
           {"scan_min", json_int(rep.scan_min)},
           {"scan_d_max", rep.scan_d_max},
           {"assumptions", rep.assumptions}};
    if (rep.nef_violation)
        j["nef_violation"] = to_json(*rep.nef_violation);
    if (rep.nef_implied_by_pseff)
        j["nef_implied_by_pseff"] = true;
    if (rep.pseff_violation)
        j["pseff_violation"] = to_json(*rep.pseff_violation);
    if (rep.quartic_pencil_dim)
        j["quartic_pencil_dim"] = json_int(*rep.quartic_pencil_dim);
    if (rep.cubic_system_dim)
        j["cubic_system_dim"] = json_int(*rep.cubic_system_dim);
    return j;
}

} // namespace delpezzo
