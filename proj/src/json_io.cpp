#include "harmconv/json_io.hpp"

#include <fstream>

namespace harmconv {

json to_json(Cx z) { return json::array({z.real(), z.imag()}); }

Cx cx_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("expected [re, im] pair");
    return Cx{j[0].get<double>(), j[1].get<double>()};
}

namespace {

json coeffs_to_json(const std::vector<Cx>& coeffs) {
    json arr = json::array();
    for (Cx c : coeffs)
        arr.push_back(to_json(c));
    return arr;
}

std::vector<Cx> coeffs_from_json(const json& j) {
    std::vector<Cx> out;
    for (const auto& item : j)
        out.push_back(cx_from_json(item));
    return out;
}

} // namespace

json to_json(const PowerSeries& p) { return coeffs_to_json(p.coeffs()); }
json to_json(const Polynomial& p) { return coeffs_to_json(p.coeffs()); }

json to_json(const RationalMap& r) {
    return json{{"num", to_json(r.num)}, {"den", to_json(r.den)}, {"power", r.power}, {"unit", to_json(r.unit)}};
}

json to_json(const HarmonicMap& f) {
    json j{{"gamma", f.gamma}, {"order", f.order()}, {"h", to_json(f.h)}, {"g", to_json(f.g)}};
    j["omega"] = f.omega ? to_json(*f.omega) : json(nullptr);
    return j;
}

json to_json(const CriterionReport& rep) {
    json j{{"v", rep.v},
           {"u", to_json(rep.u)},
           {"ab_modulus", rep.ab_modulus},
           {"cond_10a", rep.cond_10a},
           {"cond_11", rep.cond_11},
           {"applicable", rep.applicable},
           {"b1_warning", rep.b1_warning}};
    j["z0_closed"] = rep.z0_closed ? to_json(*rep.z0_closed) : json(nullptr);
    j["z0_roots"] = rep.z0_roots ? to_json(*rep.z0_roots) : json(nullptr);
    j["corollaries"] = json{{"gamma_thirds", rep.corollaries.gamma_thirds},
                            {"right_halfplane", rep.corollaries.right_halfplane},
                            {"left_halfplane", rep.corollaries.left_halfplane}};
    return j;
}

json to_json(const VerificationReport& rep) {
    return json{{"sup_omega_tilde_interior", rep.sup_omega_tilde_interior},
                {"sup_omega_tilde_boundary", rep.sup_omega_tilde_boundary},
                {"poles_in_disk", rep.poles_in_disk},
                {"min_jacobian", rep.min_jacobian},
                {"halfplane_residual", rep.halfplane_residual},
                {"direction", rep.direction},
                {"monotone_arc_count", rep.monotone_arc_count},
                {"passed", rep.passed},
                {"params", json{{"r_max", rep.r_max},
                                {"grid_r", rep.grid.radial},
                                {"grid_t", rep.grid.angular},
                                {"tol", rep.tol}}}};
}

PowerSeries power_series_from_json(const json& j) { return PowerSeries(coeffs_from_json(j)); }
Polynomial polynomial_from_json(const json& j) { return Polynomial(coeffs_from_json(j)); }

RationalMap rational_map_from_json(const json& j) {
    RationalMap r;
    r.num = polynomial_from_json(j.at("num"));
    r.den = polynomial_from_json(j.at("den"));
    r.power = j.at("power").get<int>();
    r.unit = cx_from_json(j.at("unit"));
    return r;
}

HarmonicMap harmonic_map_from_json(const json& j) {
    HarmonicMap f{power_series_from_json(j.at("h")), power_series_from_json(j.at("g")),
                  j.at("gamma").get<double>(), std::nullopt};
    if (j.contains("omega") && !j.at("omega").is_null())
        f.omega = rational_map_from_json(j.at("omega"));
    return f;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open for reading: " + path);
    json j;
    in >> j;
    return j;
}

} // namespace harmconv
