#pragma once

#include "symtoric/cox.hpp"
#include "symtoric/fan.hpp"
#include "symtoric/generators.hpp"
#include "symtoric/graded.hpp"
#include "symtoric/hypertoric.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace symtoric {

inline constexpr int schema_version = 1;

using json = nlohmann::ordered_json;

inline std::string rat_string(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

namespace detail {

inline long long to_ll(const Int& x, const char* what) {
    if (x > Int((std::numeric_limits<long long>::max)()) ||
        x < Int((std::numeric_limits<long long>::min)()))
        throw input_error(std::string(what) + ": value out of range");
    return x.convert_to<long long>();
}

inline json int_vector_json(const std::vector<Int>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(detail::to_ll(x, "integer vector"));
    return arr;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// fan schema: {"dim": n, "rays": [[int]], "max_cones": [[index]]}
// ---------------------------------------------------------------------------

inline json fan_to_json(const Fan& f) {
    json j;
    j["schema_version"] = schema_version;
    j["dim"] = f.dim;
    json rays = json::array();
    for (const auto& r : f.rays) rays.push_back(detail::int_vector_json(r));
    j["rays"] = std::move(rays);
    json cones = json::array();
    for (const auto& c : f.max_cones) cones.push_back(c);
    j["max_cones"] = std::move(cones);
    return j;
}

inline Fan fan_from_json(const json& j) {
    if (!j.is_object()) throw input_error("fan: top level must be a JSON object");
    for (const char* key : {"dim", "rays", "max_cones"})
        if (!j.contains(key)) throw input_error(std::string("fan: missing key \"") + key + "\"");
    Fan f;
    if (!j["dim"].is_number_unsigned() || j["dim"].get<unsigned long long>() == 0)
        throw input_error("fan: \"dim\" must be a positive integer");
    f.dim = j["dim"].get<std::size_t>();
    if (!j["rays"].is_array()) throw input_error("fan: \"rays\" must be an array");
    for (const auto& ray : j["rays"]) {
        if (!ray.is_array()) throw input_error("fan: each ray must be an array of integers");
        std::vector<Int> v;
        for (const auto& x : ray) {
            if (!x.is_number_integer()) throw input_error("fan: ray entries must be integers");
            v.push_back(Int(x.get<long long>()));
        }
        f.rays.push_back(std::move(v));
    }
    if (!j["max_cones"].is_array()) throw input_error("fan: \"max_cones\" must be an array");
    for (const auto& cone : j["max_cones"]) {
        if (!cone.is_array())
            throw input_error("fan: each maximal cone must be an array of ray indices");
        std::vector<std::size_t> c;
        for (const auto& x : cone) {
            if (!x.is_number_unsigned())
                throw input_error("fan: cone entries must be nonnegative ray indices");
            c.push_back(x.get<std::size_t>());
        }
        f.max_cones.push_back(std::move(c));
    }
    return f;
}

// ---------------------------------------------------------------------------
// rendering of presentation polynomials and invariant monomials
// ---------------------------------------------------------------------------

inline std::string render_monomial(const GradedPresentation& pres, const PresMonomial& m) {
    std::string out;
    auto append = [&](const std::string& name, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    };
    for (std::size_t r = 0; r < m.s_exp.size(); ++r) append(pres.s_name(r), m.s_exp[r]);
    for (std::size_t t = 0; t < m.t_exp.size(); ++t) append(pres.t_name(t), m.t_exp[t]);
    return out.empty() ? "1" : out;
}

inline std::string render_polynomial(const GradedPresentation& pres, const PresPolynomial& poly) {
    if (poly.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        Rat c = poly[i].coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono = render_monomial(pres, poly[i].mono);
        if (c != 1)
            out += rat_string(c) + (mono == "1" ? "" : "*" + mono);
        else
            out += mono;
    }
    return out;
}

/// Invariant monomials carry ray-indexed base and fiber exponents; the fiber
/// letter depends on the scheme (y for the reduced one, w for the moment one).
inline std::string render_invariant_monomial(const InvariantMonomial& m, PresentationKind scheme) {
    const char* fiber_letter =
        (scheme == PresentationKind::Rprime || scheme == PresentationKind::RtildePrime) ? "w" : "y";
    std::string out;
    auto append = [&](const std::string& name, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    };
    for (std::size_t r = 0; r < m.s_exp.size(); ++r) append("x" + std::to_string(r), m.s_exp[r]);
    for (std::size_t r = 0; r < m.t_exp.size(); ++r)
        append(fiber_letter + std::to_string(r), m.t_exp[r]);
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// report serialization
// ---------------------------------------------------------------------------

inline json validation_to_json(const Fan& f, const FanValidation& v) {
    json j;
    j["schema_version"] = schema_version;
    j["valid"] = v.ok();
    j["primitive"] = v.primitive;
    j["distinct"] = v.distinct;
    j["smooth"] = v.smooth;
    j["complete"] = v.complete;
    j["spanning"] = v.spanning;
    j["dim"] = f.dim;
    j["ray_count"] = f.ray_count();
    j["max_cone_count"] = f.max_cones.size();
    j["problems"] = v.problems;
    return j;
}

inline json bidegree_to_json(const Bidegree& d) {
    json j;
    j["class"] = detail::int_vector_json(d.cls);
    j["fiber"] = d.fiber;
    return j;
}

inline json presentation_to_json(const GradedPresentation& pres) {
    json j;
    j["schema_version"] = schema_version;
    j["kind"] = to_string(pres.kind);
    json base = json::array();
    for (std::size_t r = 0; r < pres.n_rays; ++r)
        base.push_back({{"name", pres.s_name(r)}, {"degree", bidegree_to_json(pres.s_degree[r])}});
    j["base_variables"] = std::move(base);
    json fiber = json::array();
    for (std::size_t t = 0; t < pres.t_rays.size(); ++t)
        fiber.push_back({{"name", pres.t_name(t)},
                         {"ray", pres.t_rays[t]},
                         {"degree", bidegree_to_json(pres.t_degree[t])}});
    j["fiber_variables"] = std::move(fiber);
    json rels = json::array();
    for (const auto& rel : pres.relations) {
        json terms = json::array();
        for (const auto& term : rel)
            terms.push_back({{"coeff", rat_string(term.coeff)},
                             {"s_exp", term.mono.s_exp},
                             {"t_exp", term.mono.t_exp}});
        rels.push_back({{"render", render_polynomial(pres, rel)}, {"terms", std::move(terms)}});
    }
    j["relations"] = std::move(rels);
    json idents = json::array();
    for (const auto& id : pres.identifications)
        idents.push_back({{"eliminated_ray", id.eliminated}, {"kept_ray", id.kept}});
    j["identifications"] = std::move(idents);
    return j;
}

inline json graded_dims_to_json(const GradedDims& gd) {
    json j;
    j["schema_version"] = schema_version;
    j["scheme"] = to_string(gd.scheme);
    j["p_max"] = gd.dims.empty() ? 0 : gd.dims.size() - 1;
    j["dims"] = gd.dims;
    return j;
}

inline json agreement_to_json(const AgreementReport& rep) {
    json j;
    j["schema_version"] = schema_version;
    j["dims_R"] = rep.dims_r;
    j["dims_Rprime"] = rep.dims_rprime;
    j["agree"] = rep.agree;
    return j;
}

inline json growth_to_json(const GrowthReport& rep) {
    json j;
    j["schema_version"] = schema_version;
    j["dims"] = rep.dims;
    j["exponent_estimate"] = rep.exponent_estimate;
    j["expected_exponent"] = rep.expected_exponent;
    j["fit_from"] = rep.fit_from;
    j["fit_to"] = rep.fit_to;
    return j;
}

inline json generators_to_json(const GeneratorReport& rep) {
    json j;
    j["schema_version"] = schema_version;
    json gens = json::array();
    for (const auto& g : rep.generators)
        gens.push_back({{"render", render_invariant_monomial(g.mono, PresentationKind::Rprime)},
                        {"s_exp", g.mono.s_exp},
                        {"t_exp", g.mono.t_exp},
                        {"fiber_degree", g.fiber_degree},
                        {"quotient_redundant", g.quotient_redundant}});
    j["generators"] = std::move(gens);
    j["count"] = rep.generators.size();
    j["degree_bound_used"] = rep.degree_bound_used;
    j["certified_complete"] = rep.certified_complete;
    j["certificate_bound"] = rep.certificate_bound.str();
    return j;
}

inline json genericity_to_json(const GenericityReport& rep) {
    json j;
    j["generic"] = rep.generic;
    j["walls"] = rep.walls;
    return j;
}

inline json central_fiber_to_json(const CentralFiberReport& rep) {
    json j;
    json comps = json::array();
    for (const auto& c : rep.components)
        comps.push_back({{"z_support", c.pattern.z_support},
                         {"w_support", c.pattern.w_support},
                         {"dim", c.dim}});
    j["components"] = std::move(comps);
    j["component_count"] = rep.components.size();
    json theta = json::array();
    for (const auto& q : rep.theta_effective) theta.push_back(rat_string(q));
    j["theta_effective"] = std::move(theta);
    j["perturbed"] = rep.perturbed;
    return j;
}

}  // namespace symtoric
