#include "icv/scene.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "icv/errors.hpp"

namespace icv {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw InputError("scene: " + where + ": " + what);
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.count(key)) bad(where, "unknown key '" + key + "'");
    }
}

double get_number(const json& j, const std::string& where) {
    if (!j.is_number()) bad(where, "expected a number");
    return j.get<double>();
}

std::vector<double> get_coords(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array of numbers");
    std::vector<double> c;
    for (const auto& v : j) c.push_back(get_number(v, where));
    if (c.size() != dim)
        bad(where, "expected " + std::to_string(dim) + " coordinates, got " +
                       std::to_string(c.size()));
    return c;
}

Vector get_vector(const json& j, std::size_t dim, const std::string& where) {
    return Vector(get_coords(j, dim, where));
}

PNorm get_pnorm(const json& j, const std::string& where) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return PNorm::Inf;
        bad(where, "p must be 1, 2 or \"inf\"");
    }
    if (j.is_number_integer()) {
        const auto p = j.get<long>();
        if (p == 1) return PNorm::One;
        if (p == 2) return PNorm::Two;
    }
    bad(where, "p must be 1, 2 or \"inf\"");
}

ConvexBody parse_body(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    if (!j.contains("kind")) bad(where, "missing 'kind'");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "vpolytope") {
        reject_unknown_keys(j, {"kind", "vertices"}, where);
        if (!j.contains("vertices") || !j.at("vertices").is_array() || j.at("vertices").empty())
            bad(where, "vpolytope needs a nonempty 'vertices' array");
        std::vector<Vector> vs;
        for (const auto& v : j.at("vertices")) vs.push_back(get_vector(v, dim, where + ".vertices"));
        return ConvexBody::vpolytope(std::move(vs));
    }
    if (kind == "ball") {
        reject_unknown_keys(j, {"kind", "p", "radius"}, where);
        if (!j.contains("p") || !j.contains("radius")) bad(where, "ball needs 'p' and 'radius'");
        const double r = get_number(j.at("radius"), where + ".radius");
        return ConvexBody::ball(get_pnorm(j.at("p"), where + ".p"), r, dim);
    }
    if (kind == "singleton") {
        reject_unknown_keys(j, {"kind", "point"}, where);
        if (!j.contains("point")) bad(where, "singleton needs 'point'");
        return ConvexBody::singleton(get_vector(j.at("point"), dim, where + ".point"));
    }
    bad(where, "unknown body kind '" + kind + "'");
}

Region parse_region(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    if (!j.contains("kind")) bad(where, "missing 'kind'");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "point_cloud") {
        reject_unknown_keys(j, {"kind", "points"}, where);
        if (!j.contains("points")) bad(where, "point_cloud needs 'points'");
        std::vector<Vector> ps;
        for (const auto& p : j.at("points")) ps.push_back(get_vector(p, dim, where + ".points"));
        return Region::point_cloud(std::move(ps));
    }
    if (kind == "vpolytope") {
        reject_unknown_keys(j, {"kind", "vertices"}, where);
        if (!j.contains("vertices")) bad(where, "vpolytope needs 'vertices'");
        std::vector<Vector> vs;
        for (const auto& v : j.at("vertices")) vs.push_back(get_vector(v, dim, where + ".vertices"));
        return Region::vpolytope(std::move(vs));
    }
    if (kind == "halfspaces") {
        reject_unknown_keys(j, {"kind", "rows"}, where);
        if (!j.contains("rows")) bad(where, "halfspaces needs 'rows'");
        std::vector<Halfspace> rows;
        for (const auto& r : j.at("rows")) {
            reject_unknown_keys(r, {"normal", "offset"}, where + ".rows");
            if (!r.contains("normal") || !r.contains("offset"))
                bad(where + ".rows", "each row needs 'normal' and 'offset'");
            rows.push_back(Halfspace{Covector(get_coords(r.at("normal"), dim, where + ".rows.normal")),
                                     get_number(r.at("offset"), where + ".rows.offset")});
        }
        return Region::halfspaces(std::move(rows));
    }
    if (kind == "union") {
        reject_unknown_keys(j, {"kind", "members"}, where);
        if (!j.contains("members")) bad(where, "union needs 'members'");
        std::vector<Region> ms;
        for (const auto& m : j.at("members")) ms.push_back(parse_region(m, dim, where + ".members"));
        return Region::union_of(std::move(ms));
    }
    bad(where, "unknown region kind '" + kind + "'");
}

FieldPtr parse_field(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    if (!j.contains("kind")) bad(where, "missing 'kind'");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "zero") {
        reject_unknown_keys(j, {"kind"}, where);
        return zero_field(dim);
    }
    if (kind == "table") {
        reject_unknown_keys(j, {"kind", "entries"}, where);
        if (!j.contains("entries")) bad(where, "table needs 'entries'");
        std::vector<std::pair<Vector, double>> entries;
        for (const auto& e : j.at("entries")) {
            reject_unknown_keys(e, {"point", "value"}, where + ".entries");
            if (!e.contains("point") || !e.contains("value"))
                bad(where + ".entries", "each entry needs 'point' and 'value'");
            entries.emplace_back(get_vector(e.at("point"), dim, where + ".entries.point"),
                                 get_number(e.at("value"), where + ".entries.value"));
        }
        return table_field(std::move(entries));
    }
    bad(where, "unknown field kind '" + kind + "'");
}

SamplingPlan parse_plan(const json& j, const std::string& where) {
    SamplingPlan plan;
    reject_unknown_keys(
        j, {"base_radius", "decay", "levels", "directions", "quotient_tolerance"}, where);
    if (j.contains("base_radius")) plan.base_radius = get_number(j.at("base_radius"), where);
    if (j.contains("decay")) plan.decay = get_number(j.at("decay"), where);
    if (j.contains("levels")) plan.levels = static_cast<int>(get_number(j.at("levels"), where));
    if (j.contains("directions"))
        plan.directions = static_cast<int>(get_number(j.at("directions"), where));
    if (j.contains("quotient_tolerance"))
        plan.quotient_tolerance = get_number(j.at("quotient_tolerance"), where);
    plan.validate();
    return plan;
}

}  // namespace

Scene::Scene(std::size_t dimension_, ConvexBody F_, Region omega_, FieldPtr J_, FieldPtr phi_,
             SamplingPlan plan_)
    : dimension(dimension_),
      F(std::move(F_)),
      omega(std::move(omega_)),
      J(std::move(J_)),
      phi(std::move(phi_)),
      plan(plan_),
      gauge(F),
      f(J ? perturbed(J, omega) : indicator(omega)),
      T(InfConvolution::make(phi, f)) {
    check_same_dim(F.dim(), dimension, "Scene.F");
    check_same_dim(omega.dim(), dimension, "Scene.Omega");
    if (J) check_same_dim(J->dim(), dimension, "Scene.J");
    check_same_dim(phi->dim(), dimension, "Scene.phi");
}

Scene parse_scene(const std::string& json_text, const std::string& origin) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError("scene: parse error in " + origin + " at byte " +
                         std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object()) throw InputError("scene: top level must be an object");
    reject_unknown_keys(j, {"dimension", "F", "Omega", "J", "phi", "plan", "seed"}, "top level");
    if (!j.contains("dimension")) throw InputError("scene: missing 'dimension'");
    if (!j.at("dimension").is_number_integer())
        throw InputError("scene: 'dimension' must be an integer");
    const auto dim = j.at("dimension").get<long>();
    if (dim < 1 || dim > static_cast<long>(kMaxDimension))
        throw InputError("scene: 'dimension' must be in [1, " + std::to_string(kMaxDimension) +
                         "]");
    const auto n = static_cast<std::size_t>(dim);

    if (!j.contains("F")) throw InputError("scene: missing 'F'");
    if (!j.contains("Omega")) throw InputError("scene: missing 'Omega'");
    ConvexBody F = parse_body(j.at("F"), n, "F");
    Region omega = parse_region(j.at("Omega"), n, "Omega");

    FieldPtr J;
    if (j.contains("J")) {
        J = parse_field(j.at("J"), n, "J");
        if (J->is_zero()) J = nullptr;  // zero perturbation is the plain indicator
    }

    FieldPtr phi;
    if (j.contains("phi")) {
        const json& p = j.at("phi");
        if (!p.is_object() || !p.contains("kind")) bad("phi", "expected an object with 'kind'");
        const auto kind = p.at("kind").get<std::string>();
        if (kind == "gauge") {
            reject_unknown_keys(p, {"kind"}, "phi");
            phi = gauge_field(Gauge(F));
        } else if (kind == "norm") {
            reject_unknown_keys(p, {"kind", "p"}, "phi");
            if (!p.contains("p")) bad("phi", "norm needs 'p'");
            phi = norm_field(n, get_pnorm(p.at("p"), "phi.p"));
        } else {
            bad("phi", "unknown phi kind '" + kind + "'");
        }
    } else {
        phi = gauge_field(Gauge(F));
    }

    SamplingPlan plan;
    if (j.contains("plan")) plan = parse_plan(j.at("plan"), "plan");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer()) throw InputError("scene: 'seed' must be an integer");
        plan.seed = j.at("seed").get<std::uint64_t>();
    }

    return Scene(n, std::move(F), std::move(omega), std::move(J), std::move(phi), plan);
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("scene: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scene(ss.str(), path);
}

}  // namespace icv
