// Command-line front end: evaluate gauges and infimal convolutions, test
// coincidence-set membership, run subdifferential queries, emit boundary
// polylines, and drive the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 input/parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "icv/errors.hpp"
#include "icv/scene.hpp"
#include "icv/verifier.hpp"

namespace {

using namespace icv;

Vector parse_point(const std::string& csv, std::size_t dim, const char* what) {
    std::vector<double> c;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const auto comma = csv.find(',', pos);
        const std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            c.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InputError(std::string(what) + ": bad coordinate '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (c.size() != dim)
        throw InputError(std::string(what) + ": expected " + std::to_string(dim) +
                         " comma-separated coordinates");
    return Vector(std::move(c));
}

SubdiffKind parse_kind(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    double param = 0.0;
    if (colon != std::string::npos) {
        try {
            param = std::stod(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("subdiff: bad kind parameter in '" + spec + "'");
        }
    }
    if (head == "frechet") {
        if (param < 0) throw InputError("subdiff: epsilon must be >= 0");
        return SubdiffKind{SubdiffKind::Tag::Frechet, param};
    }
    if (head == "holder") {
        if (colon == std::string::npos) param = 1.0;
        if (!(param > 0)) throw InputError("subdiff: s must be > 0");
        return SubdiffKind{SubdiffKind::Tag::Holder, param};
    }
    throw InputError("subdiff: kind must be frechet:EPS or holder:S");
}

std::string num17(double v) {
    if (std::isfinite(v)) return format_double17(v);
    return v > 0 ? "\"inf\"" : "\"-inf\"";
}

std::string ext17(const ExtReal& v) { return v.finite() ? format_double17(v.value()) : "\"inf\""; }

std::string vec17(const std::vector<double>& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += num17(c[i]);
    }
    return s + "]";
}

std::string membership_json(const MembershipResult& r) {
    std::string s = "{\"verdict\":\"" + std::string(verdict_name(r.verdict)) + "\"";
    s += ",\"worst_quotient\":" + num17(r.worst_quotient);
    if (r.witness) {
        s += ",\"witness\":{\"x\":" + vec17(r.witness->x.coords()) +
             ",\"quotient\":" + num17(r.witness->quotient) + "}";
    }
    return s + "}";
}

int cmd_gauge(const Scene& scene, const std::string& point_csv) {
    const Vector x = parse_point(point_csv, scene.dimension, "--point");
    std::cout << "{\"value\":" << ext17(scene.gauge.eval(x)) << "}\n";
    return 0;
}

int cmd_infconv(const Scene& scene, const std::string& point_csv, double slack) {
    const Vector x = parse_point(point_csv, scene.dimension, "--point");
    const InfConvValue v = scene.T.eval(x, slack);
    std::string s = "{\"value\":" + ext17(v.value);
    s += ",\"approximate\":";
    s += v.approximate ? "true" : "false";
    s += ",\"minimizers\":[";
    for (std::size_t i = 0; i < v.minimizers.size(); ++i) {
        if (i) s += ",";
        s += "{\"y\":" + vec17(v.minimizers[i].point.coords()) +
             ",\"objective\":" + num17(v.minimizers[i].objective) + "}";
    }
    s += "]";
    if (!v.warning.empty()) s += ",\"warning\":\"" + v.warning + "\"";
    std::cout << s << "}\n";
    return 0;
}

int cmd_s0(const Scene& scene, const std::string& point_csv, double tol) {
    const Vector x = parse_point(point_csv, scene.dimension, "--point");
    const ExtReal fx = scene.f->eval(x);
    const ExtReal tx = scene.T.eval(x, 0.0).value;
    const bool in = is_in_S0(scene.T, x, tol);
    std::cout << "{\"in_S0\":" << (in ? "true" : "false") << ",\"T\":" << ext17(tx)
              << ",\"f\":" << ext17(fx) << "}\n";
    return 0;
}

int cmd_subdiff(const Scene& scene, const std::string& point_csv, const std::string& cov_csv,
                const std::string& kind_spec, bool with_lhs) {
    const Vector x = parse_point(point_csv, scene.dimension, "--point");
    const Covector c = as_covector(parse_point(cov_csv, scene.dimension, "--covector"));
    const SubdiffKind kind = parse_kind(kind_spec);

    RhsOracle oracle(scene.T, x, scene.plan);
    const RhsBreakdown rhs = kind.tag == SubdiffKind::Tag::Frechet
                                 ? oracle.frechet(c, kind.param)
                                 : oracle.holder(c, kind.param);

    std::string s = "{\"verdict\":\"" + std::string(verdict_name(rhs.combined.verdict)) + "\"";
    if (rhs.combined.witness) {
        s += ",\"witness\":{\"x\":" + vec17(rhs.combined.witness->x.coords()) +
             ",\"quotient\":" + num17(rhs.combined.witness->quotient) + "}";
    }
    s += ",\"f_side\":" + membership_json(rhs.f_side);
    s += ",\"phi_side\":" + membership_json(rhs.phi_side);
    if (with_lhs) {
        const auto g = [&](const Vector& p) { return scene.T.eval(p, 0.0).value; };
        const MembershipResult lhs =
            kind.tag == SubdiffKind::Tag::Frechet
                ? frechet_test(g, x, c, kind.param, scene.plan)
                : holder_test(g, x, c, kind.param, scene.plan);
        s += ",\"lhs\":" + membership_json(lhs);
    }
    std::cout << s << "}\n";
    return 0;
}

int cmd_emit_ball(const Scene& scene, int resolution) {
    if (scene.dimension != 2) throw InputError("emit-ball: scene must be 2-dimensional");
    std::string out = "x,y\n";
    for (int k = 0; k < resolution; ++k) {
        const double a = 6.283185307179586476925286766559 * k / resolution;
        const Vector d{std::cos(a), std::sin(a)};
        const ExtReal rho = scene.gauge.eval(d);
        // rho is positively homogeneous: the unit level set lies at 1/rho(d).
        const double r = rho.finite() && rho.value() > 1e-300 ? 1.0 / rho.value() : 0.0;
        out += format_double17(r * d[0]) + "," + format_double17(r * d[1]) + "\n";
    }
    std::cout << out;
    return 0;
}

int cmd_emit_subdiff(const Scene& scene, const std::string& point_csv, int resolution) {
    if (scene.dimension != 2) throw InputError("emit-subdiff: scene must be 2-dimensional");
    const Vector x = parse_point(point_csv, scene.dimension, "--point");
    RhsOracle oracle(scene.T, x, scene.plan);
    const auto poly = boundary_polygon_2d(
        [&](const Covector& c) { return oracle.frechet(c, 0.0).combined.verdict == Verdict::Member; },
        resolution, 2.0);
    std::string out = "angle,radius\n";
    for (const auto& [angle, radius] : poly)
        out += format_double17(angle) + "," + format_double17(radius) + "\n";
    std::cout << out;
    return 0;
}

SuiteConfig config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("verify: cannot open config '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("verify: config parse error at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
    SuiteConfig cfg;
    cfg.fixtures.clear();
    for (const auto& [key, value] : j.items()) {
        if (key == "fixtures") {
            for (const auto& f : value) cfg.fixtures.push_back(f.get<std::string>());
        } else if (key == "seed") {
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "trials_pointwise") {
            cfg.trials_pointwise = value.get<long>();
        } else if (key == "trials_gauge") {
            cfg.trials_gauge = value.get<long>();
        } else if (key == "hausdorff_tol") {
            cfg.hausdorff_tol = value.get<double>();
        } else if (key == "polygon_resolution") {
            cfg.polygon_resolution = value.get<int>();
        } else if (key == "budget_seconds") {
            cfg.budget_seconds = value.get<double>();
        } else {
            throw InputError("verify: unknown config key '" + key + "'");
        }
    }
    return cfg;
}

int cmd_verify(const std::string& suite, const std::string& config_path,
               std::optional<std::uint64_t> seed, const std::string& out_path) {
    SuiteConfig cfg;
    if (!config_path.empty()) {
        cfg = config_from_file(config_path);
    } else if (suite == "bundled") {
        cfg = bundled_config();
    } else {
        throw InputError("verify: unknown suite '" + suite + "' (only 'bundled')");
    }
    if (seed) cfg.seed = *seed;

    const VerificationReport rep = run_suite(cfg);
    for (const auto& r : rep.records) {
        std::cout << check_verdict_name(r.verdict) << " " << r.check_id << " [" << r.fixture
                  << "] trials=" << r.trials << " disagreements=" << r.disagreements
                  << " undetermined=" << r.undetermined;
        if (r.worst_gap) std::cout << " worst_gap=" << format_double17(*r.worst_gap);
        if (!r.reason.empty()) std::cout << " reason=" << r.reason;
        std::cout << "\n";
    }
    std::cout << (rep.all_pass() ? "SUITE pass" : "SUITE fail") << "\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InputError("verify: cannot open --out path '" + out_path + "'");
        out << serialize_report(rep);
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonsmooth toolkit: gauges, infimal convolutions, subdifferential checks"};
    app.require_subcommand(1);

    std::string scene_path, point_csv, cov_csv, kind_spec = "frechet:0";
    double slack = 1e-9, s0_tol = 1e-7;
    int resolution = 360;
    bool with_lhs = false;
    std::string suite = "bundled", config_path, out_path;
    std::uint64_t seed_value = 0;
    bool seed_set = false;

    auto add_scene = [&](CLI::App* cmd) {
        cmd->add_option("--scene", scene_path, "scene JSON file")->required();
    };

    auto* g = app.add_subcommand("gauge", "evaluate the gauge of F at a point");
    add_scene(g);
    g->add_option("--point", point_csv, "comma-separated coordinates")->required();

    auto* ic = app.add_subcommand("infconv", "evaluate the infimal convolution at a point");
    add_scene(ic);
    ic->add_option("--point", point_csv)->required();
    ic->add_option("--slack", slack, "near-minimizer admission slack");

    auto* s0 = app.add_subcommand("s0", "test membership in the coincidence set");
    add_scene(s0);
    s0->add_option("--point", point_csv)->required();
    s0->add_option("--tol", s0_tol, "coincidence tolerance");

    auto* sd = app.add_subcommand("subdiff", "formula-side subdifferential membership query");
    add_scene(sd);
    sd->add_option("--point", point_csv)->required();
    sd->add_option("--covector", cov_csv)->required();
    sd->add_option("--kind", kind_spec, "frechet:EPS or holder:S");
    sd->add_flag("--lhs", with_lhs, "also run the sampled test on T itself");

    auto* eb = app.add_subcommand("emit-ball", "CSV polyline of the gauge unit ball (R^2)");
    add_scene(eb);
    eb->add_option("--resolution", resolution);

    auto* es = app.add_subcommand("emit-subdiff",
                                  "CSV radial profile of the formula-side set (R^2)");
    add_scene(es);
    es->add_option("--point", point_csv)->required();
    es->add_option("--resolution", resolution);

    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("--suite", suite, "bundled");
    vf->add_option("--config", config_path, "suite config JSON");
    vf->add_option("--seed", seed_value)->each([&](const std::string&) { seed_set = true; });
    vf->add_option("--out", out_path, "write line-delimited check records here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(vf))
            return cmd_verify(suite, config_path,
                              seed_set ? std::optional<std::uint64_t>(seed_value) : std::nullopt,
                              out_path);
        const Scene scene = load_scene(scene_path);
        if (app.got_subcommand(g)) return cmd_gauge(scene, point_csv);
        if (app.got_subcommand(ic)) return cmd_infconv(scene, point_csv, slack);
        if (app.got_subcommand(s0)) return cmd_s0(scene, point_csv, s0_tol);
        if (app.got_subcommand(sd)) return cmd_subdiff(scene, point_csv, cov_csv, kind_spec, with_lhs);
        if (app.got_subcommand(eb)) return cmd_emit_ball(scene, resolution);
        if (app.got_subcommand(es)) return cmd_emit_subdiff(scene, point_csv, resolution);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainEmptyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
