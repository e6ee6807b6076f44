#include "bsk/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsk/kernels.hpp"
#include "bsk/parse.hpp"
#include "bsk/projections.hpp"
#include "bsk/stokes.hpp"

namespace bsk {

namespace {

constexpr double kPi = std::numbers::pi;

std::string domain_name(Domain d) { return d == Domain::Disc ? "disc" : "ball2"; }

Domain domain_from_name(const std::string& s) {
    if (s == "disc") return Domain::Disc;
    if (s == "ball2") return Domain::Ball2;
    throw std::invalid_argument("unknown domain '" + s + "' (expected disc or ball2)");
}

std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string format_point(const EvalPoint& p) {
    if (p.dim == 1) return fmt_complex(p.coords[0]);
    return "(" + fmt_complex(p.coords[0]) + "," + fmt_complex(p.coords[1]) + ")";
}

Resolution resolution_or_default(const RunConfig& cfg) {
    Resolution r = cfg.resolution;
    const Resolution def = default_resolution(cfg.domain);
    if (r.n_theta == 0) r.n_theta = def.n_theta;
    if (r.n_radial == 0) r.n_radial = def.n_radial;
    r.validate();
    return r;
}

std::vector<EvalPoint> parse_z_list(const RunConfig& cfg) {
    if (cfg.z_specs.empty())
        throw std::invalid_argument("at least one --z point is required");
    const int dim = domain_dimension(cfg.domain);
    std::vector<EvalPoint> pts;
    for (const auto& s : cfg.z_specs) {
        EvalPoint p = parse_point(s, dim);
        if (!(p.norm_sq() < 1.0) || p.norm() > 0.95)
            throw std::domain_error("z point '" + s + "' must be interior with |z| <= 0.95");
        pts.push_back(p);
    }
    return pts;
}

}  // namespace

Resolution default_resolution(Domain d) {
    return d == Domain::Disc ? Resolution{256, 64} : Resolution{48, 16};
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_complex(std::complex<double> v) {
    double im = v.imag();
    if (im == 0.0) im = 0.0;  // normalize -0
    std::string s = fmt17(v.real());
    s += im < 0.0 ? '-' : '+';
    s += fmt17(std::abs(im));
    s += 'i';
    return s;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const int dim = domain_dimension(cfg.domain);
    const PolyObservable f = parse_poly(cfg.poly_spec, dim);
    const std::vector<EvalPoint> zs = parse_z_list(cfg);
    const Resolution res = resolution_or_default(cfg);
    if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

    out << "domain,f,z,szego,bergman,residual,stokes_defect,pass\n";
    bool all_pass = true;
    for (const auto& z : zs) {
        const DecompositionReport rep = cfg.domain == Domain::Disc
                                            ? disc_terms(f, z, res)
                                            : ball_terms(f, z, res);
        const bool pass = rep.stokes_defect <= cfg.tolerance;
        all_pass = all_pass && pass;
        out << domain_name(cfg.domain) << ',' << csv_field(format_poly(f)) << ','
            << csv_field(format_point(z)) << ',' << fmt_complex(rep.szego_side) << ','
            << fmt_complex(rep.bergman_term) << ',' << fmt_complex(rep.residual) << ','
            << fmt17(rep.stokes_defect) << ',' << (pass ? '1' : '0') << '\n';
    }
    return all_pass ? kExitOk : kExitToleranceFailure;
}

int cmd_residual_table(const RunConfig& cfg, std::ostream& out) {
    const auto rows = residual_table(cfg.domain, cfg.kmax, cfg.mmax);
    if (cfg.domain == Domain::Disc) {
        out << "domain,k,m,residual,parity_claim\n";
        for (const auto& row : rows)
            out << "disc," << row.holo.at(1) << ',' << row.anti.at(1) << ','
                << csv_field(format_poly(row.residual)) << ','
                << (row.parity_deviation ? "DEVIATION" : "ok") << '\n';
    } else {
        out << "domain,a1,a2,b1,b2,residual,parity_claim\n";
        for (const auto& row : rows)
            out << "ball2," << row.holo.at(1) << ',' << row.holo.at(2) << ',' << row.anti.at(1)
                << ',' << row.anti.at(2) << ',' << csv_field(format_poly(row.residual)) << ','
                << (row.parity_deviation ? "DEVIATION" : "ok") << '\n';
    }
    return kExitOk;
}

int cmd_ratio(const RunConfig& cfg, std::ostream& out) {
    if (cfg.samples < 2) throw std::invalid_argument("ratio needs at least 2 samples");
    out << "domain,abs_z,delta,ratio,ratio_over_delta\n";
    for (int i = 0; i < cfg.samples; ++i) {
        const double x = 0.9 * i / (cfg.samples - 1);
        const EvalPoint z = cfg.domain == Domain::Disc ? EvalPoint::disc({x, 0.0})
                                                       : EvalPoint::ball({x, 0.0}, {0.0, 0.0});
        const double ratio = kernel_diag_ratio(cfg.domain, z);
        const double delta = 1.0 - x;
        out << domain_name(cfg.domain) << ',' << fmt17(x) << ',' << fmt17(delta) << ','
            << fmt17(ratio) << ',' << fmt17(ratio / delta) << '\n';
    }
    return kExitOk;
}

int cmd_convergence(const RunConfig& cfg, std::ostream& out) {
    if (cfg.levels < 1 || cfg.levels > 8)
        throw std::invalid_argument("levels must be in 1..8");

    // error at one resolution, per documented case id
    auto case_error = [&](const std::string& id, Resolution r) -> double {
        if (id == "disc-reproduce-z3") {
            const PolyObservable f = parse_poly("z^3", 1);
            const EvalPoint z = EvalPoint::disc({0.5, 0.0});
            const auto got = project_with_rule(make_rule(DomainKind::Disc, r),
                                               KernelId::BergmanDisc, f, z);
            return std::abs(got - std::complex<double>{0.125, 0.0});
        }
        if (id == "disc-kernel-z05") {
            // integral of (1 - z conj(zeta))^-2 over the disc is pi for any |z| < 1
            const EvalPoint z = EvalPoint::disc({0.5, 0.0});
            const QuadratureRule rule = make_rule(DomainKind::Disc, r);
            const auto got = integrate(rule, [&z](const EvalPoint& zeta) {
                const std::complex<double> w = hermitian_pairing(z, zeta);
                return 1.0 / cpow_int(1.0 - w, 2);
            });
            return std::abs(got - std::complex<double>{kPi, 0.0});
        }
        if (id == "disc-moment-2-2") {
            const QuadratureRule rule = make_rule(DomainKind::Disc, r);
            const auto got = integrate(rule, [](const EvalPoint& zeta) {
                return std::complex<double>{std::pow(std::norm(zeta.coords[0]), 2), 0.0};
            });
            const double exact = exact_moment(DomainKind::Disc, MultiIndex::of(2),
                                              MultiIndex::of(2)).to_complex().real();
            return std::abs(got.real() - exact);
        }
        if (id == "ball-mass") {
            const QuadratureRule rule = make_rule(DomainKind::Sphere3, r);
            return std::abs(rule.mass() - 2.0 * kPi * kPi);
        }
        throw std::invalid_argument("unknown convergence case '" + id + "'");
    };

    if (cfg.case_id != "disc-reproduce-z3" && cfg.case_id != "disc-kernel-z05" &&
        cfg.case_id != "disc-moment-2-2" && cfg.case_id != "ball-mass")
        throw std::invalid_argument("unknown convergence case '" + cfg.case_id + "'");
    out << "case,ntheta,nradial,error\n";
    Resolution r{8, 4};
    for (int level = 0; level < cfg.levels; ++level) {
        const double err = case_error(cfg.case_id, r);
        out << cfg.case_id << ',' << r.n_theta << ',' << r.n_radial << ',' << fmt17(err) << '\n';
        r.n_theta *= 2;
        r.n_radial *= 2;
    }
    return kExitOk;
}

int cmd_measure_audit(const RunConfig& cfg, std::ostream& out) {
    const PolyObservable f = parse_poly(cfg.poly_spec, 2);
    Resolution r = cfg.resolution;
    const Resolution def = default_resolution(Domain::Ball2);
    if (r.n_theta == 0) r.n_theta = def.n_theta;
    if (r.n_radial == 0) r.n_radial = def.n_radial;
    r.validate();

    const std::complex<double> form_mass = surface_form_integral(f, r);
    ExactValue geometric = ExactValue::zero();
    for (const auto& t : f.terms())
        geometric = geometric + exact_moment(DomainKind::Sphere3, t.holo, t.anti).scaled(t.coeff);
    const std::complex<double> geo = geometric.to_complex();

    out << "integrand: " << format_poly(f) << '\n';
    out << "surface-form integral: " << fmt_complex(form_mass) << '\n';
    out << "geometric surface integral: " << fmt_complex(geo) << '\n';
    if (std::abs(geo) == 0.0) {
        out << "ratio: n/a (geometric integral is zero)\n";
    } else {
        const std::complex<double> ratio = form_mass / geo;
        char buf[80];
        std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", ratio.real(), ratio.imag());
        out << "ratio: " << buf << '\n';
    }
    return kExitOk;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    set_default_threads(cfg.threads);
    try {
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        if (cfg.command == "residual-table") return cmd_residual_table(cfg, out);
        if (cfg.command == "ratio") return cmd_ratio(cfg, out);
        if (cfg.command == "convergence") return cmd_convergence(cfg, out);
        if (cfg.command == "measure-audit") return cmd_measure_audit(cfg, out);
        err << "error: unknown command '" << cfg.command << "'\n";
        return kExitUsageError;
    } catch (const QuadratureError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumericalFailure;
    } catch (const KernelSingularityError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumericalFailure;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumericalFailure;
    }
}

namespace {

void apply_json_config(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    nlohmann::json j;
    in >> j;
    if (j.contains("domain")) cfg.domain = domain_from_name(j["domain"].get<std::string>());
    if (j.contains("f")) cfg.poly_spec = j["f"].get<std::string>();
    if (j.contains("z")) cfg.z_specs = j["z"].get<std::vector<std::string>>();
    if (j.contains("ntheta")) cfg.resolution.n_theta = j["ntheta"].get<int>();
    if (j.contains("nradial")) cfg.resolution.n_radial = j["nradial"].get<int>();
    if (j.contains("tol")) cfg.tolerance = j["tol"].get<double>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    if (j.contains("kmax")) cfg.kmax = j["kmax"].get<int>();
    if (j.contains("mmax")) cfg.mmax = j["mmax"].get<int>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
    if (j.contains("levels")) cfg.levels = j["levels"].get<int>();
    if (j.contains("case")) cfg.case_id = j["case"].get<std::string>();
    if (j.contains("out")) cfg.output_path = j["out"].get<std::string>();
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    RunConfig cfg;
    std::string domain_str;
    std::string config_path;

    // --config is applied first so explicit flags win
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    try {
        if (!config_path.empty()) apply_json_config(config_path, cfg);
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsageError;
    }

    CLI::App app{"Bergman/Szego kernel verification workbench"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file (flags override it)");
        sub->add_option("--domain", domain_str, "disc or ball2");
        sub->add_option("--ntheta", cfg.resolution.n_theta, "points per angular coordinate");
        sub->add_option("--nradial", cfg.resolution.n_radial, "points per radial coordinate");
        sub->add_option("--threads", cfg.threads, "worker threads (results are identical)");
        sub->add_option("--out", cfg.output_path, "write the report to this file");
    };

    CLI::App* verify = app.add_subcommand("verify", "Szego vs Bergman decomposition checks");
    add_common(verify);
    verify->add_option("--f", cfg.poly_spec, "test function in the poly grammar");
    verify->add_option("--z", cfg.z_specs, "evaluation point(s), e.g. 0.3+0i or (0.2+0i,0.1i)");
    verify->add_option("--tol", cfg.tolerance, "stokes-defect tolerance");

    CLI::App* table = app.add_subcommand("residual-table", "exact residuals per monomial");
    add_common(table);
    table->add_option("--kmax", cfg.kmax, "max holomorphic degree (<= 8)");
    table->add_option("--mmax", cfg.mmax, "max antiholomorphic degree (<= 8)");

    CLI::App* ratio = app.add_subcommand("ratio", "S(z,z)/K(z,z) against boundary distance");
    add_common(ratio);
    ratio->add_option("--samples", cfg.samples, "number of radial samples (>= 2)");

    CLI::App* conv = app.add_subcommand("convergence", "error vs doubling resolution");
    add_common(conv);
    conv->add_option("--case", cfg.case_id,
                     "disc-reproduce-z3 | disc-kernel-z05 | disc-moment-2-2 | ball-mass");
    conv->add_option("--levels", cfg.levels, "number of doublings (1..8)");

    CLI::App* audit = app.add_subcommand("measure-audit", "mass of the printed boundary 3-form");
    add_common(audit);
    audit->add_option("--f", cfg.poly_spec, "integrand in the 2-dimensional poly grammar");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsageError;
    }

    try {
        if (!domain_str.empty()) cfg.domain = domain_from_name(domain_str);
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsageError;
    }
    for (const auto* sub : {verify, table, ratio, conv, audit})
        if (sub->parsed()) cfg.command = sub->get_name();

    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) {
            std::cerr << "usage error: cannot open output file '" << cfg.output_path << "'\n";
            return kExitUsageError;
        }
        return run_command(cfg, out, std::cerr);
    }
    return run_command(cfg, std::cout, std::cerr);
}

}  // namespace bsk
