#include "hpjts/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "hpjts/duality.hpp"
#include "hpjts/geometry.hpp"
#include "hpjts/serialize.hpp"
#include "hpjts/verify.hpp"

namespace hpjts {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_spec_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_spec_error("cannot write file: " + path);
    out << content;
}

std::map<std::string, double> parse_tol_overrides(const std::vector<std::string>& kv) {
    std::map<std::string, double> m;
    for (const auto& s : kv) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw domain_spec_error("tolerance override must be name=value, got '" + s + "'");
        }
        try {
            std::size_t used = 0;
            const double v = std::stod(s.substr(eq + 1), &used);
            if (used != s.size() - eq - 1) throw std::invalid_argument("trailing");
            m[s.substr(0, eq)] = v;
        } catch (const std::exception&) {
            throw domain_spec_error("cannot parse tolerance value in '" + s + "'");
        }
    }
    return m;
}

int cmd_verify(const std::string& domain, long samples, std::uint64_t seed,
               const std::vector<std::string>& tol, const std::string& out_path) {
    const DomainDescriptor d = parse_domain_spec(domain);
    VerifyOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.tolerance_overrides = parse_tol_overrides(tol);
    const VerificationReport report = run_verification(d, domain, opt);
    write_file(out_path, report.to_canonical_json());
    for (const auto& c : report.checks) {
        const char* status = c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL");
        std::cout << "[" << status << "] " << c.name;
        if (!c.skipped) {
            std::cout << " max_abs_error=" << format_double(c.max_abs_error)
                      << " tolerance=" << format_double(c.tolerance)
                      << " samples=" << c.samples;
        }
        std::cout << "\n";
    }
    std::cout << (report.all_pass() ? "all checks passed" : "CHECK FAILURE") << "\n";
    return report.all_pass() ? 0 : 1;
}

std::string error_code(const std::exception& e) {
    if (dynamic_cast<const boundary_error*>(&e)) return "boundary";
    if (dynamic_cast<const shape_error*>(&e)) return "shape";
    return "numeric";
}

int cmd_eval(const std::string& domain, const std::string& op,
             const std::string& points_path, const std::string& out_path) {
    const DomainDescriptor d = parse_domain_spec(domain);
    const PointFile pf = read_point_file(read_file(points_path));
    const DomainDescriptor file_d = parse_domain_spec(pf.domain_spec);
    if (domain_spec_string(file_d) != domain_spec_string(d)) {
        throw domain_spec_error("point file domain '" + pf.domain_spec +
                                "' disagrees with --domain '" + domain + "'");
    }

    using ScalarOp = std::function<double(const Element&)>;
    using ElementOp = std::function<Element(const Element&)>;
    const std::map<std::string, ScalarOp> scalar_ops = {
        {"diastasis-hyp", [&](const Element& z) { return diastasis_hyp(d, z); }},
        {"diastasis-fs", [&](const Element& z) { return diastasis_fs(d, z); }},
        {"kernel-hyp", [&](const Element& z) { return kernel_hyp(d, z).total; }},
        {"kernel-dual", [&](const Element& z) { return kernel_dual(d, z).total; }},
    };
    const std::map<std::string, ElementOp> element_ops = {
        {"dexp-hyp", [&](const Element& z) { return dexp_hyp(d, z); }},
        {"dexp-fs", [&](const Element& z) { return dexp_fs(d, z); }},
        {"dexp-hyp-inv", [&](const Element& z) { return dexp_hyp_inv(d, z); }},
        {"dexp-fs-inv", [&](const Element& z) { return dexp_fs_inv(d, z); }},
        {"geo-exp-hyp", [&](const Element& z) { return geo_exp_hyp(d, z); }},
        {"geo-exp-fs", [&](const Element& z) { return geo_exp_fs(d, z); }},
        {"duality", [&](const Element& z) { return symplectic_duality(d, z); }},
        {"duality-inv", [&](const Element& z) { return symplectic_duality_inv(d, z); }},
    };

    std::ostringstream os;
    if (const auto it = element_ops.find(op); it != element_ops.end()) {
        os << "{\n  \"domain\": \"" << pf.domain_spec << "\",\n  \"op\": \"" << op
           << "\",\n  \"points\": [";
        for (std::size_t i = 0; i < pf.points.size(); ++i) {
            if (i > 0) os << ",";
            os << "\n    ";
            try {
                os << element_to_json(it->second(pf.points[i]));
            } catch (const std::exception& e) {
                os << "{\"error\": \"" << error_code(e) << "\"}";
            }
        }
        os << "\n  ]\n}\n";
    } else if (const auto st = scalar_ops.find(op); st != scalar_ops.end()) {
        os << "{\n  \"domain\": \"" << pf.domain_spec << "\",\n  \"op\": \"" << op
           << "\",\n  \"values\": [";
        for (std::size_t i = 0; i < pf.points.size(); ++i) {
            if (i > 0) os << ",";
            os << "\n    ";
            try {
                os << format_double(st->second(pf.points[i]));
            } catch (const std::exception& e) {
                os << "{\"error\": \"" << error_code(e) << "\"}";
            }
        }
        os << "\n  ]\n}\n";
    } else if (op == "spectrum") {
        os << "{\n  \"domain\": \"" << pf.domain_spec << "\",\n  \"op\": \"" << op
           << "\",\n  \"values\": [";
        for (std::size_t i = 0; i < pf.points.size(); ++i) {
            if (i > 0) os << ",";
            os << "\n    ";
            try {
                const SpectralDecomposition dec = spectral_decompose(d, pf.points[i]);
                os << "[";
                for (int j = 0; j < dec.size(); ++j) {
                    if (j > 0) os << ",";
                    os << format_double(dec.eigenvalues[j]);
                }
                os << "]";
            } catch (const std::exception& e) {
                os << "{\"error\": \"" << error_code(e) << "\"}";
            }
        }
        os << "\n  ]\n}\n";
    } else {
        throw domain_spec_error("unknown op '" + op + "'");
    }
    write_file(out_path, os.str());
    return 0;
}

int cmd_trace(const std::string& domain, const std::string& direction_path, double rmax,
              long samples, const std::string& out_path) {
    const DomainDescriptor d = parse_domain_spec(domain);
    const PointFile pf = read_point_file(read_file(direction_path));
    if (domain_spec_string(parse_domain_spec(pf.domain_spec)) != domain_spec_string(d)) {
        throw domain_spec_error("direction file domain disagrees with --domain");
    }
    if (pf.points.size() != 1) {
        throw domain_spec_error("direction file must contain exactly one point");
    }
    const Element u = pf.points[0];
    const double sn = spectral_norm(d, u);
    if (sn <= 0.0) throw domain_spec_error("direction must be nonzero");
    if (samples < 1) throw domain_spec_error("trace needs at least one sample");
    if (!(rmax > 0.0)) throw domain_spec_error("rmax must be positive");
    if (rmax * sn >= 1.0) {
        std::ostringstream os;
        os << "rmax * spectral_norm(direction) = " << rmax * sn
           << " >= 1: ray leaves the bounded domain";
        throw domain_spec_error(os.str());
    }

    std::ostringstream os;
    os << "r,d_hyp_geo_exp,d_hyp_dexp,psi_norm,d_fs_psi\n";
    for (long i = 0; i < samples; ++i) {
        const double r = samples == 1 ? rmax
                                      : rmax * static_cast<double>(i) /
                                            static_cast<double>(samples - 1);
        const Element v = u * r;
        const double d_geo = diastasis_hyp(d, geo_exp_hyp(d, v));
        const double d_dexp = diastasis_hyp(d, dexp_hyp(d, v));
        const Element psi = symplectic_duality(d, v);
        os << format_double(r) << "," << format_double(d_geo) << ","
           << format_double(d_dexp) << "," << format_double(spectral_norm(d, psi))
           << "," << format_double(diastasis_fs(d, psi)) << "\n";
    }
    write_file(out_path, os.str());
    return 0;
}

}  // namespace

const std::vector<std::string>& eval_op_names() {
    static const std::vector<std::string> names = {
        "diastasis-hyp", "diastasis-fs", "kernel-hyp",  "kernel-dual", "dexp-hyp",
        "dexp-fs",       "dexp-hyp-inv", "dexp-fs-inv", "geo-exp-hyp", "geo-exp-fs",
        "duality",       "duality-inv",  "spectrum"};
    return names;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"bounded symmetric domain geometry: verification and evaluation"};
    app.require_subcommand(1);

    std::string domain, out_path, op, points_path, direction_path;
    long samples = 200;
    std::uint64_t seed = 42;
    double rmax = 0.5;
    std::vector<std::string> tol;

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--domain", domain, "domain spec, e.g. type1:2,2")->required();
    verify->add_option("--samples", samples, "random samples per check")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--tol", tol, "tolerance override name=value")
        ->take_all()
        ->allow_extra_args();
    verify->add_option("--out", out_path, "report output path")->required();

    CLI::App* eval = app.add_subcommand("eval", "evaluate an operation pointwise");
    eval->add_option("--domain", domain, "domain spec")->required();
    eval->add_option("--op", op, "operation name")->required();
    eval->add_option("--points", points_path, "input point file")->required();
    eval->add_option("--out", out_path, "output path")->required();

    CLI::App* trace = app.add_subcommand("trace", "tabulate quantities along a ray");
    trace->add_option("--domain", domain, "domain spec")->required();
    trace->add_option("--direction", direction_path, "point file with one direction")
        ->required();
    trace->add_option("--rmax", rmax, "largest ray parameter")->required();
    trace->add_option("--samples", samples, "row count");
    trace->add_option("--out", out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(domain, samples, seed, tol, out_path);
        if (eval->parsed()) return cmd_eval(domain, op, points_path, out_path);
        if (trace->parsed()) return cmd_trace(domain, direction_path, rmax, samples, out_path);
    } catch (const domain_spec_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const shape_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hpjts
