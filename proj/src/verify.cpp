#include "hpjts/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Dense>

#include "hpjts/duality.hpp"
#include "hpjts/geometry.hpp"
#include "hpjts/jts.hpp"
#include "hpjts/sampling.hpp"
#include "hpjts/serialize.hpp"
#include "hpjts/spectral.hpp"

namespace hpjts {

namespace {

struct CheckOutcome {
    double max_error = 0.0;
    long samples = 0;
};

struct Ctx {
    const DomainDescriptor& d;
    long samples;
    std::uint64_t seed;
    FDConfig fd;
    std::uint64_t check_id;
};

Rng sample_rng(const Ctx& c, std::uint64_t index) {
    return Rng::stream(c.seed, c.check_id, index);
}

Element gaussian_element(const DomainDescriptor& d, Rng& rng, bool unit_norm = true) {
    Element e = Element::zero(d);
    for (auto& b : e.blocks) {
        for (Eigen::Index k = 0; k < b.size(); ++k) *(b.data() + k) = rng.gaussian_complex();
    }
    if (unit_norm) {
        const double n = e.norm();
        if (n > 0) e = e * (1.0 / n);
    }
    return e;
}

// Standard flat form sum dx_j ^ dy_j.
TwoForm flat_form(const DomainDescriptor& d) {
    const int n = d.total_dim();
    TwoForm w;
    w.matrix = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        w.matrix(2 * j, 2 * j + 1) = 1.0;
        w.matrix(2 * j + 1, 2 * j) = -1.0;
    }
    return w;
}

// Matrix of the complex structure in interleaved real coordinates.
Eigen::MatrixXd complex_structure(int n) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        j(2 * k, 2 * k + 1) = -1.0;
        j(2 * k + 1, 2 * k) = 1.0;
    }
    return j;
}

// --- algebra ---------------------------------------------------------------

CheckOutcome check_jordan_identity(const Ctx& c) {
    CheckOutcome out;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element x = gaussian_element(c.d, rng);
        const Element y = gaussian_element(c.d, rng);
        const Element u = gaussian_element(c.d, rng);
        const Element v = gaussian_element(c.d, rng);
        const Element w = gaussian_element(c.d, rng);
        out.max_error = std::max(out.max_error,
                                 jordan_identity_residual(c.d, x, y, u, v, w));
        ++out.samples;
    }
    return out;
}

CheckOutcome check_trace_form_positivity(const Ctx& c) {
    const int n = c.d.total_dim();
    Eigen::MatrixXcd gram(n, n);
    for (int a = 0; a < n; ++a) {
        Eigen::VectorXcd ea = Eigen::VectorXcd::Zero(n);
        ea(a) = 1.0;
        const Element xa = unvectorize(c.d, ea);
        for (int b = 0; b < n; ++b) {
            Eigen::VectorXcd eb = Eigen::VectorXcd::Zero(n);
            eb(b) = 1.0;
            const Element xb = unvectorize(c.d, eb);
            gram(a, b) = t_operator(c.d, xa, xb).matrix.trace();
        }
    }
    const double herm_res = (gram - gram.adjoint()).norm();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (gram + gram.adjoint()));
    const double min_eig = es.eigenvalues().minCoeff();
    CheckOutcome out;
    out.samples = static_cast<long>(n) * n;
    out.max_error = std::max(herm_res, std::max(0.0, 1e-9 - min_eig));
    return out;
}

CheckOutcome check_bergman_factorized(const Ctx& c) {
    CheckOutcome out;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element x = gaussian_element(c.d, rng);
        const Element y = gaussian_element(c.d, rng);
        const Element w = gaussian_element(c.d, rng);
        const Element via_op = bergman_operator(c.d, x, y).apply(c.d, w);
        Element closed = Element::zero(c.d);
        for (int f = 0; f < c.d.factor_count(); ++f) {
            const auto& fac = c.d.factors()[f];
            const Eigen::MatrixXcd left =
                Eigen::MatrixXcd::Identity(fac.p, fac.p) -
                x.blocks[f] * y.blocks[f].adjoint();
            const Eigen::MatrixXcd right =
                Eigen::MatrixXcd::Identity(fac.q, fac.q) -
                y.blocks[f].adjoint() * x.blocks[f];
            closed.blocks[f] = left * w.blocks[f] * right;
        }
        out.max_error = std::max(out.max_error, (via_op - closed).norm());
        ++out.samples;
    }
    return out;
}

CheckOutcome check_genus_trace_form(const Ctx& c) {
    CheckOutcome out;
    for (int f = 0; f < c.d.factor_count(); ++f) {
        Element e11 = Element::zero(c.d);
        e11.blocks[f](0, 0) = 1.0;
        const Complex tr = t_operator(c.d, e11, e11).matrix.trace();
        const double target = c.d.factors()[f].genus;
        out.max_error = std::max(out.max_error, std::abs(tr - Complex(target)));
        ++out.samples;
    }
    return out;
}

CheckOutcome check_q_composition_linearity(const Ctx& c) {
    CheckOutcome out;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element x = gaussian_element(c.d, rng);
        const Element y = gaussian_element(c.d, rng);
        const Element w = gaussian_element(c.d, rng);
        const Complex a(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        const AntilinearMap qx = q_operator(c.d, x);
        const AntilinearMap qy = q_operator(c.d, y);
        // composite of the two antilinear actions
        const Element comp_w = qx.apply(c.d, qy.apply(c.d, w));
        const Element comp_aw = qx.apply(c.d, qy.apply(c.d, w * a));
        const double lin_res = (comp_aw - comp_w * a).norm();
        // and the assembled complex-linear matrix M_Qx conj(M_Qy)
        const Eigen::MatrixXcd m = qx.matrix * qy.matrix.conjugate();
        const double mat_res =
            (unvectorize(c.d, m * vectorize(c.d, w)) - comp_w).norm();
        out.max_error = std::max({out.max_error, lin_res, mat_res});
        ++out.samples;
    }
    return out;
}

// --- spectral ---------------------------------------------------------------

CheckOutcome check_spectral_reconstruction(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 0.9;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element z = sample_element(c.d, rng, i, opt);
        const SpectralDecomposition dec = spectral_decompose(c.d, z);
        const double rel =
            (dec.reconstruct(c.d) - z).norm() / std::max(z.norm(), 1e-12);
        out.max_error = std::max(out.max_error, rel);
        ++out.samples;
    }
    return out;
}

CheckOutcome check_tripotent_residuals(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 0.9;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element z = sample_element(c.d, rng, i, opt);
        const SpectralDecomposition dec = spectral_decompose(c.d, z);
        for (int j = 0; j < dec.size(); ++j) {
            const Element& cj = dec.tripotents[j];
            const Element cube = triple_product(c.d, cj, cj, cj);
            out.max_error = std::max(out.max_error, (cube - cj * 2.0).norm());
            for (int k = j + 1; k < dec.size(); ++k) {
                const double t_norm =
                    t_operator(c.d, cj, dec.tripotents[k]).matrix.norm();
                out.max_error = std::max(out.max_error, t_norm);
            }
        }
        ++out.samples;
    }
    return out;
}

CheckOutcome check_spectral_frame_preservation(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 0.9;
    opt.allow_ties = false;
    opt.min_gap = 0.05;
    opt.min_value = 0.05;
    const auto cube = [](double t) { return t * t * t; };
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element z = sample_element(c.d, rng, i, opt);
        const Element fz = functional_calculus(c.d, cube, z);
        const SpectralDecomposition a = spectral_decompose(c.d, z);
        const SpectralDecomposition b = spectral_decompose(c.d, fz);
        if (a.size() != b.size()) {
            out.max_error = 1.0;
            ++out.samples;
            continue;
        }
        for (int j = 0; j < a.size(); ++j) {
            out.max_error = std::max(
                out.max_error, std::abs(b.eigenvalues[j] - cube(a.eigenvalues[j])));
            out.max_error = std::max(
                out.max_error, (b.tripotents[j] - a.tripotents[j]).norm());
        }
        ++out.samples;
    }
    return out;
}

CheckOutcome check_series_agreement(const Ctx& c) {
    // tanh t = t - t^3/3 + 2 t^5/15 - 17 t^7/315 + 62 t^9/2835 - ...
    const double coeff[5] = {1.0, -1.0 / 3.0, 2.0 / 15.0, -17.0 / 315.0, 62.0 / 2835.0};
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 0.2;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element z = sample_element(c.d, rng, i, opt);
        Element series = Element::zero(c.d);
        for (int k = 0; k < 5; ++k) {
            series = series + odd_power(c.d, z, k) * coeff[k];
        }
        const Element fc =
            functional_calculus(c.d, [](double t) { return std::tanh(t); }, z);
        out.max_error = std::max(out.max_error, (series - fc).norm());
        ++out.samples;
    }
    return out;
}

// --- geometry ---------------------------------------------------------------

CheckOutcome check_diastatic_identity_hyp(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 2.0;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element v = sample_element(c.d, rng, i, opt);
        const double lhs = diastasis_hyp(c.d, dexp_hyp(c.d, v));
        const double rhs = metric0(c.d, v, v);
        out.max_error = std::max(out.max_error, std::abs(lhs - rhs));
        ++out.samples;
    }
    return out;
}

CheckOutcome check_diastatic_identity_fs(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 2.0;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element v = sample_element(c.d, rng, i, opt);
        const double lhs = diastasis_fs(c.d, dexp_fs(c.d, v));
        const double rhs = metric0(c.d, v, v);
        out.max_error = std::max(out.max_error, std::abs(lhs - rhs));
        ++out.samples;
    }
    return out;
}

CheckOutcome check_identity_differential(const Ctx& c) {
    const Element zero = Element::zero(c.d);
    const int m = 2 * c.d.total_dim();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m, m);
    const Eigen::MatrixXd j_hyp = jacobian(
        c.d, [&](const Element& v) { return dexp_hyp(c.d, v); }, zero,
        c.fd.jacobian_step);
    const Eigen::MatrixXd j_fs = jacobian(
        c.d, [&](const Element& v) { return dexp_fs(c.d, v); }, zero,
        c.fd.jacobian_step);
    CheckOutcome out;
    out.samples = 2;
    out.max_error = std::max((j_hyp - id).cwiseAbs().maxCoeff(),
                             (j_fs - id).cwiseAbs().maxCoeff());
    return out;
}

CheckOutcome check_kernel_eigenvalue_consistency(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 0.9;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element z = sample_element(c.d, rng, i, opt);
        const KernelValue k = kernel_hyp(c.d, z);
        for (int f = 0; f < c.d.factor_count(); ++f) {
            const auto s = svd(z.blocks[f]).singular;
            double prod = 1.0;
            for (int a = 0; a < s.size(); ++a) {
                prod *= std::pow(1.0 - s(a) * s(a), c.d.factors()[f].genus);
            }
            out.max_error = std::max(out.max_error,
                                     std::abs(k.factors[f] - prod) / std::abs(prod));
        }
        ++out.samples;
    }
    return out;
}

CheckOutcome check_geodesic_asymptotics(const Ctx& c) {
    // e(r) = |D_hyp(exp_hyp(r u)) - r^2| decays like r^4: halving r must
    // shrink it by at least 8 (asymptotically 16).
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 1.0;
    opt.min_value = 0.2;  // keep every eigenvalue active in the quartic term
    const long dirs = std::min<long>(c.samples, 5);
    for (long i = 0; i < dirs; ++i) {
        Rng rng = sample_rng(c, i);
        Element u = sample_element(c.d, rng, i, opt);
        u = u * (1.0 / u.norm());
        for (const double r : {0.2, 0.1}) {
            const auto e = [&](double rr) {
                const Element v = u * rr;
                return std::abs(diastasis_hyp(c.d, geo_exp_hyp(c.d, v)) -
                                metric0(c.d, v, v));
            };
            const double ratio = e(r / 2.0) / e(r);
            out.max_error = std::max(out.max_error, ratio);
        }
        ++out.samples;
    }
    return out;
}

CheckOutcome check_non_holomorphy(const Ctx& c) {
    // Cauchy-Riemann residual of Exp_hyp at 0.5 E11 must exceed 1e-3;
    // reported as the shortfall below that threshold.
    Element v = Element::zero(c.d);
    v.blocks[0](0, 0) = 0.5;
    const Eigen::MatrixXd jac = jacobian(
        c.d, [&](const Element& w) { return dexp_hyp(c.d, w); }, v,
        c.fd.jacobian_step);
    const Eigen::MatrixXd jc = complex_structure(c.d.total_dim());
    const double residual = (jac * jc - jc * jac).norm();
    CheckOutcome out;
    out.samples = 1;
    out.max_error = std::max(0.0, 1e-3 - residual);
    return out;
}

CheckOutcome check_frame_preservation_dexp(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 1.5;
    opt.allow_ties = false;
    opt.min_gap = 0.05;
    opt.min_value = 0.05;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element v = sample_element(c.d, rng, i, opt);
        const SpectralDecomposition a = spectral_decompose(c.d, v);
        const SpectralDecomposition b = spectral_decompose(c.d, dexp_hyp(c.d, v));
        if (a.size() != b.size()) {
            out.max_error = 1.0;
            ++out.samples;
            continue;
        }
        for (int j = 0; j < a.size(); ++j) {
            out.max_error = std::max(out.max_error,
                                     (b.tripotents[j] - a.tripotents[j]).norm());
        }
        ++out.samples;
    }
    return out;
}

CheckOutcome check_polydisk_restriction(const Ctx& c) {
    // On diagonal elements every exponential acts componentwise through its
    // scalar profile.
    static const auto tanh_p = [](double t) { return std::tanh(t); };
    static const auto tan_p = [](double t) { return std::tan(t); };
    const std::vector<std::pair<std::function<Element(const Element&)>,
                                std::function<double(double)>>>
        maps = {
            {[&](const Element& z) { return geo_exp_hyp(c.d, z); }, tanh_p},
            {[&](const Element& z) { return geo_exp_fs(c.d, z); }, tan_p},
            {[&](const Element& z) { return dexp_hyp(c.d, z); }, scalar_kernel::dexp_hyp},
            {[&](const Element& z) { return dexp_fs(c.d, z); }, scalar_kernel::dexp_fs},
        };
    CheckOutcome out;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element z = sample_diagonal_element(c.d, rng, 0.9);
        for (const auto& [map, profile] : maps) {
            const Element image = map(z);
            Element expected = Element::zero(c.d);
            for (int f = 0; f < c.d.factor_count(); ++f) {
                for (int k = 0; k < c.d.factors()[f].rank; ++k) {
                    const Complex t = z.blocks[f](k, k);
                    const double rho = std::abs(t);
                    if (rho > 0) expected.blocks[f](k, k) = profile(rho) * t / rho;
                }
            }
            out.max_error = std::max(out.max_error, (image - expected).norm());
        }
        ++out.samples;
    }
    return out;
}

// --- duality ----------------------------------------------------------------

CheckOutcome check_composition_identity(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 0.95;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element z = sample_element(c.d, rng, i, opt);
        const Element lhs = symplectic_duality(c.d, z);
        const Element rhs = dexp_fs(c.d, dexp_hyp_inv(c.d, z));
        out.max_error = std::max(out.max_error, (lhs - rhs).norm());
        ++out.samples;
    }
    return out;
}

CheckOutcome check_route_agreement(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 0.95;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element z = sample_element(c.d, rng, i, opt);
        const Element spectral = symplectic_duality(c.d, z);
        const Element bergman = symplectic_duality_bergman(c.d, z);
        out.max_error = std::max(out.max_error, (spectral - bergman).norm());
        ++out.samples;
    }
    return out;
}

CheckOutcome check_bijectivity(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 0.95;
    SampleOptions chart;
    chart.r_max = 3.0;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element z = sample_element(c.d, rng, 2 * i, opt);
        const Element w = sample_element(c.d, rng, 2 * i + 1, chart);
        const double back = (symplectic_duality_inv(c.d, symplectic_duality(c.d, z)) - z).norm();
        const double forth = (symplectic_duality(c.d, symplectic_duality_inv(c.d, w)) - w).norm();
        out.max_error = std::max({out.max_error, back, forth});
        ++out.samples;
    }
    return out;
}

CheckOutcome check_symplectomorphism_fs_to_flat(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 0.8;
    const ElementMap psi = [&](const Element& z) { return symplectic_duality(c.d, z); };
    const PotentialField fs = potential_fs(c.d);
    const FormField fs_form = [&](const Element& w) {
        return kahler_form(c.d, fs, w, c.fd.hessian_step);
    };
    const TwoForm flat = flat_form(c.d);
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element z = sample_element(c.d, rng, i, opt);
        const TwoForm pb = pullback_2form(c.d, psi, fs_form, z, c.fd.jacobian_step);
        out.max_error = std::max(out.max_error,
                                 (pb.matrix - flat.matrix).cwiseAbs().maxCoeff());
        ++out.samples;
    }
    return out;
}

CheckOutcome check_symplectomorphism_flat_to_hyp(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 0.8;
    const ElementMap psi = [&](const Element& z) { return symplectic_duality(c.d, z); };
    const TwoForm flat = flat_form(c.d);
    const FormField flat_field = [&](const Element&) { return flat; };
    const PotentialField hyp = potential_hyp(c.d);
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element z = sample_element(c.d, rng, i, opt);
        const TwoForm pb = pullback_2form(c.d, psi, flat_field, z, c.fd.jacobian_step);
        const TwoForm target = kahler_form(c.d, hyp, z, c.fd.hessian_step);
        out.max_error = std::max(out.max_error,
                                 (pb.matrix - target.matrix).cwiseAbs().maxCoeff());
        ++out.samples;
    }
    return out;
}

CheckOutcome check_kernel_transfer(const Ctx& c) {
    CheckOutcome out;
    SampleOptions opt;
    opt.r_max = 0.9;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Element z = sample_element(c.d, rng, i, opt);
        const KernelTransferResidual res = kernel_transfer_check(c.d, z);
        out.max_error = std::max({out.max_error, res.diastasis, res.kernel});
        ++out.samples;
    }
    return out;
}

CheckOutcome check_subblock_restriction(const Ctx& c) {
    // A scalar placed in the (1,1) entry of the first factor spans an
    // embedded disk; all three maps must act on it by their scalar profile.
    CheckOutcome out;
    for (long i = 0; i < c.samples; ++i) {
        Rng rng = sample_rng(c, i);
        const Complex t = std::polar(rng.uniform(0.0, 0.9), rng.uniform(0.0, 2.0 * M_PI));
        Element z = Element::zero(c.d);
        z.blocks[0](0, 0) = t;
        const double rho = std::abs(t);
        const Complex phase = rho > 0 ? t / rho : Complex(0.0);
        const std::vector<std::pair<Element, double>> cases = {
            {symplectic_duality(c.d, z), scalar_kernel::duality(rho)},
            {dexp_hyp(c.d, z), scalar_kernel::dexp_hyp(rho)},
            {dexp_fs(c.d, z), scalar_kernel::dexp_fs(rho)},
        };
        for (const auto& [image, scalar] : cases) {
            Element expected = Element::zero(c.d);
            expected.blocks[0](0, 0) = scalar * phase;
            out.max_error = std::max(out.max_error, (image - expected).norm());
        }
        ++out.samples;
    }
    return out;
}

struct CheckDef {
    const char* name;
    double tolerance;
    CheckOutcome (*run)(const Ctx&);
};

const CheckDef kChecks[] = {
    {"jts.jordan_identity", 1e-10, check_jordan_identity},
    {"jts.trace_form_positivity", 1e-12, check_trace_form_positivity},
    {"jts.bergman_factorized", 1e-12, check_bergman_factorized},
    {"jts.genus_trace_form", 1e-10, check_genus_trace_form},
    {"jts.q_composition_linearity", 1e-12, check_q_composition_linearity},
    {"spectral.reconstruction", 1e-10, check_spectral_reconstruction},
    {"spectral.tripotent_residuals", 1e-10, check_tripotent_residuals},
    {"spectral.frame_preservation", 1e-8, check_spectral_frame_preservation},
    {"spectral.series_agreement", 1e-9, check_series_agreement},
    {"geometry.diastatic_identity_hyp", 1e-9, check_diastatic_identity_hyp},
    {"geometry.diastatic_identity_fs", 1e-9, check_diastatic_identity_fs},
    {"geometry.identity_differential", 1e-6, check_identity_differential},
    {"geometry.kernel_eigenvalue_consistency", 1e-8, check_kernel_eigenvalue_consistency},
    {"geometry.geodesic_asymptotics", 0.125, check_geodesic_asymptotics},
    {"geometry.non_holomorphy", 0.0, check_non_holomorphy},
    {"geometry.frame_preservation_dexp", 1e-8, check_frame_preservation_dexp},
    {"geometry.polydisk_restriction", 1e-12, check_polydisk_restriction},
    {"duality.composition_identity", 1e-10, check_composition_identity},
    {"duality.route_agreement", 1e-9, check_route_agreement},
    {"duality.bijectivity", 1e-9, check_bijectivity},
    {"duality.symplectomorphism_fs_to_flat", 1e-5, check_symplectomorphism_fs_to_flat},
    {"duality.symplectomorphism_flat_to_hyp", 1e-5, check_symplectomorphism_flat_to_hyp},
    {"duality.kernel_transfer", 1e-9, check_kernel_transfer},
    {"duality.subblock_restriction", 1e-12, check_subblock_restriction},
};

}  // namespace

const std::vector<std::pair<std::string, double>>& verification_checks() {
    static const std::vector<std::pair<std::string, double>> list = [] {
        std::vector<std::pair<std::string, double>> v;
        for (const auto& c : kChecks) v.emplace_back(c.name, c.tolerance);
        return v;
    }();
    return list;
}

VerificationReport run_verification(const DomainDescriptor& d,
                                    const std::string& domain_spec_echo,
                                    const VerifyOptions& options) {
    options.fd.validate();
    for (const auto& [name, value] : options.tolerance_overrides) {
        const auto& known = verification_checks();
        const bool ok = std::any_of(known.begin(), known.end(),
                                    [&](const auto& c) { return c.first == name; });
        if (!ok) throw domain_spec_error("unknown check name in tolerance override: " + name);
        if (!(value >= 0.0) || !std::isfinite(value)) {
            throw domain_spec_error("tolerance override must be a finite nonnegative number");
        }
    }

    VerificationReport report;
    report.domain_spec = domain_spec_echo;
    report.factors = d.factors();
    report.seed = options.seed;
    report.sample_count = options.samples;
    report.threads = 1;
    report.fd = options.fd;
    report.library_version = "0.1.0";
    {
        std::ostringstream os;
        os << EIGEN_WORLD_VERSION << "." << EIGEN_MAJOR_VERSION << "."
           << EIGEN_MINOR_VERSION;
        report.eigen_version = os.str();
    }

    std::uint64_t check_id = 0;
    for (const auto& def : kChecks) {
        CheckResult r;
        r.name = def.name;
        r.tolerance = def.tolerance;
        if (const auto it = options.tolerance_overrides.find(def.name);
            it != options.tolerance_overrides.end()) {
            r.tolerance = it->second;
        }
        if (options.samples == 0) {
            r.skipped = true;
            r.pass = true;
            r.samples = 0;
        } else {
            const Ctx ctx{d, options.samples, options.seed, options.fd, check_id};
            const CheckOutcome out = def.run(ctx);
            r.samples = out.samples;
            r.max_abs_error = out.max_error;
            r.pass = out.max_error <= r.tolerance;
        }
        report.checks.push_back(std::move(r));
        ++check_id;
    }
    return report;
}

}  // namespace hpjts
