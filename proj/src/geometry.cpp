#include "hpjts/geometry.hpp"

#include <cmath>
#include <sstream>

namespace hpjts {

namespace {

void require_inside(const DomainDescriptor& d, const Element& z, const char* who) {
    const double sn = spectral_norm(d, z);
    if (sn >= 1.0 - kBoundaryGuard) {
        std::ostringstream os;
        os << who << ": spectral norm " << sn << " is at or beyond the unit sphere";
        throw boundary_error(os.str());
    }
}

// det of the Bergman operator of a single factor, from the assembled
// operator matrix.
double factor_bergman_det(const DomainDescriptor& d, int f, const Element& x,
                          const Element& y) {
    const LinearMap b = bergman_operator(d, x, y);
    const int off = d.factor_offset(f);
    const int dim = d.factors()[f].dim();
    const Complex det = det_c(b.matrix.block(off, off, dim, dim));
    return det.real();
}

}  // namespace

PotentialField potential_hyp(const DomainDescriptor& d) {
    return {[d](const Element& z) { return diastasis_hyp(d, z); }, "hyp"};
}

PotentialField potential_fs(const DomainDescriptor& d) {
    return {[d](const Element& z) { return diastasis_fs(d, z); }, "fs"};
}

PotentialField potential_flat(const DomainDescriptor& d) {
    return {[d](const Element& z) { return metric0(d, z, z); }, "flat"};
}

KernelValue kernel_hyp(const DomainDescriptor& d, const Element& z) {
    check_shape(d, z, "kernel_hyp");
    if (!in_domain(d, z)) {
        throw boundary_error("kernel_hyp: point outside the bounded domain");
    }
    KernelValue k;
    for (int f = 0; f < d.factor_count(); ++f) {
        const double det = factor_bergman_det(d, f, z, z);
        k.factors.push_back(det);
        k.total *= det;
    }
    return k;
}

KernelValue kernel_dual(const DomainDescriptor& d, const Element& z) {
    check_shape(d, z, "kernel_dual");
    check_finite(z, "kernel_dual");
    KernelValue k;
    const Element minus = z * (-1.0);
    for (int f = 0; f < d.factor_count(); ++f) {
        const double det = factor_bergman_det(d, f, z, minus);
        k.factors.push_back(1.0 / det);
        k.total *= 1.0 / det;
    }
    return k;
}

double diastasis_hyp(const DomainDescriptor& d, const Element& z) {
    check_shape(d, z, "diastasis_hyp");
    check_finite(z, "diastasis_hyp");
    require_inside(d, z, "diastasis_hyp");
    double sum = 0.0;
    for (int f = 0; f < d.factor_count(); ++f) {
        const auto s = svd(z.blocks[f]).singular;
        for (int i = 0; i < s.size(); ++i) sum -= std::log1p(-s(i) * s(i));
    }
    return sum;
}

double diastasis_fs(const DomainDescriptor& d, const Element& z) {
    check_shape(d, z, "diastasis_fs");
    check_finite(z, "diastasis_fs");
    double sum = 0.0;
    for (int f = 0; f < d.factor_count(); ++f) {
        const auto s = svd(z.blocks[f]).singular;
        for (int i = 0; i < s.size(); ++i) sum += std::log1p(s(i) * s(i));
    }
    return sum;
}

double metric0(const DomainDescriptor& d, const Element& u, const Element& v) {
    check_shape(d, u, "metric0");
    check_shape(d, v, "metric0");
    double sum = 0.0;
    for (int f = 0; f < d.factor_count(); ++f) {
        sum += trace_form_factor(d, f, u, v).real() / d.factors()[f].genus;
    }
    return sum;
}

Element geo_exp_hyp(const DomainDescriptor& d, const Element& v) {
    return functional_calculus(d, [](double t) { return std::tanh(t); }, v);
}

Element geo_exp_fs(const DomainDescriptor& d, const Element& v) {
    const double sn = spectral_norm(d, v);
    if (sn >= M_PI / 2.0) {
        std::ostringstream os;
        os << "geo_exp_fs: eigenvalue " << sn << " >= pi/2, beyond the chart";
        throw boundary_error(os.str());
    }
    return functional_calculus(d, [](double t) { return std::tan(t); }, v);
}

Element dexp_hyp(const DomainDescriptor& d, const Element& v) {
    return functional_calculus(d, scalar_kernel::dexp_hyp, v);
}

Element dexp_hyp_inv(const DomainDescriptor& d, const Element& z) {
    require_inside(d, z, "dexp_hyp_inv");
    return functional_calculus(d, scalar_kernel::dexp_hyp_inv, z);
}

Element dexp_fs(const DomainDescriptor& d, const Element& v) {
    return functional_calculus(d, scalar_kernel::dexp_fs, v);
}

Element dexp_fs_inv(const DomainDescriptor& d, const Element& w) {
    return functional_calculus(d, scalar_kernel::dexp_fs_inv, w);
}

Eigen::MatrixXcd complex_hessian(const DomainDescriptor& d, const PotentialField& phi,
                                 const Element& z, double h) {
    const int n = d.total_dim();
    const Eigen::VectorXd base = real_coords(d, z);
    const RealField f = [&](const Eigen::VectorXd& r) {
        return phi.evaluator(element_from_real(d, r));
    };
    // second derivatives along single axes
    Eigen::VectorXd second(2 * n);
    for (int a = 0; a < 2 * n; ++a) second(a) = central_diff_second(f, base, a, h);
    // mixed partials over axis pairs (cross stencil)
    Eigen::MatrixXd mixed = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int a = 0; a < 2 * n; ++a) {
        for (int b = a + 1; b < 2 * n; ++b) {
            mixed(a, b) = central_diff_mixed(f, base, a, b, h);
            mixed(b, a) = mixed(a, b);
        }
        mixed(a, a) = second(a);
    }
    Eigen::MatrixXcd hess(n, n);
    for (int j = 0; j < n; ++j) {
        const int xj = 2 * j, yj = 2 * j + 1;
        for (int k = 0; k < n; ++k) {
            const int xk = 2 * k, yk = 2 * k + 1;
            const double re = mixed(xj, xk) + mixed(yj, yk);
            const double im = mixed(xj, yk) - mixed(yj, xk);
            hess(j, k) = 0.25 * Complex(re, im);
        }
    }
    return hess;
}

TwoForm kahler_form(const DomainDescriptor& d, const PotentialField& phi,
                    const Element& z, double h) {
    const int n = d.total_dim();
    Eigen::MatrixXcd hess = complex_hessian(d, phi, z, h);
    hess = 0.5 * (hess + hess.adjoint().eval());  // Hermitize FD noise
    TwoForm w;
    w.matrix = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            const double re = hess(j, k).real();
            const double im = hess(j, k).imag();
            w.matrix(2 * j, 2 * k) = -im;          // w(dx_j, dx_k)
            w.matrix(2 * j, 2 * k + 1) = re;       // w(dx_j, dy_k)
            w.matrix(2 * j + 1, 2 * k) = -re;      // w(dy_j, dx_k) = -w(dx_k, dy_j)*
            w.matrix(2 * j + 1, 2 * k + 1) = -im;  // w(dy_j, dy_k)
        }
    }
    return w;
}

}  // namespace hpjts
