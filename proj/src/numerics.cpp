#include "hpjts/numerics.hpp"

#include <cmath>
#include <sstream>

namespace hpjts {

SvdResult svd(const Eigen::MatrixXcd& a) {
    if (!a.allFinite()) throw numeric_error("svd: non-finite entry in input");
    Eigen::JacobiSVD<Eigen::MatrixXcd> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SvdResult r;
    r.u = solver.matrixU();
    r.singular = solver.singularValues();
    r.v = solver.matrixV();
    if (!r.singular.allFinite() || !r.u.allFinite() || !r.v.allFinite()) {
        std::ostringstream os;
        os << "svd: convergence failure on " << a.rows() << "x" << a.cols()
           << " matrix, norm " << a.norm();
        throw numeric_error(os.str());
    }
    return r;
}

Eigen::MatrixXcd herm_frac_power(const Eigen::MatrixXcd& h, double alpha) {
    if (h.rows() != h.cols()) throw numeric_error("herm_frac_power: matrix not square");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw numeric_error("herm_frac_power: eigendecomposition failed");
    }
    const Eigen::VectorXd lam = solver.eigenvalues();
    if (lam.minCoeff() <= 1e-12) {
        std::ostringstream os;
        os << "herm_frac_power: matrix not positive definite (min eigenvalue "
           << lam.minCoeff() << ")";
        throw boundary_error(os.str());
    }
    const Eigen::VectorXd powered = lam.array().pow(alpha);
    return solver.eigenvectors() * powered.asDiagonal() * solver.eigenvectors().adjoint();
}

std::complex<double> det_c(const Eigen::MatrixXcd& a) {
    if (!a.allFinite()) throw numeric_error("det_c: non-finite entry in input");
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(a).determinant();
}

void FDConfig::validate() const {
    auto in_range = [](double h) { return h > 1e-10 && h < 1e-2; };
    if (!in_range(hessian_step) || !in_range(jacobian_step)) {
        std::ostringstream os;
        os << "FDConfig: steps must lie in (1e-10, 1e-2), got hessian " << hessian_step
           << ", jacobian " << jacobian_step;
        throw domain_spec_error(os.str());
    }
}

double central_diff_first(const RealField& f, const Eigen::VectorXd& x, int axis,
                          double h) {
    Eigen::VectorXd xp = x, xm = x;
    xp(axis) += h;
    xm(axis) -= h;
    return (f(xp) - f(xm)) / (2.0 * h);
}

double central_diff_second(const RealField& f, const Eigen::VectorXd& x, int axis,
                           double h) {
    Eigen::VectorXd xp = x, xm = x;
    xp(axis) += h;
    xm(axis) -= h;
    return (f(xp) - 2.0 * f(x) + f(xm)) / (h * h);
}

double central_diff_mixed(const RealField& f, const Eigen::VectorXd& x, int axis_a,
                          int axis_b, double h) {
    Eigen::VectorXd xpp = x, xpm = x, xmp = x, xmm = x;
    xpp(axis_a) += h;
    xpp(axis_b) += h;
    xpm(axis_a) += h;
    xpm(axis_b) -= h;
    xmp(axis_a) -= h;
    xmp(axis_b) += h;
    xmm(axis_a) -= h;
    xmm(axis_b) -= h;
    return (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * h * h);
}

}  // namespace hpjts
