#pragma once

// Dense numerical kernels the rest of the library relies on: complex SVD,
// fractional powers of Hermitian positive matrices, determinants, and the
// central finite-difference stencils.  All routines are deterministic for
// fixed input; everything is dense (ambient dimensions stay small).

#include <functional>

#include <Eigen/Dense>

#include "hpjts/errors.hpp"

namespace hpjts {

struct SvdResult {
    Eigen::MatrixXcd u;            // p x m, orthonormal columns
    Eigen::VectorXd singular;      // m, descending, nonnegative
    Eigen::MatrixXcd v;            // q x m, orthonormal columns
};

// Thin SVD A = U S V*.  Throws numeric_error with condition diagnostics on
// failure or non-finite input.
SvdResult svd(const Eigen::MatrixXcd& a);

// H^alpha for Hermitian positive definite H, via eigendecomposition
// U diag(l^alpha) U*.  Throws boundary_error if min eigenvalue <= 1e-12.
Eigen::MatrixXcd herm_frac_power(const Eigen::MatrixXcd& h, double alpha);

// LU-based determinant.
std::complex<double> det_c(const Eigen::MatrixXcd& a);

struct FDConfig {
    double hessian_step = 1e-4;
    double jacobian_step = 1e-6;

    void validate() const;  // steps must lie in (1e-10, 1e-2)
};

using RealField = std::function<double(const Eigen::VectorXd&)>;

// Second-order central differences on a scalar field of real coordinates.
double central_diff_first(const RealField& f, const Eigen::VectorXd& x, int axis,
                          double h);
double central_diff_second(const RealField& f, const Eigen::VectorXd& x, int axis,
                           double h);
// Mixed partial via the 4-point cross stencil; axes must differ.
double central_diff_mixed(const RealField& f, const Eigen::VectorXd& x, int axis_a,
                          int axis_b, double h);

}  // namespace hpjts
