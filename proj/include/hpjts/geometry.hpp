#pragma once

// Kernels, diastasis functions, the metric at the origin, geodesic and
// diastatic exponentials, and numerically assembled Kaehler forms.
//
// Per irreducible factor of genus g, with singular values s_i (counted
// with multiplicity):
//
//   kernel_hyp    det B(z,z)    = prod (1 - s_i^2)^g        (|z| < 1)
//   kernel_dual   1/det B(z,-z) = prod (1 + s_i^2)^(-g)
//   D_hyp(z) = -(1/g) log det B(z,z)  = -sum log(1 - s_i^2)
//   D_fs(z)  =  sum log(1 + s_i^2)
//   g_0(u,v) = sum_factors (1/g_f) Re tr T(u_f, v_f)      so g_0(z,z) = sum s_i^2
//
// Exponentials are the odd functional calculus of scalar profiles:
//
//   geo_exp_hyp : tanh          geo_exp_fs : tan        (eigenvalues < pi/2)
//   Exp_hyp     : sqrt(1 - e^(-t^2))     with inverse sqrt(-log(1 - t^2))
//   Exp_fs      : sqrt(e^(t^2) - 1)      with inverse sqrt(log(1 + t^2))
//
// Exp_hyp satisfies D_hyp(Exp_hyp(v)) = g_0(v,v) with identity differential
// at 0, and restricts to the componentwise scalar map on polydisks; dually
// for Exp_fs with D_fs.
//
// Kaehler forms are assembled from the finite-difference complex Hessian
// H_jk = d^2 Phi / dz_j dz_k-bar of a potential:
//   w(dx_j, dx_k) = -Im H_jk,  w(dx_j, dy_k) = Re H_jk,  w(dy_j, dy_k) = -Im H_jk.

#include <functional>
#include <string>
#include <vector>

#include "hpjts/domain.hpp"
#include "hpjts/jts.hpp"
#include "hpjts/numerics.hpp"
#include "hpjts/spectral.hpp"

namespace hpjts {

// Antisymmetric real 2n x 2n matrix in coordinates (x_1, y_1, ..., x_n, y_n).
struct TwoForm {
    Eigen::MatrixXd matrix;
};

// Scalar Kaehler potential, evaluated at Elements.
struct PotentialField {
    std::function<double(const Element&)> evaluator;
    std::string label;  // "hyp", "fs" or "flat"
};

PotentialField potential_hyp(const DomainDescriptor& d);
PotentialField potential_fs(const DomainDescriptor& d);
PotentialField potential_flat(const DomainDescriptor& d);

// Per-factor kernel values together with their product.
struct KernelValue {
    std::vector<double> factors;
    double total = 1.0;
};

KernelValue kernel_hyp(const DomainDescriptor& d, const Element& z);
KernelValue kernel_dual(const DomainDescriptor& d, const Element& z);

double diastasis_hyp(const DomainDescriptor& d, const Element& z);
double diastasis_fs(const DomainDescriptor& d, const Element& z);

double metric0(const DomainDescriptor& d, const Element& u, const Element& v);

Element geo_exp_hyp(const DomainDescriptor& d, const Element& v);
Element geo_exp_fs(const DomainDescriptor& d, const Element& v);

Element dexp_hyp(const DomainDescriptor& d, const Element& v);
Element dexp_hyp_inv(const DomainDescriptor& d, const Element& z);
Element dexp_fs(const DomainDescriptor& d, const Element& v);
Element dexp_fs_inv(const DomainDescriptor& d, const Element& w);

// Finite-difference complex Hessian H_jk of a potential at z.
Eigen::MatrixXcd complex_hessian(const DomainDescriptor& d, const PotentialField& phi,
                                 const Element& z, double h);

// The Kaehler two-form (i/2) d dbar Phi at z, assembled from the Hessian.
TwoForm kahler_form(const DomainDescriptor& d, const PotentialField& phi,
                    const Element& z, double h);

}  // namespace hpjts
