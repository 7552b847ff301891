#pragma once

// The symplectic duality map and its verifiers.
//
// Psi(z) = B(z,z)^(-1/4) z maps the bounded domain diffeomorphically onto
// the affine chart of the compact dual.  Spectrally it multiplies each
// eigenvalue by (1 - l^2)^(-1/2), so it factors through the diastatic
// exponentials:  Psi = Exp_fs o Exp_hyp^(-1).
// It pulls the flat form back to the hyperbolic form and the Fubini-Study
// form back to the flat form, and transfers the dual kernel to the
// hyperbolic kernel.  Both routes to Psi (spectral profile vs. Hermitian
// fractional power of the assembled Bergman operator) are exposed so they
// can check one another.

#include <functional>

#include "hpjts/geometry.hpp"

namespace hpjts {

// Spectral route: eigenvalue profile t / sqrt(1 - t^2).
Element symplectic_duality(const DomainDescriptor& d, const Element& z);

// Operator route: apply B(z,z)^(-1/4) to z.
Element symplectic_duality_bergman(const DomainDescriptor& d, const Element& z);

// Inverse, eigenvalue profile t / sqrt(1 + t^2); defined on the whole chart.
Element symplectic_duality_inv(const DomainDescriptor& d, const Element& w);

using ElementMap = std::function<Element(const Element&)>;
using FormField = std::function<TwoForm(const Element&)>;

// Real 2n x 2n Jacobian of a map, central differences with step h.
Eigen::MatrixXd jacobian(const DomainDescriptor& d, const ElementMap& map,
                         const Element& z, double h);

// (map^* w)(z) = J^T w(map(z)) J.
TwoForm pullback_2form(const DomainDescriptor& d, const ElementMap& map,
                       const FormField& form_field, const Element& z, double h);

struct KernelTransferResidual {
    double diastasis = 0.0;    // |D_fs(Psi(z)) - D_hyp(z)|
    double kernel = 0.0;       // max per-factor relative |kernel_dual(Psi(z)) - kernel_hyp(z)|
};

KernelTransferResidual kernel_transfer_check(const DomainDescriptor& d, const Element& z);

}  // namespace hpjts
