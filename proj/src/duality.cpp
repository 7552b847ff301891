#include "hpjts/duality.hpp"

#include <cmath>
#include <sstream>

namespace hpjts {

Element symplectic_duality(const DomainDescriptor& d, const Element& z) {
    check_shape(d, z, "symplectic_duality");
    const double sn = spectral_norm(d, z);
    if (sn >= 1.0 - kBoundaryGuard) {
        std::ostringstream os;
        os << "symplectic_duality: spectral norm " << sn << " at or beyond the boundary";
        throw boundary_error(os.str());
    }
    return functional_calculus(d, scalar_kernel::duality, z);
}

Element symplectic_duality_bergman(const DomainDescriptor& d, const Element& z) {
    check_shape(d, z, "symplectic_duality_bergman");
    check_finite(z, "symplectic_duality_bergman");
    const LinearMap b = bergman_operator(d, z, z);
    const Eigen::MatrixXcd pw = herm_frac_power(b.matrix, -0.25);
    return unvectorize(d, pw * vectorize(d, z));
}

Element symplectic_duality_inv(const DomainDescriptor& d, const Element& w) {
    check_shape(d, w, "symplectic_duality_inv");
    check_finite(w, "symplectic_duality_inv");
    return functional_calculus(d, scalar_kernel::duality_inv, w);
}

Eigen::MatrixXd jacobian(const DomainDescriptor& d, const ElementMap& map,
                         const Element& z, double h) {
    const int m = 2 * d.total_dim();
    const Eigen::VectorXd base = real_coords(d, z);
    Eigen::MatrixXd jac(m, m);
    for (int b = 0; b < m; ++b) {
        Eigen::VectorXd rp = base, rm = base;
        rp(b) += h;
        rm(b) -= h;
        const Eigen::VectorXd fp = real_coords(d, map(element_from_real(d, rp)));
        const Eigen::VectorXd fm = real_coords(d, map(element_from_real(d, rm)));
        jac.col(b) = (fp - fm) / (2.0 * h);
    }
    return jac;
}

TwoForm pullback_2form(const DomainDescriptor& d, const ElementMap& map,
                       const FormField& form_field, const Element& z, double h) {
    const Eigen::MatrixXd jac = jacobian(d, map, z, h);
    const TwoForm at_image = form_field(map(z));
    TwoForm r;
    r.matrix = jac.transpose() * at_image.matrix * jac;
    return r;
}

KernelTransferResidual kernel_transfer_check(const DomainDescriptor& d, const Element& z) {
    const Element psi = symplectic_duality(d, z);
    KernelTransferResidual res;
    res.diastasis = std::abs(diastasis_fs(d, psi) - diastasis_hyp(d, z));
    const KernelValue hyp = kernel_hyp(d, z);
    const KernelValue dual = kernel_dual(d, psi);
    for (int f = 0; f < d.factor_count(); ++f) {
        const double rel =
            std::abs(dual.factors[f] - hyp.factors[f]) / std::abs(hyp.factors[f]);
        res.kernel = std::max(res.kernel, rel);
    }
    return res;
}

}  // namespace hpjts
