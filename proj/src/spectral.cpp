#include "hpjts/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hpjts/numerics.hpp"

namespace hpjts {

namespace {

struct SingularTriple {
    double value;
    int factor;
    int index;  // column in that factor's SVD
};

}  // namespace

Element SpectralDecomposition::reconstruct(const DomainDescriptor& d) const {
    Element z = Element::zero(d);
    for (int j = 0; j < size(); ++j) {
        z = z + tripotents[j] * eigenvalues[j];
    }
    return z;
}

SpectralDecomposition spectral_decompose(const DomainDescriptor& d, const Element& z,
                                         double cluster_tol) {
    check_shape(d, z, "spectral_decompose");
    check_finite(z, "spectral_decompose");

    std::vector<SvdResult> svds;
    svds.reserve(d.factor_count());
    std::vector<SingularTriple> sigma;
    for (int f = 0; f < d.factor_count(); ++f) {
        svds.push_back(svd(z.blocks[f]));
        const auto& s = svds.back().singular;
        for (int i = 0; i < s.size(); ++i) {
            if (s(i) >= kZeroEigenvalueCutoff) sigma.push_back({s(i), f, i});
        }
    }
    std::sort(sigma.begin(), sigma.end(),
              [](const SingularTriple& a, const SingularTriple& b) {
                  return a.value < b.value;
              });

    SpectralDecomposition dec;
    std::size_t i = 0;
    while (i < sigma.size()) {
        // chain consecutive singular values whose gap is within tolerance
        std::size_t j = i + 1;
        while (j < sigma.size() && sigma[j].value - sigma[j - 1].value <= cluster_tol) ++j;

        double sum = 0.0;
        Element c = Element::zero(d);
        for (std::size_t k = i; k < j; ++k) {
            sum += sigma[k].value;
            const auto& sv = svds[sigma[k].factor];
            c.blocks[sigma[k].factor] +=
                sv.u.col(sigma[k].index) * sv.v.col(sigma[k].index).adjoint();
        }
        dec.eigenvalues.push_back(sum / static_cast<double>(j - i));
        dec.tripotents.push_back(c);
        dec.multiplicities.push_back(static_cast<int>(j - i));
        i = j;
    }
    return dec;
}

double spectral_norm(const DomainDescriptor& d, const Element& z) {
    check_shape(d, z, "spectral_norm");
    double m = 0.0;
    for (int f = 0; f < d.factor_count(); ++f) {
        const auto s = svd(z.blocks[f]).singular;
        if (s.size() > 0) m = std::max(m, s(0));
    }
    return m;
}

bool in_domain(const DomainDescriptor& d, const Element& z) {
    return spectral_norm(d, z) < 1.0;
}

Element functional_calculus(const DomainDescriptor& d,
                            const std::function<double(double)>& f, const Element& z) {
    check_shape(d, z, "functional_calculus");
    check_finite(z, "functional_calculus");
    if (std::abs(f(0.0)) > 0.0) {
        throw boundary_error("functional_calculus: f(0) != 0, not an odd profile");
    }
    Element r = Element::zero(d);
    for (int fi = 0; fi < d.factor_count(); ++fi) {
        const SvdResult sv = svd(z.blocks[fi]);
        Eigen::VectorXd mapped(sv.singular.size());
        for (int i = 0; i < sv.singular.size(); ++i) {
            const double s = sv.singular(i);
            if (s < kZeroEigenvalueCutoff) {
                mapped(i) = 0.0;
                continue;
            }
            const double fs = f(s);
            if (!std::isfinite(fs)) {
                std::ostringstream os;
                os << "functional_calculus: profile undefined at eigenvalue " << s;
                throw boundary_error(os.str());
            }
            mapped(i) = fs;
        }
        r.blocks[fi] = sv.u * mapped.asDiagonal() * sv.v.adjoint();
    }
    return r;
}

namespace scalar_kernel {

double dexp_hyp(double t) {
    const double a = std::abs(t);
    if (a < 1e-4) return t * (1.0 - t * t / 4.0);
    const double m = std::sqrt(-std::expm1(-t * t));
    return t < 0 ? -m : m;
}

double dexp_hyp_inv(double t) {
    const double m = std::sqrt(-std::log1p(-t * t));
    return t < 0 ? -m : m;
}

double dexp_fs(double t) {
    const double m = std::sqrt(std::expm1(t * t));
    return t < 0 ? -m : m;
}

double dexp_fs_inv(double t) {
    const double m = std::sqrt(std::log1p(t * t));
    return t < 0 ? -m : m;
}

double duality(double t) { return t / std::sqrt((1.0 - t) * (1.0 + t)); }

double duality_inv(double t) { return t / std::sqrt(1.0 + t * t); }

}  // namespace scalar_kernel

}  // namespace hpjts
