#pragma once

// Spectral decomposition and odd functional calculus.
//
// Every element has a unique decomposition z = l_1 c_1 + ... + l_s c_s with
// 0 < l_1 < ... < l_s and pairwise strongly orthogonal tripotents c_j.  Per
// type-I factor it is computed from the SVD z = U S V*: each cluster of
// singular values becomes one eigenvalue with tripotent sum(u_i v_i*) over
// the cluster; zero singular values are dropped.  Eigenvalues that agree
// across factors (within the cluster tolerance) are merged and their
// tripotents summed -- they live in different factors, hence are strongly
// orthogonal.
//
// An odd scalar function f with f(0) = 0 induces F(z) = sum f(l_j) c_j;
// equivalently U f(S) V* per factor, which is how it is evaluated (the
// value does not depend on how clustered singular vectors are resolved).

#include <functional>
#include <string>
#include <vector>

#include "hpjts/domain.hpp"

namespace hpjts {

inline constexpr double kDefaultClusterTol = 1e-8;
inline constexpr double kZeroEigenvalueCutoff = 1e-12;
// Hyperbolic-side maps reject points this close to the unit sphere.
inline constexpr double kBoundaryGuard = 1e-12;

struct SpectralDecomposition {
    std::vector<double> eigenvalues;     // strictly increasing, positive
    std::vector<Element> tripotents;     // pairwise strongly orthogonal
    std::vector<int> multiplicities;     // singular values merged into each c_j

    int size() const { return static_cast<int>(eigenvalues.size()); }

    Element reconstruct(const DomainDescriptor& d) const;
};

SpectralDecomposition spectral_decompose(const DomainDescriptor& d, const Element& z,
                                         double cluster_tol = kDefaultClusterTol);

// Largest singular value across all factors (0 for the zero element).
double spectral_norm(const DomainDescriptor& d, const Element& z);

// Membership in the bounded realization: spectral_norm < 1.
bool in_domain(const DomainDescriptor& d, const Element& z);

// F(z) = sum f(l_j) c_j for an odd f with f(0) = 0.  Throws
// boundary_error naming the offending eigenvalue if f is non-finite there.
Element functional_calculus(const DomainDescriptor& d,
                            const std::function<double(double)>& f,
                            const Element& z);

// Stable scalar kernels for the maps of the geometry module (all odd,
// written against cancellation near 0 and near the boundary).
namespace scalar_kernel {

double dexp_hyp(double t);      // sqrt(-expm1(-t^2)), Taylor t(1 - t^2/4) for |t| < 1e-4
double dexp_hyp_inv(double t);  // sqrt(-log1p(-t^2))
double dexp_fs(double t);       // sqrt(expm1(t^2))
double dexp_fs_inv(double t);   // sqrt(log1p(t^2))
double duality(double t);       // t / sqrt(1 - t^2)
double duality_inv(double t);   // t / sqrt(1 + t^2)

}  // namespace scalar_kernel

}  // namespace hpjts
