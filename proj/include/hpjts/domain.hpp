#pragma once

// Domains and points.
//
// A domain is described by a finite product of irreducible type-I(p,q)
// factors: the ambient complex vector space is the direct sum of p_i x q_i
// matrix blocks, and the bounded realization is the open unit ball of the
// spectral norm.  The two classical families used throughout,
//
//   complex hyperbolic space  CH^n     = type I(1,n)
//   polydisk                  (CH^1)^l = product of l copies of I(1,1),
//
// are both instances.  Genus of a factor is p+q, rank is min(p,q).
//
// Points and tangent vectors live in the same space (Element): one complex
// p_i x q_i matrix per factor.  Vectorization is column-major within each
// block, blocks concatenated in factor order; real coordinates interleave
// as (x_1, y_1, ..., x_n, y_n) on top of that complex order.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hpjts/errors.hpp"

namespace hpjts {

using Complex = std::complex<double>;

struct IrreducibleFactor {
    int p = 0;
    int q = 0;
    int genus = 0;  // p + q
    int rank = 0;   // min(p, q)

    int dim() const { return p * q; }
};

class DomainDescriptor {
public:
    // Single irreducible type-I(p,q) factor.
    static DomainDescriptor type1(int p, int q);

    // Finite product of type-I factors, given as (p,q) pairs in order.
    static DomainDescriptor product(const std::vector<std::pair<int, int>>& pq);

    const std::vector<IrreducibleFactor>& factors() const { return factors_; }
    int factor_count() const { return static_cast<int>(factors_.size()); }
    int total_dim() const { return total_dim_; }
    int total_rank() const { return total_rank_; }

    // Offset of a factor's block in the concatenated coordinate vector.
    int factor_offset(int f) const { return offsets_[f]; }

    std::vector<int> genus_per_factor() const;

private:
    DomainDescriptor() = default;

    std::vector<IrreducibleFactor> factors_;
    std::vector<int> offsets_;
    int total_dim_ = 0;
    int total_rank_ = 0;
};

// A point of the ambient space (equivalently a tangent vector at the
// origin): one complex p_i x q_i matrix per factor.
struct Element {
    std::vector<Eigen::MatrixXcd> blocks;

    static Element zero(const DomainDescriptor& d);

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(Complex s) const;
    Element operator*(double s) const;

    // Frobenius norm over all blocks.
    double norm() const;

    bool all_finite() const;
};

// Shape/finiteness guards; throw shape_error naming the offending context.
void check_shape(const DomainDescriptor& d, const Element& x, const char* who);
void check_finite(const Element& x, const char* who);

// Column-major vectorization (blocks concatenated in factor order).
Eigen::VectorXcd vectorize(const DomainDescriptor& d, const Element& x);
Element unvectorize(const DomainDescriptor& d, const Eigen::VectorXcd& v);

// Interleaved real coordinates (x_1, y_1, ..., x_n, y_n).
Eigen::VectorXd real_coords(const DomainDescriptor& d, const Element& x);
Element element_from_real(const DomainDescriptor& d, const Eigen::VectorXd& r);

}  // namespace hpjts
