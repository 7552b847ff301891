#include "hpjts/jts.hpp"

#include <sstream>

namespace hpjts {

namespace {

// Kronecker product, used to assemble operator matrices on vectorized
// blocks: vec(A Z) = (I_q (x) A) vec(Z), vec(Z B) = (B^T (x) I_p) vec(Z).
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return k;
}

}  // namespace

Element LinearMap::apply(const DomainDescriptor& d, const Element& w) const {
    check_shape(d, w, "LinearMap::apply");
    return unvectorize(d, matrix * vectorize(d, w));
}

Element AntilinearMap::apply(const DomainDescriptor& d, const Element& y) const {
    check_shape(d, y, "AntilinearMap::apply");
    return unvectorize(d, matrix * vectorize(d, y).conjugate());
}

Element triple_product(const DomainDescriptor& d, const Element& x, const Element& y,
                       const Element& z) {
    check_shape(d, x, "triple_product");
    check_shape(d, y, "triple_product");
    check_shape(d, z, "triple_product");
    check_finite(x, "triple_product");
    check_finite(y, "triple_product");
    check_finite(z, "triple_product");
    Element r = Element::zero(d);
    for (int f = 0; f < d.factor_count(); ++f) {
        const Eigen::MatrixXcd ys = y.blocks[f].adjoint();
        r.blocks[f] = x.blocks[f] * ys * z.blocks[f] + z.blocks[f] * ys * x.blocks[f];
    }
    return r;
}

LinearMap t_operator(const DomainDescriptor& d, const Element& x, const Element& y) {
    check_shape(d, x, "t_operator");
    check_shape(d, y, "t_operator");
    LinearMap t;
    t.matrix = Eigen::MatrixXcd::Zero(d.total_dim(), d.total_dim());
    for (int f = 0; f < d.factor_count(); ++f) {
        const auto& fac = d.factors()[f];
        const Eigen::MatrixXcd left = x.blocks[f] * y.blocks[f].adjoint();   // p x p
        const Eigen::MatrixXcd right = y.blocks[f].adjoint() * x.blocks[f];  // q x q
        const Eigen::MatrixXcd ip = Eigen::MatrixXcd::Identity(fac.p, fac.p);
        const Eigen::MatrixXcd iq = Eigen::MatrixXcd::Identity(fac.q, fac.q);
        t.matrix.block(d.factor_offset(f), d.factor_offset(f), fac.dim(), fac.dim()) =
            kron(iq, left) + kron(right.transpose(), ip);
    }
    return t;
}

Element q_apply(const DomainDescriptor& d, const Element& x, const Element& y) {
    check_shape(d, x, "q_apply");
    check_shape(d, y, "q_apply");
    Element r = Element::zero(d);
    for (int f = 0; f < d.factor_count(); ++f) {
        r.blocks[f] = x.blocks[f] * y.blocks[f].adjoint() * x.blocks[f];
    }
    return r;
}

AntilinearMap q_operator(const DomainDescriptor& d, const Element& x) {
    check_shape(d, x, "q_operator");
    AntilinearMap q;
    q.matrix = Eigen::MatrixXcd::Zero(d.total_dim(), d.total_dim());
    // Column j is Q(x) applied to the j-th (real) basis element: the
    // stored matrix acts on conj(vec(y)).
    Element basis = Element::zero(d);
    for (int f = 0; f < d.factor_count(); ++f) {
        const auto& fac = d.factors()[f];
        for (int j = 0; j < fac.dim(); ++j) {
            basis.blocks[f](j % fac.p, j / fac.p) = 1.0;
            const Eigen::MatrixXcd col =
                x.blocks[f] * basis.blocks[f].adjoint() * x.blocks[f];
            q.matrix.block(d.factor_offset(f), d.factor_offset(f) + j, fac.dim(), 1) =
                Eigen::Map<const Eigen::VectorXcd>(col.data(), col.size());
            basis.blocks[f](j % fac.p, j / fac.p) = 0.0;
        }
    }
    return q;
}

LinearMap bergman_operator(const DomainDescriptor& d, const Element& x, const Element& y) {
    check_shape(d, x, "bergman_operator");
    check_shape(d, y, "bergman_operator");
    const LinearMap t = t_operator(d, x, y);
    const AntilinearMap qx = q_operator(d, x);
    const AntilinearMap qy = q_operator(d, y);
    LinearMap b;
    b.matrix = Eigen::MatrixXcd::Identity(d.total_dim(), d.total_dim()) - t.matrix +
               qx.matrix * qy.matrix.conjugate();
    return b;
}

Element odd_power(const DomainDescriptor& d, const Element& z, int k) {
    check_shape(d, z, "odd_power");
    Element r = z;
    for (int i = 0; i < k; ++i) r = q_apply(d, z, r);
    return r;
}

Complex trace_form_factor(const DomainDescriptor& d, int f, const Element& u,
                          const Element& v) {
    const auto& fac = d.factors()[f];
    // tr T(u,v) = q tr(u v*) + p tr(v* u), both traces equal Frobenius<u,v>.
    const Complex frob = (u.blocks[f].array() * v.blocks[f].array().conjugate()).sum();
    return static_cast<double>(fac.genus) * frob;
}

Complex trace_form(const DomainDescriptor& d, const Element& u, const Element& v) {
    check_shape(d, u, "trace_form");
    check_shape(d, v, "trace_form");
    Complex s = 0.0;
    for (int f = 0; f < d.factor_count(); ++f) s += trace_form_factor(d, f, u, v);
    return s;
}

std::vector<int> genus(const DomainDescriptor& d) { return d.genus_per_factor(); }

double jordan_identity_residual(const DomainDescriptor& d, const Element& x,
                                const Element& y, const Element& u, const Element& v,
                                const Element& w) {
    const Element lhs1 = triple_product(d, x, y, triple_product(d, u, v, w));
    const Element lhs2 = triple_product(d, u, v, triple_product(d, x, y, w));
    const Element rhs1 = triple_product(d, triple_product(d, x, y, u), v, w);
    const Element rhs2 = triple_product(d, u, triple_product(d, v, x, y), w);
    return (lhs1 - lhs2 - rhs1 + rhs2).norm();
}

}  // namespace hpjts
