#pragma once

// The Jordan triple algebra on a product of type-I factors.
//
// Per factor the triple product is
//
//   {x, y, z} = x y* z + z y* x            (y* = conjugate transpose)
//
// bilinear and symmetric in (x, z), antilinear in y, and satisfying the
// Jordan identity
//
//   {x,y,{u,v,w}} - {u,v,{x,y,w}} = {{x,y,u},v,w} - {u,{v,x,y},w}.
//
// Derived operators:
//
//   T(x,y) z = {x,y,z}                       complex-linear
//   Q(x)  y  = (1/2) {x,y,x} = x y* x        complex-antilinear
//   B(x,y)   = id - T(x,y) + Q(x) Q(y)       the Bergman operator,
//              B(x,y) w = (1_p - x y*) w (1_q - y* x)  per factor
//
// The trace form (u|v) = tr T(u,v) is Hermitian positive definite and
// equals (p+q) tr(u v*) per factor; its value on a primitive tripotent is
// the genus p+q.

#include <complex>

#include <Eigen/Dense>

#include "hpjts/domain.hpp"

namespace hpjts {

// Complex-linear operator on vectorized Elements.
struct LinearMap {
    Eigen::MatrixXcd matrix;

    Element apply(const DomainDescriptor& d, const Element& w) const;
};

// Complex-antilinear operator, stored as the matrix of "conjugate, then
// apply": action y |-> matrix * conj(vec(y)).  The composition of two
// antilinear maps Q(x)Q(y) is complex-linear with matrix
// M_Qx * conj(M_Qy).
struct AntilinearMap {
    Eigen::MatrixXcd matrix;

    Element apply(const DomainDescriptor& d, const Element& y) const;
};

Element triple_product(const DomainDescriptor& d, const Element& x,
                       const Element& y, const Element& z);

LinearMap t_operator(const DomainDescriptor& d, const Element& x, const Element& y);

// Q(x) y = x y* x, applied directly.
Element q_apply(const DomainDescriptor& d, const Element& x, const Element& y);

AntilinearMap q_operator(const DomainDescriptor& d, const Element& x);

LinearMap bergman_operator(const DomainDescriptor& d, const Element& x, const Element& y);

// Odd power z^(2k+1), built by repeated application of Q(z):
// z^(1) = z, z^(2p+1) = Q(z) z^(2p-1).
Element odd_power(const DomainDescriptor& d, const Element& z, int k);

// (u|v) = tr T(u,v); Hermitian, positive definite.
Complex trace_form(const DomainDescriptor& d, const Element& u, const Element& v);

// Per-factor restriction of the trace form (used by the metric, which
// weighs each factor by 1/genus).
Complex trace_form_factor(const DomainDescriptor& d, int f, const Element& u,
                          const Element& v);

std::vector<int> genus(const DomainDescriptor& d);

// Norm of {x,y,{u,v,w}} - {u,v,{x,y,w}} - {{x,y,u},v,w} + {u,{v,x,y},w}.
double jordan_identity_residual(const DomainDescriptor& d, const Element& x,
                                const Element& y, const Element& u,
                                const Element& v, const Element& w);

}  // namespace hpjts
