#include <doctest.h>

#include <cmath>

#include "hpjts/duality.hpp"
#include "hpjts/geometry.hpp"
#include "hpjts/sampling.hpp"

using namespace hpjts;

namespace {

Element scalar_elem(const DomainDescriptor& d, Complex t) {
    Element e = Element::zero(d);
    e.blocks[0](0, 0) = t;
    return e;
}

const FDConfig kFd;

}  // namespace

TEST_CASE("kernel_hyp: origin, scalar and diagonal oracles") {
    const DomainDescriptor d1 = DomainDescriptor::type1(1, 1);
    CHECK(kernel_hyp(d1, Element::zero(d1)).total == doctest::Approx(1.0));
    CHECK(kernel_hyp(d1, scalar_elem(d1, 0.6)).total ==
          doctest::Approx(0.4096).epsilon(1e-13));

    const DomainDescriptor d22 = DomainDescriptor::type1(2, 2);
    Element z = Element::zero(d22);
    z.blocks[0](0, 0) = 0.5;
    z.blocks[0](1, 1) = 0.3;
    // eigenvalue-product oracle: (1-0.25)^4 (1-0.09)^4
    const double expected = std::pow(0.75 * 0.91, 4);
    CHECK(kernel_hyp(d22, z).total == doctest::Approx(expected).epsilon(1e-12));

    Element outside = Element::zero(d22);
    outside.blocks[0](0, 0) = 1.0;
    CHECK_THROWS_AS(kernel_hyp(d22, outside), boundary_error);
}

TEST_CASE("kernel_dual: scalar and rank-one oracles") {
    const DomainDescriptor d1 = DomainDescriptor::type1(1, 1);
    CHECK(kernel_dual(d1, Element::zero(d1)).total == doctest::Approx(1.0));
    CHECK(kernel_dual(d1, scalar_elem(d1, 0.75)).total ==
          doctest::Approx(std::pow(1.5625, -2.0)).epsilon(1e-13));
    // row vector in I(1,2): (1+|z|^2)^-(n+1), defined for any finite z
    const DomainDescriptor row = DomainDescriptor::type1(1, 2);
    Element v = Element::zero(row);
    v.blocks[0](0, 0) = 1.3;
    v.blocks[0](0, 1) = Complex(0.0, 0.4);
    const double n2 = 1.3 * 1.3 + 0.4 * 0.4;
    CHECK(kernel_dual(row, v).total ==
          doctest::Approx(std::pow(1.0 + n2, -3.0)).epsilon(1e-12));
}

TEST_CASE("diastasis_hyp: examples and boundary") {
    const DomainDescriptor ch2 = DomainDescriptor::type1(1, 2);
    CHECK(diastasis_hyp(ch2, Element::zero(ch2)) == 0.0);
    Element z = Element::zero(ch2);
    z.blocks[0](0, 0) = std::sqrt(0.5);
    CHECK(diastasis_hyp(ch2, z) == doctest::Approx(std::log(2.0)).epsilon(1e-14));

    const DomainDescriptor poly = DomainDescriptor::product({{1, 1}, {1, 1}});
    Element w = Element::zero(poly);
    w.blocks[0](0, 0) = 0.5;
    w.blocks[1](0, 0) = 0.3;
    CHECK(diastasis_hyp(poly, w) ==
          doctest::Approx(-std::log(0.75) - std::log(0.91)).epsilon(1e-14));

    Element boundary = Element::zero(ch2);
    boundary.blocks[0](0, 0) = 1.0 - 1e-14;
    CHECK_THROWS_AS(diastasis_hyp(ch2, boundary), boundary_error);
}

TEST_CASE("diastasis_fs: examples") {
    const DomainDescriptor cp = DomainDescriptor::type1(1, 1);
    CHECK(diastasis_fs(cp, Element::zero(cp)) == 0.0);
    CHECK(diastasis_fs(cp, scalar_elem(cp, 0.75)) ==
          doctest::Approx(std::log(1.5625)).epsilon(1e-14));
    const DomainDescriptor poly = DomainDescriptor::product({{1, 1}, {1, 1}});
    Element w = Element::zero(poly);
    w.blocks[0](0, 0) = 0.5;
    w.blocks[1](0, 0) = 0.3;
    CHECK(diastasis_fs(poly, w) ==
          doctest::Approx(std::log(1.25) + std::log(1.09)).epsilon(1e-14));
}

TEST_CASE("metric0: oracles") {
    const DomainDescriptor ch2 = DomainDescriptor::type1(1, 2);
    CHECK(metric0(ch2, Element::zero(ch2), Element::zero(ch2)) == 0.0);
    Element z = Element::zero(ch2);
    z.blocks[0](0, 0) = 0.6;
    CHECK(metric0(ch2, z, z) == doctest::Approx(0.36).epsilon(1e-14));

    const DomainDescriptor d22 = DomainDescriptor::type1(2, 2);
    Element w = Element::zero(d22);
    w.blocks[0](0, 0) = 0.5;
    w.blocks[0](1, 1) = 0.3;
    CHECK(metric0(d22, w, w) == doctest::Approx(0.34).epsilon(1e-14));
}

TEST_CASE("geo_exp: scalar and componentwise values, chart bound") {
    const DomainDescriptor d1 = DomainDescriptor::type1(1, 1);
    CHECK(geo_exp_hyp(d1, Element::zero(d1)).norm() == 0.0);
    CHECK(geo_exp_hyp(d1, scalar_elem(d1, 0.5)).blocks[0](0, 0).real() ==
          doctest::Approx(std::tanh(0.5)).epsilon(1e-14));

    const DomainDescriptor poly = DomainDescriptor::product({{1, 1}, {1, 1}});
    Element v = Element::zero(poly);
    v.blocks[0](0, 0) = 1.0;
    v.blocks[1](0, 0) = 2.0;
    const Element g = geo_exp_hyp(poly, v);
    CHECK(g.blocks[0](0, 0).real() == doctest::Approx(std::tanh(1.0)).epsilon(1e-13));
    CHECK(g.blocks[1](0, 0).real() == doctest::Approx(std::tanh(2.0)).epsilon(1e-13));
    CHECK(in_domain(poly, g));

    CHECK(geo_exp_fs(d1, scalar_elem(d1, 0.6)).blocks[0](0, 0).real() ==
          doctest::Approx(std::tan(0.6)).epsilon(1e-13));
    CHECK_THROWS_AS(geo_exp_fs(d1, scalar_elem(d1, 1.6)), boundary_error);
}

TEST_CASE("dexp_hyp: scalar value, always lands inside, inverse round-trips") {
    const DomainDescriptor d1 = DomainDescriptor::type1(1, 1);
    CHECK(dexp_hyp(d1, Element::zero(d1)).norm() == 0.0);
    const double v = std::sqrt(std::log(2.0));  // |v|^2 = log 2
    CHECK(dexp_hyp(d1, scalar_elem(d1, v)).blocks[0](0, 0).real() ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(dexp_hyp_inv(d1, scalar_elem(d1, std::sqrt(0.5))).blocks[0](0, 0).real() ==
          doctest::Approx(v).epsilon(1e-14));
    CHECK_THROWS_AS(dexp_hyp_inv(d1, scalar_elem(d1, 1.0)), boundary_error);

    const DomainDescriptor d23 = DomainDescriptor::type1(2, 3);
    SampleOptions opt;
    opt.r_max = 3.0;
    SampleOptions inside;
    inside.r_max = 0.97;
    for (long i = 0; i < 100; ++i) {
        Rng rng = Rng::stream(21, 0, i);
        const Element w = sample_element(d23, rng, i, opt);
        const Element img = dexp_hyp(d23, w);
        CHECK(spectral_norm(d23, img) < 1.0);
        CHECK((dexp_hyp_inv(d23, img) - w).norm() <= 1e-9);
        const Element z = sample_element(d23, rng, i, inside);
        CHECK((dexp_hyp(d23, dexp_hyp_inv(d23, z)) - z).norm() <= 1e-9);
    }
}

TEST_CASE("dexp_fs: scalar value and inverse round-trips") {
    const DomainDescriptor d1 = DomainDescriptor::type1(1, 1);
    const double v = std::sqrt(std::log(2.0));
    CHECK(dexp_fs(d1, scalar_elem(d1, v)).blocks[0](0, 0).real() ==
          doctest::Approx(1.0).epsilon(1e-14));
    const DomainDescriptor d23 = DomainDescriptor::type1(2, 3);
    SampleOptions opt;
    opt.r_max = 2.0;
    for (long i = 0; i < 100; ++i) {
        Rng rng = Rng::stream(22, 0, i);
        const Element w = sample_element(d23, rng, i, opt);
        CHECK((dexp_fs_inv(d23, dexp_fs(d23, w)) - w).norm() <= 1e-9);
    }
}

TEST_CASE("diastatic identities on random tangent vectors") {
    for (const auto& d : {DomainDescriptor::type1(2, 2),
                          DomainDescriptor::product({{1, 1}, {1, 2}})}) {
        SampleOptions opt;
        opt.r_max = 2.0;
        for (long i = 0; i < 200; ++i) {
            Rng rng = Rng::stream(23, 0, i);
            const Element v = sample_element(d, rng, i, opt);
            const double m = metric0(d, v, v);
            CHECK(std::abs(diastasis_hyp(d, dexp_hyp(d, v)) - m) <= 1e-9);
            CHECK(std::abs(diastasis_fs(d, dexp_fs(d, v)) - m) <= 1e-9);
        }
    }
}

TEST_CASE("polydisk restriction is exact to 1e-12 on diagonals") {
    const DomainDescriptor d = DomainDescriptor::type1(3, 3);
    for (long i = 0; i < 50; ++i) {
        Rng rng = Rng::stream(24, 0, i);
        const Element z = sample_diagonal_element(d, rng, 0.9);
        const Element img = dexp_hyp(d, z);
        for (int k = 0; k < 3; ++k) {
            const Complex t = z.blocks[0](k, k);
            const double rho = std::abs(t);
            const Complex expected =
                rho > 0 ? Complex(scalar_kernel::dexp_hyp(rho)) * t / rho : Complex(0);
            CHECK(std::abs(img.blocks[0](k, k) - expected) <= 1e-12);
        }
        // off-diagonal stays zero
        Element off = img;
        for (int k = 0; k < 3; ++k) off.blocks[0](k, k) = 0.0;
        CHECK(off.norm() <= 1e-12);
    }
}

TEST_CASE("polydisk restriction (dual): componentwise fs profiles on diagonals") {
    const DomainDescriptor d = DomainDescriptor::product({{2, 2}, {1, 1}});
    for (long i = 0; i < 50; ++i) {
        Rng rng = Rng::stream(27, 0, i);
        const Element z = sample_diagonal_element(d, rng, 0.9);
        const Element img_fs = dexp_fs(d, z);
        const Element img_tan = geo_exp_fs(d, z);
        Element exp_fs = Element::zero(d), exp_tan = Element::zero(d);
        for (int f = 0; f < d.factor_count(); ++f) {
            for (int k = 0; k < d.factors()[f].rank; ++k) {
                const Complex t = z.blocks[f](k, k);
                const double rho = std::abs(t);
                if (rho > 0) {
                    exp_fs.blocks[f](k, k) = scalar_kernel::dexp_fs(rho) * t / rho;
                    exp_tan.blocks[f](k, k) = std::tan(rho) * t / rho;
                }
            }
        }
        CHECK((img_fs - exp_fs).norm() <= 1e-12);
        CHECK((img_tan - exp_tan).norm() <= 1e-12);
    }
}

TEST_CASE("det of assembled bergman operator equals the eigenvalue product") {
    const DomainDescriptor d = DomainDescriptor::product({{2, 3}, {1, 2}});
    SampleOptions opt;
    opt.r_max = 0.9;
    for (long i = 0; i < 100; ++i) {
        Rng rng = Rng::stream(28, 0, i);
        const Element z = sample_element(d, rng, i, opt);
        const KernelValue k = kernel_hyp(d, z);
        for (int f = 0; f < d.factor_count(); ++f) {
            const auto s = svd(z.blocks[f]).singular;
            double prod = 1.0;
            for (int a = 0; a < s.size(); ++a) {
                prod *= std::pow(1.0 - s(a) * s(a), d.factors()[f].genus);
            }
            CHECK(std::abs(k.factors[f] - prod) <= 1e-8 * std::abs(prod));
        }
    }
}

TEST_CASE("diastatic exponential is not holomorphic away from the flat case") {
    // Cauchy-Riemann residual of Exp_hyp at (0.5, 0) on CH^2, by finite
    // differences: must clearly exceed 1e-3.
    const DomainDescriptor d = DomainDescriptor::type1(1, 2);
    Element v = Element::zero(d);
    v.blocks[0](0, 0) = 0.5;
    const int n = d.total_dim();
    Eigen::MatrixXd jstd = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        jstd(2 * k, 2 * k + 1) = -1.0;
        jstd(2 * k + 1, 2 * k) = 1.0;
    }
    const Eigen::MatrixXd jac = jacobian(
        d, [&](const Element& w) { return dexp_hyp(d, w); }, v, kFd.jacobian_step);
    const double residual = (jac * jstd - jstd * jac).norm();
    CHECK(residual > 1e-3);
}

TEST_CASE("complex_hessian: flat potential gives the identity") {
    const DomainDescriptor d = DomainDescriptor::type1(1, 2);
    Element z = Element::zero(d);
    z.blocks[0](0, 0) = Complex(0.3, -0.2);
    z.blocks[0](0, 1) = Complex(-0.1, 0.4);
    const Eigen::MatrixXcd h = complex_hessian(d, potential_flat(d), z, kFd.hessian_step);
    CHECK((h - Eigen::MatrixXcd::Identity(2, 2)).norm() <= 1e-8);
}

TEST_CASE("complex_hessian: hyperbolic disk at 0.5 gives 16/9") {
    const DomainDescriptor d = DomainDescriptor::type1(1, 1);
    const Eigen::MatrixXcd h =
        complex_hessian(d, potential_hyp(d), scalar_elem(d, 0.5), kFd.hessian_step);
    CHECK(h(0, 0).real() == doctest::Approx(16.0 / 9.0).epsilon(1e-6));
    CHECK(std::abs(h(0, 0).imag()) <= 1e-8);
}

TEST_CASE("complex_hessian: hermitian within stencil error on random points") {
    const DomainDescriptor d = DomainDescriptor::type1(2, 2);
    SampleOptions opt;
    opt.r_max = 0.7;
    for (long i = 0; i < 5; ++i) {
        Rng rng = Rng::stream(25, 0, i);
        const Element z = sample_element(d, rng, i, opt);
        const Eigen::MatrixXcd h = complex_hessian(d, potential_hyp(d), z, kFd.hessian_step);
        CHECK((h - h.adjoint().eval()).norm() <= 1e-8);
    }
}

TEST_CASE("complex_hessian: stencil leaving the domain propagates a boundary error") {
    const DomainDescriptor d = DomainDescriptor::type1(1, 1);
    // closer to the sphere than the hessian step: some stencil point exits
    const Element z = scalar_elem(d, 1.0 - 5e-5);
    CHECK_THROWS_AS(complex_hessian(d, potential_hyp(d), z, kFd.hessian_step),
                    boundary_error);
}

TEST_CASE("kahler_form: flat, hyperbolic and Fubini-Study closed forms") {
    const DomainDescriptor d = DomainDescriptor::type1(1, 1);
    const TwoForm flat = kahler_form(d, potential_flat(d), scalar_elem(d, Complex(0.2, 0.7)),
                                     kFd.hessian_step);
    Eigen::MatrixXd expected(2, 2);
    expected << 0.0, 1.0, -1.0, 0.0;
    CHECK((flat.matrix - expected).cwiseAbs().maxCoeff() <= 1e-8);

    const TwoForm hyp = kahler_form(d, potential_hyp(d), scalar_elem(d, 0.5), kFd.hessian_step);
    CHECK(hyp.matrix(0, 1) == doctest::Approx(16.0 / 9.0).epsilon(1e-6));

    const TwoForm fs = kahler_form(d, potential_fs(d), scalar_elem(d, 0.75), kFd.hessian_step);
    CHECK(fs.matrix(0, 1) == doctest::Approx(std::pow(1.5625, -2.0)).epsilon(1e-6));

    // antisymmetry is exact up to rounding after hermitization
    const DomainDescriptor d22 = DomainDescriptor::type1(2, 2);
    Rng rng = Rng::stream(26, 0, 0);
    SampleOptions opt;
    opt.r_max = 0.6;
    const Element z = sample_element(d22, rng, 0, opt);
    const TwoForm w = kahler_form(d22, potential_hyp(d22), z, kFd.hessian_step);
    CHECK((w.matrix + w.matrix.transpose()).norm() <= 1e-12 * w.matrix.norm());
}

TEST_CASE("geodesic exponential only matches the diastatic one to fourth order") {
    const DomainDescriptor d = DomainDescriptor::type1(1, 1);
    const auto err = [&](double r) {
        const Element v = scalar_elem(d, r);
        return std::abs(diastasis_hyp(d, geo_exp_hyp(d, v)) - metric0(d, v, v));
    };
    // e(r) ~ r^4/6; halving must shrink by at least 8
    for (const double r : {0.2, 0.1}) {
        CHECK(err(r / 2.0) <= err(r) / 8.0);
        CHECK(err(r) > 0.0);
    }
}
