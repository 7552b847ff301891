#include <doctest.h>

#include <cmath>

#include "hpjts/jts.hpp"
#include "hpjts/sampling.hpp"
#include "hpjts/spectral.hpp"

using namespace hpjts;

TEST_CASE("spectral_decompose: zero element gives empty decomposition") {
    const DomainDescriptor d = DomainDescriptor::type1(2, 2);
    const SpectralDecomposition dec = spectral_decompose(d, Element::zero(d));
    CHECK(dec.size() == 0);
}

TEST_CASE("spectral_decompose: diagonal oracle in I(2,2)") {
    const DomainDescriptor d = DomainDescriptor::type1(2, 2);
    Element z = Element::zero(d);
    z.blocks[0](0, 0) = 0.5;
    z.blocks[0](1, 1) = 0.3;
    const SpectralDecomposition dec = spectral_decompose(d, z);
    REQUIRE(dec.size() == 2);
    CHECK(dec.eigenvalues[0] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(dec.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-14));
    // ascending eigenvalues pair with E22 then E11
    CHECK(std::abs(dec.tripotents[0].blocks[0](1, 1) - Complex(1.0)) <= 1e-13);
    CHECK(std::abs(dec.tripotents[1].blocks[0](0, 0) - Complex(1.0)) <= 1e-13);
}

TEST_CASE("spectral_decompose: equal moduli merge across polydisk factors") {
    const DomainDescriptor d = DomainDescriptor::product({{1, 1}, {1, 1}});
    const double theta = 0.7, phi = -1.2;
    Element z = Element::zero(d);
    z.blocks[0](0, 0) = std::polar(0.4, theta);
    z.blocks[1](0, 0) = std::polar(0.4, phi);
    const SpectralDecomposition dec = spectral_decompose(d, z);
    REQUIRE(dec.size() == 1);
    CHECK(dec.eigenvalues[0] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(dec.multiplicities[0] == 2);
    CHECK(std::abs(dec.tripotents[0].blocks[0](0, 0) - std::polar(1.0, theta)) <= 1e-13);
    CHECK(std::abs(dec.tripotents[0].blocks[1](0, 0) - std::polar(1.0, phi)) <= 1e-13);
    // the merged tripotent is still a tripotent
    const Element cube = triple_product(d, dec.tripotents[0], dec.tripotents[0],
                                        dec.tripotents[0]);
    CHECK((cube - dec.tripotents[0] * 2.0).norm() <= 1e-13);
}

TEST_CASE("spectral_decompose: near-equal singular values cluster") {
    const DomainDescriptor d = DomainDescriptor::type1(2, 2);
    Element z = Element::zero(d);
    z.blocks[0](0, 0) = 0.5;
    z.blocks[0](1, 1) = 0.5 + 1e-10;
    const SpectralDecomposition dec = spectral_decompose(d, z);
    REQUIRE(dec.size() == 1);
    CHECK(dec.multiplicities[0] == 2);
    CHECK((dec.reconstruct(d) - z).norm() <= 1e-9);
}

TEST_CASE("spectral_decompose: tiny singular values are dropped") {
    const DomainDescriptor d = DomainDescriptor::type1(2, 2);
    Element z = Element::zero(d);
    z.blocks[0](0, 0) = 0.5;
    z.blocks[0](1, 1) = 1e-13;
    const SpectralDecomposition dec = spectral_decompose(d, z);
    REQUIRE(dec.size() == 1);
    CHECK(dec.eigenvalues[0] == doctest::Approx(0.5));
}

TEST_CASE("spectral_decompose: reconstruction, residuals, rank bound on random input") {
    const DomainDescriptor d = DomainDescriptor::product({{2, 3}, {1, 2}});
    SampleOptions opt;
    opt.r_max = 0.95;
    for (long i = 0; i < 200; ++i) {
        Rng rng = Rng::stream(11, 0, i);
        const Element z = sample_element(d, rng, i, opt);
        const SpectralDecomposition dec = spectral_decompose(d, z);
        CHECK(dec.size() <= d.total_rank());
        CHECK((dec.reconstruct(d) - z).norm() <= 1e-10 * std::max(1.0, z.norm()));
        for (int j = 0; j < dec.size(); ++j) {
            CHECK(dec.eigenvalues[j] > 0.0);
            if (j > 0) CHECK(dec.eigenvalues[j] > dec.eigenvalues[j - 1]);
            const Element& c = dec.tripotents[j];
            CHECK((triple_product(d, c, c, c) - c * 2.0).norm() <= 1e-10);
            for (int k = j + 1; k < dec.size(); ++k) {
                CHECK(t_operator(d, c, dec.tripotents[k]).matrix.norm() <= 1e-10);
            }
        }
    }
}

TEST_CASE("bergman operator acts by (1 - l^2)^2 on the spectral frame") {
    const DomainDescriptor d = DomainDescriptor::product({{2, 2}, {1, 2}});
    SampleOptions opt;
    opt.r_max = 0.9;
    for (long i = 0; i < 100; ++i) {
        Rng rng = Rng::stream(16, 0, i);
        const Element z = sample_element(d, rng, i, opt);
        const SpectralDecomposition dec = spectral_decompose(d, z);
        const LinearMap b = bergman_operator(d, z, z);
        for (int j = 0; j < dec.size(); ++j) {
            const double lam = dec.eigenvalues[j];
            const Element expected = dec.tripotents[j] * std::pow(1.0 - lam * lam, 2);
            CHECK((b.apply(d, dec.tripotents[j]) - expected).norm() <=
                  1e-9 * dec.tripotents[j].norm());
        }
    }
}

TEST_CASE("spectral_norm: examples and norm axioms") {
    const DomainDescriptor d = DomainDescriptor::type1(2, 2);
    CHECK(spectral_norm(d, Element::zero(d)) == 0.0);
    Element z = Element::zero(d);
    z.blocks[0](0, 0) = 0.5;
    z.blocks[0](1, 1) = 0.3;
    CHECK(spectral_norm(d, z) == doctest::Approx(0.5).epsilon(1e-14));

    const DomainDescriptor row = DomainDescriptor::type1(1, 2);
    Element v = Element::zero(row);
    v.blocks[0](0, 0) = 0.6;
    CHECK(spectral_norm(row, v) == doctest::Approx(0.6).epsilon(1e-14));

    SampleOptions opt;
    opt.r_max = 1.0;
    for (long i = 0; i < 50; ++i) {
        Rng rng = Rng::stream(12, 0, i);
        const Element a = sample_element(d, rng, i, opt);
        const Element b = sample_element(d, rng, i + 1000, opt);
        CHECK(spectral_norm(d, a + b) <=
              spectral_norm(d, a) + spectral_norm(d, b) + 1e-12);
        CHECK(spectral_norm(d, a * 2.5) ==
              doctest::Approx(2.5 * spectral_norm(d, a)).epsilon(1e-12));
    }
}

TEST_CASE("in_domain: boundary cases") {
    const DomainDescriptor d = DomainDescriptor::type1(2, 2);
    CHECK(in_domain(d, Element::zero(d)));
    Element z = Element::zero(d);
    z.blocks[0](0, 0) = 0.5;
    z.blocks[0](1, 1) = 0.99;
    CHECK(in_domain(d, z));
    z.blocks[0](1, 1) = 1.0;
    CHECK(!in_domain(d, z));

    const DomainDescriptor row = DomainDescriptor::type1(1, 2);
    Element v = Element::zero(row);
    v.blocks[0](0, 0) = 0.8;
    v.blocks[0](0, 1) = 0.7;  // norm ~ 1.063
    CHECK(!in_domain(row, v));
}

TEST_CASE("functional_calculus: identity profile returns the element") {
    const DomainDescriptor d = DomainDescriptor::type1(2, 3);
    SampleOptions opt;
    opt.r_max = 1.2;
    Rng rng = Rng::stream(13, 0, 0);
    const Element z = sample_element(d, rng, 0, opt);
    const Element f = functional_calculus(d, [](double t) { return t; }, z);
    CHECK((f - z).norm() <= 1e-13);
}

TEST_CASE("functional_calculus: cube on a diagonal matrix") {
    const DomainDescriptor d = DomainDescriptor::type1(2, 2);
    Element z = Element::zero(d);
    z.blocks[0](0, 0) = 0.5;
    z.blocks[0](1, 1) = 0.3;
    const Element f = functional_calculus(d, [](double t) { return t * t * t; }, z);
    CHECK(f.blocks[0](0, 0).real() == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(f.blocks[0](1, 1).real() == doctest::Approx(0.027).epsilon(1e-13));
    // equals the algebraic odd power z^(3)
    CHECK((f - odd_power(d, z, 1)).norm() <= 1e-14);
}

TEST_CASE("functional_calculus: truncated series matches odd powers for small norm") {
    const DomainDescriptor d = DomainDescriptor::type1(2, 2);
    const double coeff[5] = {1.0, -1.0 / 3.0, 2.0 / 15.0, -17.0 / 315.0, 62.0 / 2835.0};
    SampleOptions opt;
    opt.r_max = 0.2;
    for (long i = 0; i < 50; ++i) {
        Rng rng = Rng::stream(14, 0, i);
        const Element z = sample_element(d, rng, i, opt);
        Element series = Element::zero(d);
        for (int k = 0; k < 5; ++k) series = series + odd_power(d, z, k) * coeff[k];
        const Element fc = functional_calculus(d, [](double t) { return std::tanh(t); }, z);
        CHECK((series - fc).norm() <= 1e-9);
    }
}

TEST_CASE("functional_calculus: frame preserved under strictly increasing profiles") {
    const DomainDescriptor d = DomainDescriptor::product({{2, 2}, {1, 1}});
    SampleOptions opt;
    opt.r_max = 0.9;
    opt.allow_ties = false;
    opt.min_gap = 0.05;
    opt.min_value = 0.05;
    const auto cube = [](double t) { return t * t * t; };
    for (long i = 0; i < 100; ++i) {
        Rng rng = Rng::stream(15, 0, i);
        const Element z = sample_element(d, rng, i, opt);
        const SpectralDecomposition a = spectral_decompose(d, z);
        const SpectralDecomposition b = spectral_decompose(d, functional_calculus(d, cube, z));
        REQUIRE(a.size() == b.size());
        for (int j = 0; j < a.size(); ++j) {
            CHECK(std::abs(b.eigenvalues[j] - cube(a.eigenvalues[j])) <= 1e-8);
            CHECK((b.tripotents[j] - a.tripotents[j]).norm() <= 1e-8);
        }
    }
}

TEST_CASE("functional_calculus: rejects profiles with f(0) != 0 or poles") {
    const DomainDescriptor d = DomainDescriptor::type1(1, 1);
    Element z = Element::zero(d);
    z.blocks[0](0, 0) = 0.5;
    CHECK_THROWS_AS(functional_calculus(d, [](double) { return 1.0; }, z), boundary_error);
    // profile with a pole at t = 0.5: the error must name the eigenvalue
    const auto pole = [](double t) { return t / (t - 0.5); };
    try {
        functional_calculus(d, pole, z);
        FAIL("expected boundary_error");
    } catch (const boundary_error& e) {
        CHECK(std::string(e.what()).find("0.5") != std::string::npos);
    }
}

TEST_CASE("scalar kernels: values and small-argument stability") {
    using namespace scalar_kernel;
    CHECK(dexp_hyp(0.0) == 0.0);
    CHECK(dexp_hyp(std::sqrt(std::log(2.0))) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(dexp_hyp_inv(std::sqrt(0.5)) ==
          doctest::Approx(std::sqrt(std::log(2.0))).epsilon(1e-14));
    CHECK(dexp_fs(std::sqrt(std::log(2.0))) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dexp_fs_inv(1.0) == doctest::Approx(std::sqrt(std::log(2.0))).epsilon(1e-14));
    CHECK(duality(0.6) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(duality_inv(0.75) == doctest::Approx(0.6).epsilon(1e-14));
    // near zero the profiles are ~ t with quadratic relative corrections
    for (const double t : {1e-9, 1e-6, 1e-5}) {
        CHECK(dexp_hyp(t) == doctest::Approx(t).epsilon(1e-9));
        CHECK(dexp_fs(t) == doctest::Approx(t).epsilon(1e-9));
        CHECK(dexp_hyp_inv(t) == doctest::Approx(t).epsilon(1e-9));
        CHECK(dexp_fs_inv(t) == doctest::Approx(t).epsilon(1e-9));
    }
    // oddness
    CHECK(dexp_hyp(-0.3) == -dexp_hyp(0.3));
    CHECK(dexp_fs(-0.3) == -dexp_fs(0.3));
    CHECK(duality(-0.3) == -duality(0.3));
}
