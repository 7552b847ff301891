#include "hpjts/sampling.hpp"

#include <cmath>

namespace hpjts {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double Rng::gaussian() {
    // Box-Muller; guard against log(0)
    double u1 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Complex Rng::gaussian_complex() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) * M_SQRT1_2;
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t s = seed;
    splitmix64(s);
    s ^= 0x632be59bd9b4e019ULL * (stream + 1);
    splitmix64(s);
    s ^= 0x9e3779b97f4a7c15ULL * (index + 1);
    splitmix64(s);
    return Rng(s);
}

Eigen::MatrixXcd random_unitary(Rng& rng, int n) {
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian_complex();
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex rj = r(j, j);
        const double a = std::abs(rj);
        if (a > 0.0) q.col(j) *= rj / a;
    }
    return q;
}

Element sample_element(const DomainDescriptor& d, Rng& rng, std::uint64_t index,
                       const SampleOptions& opt) {
    Element z = Element::zero(d);
    for (int f = 0; f < d.factor_count(); ++f) {
        const auto& fac = d.factors()[f];
        const Eigen::MatrixXcd up = random_unitary(rng, fac.p);
        const Eigen::MatrixXcd uq = random_unitary(rng, fac.q);
        Eigen::VectorXd sv(fac.rank);
        for (int i = 0; i < fac.rank; ++i) {
            double s = rng.uniform(opt.min_value, opt.r_max);
            if (opt.min_gap > 0.0) {
                // resample until pairwise separated (cheap at these ranks)
                bool ok = false;
                while (!ok) {
                    ok = true;
                    for (int k = 0; k < i; ++k) {
                        if (std::abs(s - sv(k)) < opt.min_gap) {
                            ok = false;
                            s = rng.uniform(opt.min_value, opt.r_max);
                            break;
                        }
                    }
                }
            }
            sv(i) = s;
        }
        if (opt.allow_ties && fac.rank >= 2 && index % 4 == 3) sv(1) = sv(0);
        Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(fac.p, fac.q);
        for (int i = 0; i < fac.rank; ++i) diag(i, i) = sv(i);
        z.blocks[f] = up * diag * uq.adjoint();
    }
    return z;
}

Element sample_diagonal_element(const DomainDescriptor& d, Rng& rng, double r_max) {
    Element z = Element::zero(d);
    for (int f = 0; f < d.factor_count(); ++f) {
        const auto& fac = d.factors()[f];
        for (int i = 0; i < fac.rank; ++i) {
            const double rho = rng.uniform(0.0, r_max);
            const double theta = rng.uniform(0.0, 2.0 * M_PI);
            z.blocks[f](i, i) = std::polar(rho, theta);
        }
    }
    return z;
}

}  // namespace hpjts
