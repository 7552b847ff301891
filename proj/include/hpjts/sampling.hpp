#pragma once

// Deterministic sampling of elements with controlled spectra.
//
// Random elements are drawn uniformly in the spectral frame: per factor a
// pair of unitaries from QR of complex Gaussian matrices, and singular
// values uniform in [0, r_max].  Every fourth sample of rank >= 2 repeats
// an eigenvalue so that degenerate spectra are exercised with positive
// probability.  The generator is a self-contained splitmix64 stream, so
// results are reproducible bit-for-bit across runs for a fixed seed; each
// sample gets its own stream keyed by (seed, stream id, sample index).

#include <cstdint>

#include "hpjts/domain.hpp"

namespace hpjts {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform01();                      // [0, 1)
    double uniform(double lo, double hi);
    double gaussian();                       // standard normal, Box-Muller
    Complex gaussian_complex();

    // Independent stream derived from (seed, stream, index).
    static Rng stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

private:
    std::uint64_t state_;
};

// Haar-ish unitary from QR of a complex Gaussian matrix with the phase of
// diag(R) absorbed.
Eigen::MatrixXcd random_unitary(Rng& rng, int n);

struct SampleOptions {
    double r_max = 0.9;          // eigenvalues uniform in [0, r_max]
    bool allow_ties = true;      // repeat an eigenvalue on every 4th sample
    double min_gap = 0.0;        // enforced pairwise eigenvalue gap (0 = off)
    double min_value = 0.0;      // enforced lower bound on eigenvalues
};

// Random element with prescribed spectral distribution; `index` is the
// sample's position in its stream (drives the tie rule).
Element sample_element(const DomainDescriptor& d, Rng& rng, std::uint64_t index,
                       const SampleOptions& opt);

// Random diagonal element (polydisk directions): t_k E_kk per factor with
// random phases and moduli in [0, r_max].
Element sample_diagonal_element(const DomainDescriptor& d, Rng& rng, double r_max);

}  // namespace hpjts
