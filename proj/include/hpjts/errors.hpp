#pragma once

// Error taxonomy used across the library.
//
//   shape_error       - element/block shapes disagree with the descriptor
//   boundary_error    - input lies on or beyond the boundary of validity
//                       (spectral norm >= 1 for hyperbolic-side maps,
//                        eigenvalue >= pi/2 for the compact geodesic chart,
//                        non-positive operator handed to a fractional power)
//   numeric_error     - a decomposition failed or produced non-finite output
//   domain_spec_error - malformed domain specification string or input file

#include <stdexcept>
#include <string>

namespace hpjts {

class shape_error : public std::invalid_argument {
public:
    explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

class boundary_error : public std::domain_error {
public:
    explicit boundary_error(const std::string& what) : std::domain_error(what) {}
};

class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

class domain_spec_error : public std::invalid_argument {
public:
    explicit domain_spec_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hpjts
