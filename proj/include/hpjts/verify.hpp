#pragma once

// The invariant suite behind `verify`: algebra, spectral, geometry and
// duality checks, each with a stable name and a pinned default tolerance.
// With sample count 0 every check is reported as skipped.

#include <cstdint>
#include <map>
#include <string>

#include "hpjts/report.hpp"

namespace hpjts {

struct VerifyOptions {
    long samples = 200;
    std::uint64_t seed = 42;
    std::map<std::string, double> tolerance_overrides;
    FDConfig fd;
};

// Stable names and default tolerances of every check, in report order.
const std::vector<std::pair<std::string, double>>& verification_checks();

VerificationReport run_verification(const DomainDescriptor& d,
                                    const std::string& domain_spec_echo,
                                    const VerifyOptions& options);

}  // namespace hpjts
