#pragma once

// Verification report: the machine-readable outcome of a verify run.
// Serialized as canonical JSON (fixed key order, 17-significant-digit
// numbers, LF endings) so identical inputs produce identical bytes.

#include <string>
#include <vector>

#include "hpjts/domain.hpp"
#include "hpjts/numerics.hpp"

namespace hpjts {

struct CheckResult {
    std::string name;
    long samples = 0;
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    bool skipped = false;
};

struct VerificationReport {
    std::string domain_spec;
    std::vector<IrreducibleFactor> factors;
    std::uint64_t seed = 0;
    long sample_count = 0;
    int threads = 1;
    FDConfig fd;
    std::string library_version;
    std::string eigen_version;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_canonical_json() const;
};

}  // namespace hpjts
