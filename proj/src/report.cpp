#include "hpjts/report.hpp"

#include <sstream>

#include "hpjts/serialize.hpp"

namespace hpjts {

bool VerificationReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.skipped && !c.pass) return false;
    }
    return true;
}

std::string VerificationReport::to_canonical_json() const {
    std::ostringstream os;
    os << "{\n";
    os << "  \"domain\": \"" << domain_spec << "\",\n";
    os << "  \"factors\": [";
    for (std::size_t f = 0; f < factors.size(); ++f) {
        if (f > 0) os << ", ";
        os << "{\"p\": " << factors[f].p << ", \"q\": " << factors[f].q
           << ", \"genus\": " << factors[f].genus << ", \"rank\": " << factors[f].rank
           << "}";
    }
    os << "],\n";
    os << "  \"seed\": " << seed << ",\n";
    os << "  \"samples\": " << sample_count << ",\n";
    os << "  \"threads\": " << threads << ",\n";
    os << "  \"fd\": {\"hessian_step\": " << format_double(fd.hessian_step)
       << ", \"jacobian_step\": " << format_double(fd.jacobian_step) << "},\n";
    os << "  \"versions\": {\"hpjts\": \"" << library_version << "\", \"eigen\": \""
       << eigen_version << "\"},\n";
    os << "  \"checks\": [";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        if (i > 0) os << ",";
        os << "\n    {\"name\": \"" << c.name << "\", \"samples\": " << c.samples
           << ", \"max_abs_error\": " << format_double(c.max_abs_error)
           << ", \"tolerance\": " << format_double(c.tolerance)
           << ", \"pass\": " << (c.pass ? "true" : "false")
           << ", \"skipped\": " << (c.skipped ? "true" : "false") << "}";
    }
    os << "\n  ],\n";
    os << "  \"all_pass\": " << (all_pass() ? "true" : "false") << "\n";
    os << "}\n";
    return os.str();
}

}  // namespace hpjts
