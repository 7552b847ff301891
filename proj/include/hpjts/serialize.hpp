#pragma once

// External file formats.
//
// Domain specification micro-grammar:
//   type1:<p>,<q>
//   product:type1:<p>,<q>;type1:<p>,<q>;...
//
// Point files are JSON:
//   { "domain": "<spec>",
//     "points": [ element, ... ] }
// where an element is a list of per-factor blocks and each block is the
// column-major list of its entries as [re, im] pairs.
//
// All numbers written by this library use decimal with 17 significant
// digits (round-trips doubles exactly); writers emit LF line endings and a
// fixed key order, so output is byte-deterministic.

#include <string>
#include <vector>

#include "hpjts/domain.hpp"

namespace hpjts {

// Throws domain_spec_error on malformed input.
DomainDescriptor parse_domain_spec(const std::string& spec);
std::string domain_spec_string(const DomainDescriptor& d);

struct PointFile {
    std::string domain_spec;
    std::vector<Element> points;
};

// %.17g formatting used for every number the library writes.
std::string format_double(double x);

std::string write_point_file(const DomainDescriptor& d, const PointFile& pf);

// Parses and validates shapes against the embedded domain spec.  Throws
// domain_spec_error on malformed JSON, unknown schema or shape mismatch.
PointFile read_point_file(const std::string& text);

std::string element_to_json(const Element& e);

}  // namespace hpjts
