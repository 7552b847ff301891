#pragma once

// Formula-to-code concordance.  docs/formula_map.tsv records, one row per
// identity, which code unit implements it and which test exercises it; a
// unit test keeps the table complete against the required anchor list.

#include <string>
#include <vector>

namespace hpjts {

struct ConcordanceEntry {
    std::string anchor;   // stable kebab-case id
    std::string formula;  // the identity, in plain notation
    std::string unit;     // implementing code unit
    std::string test;     // test exercising it
};

struct ConcordanceGap {
    std::string anchor;
    std::string reason;  // "missing" or "untested"
};

// Parses the TSV (header row required, '#' comments allowed).
std::vector<ConcordanceEntry> parse_concordance(const std::string& text);

// Anchors every build must map (the in-scope identity list).
const std::vector<std::string>& required_anchors();

// Gaps: required anchors without an entry, and entries with an empty test
// field ("untested").
std::vector<ConcordanceGap> check_concordance(const std::vector<ConcordanceEntry>& entries,
                                              const std::vector<std::string>& required);

}  // namespace hpjts
