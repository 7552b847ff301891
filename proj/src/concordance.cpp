#include "hpjts/concordance.hpp"

#include <algorithm>
#include <sstream>

namespace hpjts {

std::vector<ConcordanceEntry> parse_concordance(const std::string& text) {
    std::vector<ConcordanceEntry> entries;
    std::istringstream is(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {  // first non-comment line is the header
            header_seen = true;
            continue;
        }
        std::vector<std::string> cols;
        std::size_t start = 0;
        while (true) {
            const auto tab = line.find('\t', start);
            cols.push_back(line.substr(start, tab == std::string::npos
                                                  ? std::string::npos
                                                  : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        while (cols.size() < 4) cols.emplace_back();
        entries.push_back({cols[0], cols[1], cols[2], cols[3]});
    }
    return entries;
}

const std::vector<std::string>& required_anchors() {
    static const std::vector<std::string> anchors = {
        "triple-product",
        "jordan-identity",
        "t-operator",
        "q-operator",
        "bergman-operator",
        "bergman-factorized",
        "odd-powers",
        "trace-form-positivity",
        "tripotent",
        "strong-orthogonality",
        "genus",
        "spectral-decomposition",
        "spectral-norm",
        "unit-ball-realization",
        "functional-calculus",
        "functional-calculus-series",
        "polydisk-spectral-merge",
        "product-factorization",
        "kernel-hyp",
        "kernel-dual",
        "diastasis-hyp",
        "diastasis-fs",
        "metric-origin",
        "bergman-eigenaction",
        "bergman-determinant",
        "geo-exp-hyp",
        "geo-exp-fs",
        "dexp-hyp",
        "dexp-hyp-inverse",
        "dexp-fs",
        "dexp-fs-inverse",
        "diastatic-identity-hyp",
        "diastatic-identity-fs",
        "identity-differential",
        "polydisk-restriction-hyp",
        "polydisk-restriction-fs",
        "subblock-restriction",
        "duality-bergman-power",
        "duality-spectral",
        "duality-composition",
        "duality-pullback-flat",
        "duality-pullback-fs",
        "kernel-transfer",
        "diastasis-distance-asymptotics",
        "non-holomorphy",
    };
    return anchors;
}

std::vector<ConcordanceGap> check_concordance(
    const std::vector<ConcordanceEntry>& entries,
    const std::vector<std::string>& required) {
    std::vector<ConcordanceGap> gaps;
    for (const auto& anchor : required) {
        const auto it = std::find_if(entries.begin(), entries.end(),
                                     [&](const ConcordanceEntry& e) {
                                         return e.anchor == anchor;
                                     });
        if (it == entries.end()) {
            gaps.push_back({anchor, "missing"});
        } else if (it->test.empty()) {
            gaps.push_back({anchor, "untested"});
        }
    }
    return gaps;
}

}  // namespace hpjts
