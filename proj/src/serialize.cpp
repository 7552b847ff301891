#include "hpjts/serialize.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace hpjts {

namespace {

std::pair<int, int> parse_type1(const std::string& token) {
    const std::string prefix = "type1:";
    if (token.rfind(prefix, 0) != 0) {
        throw domain_spec_error("unknown factor type in '" + token +
                                "' (expected type1:<p>,<q>)");
    }
    const std::string body = token.substr(prefix.size());
    const auto comma = body.find(',');
    if (comma == std::string::npos) {
        throw domain_spec_error("factor '" + token + "' missing ',' between p and q");
    }
    try {
        std::size_t used_p = 0, used_q = 0;
        const int p = std::stoi(body.substr(0, comma), &used_p);
        const int q = std::stoi(body.substr(comma + 1), &used_q);
        if (used_p != comma || used_q != body.size() - comma - 1) {
            throw domain_spec_error("trailing characters in factor '" + token + "'");
        }
        return {p, q};
    } catch (const domain_spec_error&) {
        throw;
    } catch (const std::exception&) {
        throw domain_spec_error("cannot parse block sizes in '" + token + "'");
    }
}

}  // namespace

DomainDescriptor parse_domain_spec(const std::string& spec) {
    const std::string product_prefix = "product:";
    std::vector<std::pair<int, int>> pq;
    if (spec.rfind(product_prefix, 0) == 0) {
        const std::string body = spec.substr(product_prefix.size());
        std::size_t start = 0;
        while (start <= body.size()) {
            const auto semi = body.find(';', start);
            const std::string token =
                body.substr(start, semi == std::string::npos ? std::string::npos
                                                             : semi - start);
            if (token.empty()) throw domain_spec_error("empty factor in '" + spec + "'");
            pq.push_back(parse_type1(token));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
    } else {
        pq.push_back(parse_type1(spec));
    }
    return DomainDescriptor::product(pq);
}

std::string domain_spec_string(const DomainDescriptor& d) {
    std::ostringstream os;
    if (d.factor_count() > 1) os << "product:";
    for (int f = 0; f < d.factor_count(); ++f) {
        if (f > 0) os << ";";
        os << "type1:" << d.factors()[f].p << "," << d.factors()[f].q;
    }
    return os.str();
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string element_to_json(const Element& e) {
    std::ostringstream os;
    os << "[";
    for (std::size_t f = 0; f < e.blocks.size(); ++f) {
        if (f > 0) os << ",";
        os << "[";
        const auto& b = e.blocks[f];
        // column-major entry order matches the vectorization convention
        for (Eigen::Index k = 0; k < b.size(); ++k) {
            if (k > 0) os << ",";
            const Complex c = *(b.data() + k);
            os << "[" << format_double(c.real()) << "," << format_double(c.imag()) << "]";
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string write_point_file(const DomainDescriptor& d, const PointFile& pf) {
    std::ostringstream os;
    os << "{\n  \"domain\": \"" << pf.domain_spec << "\",\n  \"points\": [";
    for (std::size_t i = 0; i < pf.points.size(); ++i) {
        check_shape(d, pf.points[i], "write_point_file");
        if (i > 0) os << ",";
        os << "\n    " << element_to_json(pf.points[i]);
    }
    os << "\n  ]\n}\n";
    return os.str();
}

PointFile read_point_file(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw domain_spec_error(std::string("point file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("domain") || !j.contains("points") ||
        !j["domain"].is_string() || !j["points"].is_array()) {
        throw domain_spec_error(
            "point file must be an object with 'domain' (string) and 'points' (array)");
    }
    PointFile pf;
    pf.domain_spec = j["domain"].get<std::string>();
    const DomainDescriptor d = parse_domain_spec(pf.domain_spec);
    for (const auto& pt : j["points"]) {
        if (!pt.is_array() || static_cast<int>(pt.size()) != d.factor_count()) {
            throw domain_spec_error("point does not have one block per factor");
        }
        Element e = Element::zero(d);
        for (int f = 0; f < d.factor_count(); ++f) {
            const auto& blk = pt[f];
            const auto& fac = d.factors()[f];
            if (!blk.is_array() || static_cast<int>(blk.size()) != fac.dim()) {
                std::ostringstream os;
                os << "block " << f << " must have " << fac.dim() << " [re,im] entries";
                throw domain_spec_error(os.str());
            }
            for (int k = 0; k < fac.dim(); ++k) {
                const auto& pair = blk[k];
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                    !pair[1].is_number()) {
                    throw domain_spec_error("entries must be [re, im] number pairs");
                }
                *(e.blocks[f].data() + k) =
                    Complex(pair[0].get<double>(), pair[1].get<double>());
            }
        }
        check_finite(e, "read_point_file");
        pf.points.push_back(std::move(e));
    }
    return pf;
}

}  // namespace hpjts
