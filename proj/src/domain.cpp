#include "hpjts/domain.hpp"

#include <cmath>
#include <sstream>

namespace hpjts {

namespace {

// Trace of T(E11, E11) for a single type-I(p,q) factor, computed from the
// triple product itself: T(x,y)z = x y* z + z y* x, so
// tr T(x,y) = q tr(x y*) + p tr(y* x).  Used to validate genus = p + q at
// construction time.
double trace_form_e11(int p, int q) {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(p, q);
    c(0, 0) = 1.0;
    const Eigen::MatrixXcd cy = c * c.adjoint();   // p x p
    const Eigen::MatrixXcd yc = c.adjoint() * c;   // q x q
    return std::real(static_cast<Complex>(q) * cy.trace() +
                     static_cast<Complex>(p) * yc.trace());
}

void validate_factor(int p, int q) {
    if (p < 1 || q < 1) {
        std::ostringstream os;
        os << "type-I factor needs positive block sizes, got (" << p << "," << q << ")";
        throw domain_spec_error(os.str());
    }
    const double tr = trace_form_e11(p, q);
    if (std::abs(tr - static_cast<double>(p + q)) > 1e-10) {
        std::ostringstream os;
        os << "genus validation failed for I(" << p << "," << q << "): tr T(E11,E11) = "
           << tr << " != " << p + q;
        throw numeric_error(os.str());
    }
}

}  // namespace

DomainDescriptor DomainDescriptor::type1(int p, int q) {
    return product({{p, q}});
}

DomainDescriptor DomainDescriptor::product(const std::vector<std::pair<int, int>>& pq) {
    if (pq.empty()) throw domain_spec_error("domain needs at least one factor");
    DomainDescriptor d;
    int offset = 0;
    for (const auto& [p, q] : pq) {
        validate_factor(p, q);
        IrreducibleFactor f;
        f.p = p;
        f.q = q;
        f.genus = p + q;
        f.rank = std::min(p, q);
        d.factors_.push_back(f);
        d.offsets_.push_back(offset);
        offset += f.dim();
        d.total_rank_ += f.rank;
    }
    d.total_dim_ = offset;
    return d;
}

std::vector<int> DomainDescriptor::genus_per_factor() const {
    std::vector<int> g;
    g.reserve(factors_.size());
    for (const auto& f : factors_) g.push_back(f.genus);
    return g;
}

Element Element::zero(const DomainDescriptor& d) {
    Element e;
    e.blocks.reserve(d.factor_count());
    for (const auto& f : d.factors()) {
        e.blocks.push_back(Eigen::MatrixXcd::Zero(f.p, f.q));
    }
    return e;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    for (std::size_t i = 0; i < blocks.size(); ++i) r.blocks[i] += o.blocks[i];
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    for (std::size_t i = 0; i < blocks.size(); ++i) r.blocks[i] -= o.blocks[i];
    return r;
}

Element Element::operator*(Complex s) const {
    Element r = *this;
    for (auto& b : r.blocks) b *= s;
    return r;
}

Element Element::operator*(double s) const { return *this * Complex(s, 0.0); }

double Element::norm() const {
    double sq = 0.0;
    for (const auto& b : blocks) sq += b.squaredNorm();
    return std::sqrt(sq);
}

bool Element::all_finite() const {
    for (const auto& b : blocks) {
        if (!b.allFinite()) return false;
    }
    return true;
}

void check_shape(const DomainDescriptor& d, const Element& x, const char* who) {
    if (static_cast<int>(x.blocks.size()) != d.factor_count()) {
        std::ostringstream os;
        os << who << ": element has " << x.blocks.size() << " blocks, descriptor has "
           << d.factor_count() << " factors";
        throw shape_error(os.str());
    }
    for (int f = 0; f < d.factor_count(); ++f) {
        const auto& fac = d.factors()[f];
        if (x.blocks[f].rows() != fac.p || x.blocks[f].cols() != fac.q) {
            std::ostringstream os;
            os << who << ": block " << f << " is " << x.blocks[f].rows() << "x"
               << x.blocks[f].cols() << ", expected " << fac.p << "x" << fac.q;
            throw shape_error(os.str());
        }
    }
}

void check_finite(const Element& x, const char* who) {
    if (!x.all_finite()) {
        throw shape_error(std::string(who) + ": non-finite entry in element");
    }
}

Eigen::VectorXcd vectorize(const DomainDescriptor& d, const Element& x) {
    Eigen::VectorXcd v(d.total_dim());
    for (int f = 0; f < d.factor_count(); ++f) {
        const auto& b = x.blocks[f];
        v.segment(d.factor_offset(f), b.size()) =
            Eigen::Map<const Eigen::VectorXcd>(b.data(), b.size());
    }
    return v;
}

Element unvectorize(const DomainDescriptor& d, const Eigen::VectorXcd& v) {
    Element e = Element::zero(d);
    for (int f = 0; f < d.factor_count(); ++f) {
        auto& b = e.blocks[f];
        Eigen::Map<Eigen::VectorXcd>(b.data(), b.size()) =
            v.segment(d.factor_offset(f), b.size());
    }
    return e;
}

Eigen::VectorXd real_coords(const DomainDescriptor& d, const Element& x) {
    const Eigen::VectorXcd v = vectorize(d, x);
    Eigen::VectorXd r(2 * v.size());
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        r(2 * k) = v(k).real();
        r(2 * k + 1) = v(k).imag();
    }
    return r;
}

Element element_from_real(const DomainDescriptor& d, const Eigen::VectorXd& r) {
    Eigen::VectorXcd v(r.size() / 2);
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        v(k) = Complex(r(2 * k), r(2 * k + 1));
    }
    return unvectorize(d, v);
}

}  // namespace hpjts
