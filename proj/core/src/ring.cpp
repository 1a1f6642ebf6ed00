/*
   Copyright 2026 the ringfactor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ringfactor/ring.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "ringfactor/analytic.hpp"

namespace ringfactor {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidDescriptor: return "InvalidDescriptor";
        case Errc::DescriptorMismatch: return "DescriptorMismatch";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::DimensionTooLarge: return "DimensionTooLarge";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::NotUnimodular: return "NotUnimodular";
        case Errc::UnsupportedRing: return "UnsupportedRing";
        case Errc::OracleUnavailable: return "OracleUnavailable";
        case Errc::CertificateInvalid: return "CertificateInvalid";
        case Errc::NotPrincipalUnit: return "NotPrincipalUnit";
        case Errc::RingWithoutRationals: return "RingWithoutRationals";
        case Errc::NotSL: return "NotSL";
        case Errc::NotAField: return "NotAField";
        case Errc::NotUnipotent: return "NotUnipotent";
        case Errc::NotNilpotent: return "NotNilpotent";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
        case Errc::UnannotatedPole: return "UnannotatedPole";
        case Errc::PoleAtBase: return "PoleAtBase";
        case Errc::VanishingConstantTerm: return "VanishingConstantTerm";
        case Errc::DuplicateBasePoints: return "DuplicateBasePoints";
        case Errc::NonConvergence: return "NonConvergence";
        case Errc::NotDoubleEigenvalue: return "NotDoubleEigenvalue";
        case Errc::EigenvectorDegenerate: return "EigenvectorDegenerate";
        case Errc::RootFindingFailed: return "RootFindingFailed";
        case Errc::JetDivisionFailed: return "JetDivisionFailed";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

Rat rat_from_string(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(Int(std::string(text)));
        }
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        return make_rat(num, den);
    } catch (const std::exception&) {
        fail(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
    }
}

std::string rat_to_string(const Rat& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

// ---------------------------------------------------------------------------
// RingDescriptor

RingDescriptor RingDescriptor::integers() { return {RingKind::Integer, {}, 0}; }
RingDescriptor RingDescriptor::rationals() { return {RingKind::Rational, {}, 0}; }
RingDescriptor RingDescriptor::gaussian_rationals() { return {RingKind::GaussianRational, {}, 0}; }
RingDescriptor RingDescriptor::analytic() { return {RingKind::Analytic, {}, 0}; }

RingDescriptor RingDescriptor::poly(RingDescriptor base) {
    if (!base.is_field())
        fail(Errc::UnsupportedRing,
             "polynomial ring over non-field base " + base.to_string() +
                 " (multivariable rings are not supported)");
    return {RingKind::Poly, {std::move(base)}, 0};
}

RingDescriptor RingDescriptor::jet(RingDescriptor base, int order) {
    if (!base.is_field())
        fail(Errc::UnsupportedRing, "jet ring over non-field base " + base.to_string());
    if (order < 1) fail(Errc::InvalidDescriptor, "jet truncation order must be >= 1");
    return {RingKind::Jet, {std::move(base)}, order};
}

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> components) {
    if (components.empty()) fail(Errc::InvalidDescriptor, "product ring needs >= 1 component");
    for (const auto& c : components)
        if (!c.is_exact())
            fail(Errc::UnsupportedRing, "product ring with analytic component");
    return {RingKind::Product, std::move(components), 0};
}

const RingDescriptor& RingDescriptor::base() const {
    assert(kind_ == RingKind::Poly || kind_ == RingKind::Jet);
    return children_->front();
}

const std::vector<RingDescriptor>& RingDescriptor::components() const {
    assert(kind_ == RingKind::Product);
    return *children_;
}

bool RingDescriptor::operator==(const RingDescriptor& other) const {
    if (kind_ != other.kind_ || order_ != other.order_) return false;
    if (children_ == other.children_) return true;
    if (!children_ || !other.children_) return false;
    return *children_ == *other.children_;
}

bool RingDescriptor::contains_rationals() const {
    switch (kind_) {
        case RingKind::Integer: return false;
        case RingKind::Rational:
        case RingKind::GaussianRational:
        case RingKind::Analytic: return true;
        case RingKind::Poly:
        case RingKind::Jet: return base().contains_rationals();
        case RingKind::Product:
            return std::all_of(children_->begin(), children_->end(),
                               [](const RingDescriptor& c) { return c.contains_rationals(); });
    }
    return false;
}

bool RingDescriptor::has_bsr1_oracle() const {
    switch (kind_) {
        case RingKind::Rational:
        case RingKind::GaussianRational:
        case RingKind::Jet: return true;
        case RingKind::Product:
            return std::all_of(children_->begin(), children_->end(),
                               [](const RingDescriptor& c) { return c.has_bsr1_oracle(); });
        default: return false;
    }
}

int RingDescriptor::nilpotency_bound() const {
    switch (kind_) {
        case RingKind::Jet: return order_;
        case RingKind::Product: {
            int bound = 1;
            for (const auto& c : *children_) bound = std::max(bound, c.nilpotency_bound());
            return bound;
        }
        default: return 1; // reduced rings: only 0 is nilpotent
    }
}

std::string RingDescriptor::to_string() const {
    switch (kind_) {
        case RingKind::Integer: return "Z";
        case RingKind::Rational: return "Q";
        case RingKind::GaussianRational: return "Q(i)";
        case RingKind::Poly: return base().to_string() + "[z]";
        case RingKind::Jet:
            return base().to_string() + "[z]/(z^" + std::to_string(order_) + ")";
        case RingKind::Product: {
            std::string out = "(";
            for (size_t i = 0; i < children_->size(); ++i) {
                if (i) out += " x ";
                out += (*children_)[i].to_string();
            }
            return out + ")";
        }
        case RingKind::Analytic: return "O(C)";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// RingElement construction

RingElement RingElement::integer(Int value) {
    return RingElement(RingDescriptor::integers(), std::move(value));
}

RingElement RingElement::rational(Rat value) {
    return RingElement(RingDescriptor::rationals(), std::move(value));
}

RingElement RingElement::gaussian(GaussRat value) {
    return RingElement(RingDescriptor::gaussian_rationals(), std::move(value));
}

RingElement RingElement::poly(const RingDescriptor& desc, ElemVec coefficients) {
    if (desc.kind() != RingKind::Poly) fail(Errc::DescriptorMismatch, "poly() needs a Poly descriptor");
    for (const auto& c : coefficients)
        if (c.descriptor() != desc.base())
            fail(Errc::DescriptorMismatch, "polynomial coefficient in wrong base ring");
    while (!coefficients.empty() && coefficients.back().is_zero()) coefficients.pop_back();
    return RingElement(desc, std::move(coefficients));
}

RingElement RingElement::jet(const RingDescriptor& desc, ElemVec coefficients) {
    if (desc.kind() != RingKind::Jet) fail(Errc::DescriptorMismatch, "jet() needs a Jet descriptor");
    const size_t n = static_cast<size_t>(desc.jet_order());
    for (const auto& c : coefficients)
        if (c.descriptor() != desc.base())
            fail(Errc::DescriptorMismatch, "jet coefficient in wrong base ring");
    coefficients.resize(n, RingElement::zero(desc.base())); // quotient by z^N
    return RingElement(desc, std::move(coefficients));
}

RingElement RingElement::product(const RingDescriptor& desc, ElemVec components) {
    if (desc.kind() != RingKind::Product)
        fail(Errc::DescriptorMismatch, "product() needs a Product descriptor");
    const auto& comps = desc.components();
    if (components.size() != comps.size())
        fail(Errc::DescriptorMismatch, "component count does not match product descriptor");
    for (size_t i = 0; i < comps.size(); ++i)
        if (components[i].descriptor() != comps[i])
            fail(Errc::DescriptorMismatch, "product component in wrong ring");
    return RingElement(desc, std::move(components));
}

RingElement RingElement::analytic_fn(FuncPtr expr) {
    if (!expr) fail(Errc::ParseError, "null analytic expression");
    return RingElement(RingDescriptor::analytic(), std::move(expr));
}

RingElement RingElement::zero(const RingDescriptor& desc) {
    switch (desc.kind()) {
        case RingKind::Integer: return integer(0);
        case RingKind::Rational: return rational(Rat(0));
        case RingKind::GaussianRational: return gaussian(GaussRat(0));
        case RingKind::Poly: return RingElement(desc, ElemVec{});
        case RingKind::Jet: {
            ElemVec c(static_cast<size_t>(desc.jet_order()), zero(desc.base()));
            return RingElement(desc, std::move(c));
        }
        case RingKind::Product: {
            ElemVec c;
            c.reserve(desc.components().size());
            for (const auto& comp : desc.components()) c.push_back(zero(comp));
            return RingElement(desc, std::move(c));
        }
        case RingKind::Analytic: return analytic_fn(analytic::FuncExpr::constant(0.0));
    }
    fail(Errc::InvalidDescriptor, "unknown ring kind");
}

RingElement RingElement::one(const RingDescriptor& desc) {
    switch (desc.kind()) {
        case RingKind::Integer: return integer(1);
        case RingKind::Rational: return rational(Rat(1));
        case RingKind::GaussianRational: return gaussian(GaussRat(1));
        case RingKind::Poly: return poly(desc, {one(desc.base())});
        case RingKind::Jet: {
            ElemVec c(static_cast<size_t>(desc.jet_order()), zero(desc.base()));
            c[0] = one(desc.base());
            return RingElement(desc, std::move(c));
        }
        case RingKind::Product: {
            ElemVec c;
            c.reserve(desc.components().size());
            for (const auto& comp : desc.components()) c.push_back(one(comp));
            return RingElement(desc, std::move(c));
        }
        case RingKind::Analytic: return analytic_fn(analytic::FuncExpr::constant(1.0));
    }
    fail(Errc::InvalidDescriptor, "unknown ring kind");
}

RingElement RingElement::from_rat(const RingDescriptor& desc, const Rat& value) {
    switch (desc.kind()) {
        case RingKind::Integer:
            if (denominator(value) != 1)
                fail(Errc::RingWithoutRationals,
                     "cannot embed " + rat_to_string(value) + " into Z");
            return integer(numerator(value));
        case RingKind::Rational: return rational(value);
        case RingKind::GaussianRational: return gaussian(value, Rat(0));
        case RingKind::Poly:
            if (value == 0) return zero(desc);
            return poly(desc, {from_rat(desc.base(), value)});
        case RingKind::Jet: {
            ElemVec c(static_cast<size_t>(desc.jet_order()), zero(desc.base()));
            c[0] = from_rat(desc.base(), value);
            return RingElement(desc, std::move(c));
        }
        case RingKind::Product: {
            ElemVec c;
            c.reserve(desc.components().size());
            for (const auto& comp : desc.components()) c.push_back(from_rat(comp, value));
            return RingElement(desc, std::move(c));
        }
        case RingKind::Analytic:
            return analytic_fn(analytic::FuncExpr::constant(rat_to_double(value)));
    }
    fail(Errc::InvalidDescriptor, "unknown ring kind");
}

// ---------------------------------------------------------------------------
// RingElement predicates and arithmetic

bool RingElement::is_zero() const {
    switch (kind()) {
        case RingKind::Integer: return int_value() == 0;
        case RingKind::Rational: return rat_value() == 0;
        case RingKind::GaussianRational: return gauss_value().is_zero();
        case RingKind::Poly: return parts().empty();
        case RingKind::Jet:
        case RingKind::Product:
            return std::all_of(parts().begin(), parts().end(),
                               [](const RingElement& p) { return p.is_zero(); });
        case RingKind::Analytic: return analytic::is_const_zero(func_value());
    }
    return false;
}

bool RingElement::is_one() const {
    switch (kind()) {
        case RingKind::Integer: return int_value() == 1;
        case RingKind::Rational: return rat_value() == 1;
        case RingKind::GaussianRational:
            return gauss_value().re == 1 && gauss_value().im == 0;
        case RingKind::Poly:
            return parts().size() == 1 && parts().front().is_one();
        case RingKind::Jet: {
            const auto& c = parts();
            if (!c.front().is_one()) return false;
            return std::all_of(c.begin() + 1, c.end(),
                               [](const RingElement& p) { return p.is_zero(); });
        }
        case RingKind::Product:
            return std::all_of(parts().begin(), parts().end(),
                               [](const RingElement& p) { return p.is_one(); });
        case RingKind::Analytic: return analytic::is_const_one(func_value());
    }
    return false;
}

namespace {

void require_same_ring(const RingElement& a, const RingElement& b) {
    if (a.descriptor() != b.descriptor())
        fail(Errc::DescriptorMismatch, "operands live in " + a.descriptor().to_string() +
                                           " and " + b.descriptor().to_string());
}

} // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    const auto& desc = a.descriptor();
    switch (a.kind()) {
        case RingKind::Integer: return RingElement::integer(a.int_value() + b.int_value());
        case RingKind::Rational: return RingElement::rational(a.rat_value() + b.rat_value());
        case RingKind::GaussianRational:
            return RingElement::gaussian(a.gauss_value() + b.gauss_value());
        case RingKind::Poly: {
            const auto& x = a.parts();
            const auto& y = b.parts();
            ElemVec out;
            const size_t n = std::max(x.size(), y.size());
            out.reserve(n);
            for (size_t i = 0; i < n; ++i) {
                if (i < x.size() && i < y.size()) out.push_back(x[i] + y[i]);
                else out.push_back(i < x.size() ? x[i] : y[i]);
            }
            return RingElement::poly(desc, std::move(out));
        }
        case RingKind::Jet:
        case RingKind::Product: {
            ElemVec out;
            out.reserve(a.parts().size());
            for (size_t i = 0; i < a.parts().size(); ++i) out.push_back(a.parts()[i] + b.parts()[i]);
            return desc.kind() == RingKind::Jet ? RingElement::jet(desc, std::move(out))
                                                : RingElement::product(desc, std::move(out));
        }
        case RingKind::Analytic:
            return RingElement::analytic_fn(analytic::FuncExpr::add(a.func_value(), b.func_value()));
    }
    fail(Errc::InvalidDescriptor, "unknown ring kind");
}

RingElement RingElement::operator-() const {
    switch (kind()) {
        case RingKind::Integer: return integer(-int_value());
        case RingKind::Rational: return rational(-rat_value());
        case RingKind::GaussianRational: return gaussian(-gauss_value());
        case RingKind::Poly:
        case RingKind::Jet:
        case RingKind::Product: {
            ElemVec out;
            out.reserve(parts().size());
            for (const auto& p : parts()) out.push_back(-p);
            if (kind() == RingKind::Poly) return poly(desc_, std::move(out));
            if (kind() == RingKind::Jet) return jet(desc_, std::move(out));
            return product(desc_, std::move(out));
        }
        case RingKind::Analytic:
            return analytic_fn(analytic::FuncExpr::sub(analytic::FuncExpr::constant(0.0), func_value()));
    }
    fail(Errc::InvalidDescriptor, "unknown ring kind");
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    const auto& desc = a.descriptor();
    switch (a.kind()) {
        case RingKind::Integer: return RingElement::integer(a.int_value() * b.int_value());
        case RingKind::Rational: return RingElement::rational(a.rat_value() * b.rat_value());
        case RingKind::GaussianRational:
            return RingElement::gaussian(a.gauss_value() * b.gauss_value());
        case RingKind::Poly: {
            const auto& x = a.parts();
            const auto& y = b.parts();
            if (x.empty() || y.empty()) return RingElement::zero(desc);
            ElemVec out(x.size() + y.size() - 1, RingElement::zero(desc.base()));
            for (size_t i = 0; i < x.size(); ++i)
                for (size_t j = 0; j < y.size(); ++j) out[i + j] = out[i + j] + x[i] * y[j];
            return RingElement::poly(desc, std::move(out));
        }
        case RingKind::Jet: {
            const auto& x = a.parts();
            const auto& y = b.parts();
            const size_t n = x.size();
            ElemVec out(n, RingElement::zero(desc.base()));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; i + j < n && j < n; ++j) out[i + j] = out[i + j] + x[i] * y[j];
            return RingElement::jet(desc, std::move(out));
        }
        case RingKind::Product: {
            ElemVec out;
            out.reserve(a.parts().size());
            for (size_t i = 0; i < a.parts().size(); ++i) out.push_back(a.parts()[i] * b.parts()[i]);
            return RingElement::product(desc, std::move(out));
        }
        case RingKind::Analytic:
            return RingElement::analytic_fn(analytic::FuncExpr::mul(a.func_value(), b.func_value()));
    }
    fail(Errc::InvalidDescriptor, "unknown ring kind");
}

bool RingElement::operator==(const RingElement& other) const {
    require_same_ring(*this, other);
    switch (kind()) {
        case RingKind::Integer: return int_value() == other.int_value();
        case RingKind::Rational: return rat_value() == other.rat_value();
        case RingKind::GaussianRational: return gauss_value() == other.gauss_value();
        case RingKind::Poly:
        case RingKind::Jet:
        case RingKind::Product: {
            if (parts().size() != other.parts().size()) return false;
            for (size_t i = 0; i < parts().size(); ++i)
                if (!(parts()[i] == other.parts()[i])) return false;
            return true;
        }
        case RingKind::Analytic:
            fail(Errc::UnsupportedRing, "equality of analytic functions is not decidable");
    }
    return false;
}

bool is_unit(const RingElement& a) {
    switch (a.kind()) {
        case RingKind::Integer: return a.int_value() == 1 || a.int_value() == -1;
        case RingKind::Rational: return a.rat_value() != 0;
        case RingKind::GaussianRational: return !a.gauss_value().is_zero();
        case RingKind::Poly: return a.parts().size() == 1 && is_unit(a.parts().front());
        case RingKind::Jet: return is_unit(a.parts().front());
        case RingKind::Product:
            return std::all_of(a.parts().begin(), a.parts().end(),
                               [](const RingElement& p) { return is_unit(p); });
        case RingKind::Analytic:
            fail(Errc::UnsupportedRing, "unit test on analytic functions is not decidable");
    }
    return false;
}

RingElement invert_unit(const RingElement& a) {
    if (a.kind() == RingKind::Analytic)
        fail(Errc::UnsupportedRing, "cannot invert analytic functions exactly");
    if (!is_unit(a)) fail(Errc::NotAUnit, "element of " + a.descriptor().to_string() + " is not a unit");
    const auto& desc = a.descriptor();
    switch (a.kind()) {
        case RingKind::Integer: return a;
        case RingKind::Rational: return RingElement::rational(Rat(1) / a.rat_value());
        case RingKind::GaussianRational:
            return RingElement::gaussian(GaussRat(1) / a.gauss_value());
        case RingKind::Poly: return RingElement::poly(desc, {invert_unit(a.parts().front())});
        case RingKind::Jet: {
            // power series inversion mod z^N
            const auto& c = a.parts();
            const size_t n = c.size();
            ElemVec out(n, RingElement::zero(desc.base()));
            out[0] = invert_unit(c[0]);
            for (size_t k = 1; k < n; ++k) {
                RingElement acc = RingElement::zero(desc.base());
                for (size_t j = 1; j <= k; ++j) acc = acc + c[j] * out[k - j];
                out[k] = -(out[0] * acc);
            }
            return RingElement::jet(desc, std::move(out));
        }
        case RingKind::Product: {
            ElemVec out;
            out.reserve(a.parts().size());
            for (const auto& p : a.parts()) out.push_back(invert_unit(p));
            return RingElement::product(desc, std::move(out));
        }
        default: break;
    }
    fail(Errc::InvalidDescriptor, "unknown ring kind");
}

// ---------------------------------------------------------------------------
// Polynomial helpers

int poly_degree(const RingElement& a) {
    if (a.kind() != RingKind::Poly) fail(Errc::DescriptorMismatch, "poly_degree needs a polynomial");
    return static_cast<int>(a.parts().size()) - 1;
}

std::pair<RingElement, RingElement> poly_divmod(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    if (a.kind() != RingKind::Poly) fail(Errc::DescriptorMismatch, "poly_divmod needs polynomials");
    if (b.is_zero()) fail(Errc::NotAUnit, "polynomial division by zero");
    const auto& desc = a.descriptor();
    const auto& base = desc.base();
    ElemVec rem = a.parts();
    const auto& div = b.parts();
    const RingElement lead_inv = invert_unit(div.back());
    const int db = static_cast<int>(div.size()) - 1;
    ElemVec quo;
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr >= db) quo.assign(static_cast<size_t>(dr - db) + 1, RingElement::zero(base));
    while (dr >= db) {
        RingElement c = rem[static_cast<size_t>(dr)] * lead_inv;
        quo[static_cast<size_t>(dr - db)] = c;
        for (int i = 0; i <= db; ++i) {
            size_t k = static_cast<size_t>(dr - db + i);
            rem[k] = rem[k] - c * div[static_cast<size_t>(i)];
        }
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        dr = static_cast<int>(rem.size()) - 1;
    }
    return {RingElement::poly(desc, std::move(quo)), RingElement::poly(desc, std::move(rem))};
}

namespace {

// Extended Euclid over Z or over base[z]; returns g and writes s, t with
// s*a + t*b = g.
RingElement xgcd(const RingElement& a, const RingElement& b, RingElement& s, RingElement& t) {
    const auto& desc = a.descriptor();
    RingElement old_r = a, r = b;
    RingElement old_s = RingElement::one(desc), s_cur = RingElement::zero(desc);
    RingElement old_t = RingElement::zero(desc), t_cur = RingElement::one(desc);
    while (!r.is_zero()) {
        RingElement q = RingElement::zero(desc);
        if (desc.kind() == RingKind::Integer) {
            q = RingElement::integer(old_r.int_value() / r.int_value());
        } else {
            q = poly_divmod(old_r, r).first;
        }
        RingElement next_r = old_r - q * r;
        old_r = r;
        r = next_r;
        RingElement next_s = old_s - q * s_cur;
        old_s = s_cur;
        s_cur = next_s;
        RingElement next_t = old_t - q * t_cur;
        old_t = t_cur;
        t_cur = next_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

UnimodularCertificate bezout_euclidean(std::span<const RingElement> xs) {
    const auto& desc = xs.front().descriptor();
    RingElement g = xs[0];
    ElemVec coeffs{RingElement::one(desc)};
    for (size_t i = 1; i < xs.size(); ++i) {
        RingElement s = RingElement::zero(desc), t = RingElement::zero(desc);
        RingElement g2 = xgcd(g, xs[i], s, t);
        for (auto& c : coeffs) c = c * s;
        coeffs.push_back(t);
        g = g2;
    }
    if (g.is_zero() || !is_unit(g))
        fail(Errc::NotUnimodular, "gcd of the tuple is not a unit in " + desc.to_string());
    RingElement g_inv = invert_unit(g);
    for (auto& c : coeffs) c = c * g_inv;
    return UnimodularCertificate{std::move(coeffs)};
}

UnimodularCertificate bezout_unit_coordinate(std::span<const RingElement> xs) {
    const auto& desc = xs.front().descriptor();
    for (size_t i = 0; i < xs.size(); ++i) {
        const bool usable = desc.is_field() ? !xs[i].is_zero() : is_unit(xs[i]);
        if (usable) {
            ElemVec coeffs(xs.size(), RingElement::zero(desc));
            coeffs[i] = invert_unit(xs[i]);
            return UnimodularCertificate{std::move(coeffs)};
        }
    }
    fail(Errc::NotUnimodular, "no unit coordinate in " + desc.to_string());
}

} // namespace

UnimodularCertificate bezout_certificate(std::span<const RingElement> xs) {
    if (xs.empty()) fail(Errc::ParseError, "bezout_certificate on empty vector");
    const auto& desc = xs.front().descriptor();
    for (const auto& x : xs)
        if (x.descriptor() != desc) fail(Errc::DescriptorMismatch, "mixed rings in tuple");
    switch (desc.kind()) {
        case RingKind::Rational:
        case RingKind::GaussianRational:
        case RingKind::Jet: return bezout_unit_coordinate(xs);
        case RingKind::Integer:
        case RingKind::Poly: return bezout_euclidean(xs);
        case RingKind::Product: {
            const auto& comps = desc.components();
            std::vector<UnimodularCertificate> per_component;
            per_component.reserve(comps.size());
            for (size_t j = 0; j < comps.size(); ++j) {
                ElemVec slice;
                slice.reserve(xs.size());
                for (const auto& x : xs) slice.push_back(x.parts()[j]);
                try {
                    per_component.push_back(bezout_certificate(slice));
                } catch (const RingError& e) {
                    if (e.code() == Errc::NotUnimodular)
                        fail(Errc::NotUnimodular,
                             "component " + std::to_string(j + 1) + " of product is not unimodular");
                    throw;
                }
            }
            ElemVec coeffs;
            coeffs.reserve(xs.size());
            for (size_t i = 0; i < xs.size(); ++i) {
                ElemVec entry;
                entry.reserve(comps.size());
                for (size_t j = 0; j < comps.size(); ++j)
                    entry.push_back(per_component[j].coefficients[i]);
                coeffs.push_back(RingElement::product(desc, std::move(entry)));
            }
            return UnimodularCertificate{std::move(coeffs)};
        }
        case RingKind::Analytic:
            fail(Errc::UnsupportedRing, "no Bezout algorithm for the analytic ring");
    }
    fail(Errc::InvalidDescriptor, "unknown ring kind");
}

bool certificate_holds(const UnimodularCertificate& cert, std::span<const RingElement> xs) {
    if (cert.coefficients.size() != xs.size() || xs.empty()) return false;
    RingElement acc = RingElement::zero(xs.front().descriptor());
    for (size_t i = 0; i < xs.size(); ++i) acc = acc + cert.coefficients[i] * xs[i];
    return acc.is_one();
}

ReductionWitness reduce_unimodular_pair(const RingElement& x1, const RingElement& x2,
                                        const UnimodularCertificate& cert) {
    require_same_ring(x1, x2);
    const auto& desc = x1.descriptor();
    if (!desc.has_bsr1_oracle())
        fail(Errc::OracleUnavailable,
             "no stable-rank-1 reduction oracle for " + desc.to_string());
    const RingElement pair[] = {x1, x2};
    if (!certificate_holds(cert, pair))
        fail(Errc::CertificateInvalid, "certificate does not certify the pair");

    RingElement y = RingElement::zero(desc);
    switch (desc.kind()) {
        case RingKind::Rational:
        case RingKind::GaussianRational:
            y = x1.is_zero() ? invert_unit(x2) : RingElement::zero(desc);
            break;
        case RingKind::Jet:
            y = is_unit(x1) ? RingElement::zero(desc) : RingElement::one(desc);
            break;
        case RingKind::Product: {
            const auto& comps = desc.components();
            ElemVec ys;
            ys.reserve(comps.size());
            for (size_t j = 0; j < comps.size(); ++j) {
                UnimodularCertificate comp_cert{
                    ElemVec{cert.coefficients[0].parts()[j], cert.coefficients[1].parts()[j]}};
                ys.push_back(
                    reduce_unimodular_pair(x1.parts()[j], x2.parts()[j], comp_cert).y);
            }
            y = RingElement::product(desc, std::move(ys));
            break;
        }
        default:
            fail(Errc::OracleUnavailable, "unexpected ring kind in reduction");
    }

    RingElement alpha = x1 + y * x2;
    if (!is_unit(alpha))
        fail(Errc::InternalInvariantViolation, "reduction produced a non-unit");
    RingElement alpha_inverse = invert_unit(alpha);
    return ReductionWitness{std::move(y), std::move(alpha), std::move(alpha_inverse)};
}

// ---------------------------------------------------------------------------
// Principal-unit logarithms

namespace {

bool is_nilpotent(const RingElement& m) {
    switch (m.kind()) {
        case RingKind::Integer:
        case RingKind::Rational:
        case RingKind::GaussianRational:
        case RingKind::Poly: return m.is_zero();
        case RingKind::Jet: return m.parts().front().is_zero();
        case RingKind::Product:
            return std::all_of(m.parts().begin(), m.parts().end(),
                               [](const RingElement& p) { return is_nilpotent(p); });
        case RingKind::Analytic: return false;
    }
    return false;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

RingElement divide_by_int(const RingElement& a, const Int& k) {
    if (k == 0) fail(Errc::NotAUnit, "division by zero integer");
    if (k == 1) return a;
    if (k == -1) return -a;
    return a * RingElement::from_rat(a.descriptor(), Rat(1) / Rat(k));
}

RingElement principal_unit_log(const RingElement& u) {
    const auto& desc = u.descriptor();
    if (!desc.is_exact()) fail(Errc::UnsupportedRing, "exact ring required for terminating log");
    if (!desc.contains_rationals())
        fail(Errc::RingWithoutRationals, desc.to_string() + " does not contain Q");
    RingElement m = u - RingElement::one(desc);
    if (!is_nilpotent(m))
        fail(Errc::NotPrincipalUnit, "constant part of the unit is not 1");
    RingElement result = RingElement::zero(desc);
    RingElement power = m;
    const int bound = desc.nilpotency_bound();
    for (int j = 1; j <= bound && !power.is_zero(); ++j) {
        RingElement term = divide_by_int(power, Int(j));
        result = (j % 2 == 1) ? result + term : result - term;
        power = power * m;
    }
    return result;
}

RingElement nilpotent_elem_exp(const RingElement& m) {
    const auto& desc = m.descriptor();
    if (!desc.is_exact()) fail(Errc::UnsupportedRing, "exact ring required for terminating exp");
    if (!desc.contains_rationals())
        fail(Errc::RingWithoutRationals, desc.to_string() + " does not contain Q");
    if (!is_nilpotent(m)) fail(Errc::NotNilpotent, "exp argument is not nilpotent");
    RingElement result = RingElement::one(desc);
    RingElement power = m;
    const int bound = desc.nilpotency_bound();
    for (int j = 1; j <= bound && !power.is_zero(); ++j) {
        result = result + divide_by_int(power, factorial(j));
        power = power * m;
    }
    return result;
}

RingElement unit_nth_root(const RingElement& u, int n) {
    if (n < 1) fail(Errc::ParseError, "nth root needs n >= 1");
    RingElement log_u = principal_unit_log(u);
    return nilpotent_elem_exp(divide_by_int(log_u, Int(n)));
}

} // namespace ringfactor
