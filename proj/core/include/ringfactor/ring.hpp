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

#ifndef RINGFACTOR_RING_HPP
#define RINGFACTOR_RING_HPP

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ringfactor/errors.hpp"
#include "ringfactor/rational.hpp"

namespace ringfactor {

namespace analytic {
class FuncExpr;
} // namespace analytic

enum class RingKind {
    Integer,          // Z
    Rational,         // Q
    GaussianRational, // Q(i)
    Poly,             // base[z], base a field
    Jet,              // base[z]/(z^N), base a field
    Product,          // finite direct product of exact rings
    Analytic,         // holomorphic function ASTs, sampled semantics
};

/// Which ring a value lives in. Values are combinable only when their
/// descriptors compare equal.
class RingDescriptor {
public:
    static RingDescriptor integers();
    static RingDescriptor rationals();
    static RingDescriptor gaussian_rationals();
    static RingDescriptor poly(RingDescriptor base);
    static RingDescriptor jet(RingDescriptor base, int order);
    static RingDescriptor product(std::vector<RingDescriptor> components);
    static RingDescriptor analytic();

    RingKind kind() const { return kind_; }
    const RingDescriptor& base() const;                      // Poly, Jet
    int jet_order() const { return order_; }                 // Jet
    const std::vector<RingDescriptor>& components() const;   // Product

    bool operator==(const RingDescriptor& other) const;
    bool operator!=(const RingDescriptor& other) const { return !(*this == other); }

    bool is_exact() const { return kind_ != RingKind::Analytic; }
    bool is_field() const {
        return kind_ == RingKind::Rational || kind_ == RingKind::GaussianRational;
    }
    /// Local exact ring: a field, or a jet ring over a field.
    bool is_local() const { return is_field() || kind_ == RingKind::Jet; }
    bool contains_rationals() const;
    /// Static stable-rank-1 metadata: rings for which reduce_unimodular_pair
    /// has a constructive witness (fields, jet rings, finite products of such).
    bool has_bsr1_oracle() const;
    /// Smallest k with m^k = 0 for every nilpotent element m; bounds the
    /// length of the terminating log/exp series.
    int nilpotency_bound() const;

    std::string to_string() const;

private:
    RingDescriptor(RingKind kind, std::vector<RingDescriptor> children, int order)
        : kind_(kind), order_(order) {
        if (!children.empty())
            children_ = std::make_shared<const std::vector<RingDescriptor>>(std::move(children));
    }

    RingKind kind_;
    // shared so that copying a descriptor is a refcount bump; descriptors sit
    // on every element and are copied in all arithmetic
    std::shared_ptr<const std::vector<RingDescriptor>> children_;
    int order_ = 0;
};

class RingElement;
using ElemVec = std::vector<RingElement>;
using FuncPtr = std::shared_ptr<const analytic::FuncExpr>;

/// Immutable ring element in canonical form: rationals reduced with positive
/// denominator, polynomials trailing-zero free, jets stored at exactly the
/// truncation length, products componentwise canonical.
class RingElement {
public:
    static RingElement zero(const RingDescriptor& desc);
    static RingElement one(const RingDescriptor& desc);
    static RingElement integer(Int value);
    static RingElement rational(Rat value);
    static RingElement gaussian(GaussRat value);
    static RingElement gaussian(Rat re, Rat im) { return gaussian(GaussRat(std::move(re), std::move(im))); }
    /// desc must be a Poly descriptor; coefficients in ascending degree, trimmed here.
    static RingElement poly(const RingDescriptor& desc, ElemVec coefficients);
    /// desc must be a Jet descriptor; up to N coefficients, zero-padded here.
    static RingElement jet(const RingDescriptor& desc, ElemVec coefficients);
    static RingElement product(const RingDescriptor& desc, ElemVec components);
    static RingElement analytic_fn(FuncPtr expr);
    /// Embeds a rational scalar into any ring containing Q (and integral
    /// scalars into Z).
    static RingElement from_rat(const RingDescriptor& desc, const Rat& value);

    const RingDescriptor& descriptor() const { return desc_; }
    RingKind kind() const { return desc_.kind(); }

    const Int& int_value() const { return std::get<Int>(payload_); }
    const Rat& rat_value() const { return std::get<Rat>(payload_); }
    const GaussRat& gauss_value() const { return std::get<GaussRat>(payload_); }
    /// Poly / Jet coefficients or Product components.
    const ElemVec& parts() const { return std::get<ElemVec>(payload_); }
    const FuncPtr& func_value() const { return std::get<FuncPtr>(payload_); }

    bool is_zero() const;
    bool is_one() const;

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement operator-() const;
    bool operator==(const RingElement& other) const;
    bool operator!=(const RingElement& other) const { return !(*this == other); }

private:
    using Payload = std::variant<Int, Rat, GaussRat, ElemVec, FuncPtr>;
    RingElement(RingDescriptor desc, Payload payload)
        : desc_(std::move(desc)), payload_(std::move(payload)) {}

    RingDescriptor desc_;
    Payload payload_;

    friend RingElement mul_impl(const RingElement&, const RingElement&);
};

bool is_unit(const RingElement& a);
RingElement invert_unit(const RingElement& a);

/// Coefficients alpha_1..alpha_k with sum alpha_i * x_i = 1 for the vector
/// they certify.
struct UnimodularCertificate {
    ElemVec coefficients;
};

/// Witness for the rank-one reduction of a unimodular pair:
/// alpha = x1 + y*x2 is a unit with the stored inverse.
struct ReductionWitness {
    RingElement y;
    RingElement alpha;
    RingElement alpha_inverse;
};

UnimodularCertificate bezout_certificate(std::span<const RingElement> xs);
bool certificate_holds(const UnimodularCertificate& cert, std::span<const RingElement> xs);
ReductionWitness reduce_unimodular_pair(const RingElement& x1, const RingElement& x2,
                                        const UnimodularCertificate& cert);

/// Terminating log of a principal unit u = 1 + m, m nilpotent; exp(result) = u.
RingElement principal_unit_log(const RingElement& u);
/// Terminating exp of a nilpotent element.
RingElement nilpotent_elem_exp(const RingElement& m);
/// f with f^n = u, computed as exp(log(u)/n); requires principal_unit_log(u).
RingElement unit_nth_root(const RingElement& u, int n);

/// Scalar division by a nonzero integer; requires Q in the ring unless the
/// division is trivial.
RingElement divide_by_int(const RingElement& a, const Int& k);

// Univariate helpers over a field-coefficient polynomial ring; used by the
// Bezout and Euclidean routines.
std::pair<RingElement, RingElement> poly_divmod(const RingElement& a, const RingElement& b);
int poly_degree(const RingElement& a); // -1 for the zero polynomial

} // namespace ringfactor

#endif
