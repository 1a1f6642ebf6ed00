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

#ifndef RINGFACTOR_ANALYTIC_HPP
#define RINGFACTOR_ANALYTIC_HPP

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "ringfactor/errors.hpp"
#include "ringfactor/rational.hpp"

namespace ringfactor::analytic {

using cplx = std::complex<double>;

class FuncExpr;
using FuncPtr = std::shared_ptr<const FuncExpr>;

/// Removable singularity of a quotient: the quotient is known holomorphic at
/// `point`, where the denominator vanishes to exactly `order`.
struct Annotation {
    cplx point;
    int order;
};

/// Immutable expression tree for holomorphic functions on a planar domain.
/// Quotients carry removable-singularity annotations; evaluation close to an
/// annotated point switches from plain division to local jet division.
class FuncExpr {
public:
    enum class Op { Const, Var, Add, Sub, Mul, Div, Exp, Pow, Poly, FPoly };

    static FuncPtr constant(cplx value);
    static FuncPtr variable();
    static FuncPtr add(FuncPtr lhs, FuncPtr rhs);
    static FuncPtr sub(FuncPtr lhs, FuncPtr rhs);
    static FuncPtr mul(FuncPtr lhs, FuncPtr rhs);
    static FuncPtr div(FuncPtr num, FuncPtr den, std::vector<Annotation> annotations = {});
    static FuncPtr exp(FuncPtr arg);
    static FuncPtr pow(FuncPtr base, int exponent);
    /// Polynomial literal with exact coefficients, ascending degree.
    static FuncPtr poly(std::vector<GaussRat> coefficients);
    /// Polynomial with floating coefficients (derived data, e.g. interpolants).
    static FuncPtr fpoly(std::vector<cplx> coefficients);

    Op op() const { return op_; }
    cplx const_value() const { return value_; }
    const FuncPtr& lhs() const { return lhs_; }
    const FuncPtr& rhs() const { return rhs_; }
    int exponent() const { return exponent_; }
    const std::vector<Annotation>& annotations() const { return annotations_; }
    const std::vector<GaussRat>& exact_coefficients() const { return exact_coeffs_; }
    /// Coefficients embedded into floating complex (Poly and FPoly).
    const std::vector<cplx>& coefficients() const { return coeffs_; }

protected:
    FuncExpr() = default;

private:
    Op op_ = Op::Const;
    cplx value_{0.0, 0.0};
    FuncPtr lhs_;
    FuncPtr rhs_;
    int exponent_ = 0;
    std::vector<Annotation> annotations_;
    std::vector<GaussRat> exact_coeffs_;
    std::vector<cplx> coeffs_;
};

bool is_const_zero(const FuncPtr& f);
bool is_const_one(const FuncPtr& f);

/// Truncated Taylor expansion sum b_j (z - base)^j, j = 0..order.
class Jet {
public:
    Jet(cplx base, int order) : base_(base), coef_(static_cast<size_t>(order) + 1, cplx(0.0)) {
        if (order < 0) fail(Errc::InvalidDescriptor, "jet order must be >= 0");
    }
    Jet(cplx base, std::vector<cplx> coefficients) : base_(base), coef_(std::move(coefficients)) {
        if (coef_.empty()) fail(Errc::InvalidDescriptor, "jet needs at least the constant coefficient");
    }

    cplx base() const { return base_; }
    int order() const { return static_cast<int>(coef_.size()) - 1; }
    const std::vector<cplx>& coefficients() const { return coef_; }
    cplx coefficient(int j) const { return coef_[static_cast<size_t>(j)]; }
    cplx& coefficient(int j) { return coef_[static_cast<size_t>(j)]; }

    /// Value of the truncated expansion at z.
    cplx evaluate(cplx z) const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    Jet operator-() const;

private:
    cplx base_;
    std::vector<cplx> coef_;
};

/// Index of the first coefficient above the relative threshold; order+1 when
/// the whole jet is below it.
int jet_valuation(const Jet& jet, double threshold = 1e-9);

/// Quotient jet; shifts out a common vanishing order of numerator and
/// denominator. PoleAtBase when the denominator vanishes deeper than the
/// numerator.
Jet jet_div(const Jet& num, const Jet& den, double threshold = 1e-9);
/// Quotient jet with a prescribed vanishing order: the first `shift`
/// coefficients of both jets are dropped as exact zeros. Used at annotated
/// removable singularities, where the root location (hence the jet base)
/// carries an eps^(1/m) error that pollutes the low coefficients.
/// JetDivisionFailed when the dropped numerator coefficients are not small.
Jet jet_div_shifted(const Jet& num, const Jet& den, int shift);
Jet jet_exp(const Jet& jet);
/// Principal-branch log; VanishingConstantTerm when b0 = 0.
Jet jet_log(const Jet& jet);

cplx evaluate(const FuncPtr& f, cplx z);
Jet jet_at(const FuncPtr& f, cplx base, int order);

struct RootSet {
    struct Root {
        cplx location;
        int multiplicity;
    };
    std::vector<Root> roots;
    double residual_bound = 0.0;
};

struct RootOptions {
    double cluster_radius_scale = 1e-7; // merged radius = scale * (1 + max |root|)
    int max_iterations = 500;
};

/// Roots with multiplicities of a complex-coefficient polynomial, ascending
/// coefficients. Simultaneous (Durand-Kerner) iteration, multiplicity-aware
/// polish, then clustering.
RootSet poly_roots(std::span<const cplx> coefficients, double tol,
                   const RootOptions& options = {});

struct HermiteNode {
    cplx base;
    std::vector<cplx> values; // jet coefficients b0..bN at base
};

struct ExactHermiteNode {
    GaussRat base;
    std::vector<GaussRat> values;
};

/// Unique polynomial of degree < sum(order_i + 1) whose jet at every node
/// matches the node's values; divided differences with repeated abscissae.
std::vector<cplx> hermite_interpolate(std::span<const HermiteNode> nodes);
std::vector<GaussRat> hermite_interpolate_exact(std::span<const ExactHermiteNode> nodes);

// Dense polynomial helpers (ascending coefficients).
cplx poly_eval(std::span<const cplx> coefficients, cplx z);
std::vector<cplx> poly_derivative(std::span<const cplx> coefficients);
std::vector<GaussRat> exact_poly_derivative(std::span<const GaussRat> coefficients);
GaussRat exact_poly_eval(std::span<const GaussRat> coefficients, const GaussRat& z);
/// Exact Taylor coefficients 0..order of the polynomial at base.
std::vector<GaussRat> exact_poly_jet(std::span<const GaussRat> coefficients,
                                     const GaussRat& base, int order);

} // namespace ringfactor::analytic

#endif
