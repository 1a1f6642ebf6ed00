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

#include "ringfactor/analytic.hpp"

#include <algorithm>
#include <cmath>

namespace ringfactor::analytic {

namespace {

constexpr double kHardDenominatorFloor = 1e-12;
constexpr int kJetEvalExtraOrder = 12;

double jet_switch_radius(cplx point) { return 1e-3 * (1.0 + std::abs(point)); }

std::shared_ptr<FuncExpr> make_node() {
    struct Access : FuncExpr {
        Access() : FuncExpr() {}
    };
    return std::make_shared<Access>();
}

FuncExpr& mut(const std::shared_ptr<FuncExpr>& node) { return *node; }

} // namespace

// ---------------------------------------------------------------------------
// AST construction (with constant folding for the trivial identities)

FuncPtr FuncExpr::constant(cplx value) {
    auto node = make_node();
    mut(node).op_ = Op::Const;
    mut(node).value_ = value;
    return node;
}

FuncPtr FuncExpr::variable() {
    auto node = make_node();
    mut(node).op_ = Op::Var;
    return node;
}

bool is_const_zero(const FuncPtr& f) {
    if (!f) return false;
    switch (f->op()) {
        case FuncExpr::Op::Const: return f->const_value() == cplx(0.0);
        case FuncExpr::Op::Poly:
        case FuncExpr::Op::FPoly:
            return std::all_of(f->coefficients().begin(), f->coefficients().end(),
                               [](cplx c) { return c == cplx(0.0); });
        default: return false;
    }
}

bool is_const_one(const FuncPtr& f) {
    if (!f) return false;
    if (f->op() == FuncExpr::Op::Const) return f->const_value() == cplx(1.0);
    if (f->op() == FuncExpr::Op::Poly || f->op() == FuncExpr::Op::FPoly) {
        const auto& c = f->coefficients();
        if (c.empty() || c[0] != cplx(1.0)) return false;
        return std::all_of(c.begin() + 1, c.end(), [](cplx v) { return v == cplx(0.0); });
    }
    return false;
}

FuncPtr FuncExpr::add(FuncPtr lhs, FuncPtr rhs) {
    if (is_const_zero(lhs)) return rhs;
    if (is_const_zero(rhs)) return lhs;
    if (lhs->op() == Op::Const && rhs->op() == Op::Const)
        return constant(lhs->const_value() + rhs->const_value());
    auto node = make_node();
    mut(node).op_ = Op::Add;
    mut(node).lhs_ = std::move(lhs);
    mut(node).rhs_ = std::move(rhs);
    return node;
}

FuncPtr FuncExpr::sub(FuncPtr lhs, FuncPtr rhs) {
    if (is_const_zero(rhs)) return lhs;
    if (lhs->op() == Op::Const && rhs->op() == Op::Const)
        return constant(lhs->const_value() - rhs->const_value());
    auto node = make_node();
    mut(node).op_ = Op::Sub;
    mut(node).lhs_ = std::move(lhs);
    mut(node).rhs_ = std::move(rhs);
    return node;
}

FuncPtr FuncExpr::mul(FuncPtr lhs, FuncPtr rhs) {
    if (is_const_zero(lhs) || is_const_zero(rhs)) return constant(0.0);
    if (is_const_one(lhs)) return rhs;
    if (is_const_one(rhs)) return lhs;
    if (lhs->op() == Op::Const && rhs->op() == Op::Const)
        return constant(lhs->const_value() * rhs->const_value());
    auto node = make_node();
    mut(node).op_ = Op::Mul;
    mut(node).lhs_ = std::move(lhs);
    mut(node).rhs_ = std::move(rhs);
    return node;
}

FuncPtr FuncExpr::div(FuncPtr num, FuncPtr den, std::vector<Annotation> annotations) {
    if (is_const_zero(num)) return constant(0.0); // zero quotient is entire
    if (is_const_one(den)) return num;
    auto node = make_node();
    mut(node).op_ = Op::Div;
    mut(node).lhs_ = std::move(num);
    mut(node).rhs_ = std::move(den);
    mut(node).annotations_ = std::move(annotations);
    return node;
}

FuncPtr FuncExpr::exp(FuncPtr arg) {
    if (arg->op() == Op::Const) return constant(std::exp(arg->const_value()));
    auto node = make_node();
    mut(node).op_ = Op::Exp;
    mut(node).lhs_ = std::move(arg);
    return node;
}

FuncPtr FuncExpr::pow(FuncPtr base, int exponent) {
    if (exponent == 0) return constant(1.0);
    if (exponent == 1) return base;
    auto node = make_node();
    mut(node).op_ = Op::Pow;
    mut(node).lhs_ = std::move(base);
    mut(node).exponent_ = exponent;
    return node;
}

FuncPtr FuncExpr::poly(std::vector<GaussRat> coefficients) {
    auto node = make_node();
    mut(node).op_ = Op::Poly;
    mut(node).coeffs_.reserve(coefficients.size());
    for (const auto& c : coefficients) mut(node).coeffs_.push_back(c.to_complex());
    mut(node).exact_coeffs_ = std::move(coefficients);
    return node;
}

FuncPtr FuncExpr::fpoly(std::vector<cplx> coefficients) {
    auto node = make_node();
    mut(node).op_ = Op::FPoly;
    mut(node).coeffs_ = std::move(coefficients);
    return node;
}

// ---------------------------------------------------------------------------
// Jets

cplx Jet::evaluate(cplx z) const {
    cplx h = z - base_;
    cplx acc = 0.0;
    for (size_t k = coef_.size(); k-- > 0;) acc = acc * h + coef_[k];
    return acc;
}

namespace {

void require_same_jet_frame(const Jet& a, const Jet& b) {
    if (a.base() != b.base())
        fail(Errc::InternalInvariantViolation, "jet arithmetic across different base points");
}

} // namespace

Jet operator+(const Jet& a, const Jet& b) {
    require_same_jet_frame(a, b);
    const int order = std::min(a.order(), b.order());
    Jet out(a.base(), order);
    for (int k = 0; k <= order; ++k) out.coefficient(k) = a.coefficient(k) + b.coefficient(k);
    return out;
}

Jet operator-(const Jet& a, const Jet& b) {
    require_same_jet_frame(a, b);
    const int order = std::min(a.order(), b.order());
    Jet out(a.base(), order);
    for (int k = 0; k <= order; ++k) out.coefficient(k) = a.coefficient(k) - b.coefficient(k);
    return out;
}

Jet Jet::operator-() const {
    Jet out(base_, order());
    for (int k = 0; k <= order(); ++k) out.coefficient(k) = -coef_[static_cast<size_t>(k)];
    return out;
}

Jet operator*(const Jet& a, const Jet& b) {
    require_same_jet_frame(a, b);
    const int order = std::min(a.order(), b.order());
    Jet out(a.base(), order);
    for (int i = 0; i <= order; ++i) {
        if (a.coefficient(i) == cplx(0.0)) continue;
        for (int j = 0; i + j <= order; ++j)
            out.coefficient(i + j) += a.coefficient(i) * b.coefficient(j);
    }
    return out;
}

int jet_valuation(const Jet& jet, double threshold) {
    double scale = 0.0;
    for (cplx c : jet.coefficients()) scale = std::max(scale, std::abs(c));
    const double cut = threshold * std::max(1.0, scale);
    for (int k = 0; k <= jet.order(); ++k)
        if (std::abs(jet.coefficient(k)) > cut) return k;
    return jet.order() + 1;
}

Jet jet_div(const Jet& num, const Jet& den, double threshold) {
    require_same_jet_frame(num, den);
    const int order = std::min(num.order(), den.order());
    const int vd = jet_valuation(den, threshold);
    if (vd > order)
        fail(Errc::PoleAtBase, "denominator jet vanishes to full order");
    const int vn = jet_valuation(num, threshold);
    if (vn > order) return Jet(num.base(), order - vd); // zero numerator
    if (vn < vd)
        fail(Errc::PoleAtBase, "denominator vanishes deeper than numerator");

    const int out_order = order - vd;
    Jet out(num.base(), out_order);
    std::vector<cplx> n_shift(static_cast<size_t>(out_order) + 1);
    std::vector<cplx> d_shift(static_cast<size_t>(out_order) + 1);
    for (int k = 0; k <= out_order; ++k) {
        n_shift[static_cast<size_t>(k)] = num.coefficient(k + vd);
        d_shift[static_cast<size_t>(k)] = den.coefficient(k + vd);
    }
    const cplx d0 = d_shift[0];
    for (int k = 0; k <= out_order; ++k) {
        cplx acc = n_shift[static_cast<size_t>(k)];
        for (int j = 1; j <= k; ++j) acc -= d_shift[static_cast<size_t>(j)] * out.coefficient(k - j);
        out.coefficient(k) = acc / d0;
    }
    return out;
}

Jet jet_div_shifted(const Jet& num, const Jet& den, int shift) {
    require_same_jet_frame(num, den);
    const int order = std::min(num.order(), den.order());
    if (shift < 0 || shift > order)
        fail(Errc::JetDivisionFailed, "annotated order exceeds the available jet order");
    double n_scale = 0.0, d_scale = 0.0;
    for (cplx c : num.coefficients()) n_scale = std::max(n_scale, std::abs(c));
    for (cplx c : den.coefficients()) d_scale = std::max(d_scale, std::abs(c));
    for (int j = 0; j < shift; ++j) {
        if (std::abs(num.coefficient(j)) > 1e-3 * std::max(1.0, n_scale))
            fail(Errc::JetDivisionFailed,
                 "numerator does not vanish to the annotated order at the singularity");
        if (std::abs(den.coefficient(j)) > 1e-3 * std::max(1.0, d_scale))
            fail(Errc::JetDivisionFailed,
                 "denominator does not vanish to the annotated order at the singularity");
    }
    const cplx d0 = den.coefficient(shift);
    if (std::abs(d0) < 1e-300)
        fail(Errc::PoleAtBase, "denominator vanishes deeper than the annotated order");
    const int out_order = order - shift;
    Jet out(num.base(), out_order);
    for (int k = 0; k <= out_order; ++k) {
        cplx acc = num.coefficient(k + shift);
        for (int j = 1; j <= k; ++j) acc -= den.coefficient(j + shift) * out.coefficient(k - j);
        out.coefficient(k) = acc / d0;
    }
    return out;
}

Jet jet_exp(const Jet& jet) {
    const int order = jet.order();
    Jet u = jet;
    const cplx a0 = u.coefficient(0);
    u.coefficient(0) = 0.0;
    Jet result(jet.base(), order);
    result.coefficient(0) = 1.0;
    Jet term(jet.base(), order);
    term.coefficient(0) = 1.0;
    for (int k = 1; k <= order; ++k) {
        term = term * u;
        for (int j = 0; j <= order; ++j) term.coefficient(j) /= static_cast<double>(k);
        result = result + term;
    }
    const cplx scale = std::exp(a0);
    for (int j = 0; j <= order; ++j) result.coefficient(j) *= scale;
    return result;
}

Jet jet_log(const Jet& jet) {
    const cplx b0 = jet.coefficient(0);
    if (std::abs(b0) < 1e-300)
        fail(Errc::VanishingConstantTerm, "jet has vanishing constant term, no logarithm");
    const int order = jet.order();
    Jet u(jet.base(), order);
    for (int k = 1; k <= order; ++k) u.coefficient(k) = jet.coefficient(k) / b0;
    Jet result(jet.base(), order);
    result.coefficient(0) = std::log(b0);
    Jet power = u;
    for (int k = 1; k <= order; ++k) {
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        for (int j = 0; j <= order; ++j)
            result.coefficient(j) += sign / static_cast<double>(k) * power.coefficient(j);
        power = power * u;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Evaluation and jet extraction on ASTs

namespace {

std::vector<cplx> poly_taylor(std::span<const cplx> coefficients, cplx base, int order) {
    // synthetic division by (z - base), repeated
    std::vector<cplx> work(coefficients.begin(), coefficients.end());
    if (work.empty()) work.push_back(0.0);
    std::vector<cplx> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        if (work.empty()) {
            out.push_back(0.0);
            continue;
        }
        cplx rem = 0.0;
        for (size_t i = work.size(); i-- > 0;) {
            cplx next = work[i] + rem * base;
            work[i] = rem;
            rem = next;
        }
        out.push_back(rem);
        work.pop_back(); // work now holds the quotient by (z - base)
    }
    return out;
}

cplx pow_int(cplx base, int exponent) {
    if (exponent < 0) {
        cplx p = pow_int(base, -exponent);
        if (std::abs(p) < kHardDenominatorFloor)
            fail(Errc::UnannotatedPole, "negative power at a near-zero of the base");
        return 1.0 / p;
    }
    cplx acc = 1.0, b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace

cplx evaluate(const FuncPtr& f, cplx z) {
    switch (f->op()) {
        case FuncExpr::Op::Const: return f->const_value();
        case FuncExpr::Op::Var: return z;
        case FuncExpr::Op::Add: return evaluate(f->lhs(), z) + evaluate(f->rhs(), z);
        case FuncExpr::Op::Sub: return evaluate(f->lhs(), z) - evaluate(f->rhs(), z);
        case FuncExpr::Op::Mul: return evaluate(f->lhs(), z) * evaluate(f->rhs(), z);
        case FuncExpr::Op::Exp: return std::exp(evaluate(f->lhs(), z));
        case FuncExpr::Op::Pow: return pow_int(evaluate(f->lhs(), z), f->exponent());
        case FuncExpr::Op::Poly:
        case FuncExpr::Op::FPoly: return poly_eval(f->coefficients(), z);
        case FuncExpr::Op::Div: {
            for (const auto& ann : f->annotations()) {
                if (std::abs(z - ann.point) < jet_switch_radius(ann.point)) {
                    const int order = ann.order + kJetEvalExtraOrder;
                    Jet qn = jet_at(f->lhs(), ann.point, order);
                    Jet qd = jet_at(f->rhs(), ann.point, order);
                    return jet_div_shifted(qn, qd, ann.order).evaluate(z);
                }
            }
            cplx dv = evaluate(f->rhs(), z);
            if (std::abs(dv) < kHardDenominatorFloor)
                fail(Errc::UnannotatedPole, "denominator below hard floor without annotation");
            return evaluate(f->lhs(), z) / dv;
        }
    }
    fail(Errc::InternalInvariantViolation, "unknown AST op");
}

Jet jet_at(const FuncPtr& f, cplx base, int order) {
    switch (f->op()) {
        case FuncExpr::Op::Const: {
            Jet out(base, order);
            out.coefficient(0) = f->const_value();
            return out;
        }
        case FuncExpr::Op::Var: {
            Jet out(base, order);
            out.coefficient(0) = base;
            if (order >= 1) out.coefficient(1) = 1.0;
            return out;
        }
        case FuncExpr::Op::Add: return jet_at(f->lhs(), base, order) + jet_at(f->rhs(), base, order);
        case FuncExpr::Op::Sub: return jet_at(f->lhs(), base, order) - jet_at(f->rhs(), base, order);
        case FuncExpr::Op::Mul: return jet_at(f->lhs(), base, order) * jet_at(f->rhs(), base, order);
        case FuncExpr::Op::Exp: return jet_exp(jet_at(f->lhs(), base, order));
        case FuncExpr::Op::Pow: {
            const int e = f->exponent();
            if (e >= 0) {
                Jet acc(base, order);
                acc.coefficient(0) = 1.0;
                Jet b = jet_at(f->lhs(), base, order);
                for (int i = 0; i < e; ++i) acc = acc * b;
                return acc;
            }
            Jet one(base, order);
            one.coefficient(0) = 1.0;
            Jet b = jet_at(f->lhs(), base, order);
            Jet acc = one;
            for (int i = 0; i < -e; ++i) acc = acc * b;
            return jet_div(one, acc);
        }
        case FuncExpr::Op::Poly:
        case FuncExpr::Op::FPoly:
            return Jet(base, poly_taylor(f->coefficients(), base, order));
        case FuncExpr::Op::Div: {
            // an annotation at (or next to) the base point pins the shift;
            // the numeric valuation would misread it near a multiple root
            // whose located position is only eps^(1/m)-accurate
            for (const auto& ann : f->annotations()) {
                if (std::abs(base - ann.point) < jet_switch_radius(ann.point)) {
                    Jet num = jet_at(f->lhs(), base, order + ann.order);
                    Jet den = jet_at(f->rhs(), base, order + ann.order);
                    return jet_div_shifted(num, den, ann.order);
                }
            }
            Jet den_probe = jet_at(f->rhs(), base, order);
            const int v = jet_valuation(den_probe);
            if (v > order) fail(Errc::PoleAtBase, "denominator vanishes to full jet order");
            if (v == 0) return jet_div(jet_at(f->lhs(), base, order), den_probe);
            Jet num = jet_at(f->lhs(), base, order + v);
            Jet den = jet_at(f->rhs(), base, order + v);
            return jet_div(num, den);
        }
    }
    fail(Errc::InternalInvariantViolation, "unknown AST op");
}

// ---------------------------------------------------------------------------
// Polynomial utilities

cplx poly_eval(std::span<const cplx> coefficients, cplx z) {
    cplx acc = 0.0;
    for (size_t k = coefficients.size(); k-- > 0;) acc = acc * z + coefficients[k];
    return acc;
}

std::vector<cplx> poly_derivative(std::span<const cplx> coefficients) {
    std::vector<cplx> out;
    for (size_t k = 1; k < coefficients.size(); ++k)
        out.push_back(static_cast<double>(k) * coefficients[k]);
    return out;
}

GaussRat exact_poly_eval(std::span<const GaussRat> coefficients, const GaussRat& z) {
    GaussRat acc(0);
    for (size_t k = coefficients.size(); k-- > 0;) acc = acc * z + coefficients[k];
    return acc;
}

std::vector<GaussRat> exact_poly_derivative(std::span<const GaussRat> coefficients) {
    std::vector<GaussRat> out;
    for (size_t k = 1; k < coefficients.size(); ++k)
        out.push_back(GaussRat(Rat(Int(k)), Rat(0)) * coefficients[k]);
    return out;
}

std::vector<GaussRat> exact_poly_jet(std::span<const GaussRat> coefficients, const GaussRat& base,
                                     int order) {
    std::vector<GaussRat> work(coefficients.begin(), coefficients.end());
    std::vector<GaussRat> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        if (work.empty()) {
            out.push_back(GaussRat(0));
            continue;
        }
        GaussRat rem(0);
        for (size_t i = work.size(); i-- > 0;) {
            GaussRat next = work[i] + rem * base;
            work[i] = rem;
            rem = next;
        }
        out.push_back(rem);
        work.pop_back();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Root finding

namespace {

double residual_floor(std::span<const cplx> monic, cplx z) {
    // running bound on the Horner evaluation error
    double acc = 0.0;
    const double az = std::abs(z);
    for (size_t k = monic.size(); k-- > 0;) acc = acc * az + std::abs(monic[k]);
    return 16.0 * static_cast<double>(monic.size()) * 1e-16 * acc;
}

} // namespace

RootSet poly_roots(std::span<const cplx> coefficients, double tol, const RootOptions& options) {
    double coeff_scale = 0.0;
    for (cplx c : coefficients) coeff_scale = std::max(coeff_scale, std::abs(c));
    std::vector<cplx> p(coefficients.begin(), coefficients.end());
    while (!p.empty() && std::abs(p.back()) <= 1e-14 * coeff_scale) p.pop_back();
    if (p.size() < 2) fail(Errc::ParseError, "root finding needs degree >= 1");

    const int deg = static_cast<int>(p.size()) - 1;
    std::vector<cplx> monic(p.size());
    for (size_t k = 0; k < p.size(); ++k) monic[k] = p[k] / p.back();

    // simultaneous (Durand-Kerner) iteration from the usual spiral start
    std::vector<cplx> zs(static_cast<size_t>(deg));
    cplx seed(0.4, 0.9), acc(1.0, 0.0);
    for (auto& z : zs) {
        acc *= seed;
        z = acc;
    }
    bool converged = false;
    for (int it = 0; it < options.max_iterations && !converged; ++it) {
        double max_step = 0.0;
        for (int i = 0; i < deg; ++i) {
            cplx denom = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= zs[static_cast<size_t>(i)] - zs[static_cast<size_t>(j)];
            if (denom == cplx(0.0)) {
                zs[static_cast<size_t>(i)] += cplx(1e-6, 1e-6);
                continue;
            }
            cplx w = poly_eval(monic, zs[static_cast<size_t>(i)]) / denom;
            zs[static_cast<size_t>(i)] -= w;
            max_step = std::max(max_step, std::abs(w));
        }
        converged = true;
        for (cplx z : zs) {
            if (std::abs(poly_eval(monic, z)) > residual_floor(monic, z)) {
                converged = false;
                break;
            }
        }
        if (!converged && max_step < 1e-15) converged = true;
    }
    if (!converged) fail(Errc::NonConvergence, "simultaneous iteration did not converge");

    double spread = 0.0;
    for (cplx z : zs) spread = std::max(spread, std::abs(z));

    // coarse clusters absorb the wobble of multiple roots
    struct Cluster {
        cplx center;
        int count;
    };
    auto cluster_points = [](std::span<const cplx> pts, std::span<const int> weights,
                             double radius) {
        std::vector<Cluster> out;
        for (size_t i = 0; i < pts.size(); ++i) {
            bool placed = false;
            for (auto& c : out) {
                if (std::abs(pts[i] - c.center) < radius) {
                    const double w = static_cast<double>(weights[i]);
                    const double total = static_cast<double>(c.count) + w;
                    c.center = (c.center * static_cast<double>(c.count) + pts[i] * w) / total;
                    c.count += weights[i];
                    placed = true;
                    break;
                }
            }
            if (!placed) out.push_back({pts[i], weights[i]});
        }
        return out;
    };

    std::vector<int> unit_weights(zs.size(), 1);
    std::vector<Cluster> coarse = cluster_points(zs, unit_weights, 5e-4 * (1.0 + spread));

    // multiplicity-aware Newton; keeps the best iterate because evaluations
    // at a multiple root are noise-dominated below the residual floor
    auto polish = [&](cplx z, int multiplicity, int steps) {
        std::vector<cplx> dp = poly_derivative(monic);
        cplx best = z;
        double best_resid = std::abs(poly_eval(monic, z));
        for (int s = 0; s < steps; ++s) {
            if (best_resid <= 0.25 * residual_floor(monic, best)) break;
            cplx d = poly_eval(dp, z);
            if (std::abs(d) < 1e-300) break;
            cplx step = static_cast<double>(multiplicity) * poly_eval(monic, z) / d;
            z -= step;
            double r = std::abs(poly_eval(monic, z));
            if (r < best_resid) {
                best_resid = r;
                best = z;
            }
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
        }
        return best;
    };

    std::vector<cplx> centers;
    std::vector<int> weights;
    for (const auto& c : coarse) {
        centers.push_back(polish(c.center, c.count, 12));
        weights.push_back(c.count);
    }

    double center_spread = 0.0;
    for (cplx z : centers) center_spread = std::max(center_spread, std::abs(z));
    std::vector<Cluster> fine =
        cluster_points(centers, weights, options.cluster_radius_scale * (1.0 + center_spread));

    RootSet out;
    for (auto& c : fine) {
        cplx loc = polish(c.center, c.count, 6);
        out.roots.push_back({loc, c.count});
        out.residual_bound = std::max(out.residual_bound, std::abs(poly_eval(p, loc)));
    }
    if (out.residual_bound > tol * (1.0 + coeff_scale))
        fail(Errc::NonConvergence, "root residuals above tolerance");
    int total = 0;
    for (const auto& r : out.roots) total += r.multiplicity;
    if (total != deg)
        fail(Errc::InternalInvariantViolation, "clustered multiplicities do not sum to the degree");
    return out;
}

// ---------------------------------------------------------------------------
// Hermite interpolation with repeated abscissae

namespace {

template <class F>
std::vector<F> hermite_impl(std::span<const std::pair<F, std::vector<F>>> nodes, const F& zero) {
    for (size_t a = 0; a < nodes.size(); ++a)
        for (size_t b = a + 1; b < nodes.size(); ++b)
            if (nodes[a].first == nodes[b].first)
                fail(Errc::DuplicateBasePoints, "interpolation nodes share a base point");

    std::vector<F> xs;          // expanded abscissae
    std::vector<size_t> origin; // node index per abscissa
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t k = 0; k < nodes[i].second.size(); ++k) {
            xs.push_back(nodes[i].first);
            origin.push_back(i);
        }
    const size_t m = xs.size();
    if (m == 0) return {};

    // dd[i] holds f[x_i..x_{i+level}] as levels advance
    std::vector<F> dd;
    dd.reserve(m);
    for (size_t i = 0; i < m; ++i) dd.push_back(nodes[origin[i]].second[0]);
    std::vector<F> newton;
    newton.reserve(m);
    newton.push_back(dd[0]);
    std::vector<F> prev = dd;
    for (size_t level = 1; level < m; ++level) {
        std::vector<F> next;
        next.reserve(m - level);
        for (size_t i = 0; i + level < m; ++i) {
            if (xs[i] == xs[i + level]) {
                // whole window sits on one node: coefficient is the stored jet value
                next.push_back(nodes[origin[i]].second[level]);
            } else {
                next.push_back((prev[i + 1] - prev[i]) / (xs[i + level] - xs[i]));
            }
        }
        newton.push_back(next[0]);
        prev = std::move(next);
    }

    // expand the Newton form into monomial coefficients
    std::vector<F> poly;
    for (size_t k = m; k-- > 0;) {
        // poly = poly * (z - xs[k]) + newton[k]
        std::vector<F> shifted(poly.size() + 1, zero);
        for (size_t i = 0; i < poly.size(); ++i) {
            shifted[i + 1] = shifted[i + 1] + poly[i];
            shifted[i] = shifted[i] - xs[k] * poly[i];
        }
        if (shifted.empty()) shifted.push_back(zero);
        shifted[0] = shifted[0] + newton[k];
        poly = std::move(shifted);
    }
    return poly;
}

} // namespace

std::vector<cplx> hermite_interpolate(std::span<const HermiteNode> nodes) {
    std::vector<std::pair<cplx, std::vector<cplx>>> packed;
    packed.reserve(nodes.size());
    for (const auto& n : nodes) {
        if (n.values.empty()) fail(Errc::ParseError, "interpolation node without values");
        packed.emplace_back(n.base, n.values);
    }
    return hermite_impl<cplx>(packed, cplx(0.0));
}

std::vector<GaussRat> hermite_interpolate_exact(std::span<const ExactHermiteNode> nodes) {
    std::vector<std::pair<GaussRat, std::vector<GaussRat>>> packed;
    packed.reserve(nodes.size());
    for (const auto& n : nodes) {
        if (n.values.empty()) fail(Errc::ParseError, "interpolation node without values");
        packed.emplace_back(n.base, n.values);
    }
    return hermite_impl<GaussRat>(packed, GaussRat(0));
}

} // namespace ringfactor::analytic
