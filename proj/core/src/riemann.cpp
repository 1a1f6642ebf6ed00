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

#include "ringfactor/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace ringfactor {

using analytic::FuncExpr;
using analytic::FuncPtr;
using analytic::Jet;

namespace {

constexpr double kGoldenAngle = 2.39996322972865332;

FuncPtr fconst(cplx v) { return FuncExpr::constant(v); }
FuncPtr fneg(const FuncPtr& f) { return FuncExpr::sub(fconst(0.0), f); }

} // namespace

FuncMatrix FuncMatrix::identity(size_t n) {
    FuncMatrix m(n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, fconst(1.0));
    return m;
}

std::vector<cplx> FuncMatrix::sample(cplx z) const {
    std::vector<cplx> out(n_ * n_);
    for (size_t k = 0; k < entries_.size(); ++k) out[k] = analytic::evaluate(entries_[k], z);
    return out;
}

// ---------------------------------------------------------------------------
// Exact polynomial extraction

namespace {

GaussRat to_gauss(const RingElement& e) {
    switch (e.kind()) {
        case RingKind::Rational: return GaussRat(e.rat_value(), Rat(0));
        case RingKind::GaussianRational: return e.gauss_value();
        default:
            fail(Errc::UnsupportedRing, "expected a coefficient in Q or Q(i)");
    }
}

std::vector<GaussRat> exact_coeffs(const RingElement& p) {
    if (p.kind() != RingKind::Poly)
        fail(Errc::UnsupportedRing, "expected a polynomial entry");
    std::vector<GaussRat> out;
    out.reserve(p.parts().size());
    for (const auto& c : p.parts()) out.push_back(to_gauss(c));
    return out;
}

std::vector<cplx> complex_coeffs(std::span<const GaussRat> coeffs) {
    std::vector<cplx> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.to_complex());
    return out;
}

} // namespace

FuncMatrix func_matrix_from_poly(const RingMatrix& m) {
    const auto& desc = m.descriptor();
    if (desc.kind() != RingKind::Poly || !desc.base().is_field())
        fail(Errc::UnsupportedRing, "expected a matrix over base[z] with a field base");
    FuncMatrix out(m.dim());
    for (size_t i = 0; i < m.dim(); ++i)
        for (size_t j = 0; j < m.dim(); ++j)
            out.set(i, j, FuncExpr::poly(exact_coeffs(m.at(i, j))));
    return out;
}

// ---------------------------------------------------------------------------
// Sampling grid

std::vector<cplx> SampleGrid::points(std::span<const analytic::RootSet::Root> roots) const {
    std::vector<cplx> pts;
    pts.reserve(static_cast<size_t>(std::max(disk_points, 1)) +
                roots.size() * static_cast<size_t>(near_root_points) + extra.size());
    const int n = std::max(disk_points, 1);
    for (int k = 0; k < n; ++k) {
        double r = radius * std::sqrt((k + 0.5) / n);
        double theta = k * kGoldenAngle;
        pts.emplace_back(r * std::cos(theta), r * std::sin(theta));
    }
    for (const auto& root : roots) {
        for (int j = 0; j < near_root_points; ++j) {
            double rr = near_root_radius * (j + 1) / std::max(near_root_points, 1);
            double theta = j * kGoldenAngle;
            pts.push_back(root.location + cplx(rr * std::cos(theta), rr * std::sin(theta)));
        }
    }
    pts.insert(pts.end(), extra.begin(), extra.end());
    return pts;
}

// ---------------------------------------------------------------------------
// Numeric matrix exponential

namespace {

std::vector<cplx> mat_mul(std::span<const cplx> a, std::span<const cplx> b, size_t n) {
    std::vector<cplx> out(n * n, cplx(0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            cplx aik = a[i * n + k];
            if (aik == cplx(0.0)) continue;
            for (size_t j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
        }
    return out;
}

std::vector<cplx> mat_identity(size_t n) {
    std::vector<cplx> out(n * n, cplx(0.0));
    for (size_t i = 0; i < n; ++i) out[i * n + i] = 1.0;
    return out;
}

void mat_axpy(std::vector<cplx>& y, double alpha, std::span<const cplx> x) {
    for (size_t k = 0; k < y.size(); ++k) y[k] += alpha * x[k];
}

double mat_norm1(std::span<const cplx> a, size_t n) {
    double best = 0.0;
    for (size_t j = 0; j < n; ++j) {
        double col = 0.0;
        for (size_t i = 0; i < n; ++i) col += std::abs(a[i * n + j]);
        best = std::max(best, col);
    }
    return best;
}

/// Solves A X = B in place, partial pivoting; A and B are n x n.
std::vector<cplx> mat_solve(std::vector<cplx> a, std::vector<cplx> b, size_t n) {
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k])) piv = i;
        if (std::abs(a[piv * n + k]) < 1e-300)
            fail(Errc::InternalInvariantViolation, "singular system in Pade solve");
        if (piv != k)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a[piv * n + j], a[k * n + j]);
                std::swap(b[piv * n + j], b[k * n + j]);
            }
        for (size_t i = k + 1; i < n; ++i) {
            cplx m = a[i * n + k] / a[k * n + k];
            if (m == cplx(0.0)) continue;
            for (size_t j = k; j < n; ++j) a[i * n + j] -= m * a[k * n + j];
            for (size_t j = 0; j < n; ++j) b[i * n + j] -= m * b[k * n + j];
        }
    }
    for (size_t k = n; k-- > 0;) {
        for (size_t j = 0; j < n; ++j) {
            cplx acc = b[k * n + j];
            for (size_t i = k + 1; i < n; ++i) acc -= a[k * n + i] * b[i * n + j];
            b[k * n + j] = acc / a[k * n + k];
        }
    }
    return b;
}

} // namespace

std::vector<cplx> expm(std::span<const cplx> m, size_t n) {
    static const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                               1187353796428800.,  129060195264000.,   10559470521600.,
                               670442572800.,      33522128640.,       1323241920.,
                               40840800.,          960960.,            16380.,
                               182.,               1.};
    const double theta13 = 5.371920351148152;
    double norm = mat_norm1(m, n);
    int squarings = 0;
    if (norm > theta13) squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    std::vector<cplx> a(m.begin(), m.end());
    const double scale = std::ldexp(1.0, -squarings);
    for (auto& v : a) v *= scale;

    std::vector<cplx> id = mat_identity(n);
    std::vector<cplx> a2 = mat_mul(a, a, n);
    std::vector<cplx> a4 = mat_mul(a2, a2, n);
    std::vector<cplx> a6 = mat_mul(a2, a4, n);

    std::vector<cplx> w(n * n, cplx(0.0));
    mat_axpy(w, b[13], a6);
    mat_axpy(w, b[11], a4);
    mat_axpy(w, b[9], a2);
    std::vector<cplx> u = mat_mul(a6, w, n);
    mat_axpy(u, b[7], a6);
    mat_axpy(u, b[5], a4);
    mat_axpy(u, b[3], a2);
    mat_axpy(u, b[1], id);
    u = mat_mul(a, u, n);

    std::vector<cplx> w2(n * n, cplx(0.0));
    mat_axpy(w2, b[12], a6);
    mat_axpy(w2, b[10], a4);
    mat_axpy(w2, b[8], a2);
    std::vector<cplx> v = mat_mul(a6, w2, n);
    mat_axpy(v, b[6], a6);
    mat_axpy(v, b[4], a4);
    mat_axpy(v, b[2], a2);
    mat_axpy(v, b[0], id);

    std::vector<cplx> num(n * n), den(n * n);
    for (size_t k = 0; k < n * n; ++k) {
        num[k] = v[k] + u[k];
        den[k] = v[k] - u[k];
    }
    std::vector<cplx> r = mat_solve(std::move(den), std::move(num), n);
    for (int s = 0; s < squarings; ++s) r = mat_mul(r, r, n);
    return r;
}

std::array<cplx, 4> expm2_closed(const std::array<cplx, 4>& m) {
    const cplx a = m[0], b = m[1], c = m[2], d = m[3];
    const cplx mean = 0.5 * (a + d);
    const cplx delta2 = 0.25 * (a - d) * (a - d) + b * c;
    const cplx delta = std::sqrt(delta2);
    cplx cosh_d, sinhc_d;
    if (std::abs(delta) < 1e-6) {
        cosh_d = 1.0 + delta2 / 2.0 + delta2 * delta2 / 24.0;
        sinhc_d = 1.0 + delta2 / 6.0 + delta2 * delta2 / 120.0;
    } else {
        cosh_d = std::cosh(delta);
        sinhc_d = std::sinh(delta) / delta;
    }
    const cplx e = std::exp(mean);
    return {e * (cosh_d + sinhc_d * (a - mean)), e * sinhc_d * b, e * sinhc_d * c,
            e * (cosh_d + sinhc_d * (d - mean))};
}

// ---------------------------------------------------------------------------
// Double-eigenvalue logarithm

namespace {

double sample_max(const FuncPtr& f, std::span<const cplx> pts) {
    double best = 0.0;
    for (cplx z : pts) best = std::max(best, std::abs(analytic::evaluate(f, z)));
    return best;
}

} // namespace

FuncMatrix double_ev_log(const FuncMatrix& y, FuncPtr lambda, FuncPtr gamma,
                         std::span<const analytic::RootSet::Root> divisor_candidates,
                         const SampleGrid& grid) {
    if (y.dim() != 2) fail(Errc::DimensionMismatch, "double_ev_log needs a 2x2 matrix");
    const std::vector<cplx> pts = grid.points(divisor_candidates);

    double scale = 1.0, disc = 0.0, lg_resid = 0.0;
    for (cplx z : pts) {
        auto v = y.sample(z);
        cplx tr = v[0] + v[3];
        cplx dt = v[0] * v[3] - v[1] * v[2];
        cplx lv = analytic::evaluate(lambda, z);
        cplx gv = analytic::evaluate(gamma, z);
        for (cplx e : v) scale = std::max(scale, std::abs(e));
        disc = std::max(disc, std::abs(tr * tr - 4.0 * dt));
        lg_resid = std::max(lg_resid, std::abs(std::exp(gv) - lv * lv));
        lg_resid = std::max(lg_resid, std::abs(lv * lv - dt));
    }
    if (disc > 1e-8 * scale * scale)
        fail(Errc::NotDoubleEigenvalue, "discriminant residual " + std::to_string(disc));
    if (lg_resid > 1e-8 * scale * scale)
        fail(Errc::NotDoubleEigenvalue, "lambda/gamma pair inconsistent with det Y");

    FuncPtr half_gamma = FuncExpr::mul(fconst(0.5), gamma);
    const double zero_tol = 1e-12 * scale;

    const double off_upper = sample_max(y.at(0, 1), pts);
    const double off_lower = sample_max(y.at(1, 0), pts);
    if (off_upper <= zero_tol && off_lower <= zero_tol) {
        FuncMatrix g(2);
        g.set(0, 0, half_gamma);
        g.set(1, 1, half_gamma);
        return g;
    }

    // rows of Y - lambda I
    FuncPtr h1 = FuncExpr::sub(y.at(0, 0), lambda);
    FuncPtr g1 = y.at(0, 1);
    FuncPtr h2 = y.at(1, 0);
    FuncPtr g2 = FuncExpr::sub(y.at(1, 1), lambda);
    const double row1_mag = std::max(sample_max(h1, pts), sample_max(g1, pts));
    const double row2_mag = std::max(sample_max(h2, pts), sample_max(g2, pts));
    if (row1_mag <= zero_tol && row2_mag <= zero_tol)
        fail(Errc::EigenvectorDegenerate, "Y - lambda I vanishes but Y is not diagonal");
    FuncPtr h = row1_mag >= row2_mag ? h1 : h2;
    FuncPtr g = row1_mag >= row2_mag ? g1 : g2;

    FuncPtr v1, v2;
    if (sample_max(h, pts) <= zero_tol) {
        v1 = fconst(1.0);
        v2 = fconst(0.0);
    } else if (sample_max(g, pts) <= zero_tol) {
        v1 = fconst(0.0);
        v2 = fconst(1.0);
    } else {
        // common-zero divisor read off jet valuations at the candidates; the
        // loose threshold absorbs the eps^(1/m) error in located multiple
        // roots, which pollutes the low jet coefficients
        constexpr double kDivisorValuationThreshold = 1e-5;
        std::vector<analytic::Annotation> divisor;
        for (const auto& cand : divisor_candidates) {
            const int probe = cand.multiplicity + 4;
            Jet jg = analytic::jet_at(g, cand.location, probe);
            Jet jh = analytic::jet_at(h, cand.location, probe);
            int k = std::min(analytic::jet_valuation(jg, kDivisorValuationThreshold),
                             analytic::jet_valuation(jh, kDivisorValuationThreshold));
            k = std::min(k, probe);
            if (k >= 1) divisor.push_back({cand.location, k});
        }
        if (divisor.empty()) {
            v1 = fneg(g);
            v2 = h;
        } else {
            std::vector<cplx> clear_poly{1.0};
            for (const auto& d : divisor)
                for (int rep = 0; rep < d.order; ++rep) {
                    std::vector<cplx> next(clear_poly.size() + 1, cplx(0.0));
                    for (size_t i = 0; i < clear_poly.size(); ++i) {
                        next[i + 1] += clear_poly[i];
                        next[i] -= d.point * clear_poly[i];
                    }
                    clear_poly = std::move(next);
                }
            FuncPtr f = FuncExpr::fpoly(clear_poly);
            v1 = FuncExpr::div(fneg(g), f, divisor);
            v2 = FuncExpr::div(h, f, divisor);
        }
    }

    // complete the eigenvector to P = [v | w]: constant second column chosen
    // to maximize the smallest sampled |det P|; degeneracy is judged on the
    // determinant normalized by |v|, which is scale-free
    static const std::array<std::array<cplx, 2>, 6> candidates = {
        std::array<cplx, 2>{cplx(1.0), cplx(0.0)},
        std::array<cplx, 2>{cplx(0.0), cplx(1.0)},
        std::array<cplx, 2>{cplx(1.0), cplx(1.0)},
        std::array<cplx, 2>{cplx(1.0), cplx(-1.0)},
        std::array<cplx, 2>{cplx(1.0), cplx(0.0, 1.0)},
        std::array<cplx, 2>{cplx(0.0, 1.0), cplx(1.0)}};
    double best_min = -1.0;
    double best_norm = -1.0;
    std::array<cplx, 2> w{cplx(0.0), cplx(1.0)};
    for (const auto& cand : candidates) {
        FuncPtr dp = FuncExpr::sub(FuncExpr::mul(v1, fconst(cand[1])),
                                   FuncExpr::mul(v2, fconst(cand[0])));
        double mn = 1e300, mn_norm = 1e300;
        for (cplx z : pts) {
            double d = std::abs(analytic::evaluate(dp, z));
            double vn = std::abs(analytic::evaluate(v1, z)) + std::abs(analytic::evaluate(v2, z));
            mn = std::min(mn, d);
            mn_norm = std::min(mn_norm, d / (1.0 + vn));
        }
        if (mn > best_min) {
            best_min = mn;
            best_norm = mn_norm;
            w = cand;
        }
    }
    if (best_norm <= 1e-12)
        fail(Errc::EigenvectorDegenerate, "no constant completion keeps P invertible on the grid");

    FuncPtr w1 = fconst(w[0]), w2 = fconst(w[1]);
    FuncPtr det_p = FuncExpr::sub(FuncExpr::mul(v1, w2), FuncExpr::mul(v2, w1));

    // beta_tilde = (P^{-1} Y P)_{12} = (adj(P) Y P)_{12} / det P
    FuncPtr a100 = FuncExpr::sub(FuncExpr::mul(w2, y.at(0, 0)), FuncExpr::mul(w1, y.at(1, 0)));
    FuncPtr a101 = FuncExpr::sub(FuncExpr::mul(w2, y.at(0, 1)), FuncExpr::mul(w1, y.at(1, 1)));
    FuncPtr adj_y_p_01 = FuncExpr::add(FuncExpr::mul(a100, w1), FuncExpr::mul(a101, w2));
    FuncPtr beta_tilde = FuncExpr::div(adj_y_p_01, det_p);

    FuncPtr t01 = FuncExpr::div(beta_tilde, lambda); // lambda = exp(gamma/2) never vanishes

    // G = P T adj(P) / det P with T = [[gamma/2, t01],[0, gamma/2]]
    FuncPtr pt00 = FuncExpr::mul(v1, half_gamma);
    FuncPtr pt01 = FuncExpr::add(FuncExpr::mul(v1, t01), FuncExpr::mul(w1, half_gamma));
    FuncPtr pt10 = FuncExpr::mul(v2, half_gamma);
    FuncPtr pt11 = FuncExpr::add(FuncExpr::mul(v2, t01), FuncExpr::mul(w2, half_gamma));

    FuncPtr g00 = FuncExpr::sub(FuncExpr::mul(pt00, w2), FuncExpr::mul(pt01, v2));
    FuncPtr g01 = FuncExpr::sub(FuncExpr::mul(pt01, v1), FuncExpr::mul(pt00, w1));
    FuncPtr g10 = FuncExpr::sub(FuncExpr::mul(pt10, w2), FuncExpr::mul(pt11, v2));
    FuncPtr g11 = FuncExpr::sub(FuncExpr::mul(pt11, v1), FuncExpr::mul(pt10, w1));

    FuncMatrix out(2);
    out.set(0, 0, FuncExpr::div(g00, det_p));
    out.set(0, 1, FuncExpr::div(g01, det_p));
    out.set(1, 0, FuncExpr::div(g10, det_p));
    out.set(1, 1, FuncExpr::div(g11, det_p));
    return out;
}

// ---------------------------------------------------------------------------
// Three exponentials

ThreeExpCertificate three_exp_sl2(const RingMatrix& x, double root_tol) {
    if (x.dim() != 2) fail(Errc::DimensionMismatch, "three_exp_sl2 needs a 2x2 matrix");
    if (!det(x).is_one()) fail(Errc::NotSL, "determinant is not 1");

    std::vector<GaussRat> ae = exact_coeffs(x.at(0, 0));
    std::vector<GaussRat> be = exact_coeffs(x.at(0, 1));
    std::vector<GaussRat> ce = exact_coeffs(x.at(1, 0));
    std::vector<GaussRat> de = exact_coeffs(x.at(1, 1));

    FuncMatrix target = func_matrix_from_poly(x);
    const FuncPtr a = target.at(0, 0);
    const FuncPtr b = target.at(0, 1);
    const FuncPtr c = target.at(1, 0);
    const FuncPtr d = target.at(1, 1);

    ThreeExpCertificate cert{target,
                             nullptr,
                             nullptr,
                             {FuncMatrix(2), FuncMatrix(2), FuncMatrix(2)},
                             FuncMatrix(2),
                             ThreeExpCase::CZero,
                             {}};

    FuncPtr alpha_log, beta, alpha, alpha_sq, gamma;
    if (ce.empty()) {
        // c = 0 forces the diagonal to be constant units
        cert.kind = ThreeExpCase::CZero;
        if (ae.size() != 1)
            fail(Errc::InternalInvariantViolation, "c = 0 with nonconstant diagonal in SL2");
        const cplx a0 = ae[0].to_complex();
        const cplx alpha_v = 1.0 / a0;
        alpha_log = fconst(std::log(alpha_v));
        alpha = fconst(alpha_v);
        alpha_sq = fconst(alpha_v * alpha_v);
        gamma = fconst(2.0 * std::log(alpha_v));
        beta = fconst(0.0);
        cert.y.set(0, 0, fconst(alpha_v)); // a * alpha^2 = 1/a
        cert.y.set(0, 1, b);
        cert.y.set(1, 0, fconst(0.0));
        cert.y.set(1, 1, d); // d = 1/a exactly
    } else {
        cert.kind = ThreeExpCase::CNonzero;
        analytic::RootSet roots;
        if (ce.size() > 1) { // nonconstant c has a zero set
            try {
                roots = analytic::poly_roots(complex_coeffs(ce), root_tol);
            } catch (const RingError& e) {
                fail(Errc::RootFindingFailed, std::string("zero set of c: ") + e.what());
            }
        }
        cert.c_roots = roots.roots;

        // jets of 1/a at each root, matched to the full vanishing order of c
        std::vector<analytic::HermiteNode> nodes;
        nodes.reserve(roots.roots.size());
        for (const auto& root : roots.roots) {
            Jet ja = analytic::jet_at(a, root.location, root.multiplicity);
            Jet one(root.location, root.multiplicity);
            one.coefficient(0) = 1.0;
            Jet inv_a = analytic::jet_div(one, ja);
            Jet log_jet = analytic::jet_log(inv_a);
            nodes.push_back({root.location, log_jet.coefficients()});
        }
        std::vector<cplx> alpha_tilde = analytic::hermite_interpolate(nodes);
        std::vector<cplx> two_alpha_tilde = alpha_tilde;
        for (auto& v : two_alpha_tilde) v *= 2.0;

        alpha_log = alpha_tilde.empty() ? fconst(0.0) : FuncExpr::fpoly(alpha_tilde);
        alpha = FuncExpr::exp(alpha_log);
        alpha_sq = two_alpha_tilde.empty()
                       ? fconst(1.0)
                       : FuncExpr::exp(FuncExpr::fpoly(two_alpha_tilde));
        gamma = two_alpha_tilde.empty() ? fconst(0.0) : FuncExpr::fpoly(two_alpha_tilde);

        std::vector<analytic::Annotation> annotations;
        annotations.reserve(roots.roots.size());
        for (const auto& root : roots.roots)
            annotations.push_back({root.location, root.multiplicity});
        FuncPtr numerator = FuncExpr::sub(
            FuncExpr::sub(FuncExpr::mul(fconst(2.0), alpha), FuncExpr::mul(a, alpha_sq)), d);
        beta = FuncExpr::div(numerator, c, annotations);

        cert.y.set(0, 0, FuncExpr::mul(a, alpha_sq));
        cert.y.set(0, 1, FuncExpr::add(FuncExpr::mul(a, beta), b));
        cert.y.set(1, 0, FuncExpr::mul(c, alpha_sq));
        cert.y.set(1, 1, FuncExpr::add(FuncExpr::mul(c, beta), d));
    }
    cert.alpha_log = alpha_log;
    cert.beta = beta;

    SampleGrid grid;
    cert.logs[0] = double_ev_log(cert.y, alpha, gamma, cert.c_roots, grid);

    // X = Y exp(-B) exp(-A),  A = alpha_log diag(1,-1),
    // B = alpha_log I + [[0, beta/alpha^2],[0,0]]
    FuncPtr neg_alpha_log = fneg(alpha_log);
    FuncPtr beta_over_alpha_sq =
        FuncExpr::mul(beta, FuncExpr::exp(FuncExpr::mul(fconst(-2.0), alpha_log)));
    cert.logs[1].set(0, 0, neg_alpha_log);
    cert.logs[1].set(0, 1, fneg(beta_over_alpha_sq));
    cert.logs[1].set(1, 1, neg_alpha_log);
    cert.logs[2].set(0, 0, neg_alpha_log);
    cert.logs[2].set(1, 1, alpha_log);
    return cert;
}

ExpVerification verify_exp_certificate(const ThreeExpCertificate& cert, const SampleGrid& grid) {
    ExpVerification out;
    const std::vector<cplx> pts = grid.points(cert.c_roots);
    for (cplx z : pts) {
        auto xv = cert.target.sample(z);
        std::vector<cplx> prod = mat_identity(2);
        cplx trace_sum = 0.0;
        for (const auto& log : cert.logs) {
            auto gv = log.sample(z);
            trace_sum += gv[0] + gv[3];
            prod = mat_mul(prod, expm(gv, 2), 2);
        }
        double resid = 0.0;
        for (size_t k = 0; k < 4; ++k) resid = std::max(resid, std::abs(xv[k] - prod[k]));
        out.product_residual = std::max(out.product_residual, resid);

        auto yv = cert.y.sample(z);
        cplx tr = yv[0] + yv[3];
        cplx dt = yv[0] * yv[3] - yv[1] * yv[2];
        out.discriminant_residual =
            std::max(out.discriminant_residual, std::abs(tr * tr - 4.0 * dt));
        cplx alpha_v = std::exp(analytic::evaluate(cert.alpha_log, z));
        out.trace_sign_residual = std::max(out.trace_sign_residual, std::abs(tr - 2.0 * alpha_v));

        cplx det_x = xv[0] * xv[3] - xv[1] * xv[2];
        out.det_exp_residual =
            std::max(out.det_exp_residual, std::abs(det_x - std::exp(trace_sum)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Null-homotopy

NullHomotopy::NullHomotopy(FuncMatrix f, double det_tol) : f_(std::move(f)) {
    const size_t n = f_.dim();
    SampleGrid grid;
    grid.disk_points = 64;
    grid.radius = 1.0;
    grid.near_root_points = 0;
    double det_resid = 0.0;
    for (cplx z : grid.points()) {
        auto v = f_.sample(z);
        // determinant by small LU
        std::vector<cplx> w = v;
        cplx dt = 1.0;
        for (size_t k = 0; k < n; ++k) {
            size_t piv = k;
            for (size_t i = k + 1; i < n; ++i)
                if (std::abs(w[i * n + k]) > std::abs(w[piv * n + k])) piv = i;
            if (piv != k) {
                for (size_t j = 0; j < n; ++j) std::swap(w[piv * n + j], w[k * n + j]);
                dt = -dt;
            }
            dt *= w[k * n + k];
            if (w[k * n + k] == cplx(0.0)) break;
            for (size_t i = k + 1; i < n; ++i) {
                cplx m = w[i * n + k] / w[k * n + k];
                for (size_t j = k; j < n; ++j) w[i * n + j] -= m * w[k * n + j];
            }
        }
        det_resid = std::max(det_resid, std::abs(dt - 1.0));
    }
    if (det_resid > det_tol)
        fail(Errc::NotSL, "sampled determinant deviates from 1 by " + std::to_string(det_resid));

    // factor the constant matrix F(0) into shears; the tail path scales their
    // parameters
    std::vector<cplx> w = f_.sample(cplx(0.0));
    std::vector<Shear> ops;
    auto rowop = [&](size_t i, size_t j, cplx cval) {
        if (cval == cplx(0.0)) return;
        for (size_t col = 0; col < n; ++col) w[i * n + col] += cval * w[j * n + col];
        ops.push_back({i, j, cval});
    };
    for (size_t k = 0; k < n; ++k) {
        if (std::abs(w[k * n + k] - 1.0) > 1e-14) {
            size_t helper = n;
            double best = 1e-13;
            for (size_t r = k + 1; r < n; ++r)
                if (std::abs(w[r * n + k]) > best) {
                    best = std::abs(w[r * n + k]);
                    helper = r;
                }
            if (helper == n) {
                if (k + 1 == n) {
                    if (std::abs(w[k * n + k] - 1.0) > 1e-9)
                        fail(Errc::InternalInvariantViolation,
                             "constant part is not special linear");
                    break;
                }
                rowop(k + 1, k, 1.0);
                helper = k + 1;
            }
            rowop(k, helper, (1.0 - w[k * n + k]) / w[helper * n + k]);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            if (std::abs(w[i * n + k]) > 0.0) rowop(i, k, -w[i * n + k] / w[k * n + k]);
        }
    }
    tail_.reserve(ops.size());
    for (const auto& op : ops) tail_.push_back({op.i, op.j, -op.value});
}

std::vector<cplx> NullHomotopy::eval(double t, cplx z) const {
    const size_t n = f_.dim();
    if (t < 0.0 || t > 1.0) fail(Errc::ParseError, "homotopy time must be in [0,1]");
    if (t >= 0.5) {
        double s = 2.0 * t - 1.0;
        return f_.sample(s * z);
    }
    double s = 2.0 * t;
    std::vector<cplx> acc = mat_identity(n);
    for (const auto& shear : tail_) {
        std::vector<cplx> e = mat_identity(n);
        e[shear.i * n + shear.j] = s * shear.value;
        acc = mat_mul(acc, e, n);
    }
    return acc;
}

} // namespace ringfactor
