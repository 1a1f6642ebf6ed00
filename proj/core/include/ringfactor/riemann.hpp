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

#ifndef RINGFACTOR_RIEMANN_HPP
#define RINGFACTOR_RIEMANN_HPP

#include <array>
#include <vector>

#include "ringfactor/analytic.hpp"
#include "ringfactor/matrix.hpp"

namespace ringfactor {

using analytic::cplx;

/// Small square matrix of function ASTs.
class FuncMatrix {
public:
    FuncMatrix(size_t n)
        : n_(n), entries_(n * n, analytic::FuncExpr::constant(0.0)) {}
    static FuncMatrix identity(size_t n);

    size_t dim() const { return n_; }
    const analytic::FuncPtr& at(size_t i, size_t j) const { return entries_[i * n_ + j]; }
    void set(size_t i, size_t j, analytic::FuncPtr f) { entries_[i * n_ + j] = std::move(f); }

    /// Pointwise sample; n x n row-major complex values.
    std::vector<cplx> sample(cplx z) const;

private:
    size_t n_;
    std::vector<analytic::FuncPtr> entries_;
};

/// Converts a matrix over base[z] (base Q or Q(i)) into polynomial-literal ASTs.
FuncMatrix func_matrix_from_poly(const RingMatrix& m);

/// Deterministic verification point set: a sunflower layout over the disk
/// plus rings of stress points near each listed root.
struct SampleGrid {
    int disk_points = 200;
    double radius = 2.0;
    int near_root_points = 20;
    double near_root_radius = 1e-2;
    std::vector<cplx> extra;

    std::vector<cplx> points(std::span<const analytic::RootSet::Root> roots = {}) const;
};

enum class ThreeExpCase { CZero, CNonzero };

/// X = exp(G1) exp(G2) exp(G3) with the intermediate double-eigenvalue matrix
/// Y = X * [[alpha^2, beta],[0, 1]], alpha = exp(alpha_log).
struct ThreeExpCertificate {
    FuncMatrix target;
    analytic::FuncPtr alpha_log;
    analytic::FuncPtr beta;
    std::array<FuncMatrix, 3> logs;
    FuncMatrix y;
    ThreeExpCase kind = ThreeExpCase::CZero;
    std::vector<analytic::RootSet::Root> c_roots;
};

struct VerifyTolerances {
    double product = 1e-8;
    double discriminant = 1e-10;
    double trace_sign = 1e-10;
    double det_exp = 1e-8;
};

struct ExpVerification {
    double product_residual = 0.0;      // max |X - exp G1 exp G2 exp G3|
    double discriminant_residual = 0.0; // max |(tr Y)^2 - 4 det Y|
    double trace_sign_residual = 0.0;   // max |tr Y - 2 alpha|
    double det_exp_residual = 0.0;      // max |det X - exp tr(G1+G2+G3)|
    bool pass(const VerifyTolerances& tol = {}) const {
        return product_residual <= tol.product && discriminant_residual <= tol.discriminant &&
               trace_sign_residual <= tol.trace_sign && det_exp_residual <= tol.det_exp;
    }
};

/// 3-exponential certificate for a 2x2 matrix with polynomial entries and
/// determinant exactly 1 (checked on the exact coefficients).
ThreeExpCertificate three_exp_sl2(const RingMatrix& x, double root_tol = 1e-10);

/// Explicit log of a 2x2 matrix with double eigenvalue lambda = exp(gamma/2):
/// conjugates Y to upper triangular form along a holomorphic eigenvector.
/// divisor_candidates lists the points where the eigenvector row may vanish
/// (the common-zero divisor is read off jet valuations there).
FuncMatrix double_ev_log(const FuncMatrix& y, analytic::FuncPtr lambda, analytic::FuncPtr gamma,
                         std::span<const analytic::RootSet::Root> divisor_candidates = {},
                         const SampleGrid& grid = {});

ExpVerification verify_exp_certificate(const ThreeExpCertificate& cert,
                                       const SampleGrid& grid = {});

/// Two-stage path from F to the identity: F(t z) for the first stage, then
/// the constant matrix F(0) contracted along its shear factorization.
class NullHomotopy {
public:
    /// F must have determinant 1 (validated by sampling on the unit disk).
    explicit NullHomotopy(FuncMatrix f, double det_tol = 1e-9);

    size_t dim() const { return f_.dim(); }
    /// Matrix value at homotopy time t in [0,1] and point z; t = 1 gives
    /// F(z), t = 0 the identity.
    std::vector<cplx> eval(double t, cplx z) const;

private:
    struct Shear {
        size_t i, j;
        cplx value;
    };
    FuncMatrix f_;
    std::vector<Shear> tail_; // factorization of F(0), product in order
};

// Numeric matrix exponential helpers (scaling and squaring with Pade).
std::vector<cplx> expm(std::span<const cplx> m, size_t n);
/// Closed form for 2x2 via the trace/determinant split; independent route
/// used to cross-check expm.
std::array<cplx, 4> expm2_closed(const std::array<cplx, 4>& m);

} // namespace ringfactor

#endif
