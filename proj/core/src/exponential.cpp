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

#include "ringfactor/exponential.hpp"

#include "ringfactor/elementary.hpp"

namespace ringfactor {

namespace {

enum class Shape { StrictUpper, StrictLower, Neither };

Shape strict_shape(const RingMatrix& m, bool require_zero_diag) {
    bool upper = true, lower = true;
    for (size_t i = 0; i < m.dim(); ++i) {
        if (require_zero_diag && !m.at(i, i).is_zero()) return Shape::Neither;
        for (size_t j = 0; j < m.dim(); ++j) {
            if (i == j) continue;
            if (i > j && !m.at(i, j).is_zero()) upper = false;
            if (i < j && !m.at(i, j).is_zero()) lower = false;
        }
    }
    if (upper) return Shape::StrictUpper;
    if (lower) return Shape::StrictLower;
    return Shape::Neither;
}

bool is_unipotent_triangular(const RingMatrix& m) {
    for (size_t i = 0; i < m.dim(); ++i)
        if (!m.at(i, i).is_one()) return false;
    RingMatrix strict = m - RingMatrix::identity(m.dim(), m.descriptor());
    return strict_shape(strict, true) != Shape::Neither;
}

void require_rationals(const RingDescriptor& desc) {
    if (!desc.is_exact())
        fail(Errc::UnsupportedRing, "terminating series need an exact ring");
    if (!desc.contains_rationals())
        fail(Errc::RingWithoutRationals, desc.to_string() + " does not contain Q");
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool matrix_is_zero(const RingMatrix& m) {
    for (size_t i = 0; i < m.dim(); ++i)
        for (size_t j = 0; j < m.dim(); ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

} // namespace

RingMatrix unipotent_log(const RingMatrix& u) {
    require_rationals(u.descriptor());
    if (!is_unipotent_triangular(u))
        fail(Errc::NotUnipotent, "matrix is not unipotent triangular");
    const size_t n = u.dim();
    RingMatrix nil = u - RingMatrix::identity(n, u.descriptor());
    RingMatrix result(n, u.descriptor());
    RingMatrix power = nil;
    for (size_t j = 1; j < n && !matrix_is_zero(power); ++j) {
        RingMatrix term = power.scaled(
            RingElement::from_rat(u.descriptor(), Rat(j % 2 == 1 ? 1 : -1) / Rat(Int(j))));
        result = result + term;
        power = power * nil;
    }
    return result;
}

RingMatrix nilpotent_exp(const RingMatrix& g) {
    require_rationals(g.descriptor());
    if (strict_shape(g, true) == Shape::Neither)
        fail(Errc::NotNilpotent, "matrix is not strictly triangular");
    const size_t n = g.dim();
    RingMatrix result = RingMatrix::identity(n, g.descriptor());
    RingMatrix power = g;
    for (size_t j = 1; j < n && !matrix_is_zero(power); ++j) {
        result = result + power.scaled(
                              RingElement::from_rat(g.descriptor(), Rat(1) / Rat(factorial(static_cast<int>(j)))));
        power = power * g;
    }
    return result;
}

RingMatrix matrix_exp_nilpotent(const RingMatrix& m) {
    require_rationals(m.descriptor());
    const size_t n = m.dim();
    const size_t cap = n * static_cast<size_t>(m.descriptor().nilpotency_bound()) + n + 1;
    RingMatrix result = RingMatrix::identity(n, m.descriptor());
    RingMatrix power = m;
    size_t j = 1;
    for (; j <= cap && !matrix_is_zero(power); ++j) {
        result = result + power.scaled(
                              RingElement::from_rat(m.descriptor(), Rat(1) / Rat(factorial(static_cast<int>(j)))));
        power = power * m;
    }
    if (!matrix_is_zero(power))
        fail(Errc::NotNilpotent, "matrix power did not vanish; argument is not nilpotent");
    return result;
}

ExpCertificate sl_to_exponentials(const RingMatrix& x) {
    FactorizationCertificate cert = x.dim() == 2 ? factor_bsr1_sl2(x) : factor_bsr1_sln(x);
    std::vector<RingMatrix> logs;
    logs.reserve(cert.factors.size());
    for (const auto& f : cert.factors) logs.push_back(unipotent_log(f.matrix()));
    return {x, std::move(logs)};
}

ExpCertificate gl_to_exponentials(const RingMatrix& x) {
    const auto& desc = x.descriptor();
    RingElement d = det(x);
    if (!is_unit(d)) fail(Errc::NotInvertible, "determinant is not a unit");

    RingElement f = unit_nth_root(d, static_cast<int>(x.dim()));
    RingMatrix sl_part = x.scaled(invert_unit(f));
    if (!det(sl_part).is_one())
        fail(Errc::InternalInvariantViolation, "normalized matrix is not SL");

    ExpCertificate sl_cert = sl_to_exponentials(sl_part);
    RingElement scalar_log = principal_unit_log(f);

    std::vector<RingMatrix> logs = std::move(sl_cert.logs);
    if (!scalar_log.is_zero()) {
        RingMatrix scalar = RingMatrix::identity(x.dim(), desc).scaled(scalar_log);
        if (logs.empty())
            logs.push_back(std::move(scalar));
        else
            logs[0] = logs[0] + scalar; // scalar commutes with the strict part
    }
    return {x, std::move(logs)};
}

bool exp_certificate_shape_ok(const ExpCertificate& cert) {
    for (const auto& g : cert.logs) {
        const RingElement& d0 = g.at(0, 0);
        for (size_t i = 1; i < g.dim(); ++i)
            if (!(g.at(i, i) == d0)) return false;
        RingMatrix strict = g - RingMatrix::identity(g.dim(), g.descriptor()).scaled(d0);
        if (strict_shape(strict, true) == Shape::Neither) return false;
    }
    return true;
}

bool replay_exp_certificate(const ExpCertificate& cert) {
    RingMatrix prod = RingMatrix::identity(cert.target.dim(), cert.target.descriptor());
    for (const auto& g : cert.logs) prod = prod * matrix_exp_nilpotent(g);
    return prod == cert.target;
}

} // namespace ringfactor
