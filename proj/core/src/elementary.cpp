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

#include "ringfactor/elementary.hpp"

#include <algorithm>

namespace ringfactor {

namespace {

void require_sl(const RingMatrix& x) {
    if (!det(x).is_one()) fail(Errc::NotSL, "determinant is not 1");
}

enum class Side { Lower, Upper };

struct RawFactor {
    RingMatrix matrix;
    Side side;
};

/// Merges adjacent factors of equal orientation and drops identities; the
/// product of the survivors is unchanged.
std::vector<ElementaryFactor> pack_factors(std::vector<RawFactor> raw) {
    std::vector<RawFactor> merged;
    for (auto& f : raw) {
        if (f.matrix.is_identity()) continue;
        if (!merged.empty() && merged.back().side == f.side) {
            merged.back().matrix = merged.back().matrix * f.matrix;
            if (merged.back().matrix.is_identity()) merged.pop_back();
        } else {
            merged.push_back(std::move(f));
        }
    }
    std::vector<ElementaryFactor> out;
    out.reserve(merged.size());
    for (auto& f : merged)
        out.push_back(f.side == Side::Lower ? ElementaryFactor::unipotent_lower(std::move(f.matrix))
                                            : ElementaryFactor::unipotent_upper(std::move(f.matrix)));
    return out;
}

} // namespace

FactorizationCertificate factor_bsr1_sl2(const RingMatrix& x) {
    if (x.dim() != 2) fail(Errc::DimensionMismatch, "factor_bsr1_sl2 needs a 2x2 matrix");
    const auto& desc = x.descriptor();
    if (!desc.has_bsr1_oracle())
        fail(Errc::OracleUnavailable, "no reduction oracle for " + desc.to_string());
    require_sl(x);
    if (x.is_identity()) return {x, {}, "bsr1"};

    const RingElement& x11 = x.at(0, 0);
    const RingElement& x12 = x.at(0, 1);
    const RingElement& x21 = x.at(1, 0);
    const RingElement& x22 = x.at(1, 1);

    // det X = 1 certifies the pair (x21, x11): (-x12)*x21 + x22*x11 = 1.
    UnimodularCertificate pair_cert{ElemVec{-x12, x22}};
    ReductionWitness wit = reduce_unimodular_pair(x21, x11, pair_cert);

    RingMatrix w = x;
    std::vector<RawFactor> factors;

    RingMatrix m1 = RingMatrix::identity(2, desc);
    m1.set(1, 0, wit.y);
    w = m1 * w;
    RingMatrix m1_inv = RingMatrix::identity(2, desc);
    m1_inv.set(1, 0, -wit.y);
    factors.push_back({std::move(m1_inv), Side::Lower});

    if (!(w.at(1, 0) == wit.alpha))
        fail(Errc::InternalInvariantViolation, "corner did not become the reduced unit");

    RingElement u = (RingElement::one(desc) - x11) * wit.alpha_inverse;
    RingMatrix m2 = RingMatrix::identity(2, desc);
    m2.set(0, 1, u);
    w = m2 * w;
    RingMatrix m2_inv = RingMatrix::identity(2, desc);
    m2_inv.set(0, 1, -u);
    factors.push_back({std::move(m2_inv), Side::Upper});
    if (!w.at(0, 0).is_one())
        fail(Errc::InternalInvariantViolation, "pivot did not normalize to 1");

    RingMatrix m3 = RingMatrix::identity(2, desc);
    m3.set(1, 0, -wit.alpha);
    w = m3 * w;
    RingMatrix m3_inv = RingMatrix::identity(2, desc);
    m3_inv.set(1, 0, wit.alpha);
    factors.push_back({std::move(m3_inv), Side::Lower});

    if (!w.at(1, 0).is_zero() || !w.at(1, 1).is_one())
        fail(Errc::InternalInvariantViolation, "trailing corner is not 1");
    factors.push_back({std::move(w), Side::Upper});

    FactorizationCertificate cert{x, pack_factors(std::move(factors)), "bsr1"};
    if (cert.factors.size() > 4)
        fail(Errc::InternalInvariantViolation, "more than 4 factors emitted");
    return cert;
}

FactorizationCertificate factor_bsr1_sln(const RingMatrix& x) {
    const size_t n = x.dim();
    if (n < 2) fail(Errc::DimensionMismatch, "factor_bsr1_sln needs n >= 2");
    const auto& desc = x.descriptor();
    if (!desc.has_bsr1_oracle())
        fail(Errc::OracleUnavailable, "no reduction oracle for " + desc.to_string());
    require_sl(x);
    if (x.is_identity()) return {x, {}, "bsr1"};

    RingMatrix w = x;
    std::vector<RawFactor> factors;
    // multipliers touch a single row or column, so they are applied as row
    // updates rather than full products
    auto row_axpy = [&w, n](size_t i, size_t j, const RingElement& c) {
        if (c.is_zero()) return;
        for (size_t col = 0; col < n; ++col) w.set(i, col, w.at(i, col) + c * w.at(j, col));
    };

    for (size_t k = 0; k + 1 < n; ++k) {
        const size_t m = n - k;
        ElemVec column;
        column.reserve(m);
        for (size_t i = 0; i < m; ++i) column.push_back(w.at(k + i, k));

        bool already_reduced = column[0].is_one() &&
                               std::all_of(column.begin() + 1, column.end(),
                                           [](const RingElement& e) { return e.is_zero(); });
        if (already_reduced) continue;

        UnimodularCertificate cert = bezout_certificate(column);
        RingElement partial = RingElement::zero(desc);
        for (size_t i = 0; i + 1 < m; ++i)
            partial = partial + cert.coefficients[i] * column[i];
        UnimodularCertificate pair_cert{ElemVec{cert.coefficients[m - 1], RingElement::one(desc)}};
        ReductionWitness wit = reduce_unimodular_pair(column[m - 1], partial, pair_cert);

        // L: adds y * (alpha_i-weighted rows) to the block's last row.
        RingMatrix lower_inv = RingMatrix::identity(n, desc);
        for (size_t i = 0; i + 1 < m; ++i) {
            RingElement c = cert.coefficients[i] * wit.y;
            row_axpy(k + m - 1, k + i, c);
            lower_inv.set(k + m - 1, k + i, -c);
        }
        factors.push_back({std::move(lower_inv), Side::Lower});
        if (!(w.at(k + m - 1, k) == wit.alpha))
            fail(Errc::InternalInvariantViolation, "pivot failed the unit check");

        // U1: clears the block column above the unit, normalizing the pivot to 1.
        RingMatrix upper_inv = RingMatrix::identity(n, desc);
        RingElement top = (RingElement::one(desc) - w.at(k, k)) * wit.alpha_inverse;
        upper_inv.set(k, k + m - 1, -top);
        ElemVec upper_coeffs{top};
        for (size_t i = 1; i + 1 < m; ++i) {
            RingElement c = -(w.at(k + i, k) * wit.alpha_inverse);
            upper_inv.set(k + i, k + m - 1, -c);
            upper_coeffs.push_back(c);
        }
        row_axpy(k, k + m - 1, upper_coeffs[0]);
        for (size_t i = 1; i + 1 < m; ++i) row_axpy(k + i, k + m - 1, upper_coeffs[i]);
        factors.push_back({std::move(upper_inv), Side::Upper});
        if (!w.at(k, k).is_one())
            fail(Errc::InternalInvariantViolation, "pivot did not normalize to 1");

        // L-tilde: clears the unit below the pivot.
        RingMatrix last_inv = RingMatrix::identity(n, desc);
        last_inv.set(k + m - 1, k, wit.alpha);
        row_axpy(k + m - 1, k, -wit.alpha);
        factors.push_back({std::move(last_inv), Side::Lower});

        for (size_t i = 1; i < m; ++i)
            if (!w.at(k + i, k).is_zero())
                fail(Errc::InternalInvariantViolation, "column was not eliminated");
    }

    if (!w.at(n - 1, n - 1).is_one())
        fail(Errc::InternalInvariantViolation, "trailing corner is not 1");
    for (size_t i = 0; i < n; ++i) {
        if (!w.at(i, i).is_one())
            fail(Errc::InternalInvariantViolation, "result is not unipotent upper triangular");
        for (size_t j = 0; j < i; ++j)
            if (!w.at(i, j).is_zero())
                fail(Errc::InternalInvariantViolation, "result is not upper triangular");
    }
    factors.push_back({std::move(w), Side::Upper});

    FactorizationCertificate cert{x, pack_factors(std::move(factors)), "bsr1"};
    if (cert.factors.size() > 2 * n)
        fail(Errc::InternalInvariantViolation, "more than 2n factors emitted");
    return cert;
}

// ---------------------------------------------------------------------------
// Shear-based baselines

namespace {

struct ShearOp {
    size_t i, j;
    RingElement value;
};

class ShearRecorder {
public:
    explicit ShearRecorder(RingMatrix w) : w_(std::move(w)) {}

    const RingMatrix& current() const { return w_; }
    const RingElement& at(size_t i, size_t j) const { return w_.at(i, j); }

    // row_i += c * row_j
    void apply(size_t i, size_t j, const RingElement& c) {
        if (c.is_zero()) return;
        for (size_t col = 0; col < w_.dim(); ++col)
            w_.set(i, col, w_.at(i, col) + c * w_.at(j, col));
        ops_.push_back({i, j, c});
    }

    /// Inverse shears in application order; their product is the original
    /// matrix. Adjacent shears at one position are combined.
    std::vector<ElementaryFactor> emit(size_t n) const {
        std::vector<ShearOp> combined;
        for (const auto& op : ops_) {
            RingElement v = -op.value;
            if (!combined.empty() && combined.back().i == op.i && combined.back().j == op.j) {
                combined.back().value = combined.back().value + v;
                if (combined.back().value.is_zero()) combined.pop_back();
            } else {
                combined.push_back({op.i, op.j, std::move(v)});
            }
        }
        std::vector<ElementaryFactor> out;
        out.reserve(combined.size());
        for (auto& op : combined)
            out.push_back(ElementaryFactor::single_entry(n, op.i, op.j, std::move(op.value)));
        return out;
    }

private:
    RingMatrix w_;
    std::vector<ShearOp> ops_;
};

void clear_upper_unitriangular(ShearRecorder& rec, size_t n) {
    for (size_t j = 1; j < n; ++j)
        for (size_t i = 0; i < j; ++i)
            if (!rec.at(i, j).is_zero()) rec.apply(i, j, -rec.at(i, j));
}

// Strict Euclidean-size order; quotient of a by b is nonzero whenever
// !euclid_less(a, b) and both are nonzero.
bool euclid_less(const RingElement& a, const RingElement& b) {
    if (a.kind() == RingKind::Integer)
        return abs(a.int_value()) < abs(b.int_value());
    return poly_degree(a) < poly_degree(b);
}

RingElement euclidean_quotient(const RingElement& a, const RingElement& b) {
    if (a.kind() == RingKind::Integer) return RingElement::integer(a.int_value() / b.int_value());
    return poly_divmod(a, b).first;
}

} // namespace

FactorizationCertificate factor_field_gauss(const RingMatrix& x) {
    const auto& desc = x.descriptor();
    if (!desc.is_field()) fail(Errc::NotAField, desc.to_string() + " is not a field");
    require_sl(x);
    const size_t n = x.dim();
    if (x.is_identity()) return {x, {}, "gauss"};

    ShearRecorder rec(x);
    const RingElement one = RingElement::one(desc);
    for (size_t k = 0; k < n; ++k) {
        if (!rec.at(k, k).is_one()) {
            size_t helper = n; // row used to fix the pivot
            for (size_t r = k + 1; r < n; ++r)
                if (!rec.at(r, k).is_zero()) {
                    helper = r;
                    break;
                }
            if (helper == n) {
                if (rec.at(k, k).is_zero())
                    fail(Errc::InternalInvariantViolation, "singular column in SL matrix");
                if (k + 1 == n)
                    fail(Errc::InternalInvariantViolation, "last pivot of an SL matrix must be 1");
                rec.apply(k + 1, k, one);
                helper = k + 1;
            }
            RingElement c = (one - rec.at(k, k)) * invert_unit(rec.at(helper, k));
            rec.apply(k, helper, c);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            if (!rec.at(i, k).is_zero()) rec.apply(i, k, -rec.at(i, k));
        }
    }
    if (!rec.current().is_identity())
        fail(Errc::InternalInvariantViolation, "elimination did not reach the identity");
    return {x, rec.emit(n), "gauss"};
}

FactorizationCertificate factor_euclidean(const RingMatrix& x) {
    const auto& desc = x.descriptor();
    if (desc.kind() != RingKind::Integer && desc.kind() != RingKind::Poly)
        fail(Errc::UnsupportedRing, "Euclidean elimination needs Z or a polynomial ring");
    require_sl(x);
    const size_t n = x.dim();
    if (x.is_identity()) return {x, {}, "euclid"};

    ShearRecorder rec(x);
    const RingElement one = RingElement::one(desc);
    for (size_t k = 0; k + 1 < n; ++k) {
        for (;;) {
            std::vector<size_t> nonzero;
            for (size_t i = k; i < n; ++i)
                if (!rec.at(i, k).is_zero()) nonzero.push_back(i);
            if (nonzero.empty())
                fail(Errc::InternalInvariantViolation, "zero column in SL matrix");
            if (nonzero.size() == 1) {
                size_t i0 = nonzero[0];
                RingElement g = rec.at(i0, k);
                if (g.is_one() && i0 == k) break;
                if (!is_unit(g))
                    fail(Errc::InternalInvariantViolation, "column gcd is not a unit");
                RingElement g_inv = invert_unit(g);
                if (i0 == k) {
                    rec.apply(k + 1, k, one);
                    rec.apply(k, k + 1, (one - g) * g_inv);
                    rec.apply(k + 1, k, -g);
                } else {
                    rec.apply(k, i0, g_inv * (one - rec.at(k, k)));
                    rec.apply(i0, k, -g);
                }
                break;
            }
            size_t p = nonzero[0];
            for (size_t i : nonzero)
                if (euclid_less(rec.at(i, k), rec.at(p, k))) p = i;
            for (size_t i : nonzero) {
                if (i == p) continue;
                RingElement q = euclidean_quotient(rec.at(i, k), rec.at(p, k));
                if (!q.is_zero()) rec.apply(i, p, -q);
            }
        }
    }
    if (!rec.at(n - 1, n - 1).is_one())
        fail(Errc::InternalInvariantViolation, "trailing corner is not 1");
    clear_upper_unitriangular(rec, n);
    if (!rec.current().is_identity())
        fail(Errc::InternalInvariantViolation, "elimination did not reach the identity");
    return {x, rec.emit(n), "euclid"};
}

} // namespace ringfactor
