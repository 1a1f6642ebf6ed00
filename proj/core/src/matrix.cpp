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

#include "ringfactor/matrix.hpp"

#include <sstream>

namespace ringfactor {

RingMatrix RingMatrix::identity(size_t n, const RingDescriptor& desc) {
    RingMatrix m(n, desc);
    for (size_t i = 0; i < n; ++i) m.set(i, i, RingElement::one(desc));
    return m;
}

void RingMatrix::set(size_t i, size_t j, RingElement value) {
    if (value.descriptor() != desc_)
        fail(Errc::DescriptorMismatch, "matrix entry in " + value.descriptor().to_string() +
                                           ", matrix over " + desc_.to_string());
    entries_[i * n_ + j] = std::move(value);
}

bool RingMatrix::is_identity() const {
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool RingMatrix::operator==(const RingMatrix& other) const {
    if (n_ != other.n_ || desc_ != other.desc_) return false;
    for (size_t k = 0; k < entries_.size(); ++k)
        if (!(entries_[k] == other.entries_[k])) return false;
    return true;
}

namespace {

void require_compatible(const RingMatrix& a, const RingMatrix& b) {
    if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "matrix dimensions differ");
    if (a.descriptor() != b.descriptor())
        fail(Errc::DescriptorMismatch, "matrices over different rings");
}

} // namespace

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    require_compatible(a, b);
    const size_t n = a.dim();
    RingMatrix out(n, a.descriptor());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            RingElement acc = RingElement::zero(a.descriptor());
            for (size_t k = 0; k < n; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                acc = acc + a.at(i, k) * b.at(k, j);
            }
            out.set(i, j, std::move(acc));
        }
    return out;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
    require_compatible(a, b);
    RingMatrix out(a.dim(), a.descriptor());
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
    return out;
}

RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
    require_compatible(a, b);
    RingMatrix out(a.dim(), a.descriptor());
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) out.set(i, j, a.at(i, j) - b.at(i, j));
    return out;
}

RingMatrix RingMatrix::scaled(const RingElement& s) const {
    RingMatrix out(n_, desc_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) out.set(i, j, s * at(i, j));
    return out;
}

namespace {

RingElement det_recursive(const RingMatrix& a, std::vector<size_t>& cols, size_t row) {
    const auto& desc = a.descriptor();
    if (cols.size() == 1) return a.at(row, cols[0]);
    RingElement acc = RingElement::zero(desc);
    for (size_t k = 0; k < cols.size(); ++k) {
        const RingElement& pivot = a.at(row, cols[k]);
        if (pivot.is_zero()) continue;
        size_t col = cols[k];
        cols.erase(cols.begin() + static_cast<long>(k));
        RingElement minor = det_recursive(a, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(k), col);
        RingElement term = pivot * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

RingElement det(const RingMatrix& a) {
    if (a.dim() > 8)
        fail(Errc::DimensionTooLarge, "cofactor determinant limited to n <= 8");
    std::vector<size_t> cols(a.dim());
    for (size_t j = 0; j < a.dim(); ++j) cols[j] = j;
    return det_recursive(a, cols, 0);
}

// ---------------------------------------------------------------------------
// Elementary factors

ElementaryFactor ElementaryFactor::single_entry(size_t n, size_t i, size_t j, RingElement value) {
    if (i == j || i >= n || j >= n)
        fail(Errc::DimensionMismatch, "single-entry factor needs off-diagonal position");
    RingMatrix m = RingMatrix::identity(n, value.descriptor());
    m.set(i, j, std::move(value));
    return ElementaryFactor(FactorKind::SingleEntry, std::move(m), i, j);
}

namespace {

bool unitriangular(const RingMatrix& m, bool upper) {
    for (size_t i = 0; i < m.dim(); ++i) {
        if (!m.at(i, i).is_one()) return false;
        for (size_t j = 0; j < m.dim(); ++j) {
            if (i == j) continue;
            const bool below = i > j;
            if ((upper && below && !m.at(i, j).is_zero()) ||
                (!upper && !below && !m.at(i, j).is_zero()))
                return false;
        }
    }
    return true;
}

} // namespace

ElementaryFactor ElementaryFactor::unipotent_upper(RingMatrix m) {
    if (!unitriangular(m, true))
        fail(Errc::NotUnipotent, "matrix is not unipotent upper triangular");
    return ElementaryFactor(FactorKind::UnipotentUpper, std::move(m), 0, 0);
}

ElementaryFactor ElementaryFactor::unipotent_lower(RingMatrix m) {
    if (!unitriangular(m, false))
        fail(Errc::NotUnipotent, "matrix is not unipotent lower triangular");
    return ElementaryFactor(FactorKind::UnipotentLower, std::move(m), 0, 0);
}

bool ElementaryFactor::is_unitriangular() const {
    switch (kind_) {
        case FactorKind::SingleEntry: return unitriangular(matrix_, i_ < j_);
        case FactorKind::UnipotentUpper: return unitriangular(matrix_, true);
        case FactorKind::UnipotentLower: return unitriangular(matrix_, false);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Verification

VerificationReport verify_factorization(const FactorizationCertificate& cert) {
    VerificationReport report;
    report.factor_count = cert.factors.size();
    report.factor_unitriangular.reserve(cert.factors.size());
    bool all_unitriangular = true;
    for (const auto& f : cert.factors) {
        bool ok = f.is_unitriangular();
        report.factor_unitriangular.push_back(ok);
        all_unitriangular = all_unitriangular && ok;
    }

    RingMatrix prod = RingMatrix::identity(cert.target.dim(), cert.target.descriptor());
    for (const auto& f : cert.factors) prod = prod * f.matrix();

    report.product_matches = true;
    for (size_t i = 0; i < cert.target.dim() && report.product_matches; ++i)
        for (size_t j = 0; j < cert.target.dim(); ++j) {
            if (!(prod.at(i, j) == cert.target.at(i, j))) {
                report.product_matches = false;
                report.first_mismatch = {i + 1, j + 1};
                break;
            }
        }
    report.pass = report.product_matches && all_unitriangular;
    return report;
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL") << ": " << factor_count << " factor(s)";
    if (!product_matches && first_mismatch)
        out << ", product differs from target first at entry (" << first_mismatch->first << ","
            << first_mismatch->second << ")";
    size_t bad = 0;
    for (bool ok : factor_unitriangular)
        if (!ok) ++bad;
    if (bad) out << ", " << bad << " factor(s) not unitriangular";
    return out.str();
}

} // namespace ringfactor
