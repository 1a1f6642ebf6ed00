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

#ifndef RINGFACTOR_MATRIX_HPP
#define RINGFACTOR_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "ringfactor/ring.hpp"

namespace ringfactor {

/// Dense square matrix with entries in one ring.
class RingMatrix {
public:
    RingMatrix(size_t n, const RingDescriptor& desc)
        : n_(n), desc_(desc), entries_(n * n, RingElement::zero(desc)) {
        if (n == 0) fail(Errc::DimensionMismatch, "matrix dimension must be >= 1");
    }
    static RingMatrix identity(size_t n, const RingDescriptor& desc);

    size_t dim() const { return n_; }
    const RingDescriptor& descriptor() const { return desc_; }

    const RingElement& at(size_t i, size_t j) const { return entries_[i * n_ + j]; }
    void set(size_t i, size_t j, RingElement value);

    bool is_identity() const;
    bool operator==(const RingMatrix& other) const;
    bool operator!=(const RingMatrix& other) const { return !(*this == other); }

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
    friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
    friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b);
    /// Scalar multiple, entrywise.
    RingMatrix scaled(const RingElement& s) const;

private:
    size_t n_;
    RingDescriptor desc_;
    std::vector<RingElement> entries_;
};

/// Exact determinant by cofactor expansion, valid over any commutative ring;
/// limited to n <= 8.
RingElement det(const RingMatrix& a);

enum class FactorKind { SingleEntry, UnipotentUpper, UnipotentLower };

/// Unit-diagonal factor: either a single off-diagonal entry (a shear) or a
/// full unipotent triangular matrix.
class ElementaryFactor {
public:
    static ElementaryFactor single_entry(size_t n, size_t i, size_t j, RingElement value);
    static ElementaryFactor unipotent_upper(RingMatrix m);
    static ElementaryFactor unipotent_lower(RingMatrix m);

    FactorKind kind() const { return kind_; }
    const RingMatrix& matrix() const { return matrix_; }
    size_t row() const { return i_; }    // SingleEntry, 0-based
    size_t col() const { return j_; }    // SingleEntry, 0-based
    const RingElement& value() const { return matrix_.at(i_, j_); }

    bool is_unitriangular() const;

private:
    ElementaryFactor(FactorKind kind, RingMatrix m, size_t i, size_t j)
        : kind_(kind), matrix_(std::move(m)), i_(i), j_(j) {}

    FactorKind kind_;
    RingMatrix matrix_;
    size_t i_ = 0, j_ = 0;
};

/// Left-to-right product of `factors` equals `target`, exactly.
struct FactorizationCertificate {
    RingMatrix target;
    std::vector<ElementaryFactor> factors;
    std::string algorithm;
};

struct VerificationReport {
    bool pass = false;
    bool product_matches = false;
    size_t factor_count = 0;
    std::vector<bool> factor_unitriangular;
    std::optional<std::pair<size_t, size_t>> first_mismatch; // 1-based entry position
    std::string summary() const;
};

VerificationReport verify_factorization(const FactorizationCertificate& cert);

} // namespace ringfactor

#endif
