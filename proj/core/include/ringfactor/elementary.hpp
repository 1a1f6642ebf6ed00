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

#ifndef RINGFACTOR_ELEMENTARY_HPP
#define RINGFACTOR_ELEMENTARY_HPP

#include "ringfactor/matrix.hpp"

namespace ringfactor {

/// Rank-one-reduction elimination for 2x2 matrices of determinant one over a
/// ring with the reduction oracle; at most 4 unipotent triangular factors.
FactorizationCertificate factor_bsr1_sl2(const RingMatrix& x);

/// General elimination, n >= 2: column reduction via Bezout coefficients and
/// the rank-one oracle, recursing on the trailing block; adjacent factors of
/// one orientation are merged, so at most 2n factors remain.
FactorizationCertificate factor_bsr1_sln(const RingMatrix& x);

/// Gaussian elimination over a field into single-entry shears, swap-free
/// (pivots are created by adding rows). Baseline for cross-checks.
FactorizationCertificate factor_field_gauss(const RingMatrix& x);

/// Division-with-remainder elimination over Z or base[z] into single-entry
/// shears; covers Euclidean rings where the rank-one oracle is unavailable.
FactorizationCertificate factor_euclidean(const RingMatrix& x);

} // namespace ringfactor

#endif
