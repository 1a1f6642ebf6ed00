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

#ifndef RINGFACTOR_EXPONENTIAL_HPP
#define RINGFACTOR_EXPONENTIAL_HPP

#include "ringfactor/matrix.hpp"

namespace ringfactor {

/// exp(G_1) ... exp(G_k) = target, exactly (every log is nilpotent, so the
/// exponentials are terminating sums).
struct ExpCertificate {
    RingMatrix target;
    std::vector<RingMatrix> logs;
};

/// Terminating log of a unipotent upper or lower triangular matrix;
/// exp(result) = U exactly.
RingMatrix unipotent_log(const RingMatrix& u);

/// Terminating exp of a strictly triangular matrix.
RingMatrix nilpotent_exp(const RingMatrix& g);

/// Terminating exp of an arbitrary nilpotent matrix (e.g. nilpotent scalar
/// plus strictly triangular); NotNilpotent when no power vanishes.
RingMatrix matrix_exp_nilpotent(const RingMatrix& m);

/// Factor X into unipotent triangulars and take logs, one per factor.
ExpCertificate sl_to_exponentials(const RingMatrix& x);

/// Determinant absorption: det X = f^n with f = exp(log(det X)/n); the
/// scalar log of f is folded into the first factor's log.
ExpCertificate gl_to_exponentials(const RingMatrix& x);

/// True iff every log has the expected shape (equal diagonal plus strictly
/// triangular part on one side).
bool exp_certificate_shape_ok(const ExpCertificate& cert);

/// Exact replay: multiplies the terminating exponentials back together.
bool replay_exp_certificate(const ExpCertificate& cert);

} // namespace ringfactor

#endif
