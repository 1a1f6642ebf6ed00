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

#ifndef RINGFACTOR_JSON_IO_HPP
#define RINGFACTOR_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "ringfactor/exponential.hpp"
#include "ringfactor/matrix.hpp"
#include "ringfactor/riemann.hpp"

namespace ringfactor::io {

using json = nlohmann::json;

// Descriptors: leaf rings serialize to bare strings ("rational", "gaussian",
// "integer", "analytic"); structured rings to tagged objects, e.g.
// {"kind":"jet","base":"rational","order":3}.
json descriptor_to_json(const RingDescriptor& desc);
RingDescriptor descriptor_from_json(const json& j);

// Elements: rationals "p/q", Gaussian rationals {"re":"p/q","im":"p/q"},
// polynomials and jets as coefficient arrays in ascending degree, product
// elements as component arrays.
json element_to_json(const RingElement& e);
RingElement element_from_json(const json& j, const RingDescriptor& desc);

// Matrices: {"ring": descriptor, "n": int, "entries": [[element,...],...]}.
json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const json& j);

// Factorization certificates; single-entry indices are 1-based.
json factorization_to_json(const FactorizationCertificate& cert);
FactorizationCertificate factorization_from_json(const json& j);

json exp_certificate_to_json(const ExpCertificate& cert);
ExpCertificate exp_certificate_from_json(const json& j);

json funcexpr_to_json(const analytic::FuncPtr& f);
analytic::FuncPtr funcexpr_from_json(const json& j);

json func_matrix_to_json(const FuncMatrix& m);
FuncMatrix func_matrix_from_json(const json& j);

json three_exp_to_json(const ThreeExpCertificate& cert);
ThreeExpCertificate three_exp_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace ringfactor::io

#endif
