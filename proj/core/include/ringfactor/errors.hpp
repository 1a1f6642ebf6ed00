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

#ifndef RINGFACTOR_ERRORS_HPP
#define RINGFACTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ringfactor {

enum class Errc {
    InvalidDescriptor,
    DescriptorMismatch,
    DimensionMismatch,
    DimensionTooLarge,
    NotAUnit,
    NotUnimodular,
    UnsupportedRing,
    OracleUnavailable,
    CertificateInvalid,
    NotPrincipalUnit,
    RingWithoutRationals,
    NotSL,
    NotAField,
    NotUnipotent,
    NotNilpotent,
    NotInvertible,
    InternalInvariantViolation,
    UnannotatedPole,
    PoleAtBase,
    VanishingConstantTerm,
    DuplicateBasePoints,
    NonConvergence,
    NotDoubleEigenvalue,
    EigenvectorDegenerate,
    RootFindingFailed,
    JetDivisionFailed,
    ParseError,
};

const char* errc_name(Errc code) noexcept;

/// All recoverable failures are reported through this exception type; the
/// code makes failures assertable in tests without string matching.
class RingError : public std::runtime_error {
public:
    RingError(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw RingError(code, message);
}

} // namespace ringfactor

#endif
