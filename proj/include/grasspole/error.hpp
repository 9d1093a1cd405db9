/*
   Copyright 2026 The grasspole Authors

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

#ifndef GRASSPOLE_ERROR_HPP
#define GRASSPOLE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace grasspole {

enum class ErrorCode {
    InvalidArgument,
    NonPrimeCharacteristic,
    ReducibleModulus,
    DivisionByZero,
    FieldMismatch,
    InfiniteField,
    ZeroPolynomial,
    NonSquare,
    DimensionMismatch,
    DegreeBoundExceeded,
    RankDeficient,
    ZeroVector,
    NotDecomposable,
    RankDeficientCompensator,
    NotObservable,
    DependentAtInfinity,
    SingularDenominator,
    DegreeLawViolation,
    FieldTooSmall,
    DegenerateSystem,
    UnsupportedShape,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::InfiniteField: return "InfiniteField";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DegreeBoundExceeded: return "DegreeBoundExceeded";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NotDecomposable: return "NotDecomposable";
        case ErrorCode::RankDeficientCompensator: return "RankDeficientCompensator";
        case ErrorCode::NotObservable: return "NotObservable";
        case ErrorCode::DependentAtInfinity: return "DependentAtInfinity";
        case ErrorCode::SingularDenominator: return "SingularDenominator";
        case ErrorCode::DegreeLawViolation: return "DegreeLawViolation";
        case ErrorCode::FieldTooSmall: return "FieldTooSmall";
        case ErrorCode::DegenerateSystem: return "DegenerateSystem";
        case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace grasspole

#endif  // GRASSPOLE_ERROR_HPP
