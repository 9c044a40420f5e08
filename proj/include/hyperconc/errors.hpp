// Copyright 2026 The hyperconc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERCONC_ERRORS_HPP_
#define HYPERCONC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hyperconc {

/// Failure categories. The numeric values are shared with the C API status
/// codes (see hyperconc.h), so they must stay stable.
enum class ErrorCode : int {
    kNormalization = 10,
    kModeCollision = 11,
    kUnknownMode = 12,
    kInvalidSlot = 13,
    kBasisMismatch = 14,
    kOccupancy = 15,
    kDegenerateState = 20,
    kProtocolInvariant = 21,
    kVariantMismatch = 22,
    kEmptyRecords = 23,
    kVariantMix = 24,
    kDomain = 25,
    kParse = 30,
    kIo = 31,
    kInvalidArgument = 32,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

template <ErrorCode Code>
class CodedError : public Error {
   public:
    explicit CodedError(const std::string& what) : Error(Code, what) {}
};

using NormalizationError = CodedError<ErrorCode::kNormalization>;
using ModeCollisionError = CodedError<ErrorCode::kModeCollision>;
using UnknownModeError = CodedError<ErrorCode::kUnknownMode>;
using InvalidSlotError = CodedError<ErrorCode::kInvalidSlot>;
using BasisMismatchError = CodedError<ErrorCode::kBasisMismatch>;
using OccupancyError = CodedError<ErrorCode::kOccupancy>;
using DegenerateStateError = CodedError<ErrorCode::kDegenerateState>;
using ProtocolInvariantError = CodedError<ErrorCode::kProtocolInvariant>;
using VariantMismatchError = CodedError<ErrorCode::kVariantMismatch>;
using EmptyRecordsError = CodedError<ErrorCode::kEmptyRecords>;
using VariantMixError = CodedError<ErrorCode::kVariantMix>;
using DomainError = CodedError<ErrorCode::kDomain>;
using ParseError = CodedError<ErrorCode::kParse>;
using IoError = CodedError<ErrorCode::kIo>;
using InvalidArgumentError = CodedError<ErrorCode::kInvalidArgument>;

}  // namespace hyperconc

#endif  // HYPERCONC_ERRORS_HPP_
