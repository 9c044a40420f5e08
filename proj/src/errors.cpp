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

#include "hyperconc/errors.hpp"

namespace hyperconc {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kNormalization: return "NormalizationError";
        case ErrorCode::kModeCollision: return "ModeCollisionError";
        case ErrorCode::kUnknownMode: return "UnknownModeError";
        case ErrorCode::kInvalidSlot: return "InvalidSlotError";
        case ErrorCode::kBasisMismatch: return "BasisMismatchError";
        case ErrorCode::kOccupancy: return "OccupancyError";
        case ErrorCode::kDegenerateState: return "DegenerateStateError";
        case ErrorCode::kProtocolInvariant: return "ProtocolInvariantError";
        case ErrorCode::kVariantMismatch: return "VariantMismatchError";
        case ErrorCode::kEmptyRecords: return "EmptyRecordsError";
        case ErrorCode::kVariantMix: return "VariantMixError";
        case ErrorCode::kDomain: return "DomainError";
        case ErrorCode::kParse: return "ParseError";
        case ErrorCode::kIo: return "IoError";
        case ErrorCode::kInvalidArgument: return "InvalidArgumentError";
    }
    return "UnknownError";
}

}  // namespace hyperconc
