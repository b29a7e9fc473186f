// Copyright 2026 The majorana-clifford Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace majorana {

enum class ErrorKind {
    invalid_dimension,
    length_mismatch,
    basis_mismatch,
    odd_parity,
    not_isotropic,
    dependent_rows,
    all_ones_in_span,
    out_of_span,
    index_out_of_range,
    budget_exceeded,
    unsupported,
    parse_error,
    not_orthogonal,
    not_symplectic,
};

inline const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_dimension:
            return "invalid-dimension";
        case ErrorKind::length_mismatch:
            return "length-mismatch";
        case ErrorKind::basis_mismatch:
            return "basis-mismatch";
        case ErrorKind::odd_parity:
            return "odd-parity";
        case ErrorKind::not_isotropic:
            return "not-isotropic";
        case ErrorKind::dependent_rows:
            return "dependent-rows";
        case ErrorKind::all_ones_in_span:
            return "j-in-span";
        case ErrorKind::out_of_span:
            return "out-of-span";
        case ErrorKind::index_out_of_range:
            return "index-out-of-range";
        case ErrorKind::budget_exceeded:
            return "budget-exceeded";
        case ErrorKind::unsupported:
            return "unsupported";
        case ErrorKind::parse_error:
            return "parse-error";
        case ErrorKind::not_orthogonal:
            return "not-orthogonal";
        case ErrorKind::not_symplectic:
            return "not-symplectic";
    }
    return "unknown";
}

/// Input-validation failure. Everything the library rejects on bad input
/// throws this; anything else escaping the library is an internal bug.
class Error : public std::invalid_argument {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::invalid_argument(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace majorana
