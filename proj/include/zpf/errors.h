// Copyright 2026 The zpf Authors
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

#ifndef ZPF_ERRORS_H
#define ZPF_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zpf {

/// Raised when a physical or numerical precondition of a library operation
/// is violated (non-positive constants, level above the evaluation cap,
/// mismatched vector lengths, ...). The CLI maps it to exit code 3.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mode whose occupation lies below its frame offset, so the shifted
/// observable has no eigenvalue for it.
struct OutOfSupportError : DomainError {
    size_t mode_index;
    OutOfSupportError(size_t mode_index, const std::string &message)
        : DomainError(message), mode_index(mode_index) {
    }
};

/// Every candidate density evaluated to zero at one sample.
struct DensityUnderflowError : DomainError {
    size_t sample_index;
    DensityUnderflowError(size_t sample_index, const std::string &message)
        : DomainError(message), sample_index(sample_index) {
    }
};

/// Malformed user input (config files, CLI values). The CLI maps it to exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace zpf

#endif
