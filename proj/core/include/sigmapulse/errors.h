// Copyright 2026 The sigmapulse Authors
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

#ifndef SIGMAPULSE_ERRORS_H
#define SIGMAPULSE_ERRORS_H

#include <stdexcept>
#include <string>

namespace sigmapulse {

/// Operand shapes disagree (qubit counts, slot counts, matrix sizes).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A dense representation was requested above the configured qubit limit.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// A pulse reached a buffer that cannot absorb one of its single-qubit components.
struct UnabsorbablePulseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed user input: text words, JSON documents, configuration values.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A Kraus set or channel parameter violates complete positivity or trace preservation.
struct InvalidChannelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The optimizer was handed a cost function that returned NaN or infinity.
struct NonFiniteCostError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sigmapulse

#endif
