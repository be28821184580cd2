// Copyright 2026 The niqp Authors
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

#ifndef NIQP_ERRORS_H
#define NIQP_ERRORS_H

#include <stdexcept>

namespace niqp {

// Invalid input (bad circuit, out-of-range parameter) is reported with
// std::invalid_argument / std::domain_error. The two types below mark the
// failure modes the CLI maps onto dedicated exit codes.

/// A connected component would need more statevector qubits than allowed.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested operation needs a depth above a percolation threshold
/// (positive c_{p,k}(d), or d >= d_c) and the circuit does not have it.
struct ThresholdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace niqp

#endif  // NIQP_ERRORS_H
