// Copyright 2026 The isi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Simplex-kernel coefficients in the trigonometric system on [t, T]:
// index 0 is the constant, 2r-1 the r-th sine and 2r the r-th cosine, each
// normalized in L2. Values are real, so they are returned as doubles.

#ifndef ISI_TRIG_HPP_
#define ISI_TRIG_HPP_

#include "isi/coefficients.hpp"

namespace isi {

// Coefficient on the unit interval with weights u^l (no sign, no dt).
// Evaluated in closed form by integrating polynomial-times-exponential
// terms, so the only error is double rounding.
double trig_unit_coeff(const KernelSpec& spec, const MultiIndex& j);

// Coefficient on [t, t+dt]: (-1)^{sum l} dt^{sum l + k/2} times the unit value.
double trig_coeff(const KernelSpec& spec, const MultiIndex& j, double dt);

// Same quantity by nested adaptive Gauss-Kronrod quadrature. Supports k <= 3.
// Throws ConvergenceError when the estimated absolute error on the unit
// interval exceeds tol.
double trig_coeff_quadrature(const KernelSpec& spec, const MultiIndex& j,
                             double dt, double tol = 1e-10);

// Full table with indices 0..extent-1 per dimension. Throws
// ResourceLimitError past options.max_entries.
ScaledTensor trig_tensor(const KernelSpec& spec, unsigned extent, double dt,
                         const TensorOptions& options = {});

}  // namespace isi

#endif  // ISI_TRIG_HPP_
