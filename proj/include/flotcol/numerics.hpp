/*
 * Copyright 2026 The flotcol Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FLOTCOL_NUMERICS_HPP_
#define FLOTCOL_NUMERICS_HPP_

#include <functional>

namespace flotcol::numerics
{

/// Absolute tolerance on phi for every bracketing root-find in the library.
inline constexpr double kRootTolerance = 1e-12;

/// Bisection on [lo, hi] for a function whose sign differs at the ends
/// (a zero at either end is accepted). Works for discontinuous monotone f.
/// Throws Error(NoRoot) when the bracket is not a sign change.
double bisect(const std::function<double(double)> & f, double lo, double hi,
  double tol = kRootTolerance);

struct QuadratureResult
{
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b].
QuadratureResult integrate(const std::function<double(double)> & f, double a, double b,
  double abs_tol, double rel_tol = 0.0, int max_intervals = 4000);

/// One embedded Dormand-Prince 5(4) step for a scalar ODE y' = f(x, y).
struct RkStep
{
  double y;
  double error;
};
RkStep dormand_prince_step(const std::function<double(double, double)> & f,
  double x, double y, double h);

}  // namespace flotcol::numerics

#endif  // FLOTCOL_NUMERICS_HPP_
