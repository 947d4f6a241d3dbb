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

#ifndef FLOTCOL_ERRORS_HPP_
#define FLOTCOL_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace flotcol
{

enum class ErrorCode {
  DomainError,
  NonPositiveParameter,
  HindranceExponentTooSmall,
  IncompatibleParameters,
  InvalidGeometry,
  InvalidOperatingPoint,
  NonPositiveEffluentFlow,
  NoRoot,
  FrothConditionViolated,
  PhiEOutOfRange,
  SolidsOverload,
  ZeroUnderflow,
  Infeasible,
  GridTooCoarse,
  IndexOutOfRange,
  CflViolation,
  InvalidSchedule,
  InvalidChartSpec,
  QuadratureFailure,
  ParseError,
  IoError,
};

/// Stable identifier used in machine-readable error output.
std::string_view error_name(ErrorCode code);

/// True for errors caused by bad input (CLI exit code 1); false for
/// numerical failures on valid input (exit code 2).
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string & message)
  : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }

private:
  ErrorCode code_;
};

}  // namespace flotcol

#endif  // FLOTCOL_ERRORS_HPP_
