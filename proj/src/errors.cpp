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

#include "flotcol/errors.hpp"

namespace flotcol
{

std::string_view error_name(ErrorCode code)
{
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::HindranceExponentTooSmall: return "HindranceExponentTooSmall";
    case ErrorCode::IncompatibleParameters: return "IncompatibleParameters";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::InvalidOperatingPoint: return "InvalidOperatingPoint";
    case ErrorCode::NonPositiveEffluentFlow: return "NonPositiveEffluentFlow";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::FrothConditionViolated: return "FrothConditionViolated";
    case ErrorCode::PhiEOutOfRange: return "PhiEOutOfRange";
    case ErrorCode::SolidsOverload: return "SolidsOverload";
    case ErrorCode::ZeroUnderflow: return "ZeroUnderflow";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CflViolation: return "CflViolation";
    case ErrorCode::InvalidSchedule: return "InvalidSchedule";
    case ErrorCode::InvalidChartSpec: return "InvalidChartSpec";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

bool is_validation_error(ErrorCode code)
{
  switch (code) {
    case ErrorCode::NoRoot:
    case ErrorCode::FrothConditionViolated:
    case ErrorCode::PhiEOutOfRange:
    case ErrorCode::SolidsOverload:
    case ErrorCode::ZeroUnderflow:
    case ErrorCode::Infeasible:
    case ErrorCode::CflViolation:
    case ErrorCode::QuadratureFailure:
      return false;
    default:
      return true;
  }
}

}  // namespace flotcol
