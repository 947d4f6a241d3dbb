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

#ifndef FLOTCOL_JSON_IO_HPP_
#define FLOTCOL_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "flotcol/chart.hpp"
#include "flotcol/column.hpp"
#include "flotcol/constitutive.hpp"
#include "flotcol/scenario.hpp"
#include "flotcol/scheme.hpp"
#include "flotcol/steady_state.hpp"

namespace flotcol
{

using json = nlohmann::json;

// Field names follow the struct members; non-finite numbers are written
// as null and read back as NaN.
void to_json(json & j, const PhysicalParams & v);
void from_json(const json & j, PhysicalParams & v);
void to_json(json & j, const ConstitutiveParams & v);
void from_json(const json & j, ConstitutiveParams & v);
void to_json(json & j, const ColumnGeometry & v);
void from_json(const json & j, ColumnGeometry & v);
void to_json(json & j, const OperatingPoint & v);
void from_json(const json & j, OperatingPoint & v);
void to_json(json & j, const FeasibilityReport & v);
void from_json(const json & j, FeasibilityReport & v);
void to_json(json & j, const CflData & v);
void to_json(json & j, const ScheduleEntry & v);
void from_json(const json & j, ScheduleEntry & v);
void to_json(json & j, const ChartSpec & v);
void from_json(const json & j, ChartSpec & v);
void to_json(json & j, const Scenario & v);
void from_json(const json & j, Scenario & v);

/// Physical constants plus the velocity-law coefficients needed to derive
/// a full constitutive set. Missing keys keep the laboratory defaults.
struct PhysicalConfig
{
  PhysicalParams physical = default_physical_params();
  double v_term = 0.027;
  double n_b = 2.5;
  double phi_c = 0.74;
  double v_inf = 5e-3;
  double n_RZ = 1.5;

  ConstitutiveParams derive() const;
};
void from_json(const json & j, PhysicalConfig & v);

/// Operating point with its optional column and parameter context.
struct PointInput
{
  OperatingPoint op;
  ColumnGeometry geometry;
  ConstitutiveParams params = default_constitutive_params();
};
void from_json(const json & j, PointInput & v);

/// Reads a JSON document; throws IoError or ParseError.
json read_json_file(const std::string & path);

/// Converts with nlohmann and maps its exceptions to ParseError.
template<typename T>
T parse_as(const json & j)
{
  try {
    return j.get<T>();
  } catch (const json::exception & e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace flotcol

#endif  // FLOTCOL_JSON_IO_HPP_
