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

#ifndef FLOTCOL_EXPORT_HPP_
#define FLOTCOL_EXPORT_HPP_

#include <string>
#include <vector>

#include <Eigen/Core>

#include "flotcol/chart.hpp"
#include "flotcol/scenario.hpp"
#include "flotcol/steady_state.hpp"

namespace flotcol
{

/// Shortest decimal text that reads back to the same double
/// ("inf", "-inf" and "nan" for non-finite values).
std::string format_number(double x);

void write_profile_csv(const SteadyProfile & profile, const std::string & path);
void write_series_csv(const TimeSeries & series, const std::string & path);
void write_outlets_csv(const TimeSeries & series, const std::string & path);

/// Line plot of phi and psi against height.
void write_profile_svg(const Eigen::VectorXd & z, const Eigen::VectorXd & phi,
  const Eigen::VectorXd & psi, const std::string & title, const std::string & path);

/// One row of the chart CSV.
struct ChartRow
{
  double Q_U = 0.0;
  double Q_F = 0.0;
  bool fib = false;
  bool fias = false;
  bool froth1 = false;
  bool froth2 = false;
  bool froth3 = false;
  bool feasible = false;
  double z_fr = 0.0;

  bool operator==(const ChartRow &) const = default;
};

inline constexpr const char * kChartHeader = "Q_U,Q_F,fib,fias,froth1,froth2,froth3,feasible,z_fr";

std::vector<ChartRow> chart_rows(const ChartResult & result);
void write_chart_csv(const ChartResult & result, const std::string & path);
std::vector<ChartRow> read_chart_csv(const std::string & path);

/// Heatmap of z_fr over the feasible cells with the condition boundaries.
void write_chart_svg(const ChartResult & result, const std::string & path);

/// Writes the CSV to path and the SVG next to it (extension replaced).
void export_chart(const ChartResult & result, const std::string & path);

}  // namespace flotcol

#endif  // FLOTCOL_EXPORT_HPP_
