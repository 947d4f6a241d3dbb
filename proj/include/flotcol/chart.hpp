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

#ifndef FLOTCOL_CHART_HPP_
#define FLOTCOL_CHART_HPP_

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "flotcol/column.hpp"
#include "flotcol/constitutive.hpp"
#include "flotcol/steady_state.hpp"

namespace flotcol
{

/// Grid of operating points over (Q_U, Q_F) at fixed Q_W, phi_F, psi_F.
struct ChartSpec
{
  std::array<double, 2> qU_range{0.0, 0.0};  // [m^3/s]
  std::array<double, 2> qF_range{0.0, 0.0};  // [m^3/s]
  int nU = 2;
  int nF = 2;
  double Q_W = 0.0;
  double phi_F = 0.0;
  double psi_F = 0.0;
  ColumnGeometry geometry;
  ConstitutiveParams params = default_constitutive_params();

  double Q_U(int i) const;
  double Q_F(int j) const;
};

void validate(const ChartSpec & spec);

struct ChartCell
{
  double Q_U = 0.0;
  double Q_F = 0.0;
  FeasibilityReport report;
  // interface height; +inf when no froth forms, -inf when froth fills
  // the column, NaN when the point itself is inadmissible
  double z_fr = 0.0;
  bool admissible = true;
};

using Polyline = std::vector<std::array<double, 2>>;

/// Condition whose zero-margin boundary is traced.
struct ConditionBoundary
{
  std::string name;
  std::vector<Polyline> lines;
};

struct ChartResult
{
  ChartSpec spec;
  std::vector<ChartCell> cells;  // index j * nU + i, with i along Q_U
  std::vector<ConditionBoundary> boundaries;

  const ChartCell & at(int i, int j) const {return cells[static_cast<std::size_t>(j * spec.nU + i)];}
};

/// Worker count from FLOTCOL_THREADS, else the hardware concurrency.
int chart_threads();

/// Evaluates every grid node; threads <= 0 selects chart_threads().
/// The result does not depend on the thread count.
ChartResult evaluate_chart(const ChartSpec & spec, int threads = 0);

/// Zero level set of a nodal field (rows along y, columns along x) by
/// marching squares; squares with a NaN corner are skipped.
std::vector<Polyline> zero_contours(const Eigen::MatrixXd & field,
  const Eigen::VectorXd & x, const Eigen::VectorXd & y);

}  // namespace flotcol

#endif  // FLOTCOL_CHART_HPP_
