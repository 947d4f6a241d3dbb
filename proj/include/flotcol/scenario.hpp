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

#ifndef FLOTCOL_SCENARIO_HPP_
#define FLOTCOL_SCENARIO_HPP_

#include <vector>

#include <Eigen/Core>

#include "flotcol/column.hpp"
#include "flotcol/constitutive.hpp"
#include "flotcol/scheme.hpp"

namespace flotcol
{

/// Controls held constant from t_start until the next entry.
struct ScheduleEntry
{
  double t_start = 0.0;
  OperatingPoint op;

  bool operator==(const ScheduleEntry &) const = default;
};

struct InitialState
{
  bool water = true;
  Eigen::VectorXd phi;  // N cell averages when water is false
  Eigen::VectorXd psi;
};

struct Scenario
{
  ColumnGeometry geometry;
  ConstitutiveParams params = default_constitutive_params();
  std::vector<ScheduleEntry> schedule;
  InitialState initial_state;
  int N = 800;
  double T_end = 0.0;
  double output_every = 0.0;
  double safety = 0.95;  // fraction of the CFL bound used as time step
};

/// Throws InvalidSchedule (or GridTooCoarse) when the scenario is unusable.
void validate(const Scenario & scenario);

/// Controls averaged over [t0, t1] for a piecewise-constant schedule.
OperatingPoint average_controls(const std::vector<ScheduleEntry> & schedule, double t0, double t1);

struct OutletSample
{
  double t = 0.0;
  Outlets values;
  double mass_residual_phi = 0.0;
  double mass_residual_psi = 0.0;
};

/// Fixed-step time marching of a scenario.
class Simulator
{
public:
  explicit Simulator(const Scenario & scenario);

  OutletSample step();

  const Grid & grid() const {return grid_;}
  const State & state() const {return state_;}
  const CflData & cfl() const {return cfl_;}
  double dt() const {return dt_;}
  long long steps() const {return steps_;}

private:
  Scenario scenario_;
  Grid grid_;
  CflData cfl_;
  double dt_ = 0.0;
  State state_;
  long long steps_ = 0;
};

struct TimeSeries
{
  Eigen::VectorXd z;  // cell centres
  double dt = 0.0;
  CflData cfl;
  std::vector<double> times;
  std::vector<Eigen::VectorXd> phi;
  std::vector<Eigen::VectorXd> psi;
  std::vector<OutletSample> outlets;
};

/// Runs the scenario to T_end, keeping floor(T_end/output_every)+1
/// snapshots and one outlet sample per step.
TimeSeries run(const Scenario & scenario);

}  // namespace flotcol

#endif  // FLOTCOL_SCENARIO_HPP_
