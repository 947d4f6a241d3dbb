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

#include "flotcol/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "flotcol/errors.hpp"

namespace flotcol
{

namespace
{

constexpr double kBoundSlack = 1e-12;

}  // namespace

void validate(const Scenario & scenario)
{
  validate(scenario.geometry);
  validate(scenario.params);
  if (scenario.N < 4) {
    throw Error(ErrorCode::GridTooCoarse, "need at least 4 cells");
  }
  const auto & sched = scenario.schedule;
  if (sched.empty()) {
    throw Error(ErrorCode::InvalidSchedule, "schedule is empty");
  }
  if (sched.front().t_start != 0.0) {
    throw Error(ErrorCode::InvalidSchedule, "schedule must start at t = 0");
  }
  for (std::size_t j = 0; j < sched.size(); ++j) {
    if (j > 0 && !(sched[j].t_start > sched[j - 1].t_start)) {
      throw Error(ErrorCode::InvalidSchedule, "schedule times must increase strictly");
    }
    try {
      validate(sched[j].op);
    } catch (const Error & e) {
      throw Error(ErrorCode::InvalidSchedule,
              "schedule entry " + std::to_string(j) + ": " + e.what());
    }
  }
  if (!(scenario.T_end > 0.0) || !std::isfinite(scenario.T_end)) {
    throw Error(ErrorCode::InvalidSchedule, "T_end must be positive");
  }
  if (!(scenario.output_every > 0.0)) {
    throw Error(ErrorCode::InvalidSchedule, "output_every must be positive");
  }
  if (!(scenario.safety > 0.0 && scenario.safety <= 1.0)) {
    throw Error(ErrorCode::InvalidSchedule, "safety factor must lie in (0, 1]");
  }
  const auto & init = scenario.initial_state;
  if (!init.water) {
    if (init.phi.size() != scenario.N || init.psi.size() != scenario.N) {
      throw Error(ErrorCode::InvalidSchedule, "initial arrays must have N entries");
    }
    for (int k = 0; k < scenario.N; ++k) {
      const double a = init.phi[k];
      const double b = init.psi[k];
      if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0 - a + kBoundSlack)) {
        throw Error(ErrorCode::InvalidSchedule,
                "initial data must satisfy 0 <= phi <= 1 and 0 <= psi <= 1 - phi");
      }
    }
  }
}

OperatingPoint average_controls(const std::vector<ScheduleEntry> & schedule, double t0, double t1)
{
  OperatingPoint avg{0.0, 0.0, 0.0, 0.0, 0.0};
  const double span = t1 - t0;
  for (std::size_t j = 0; j < schedule.size(); ++j) {
    const double lo = std::max(t0, schedule[j].t_start);
    const double hi = j + 1 < schedule.size() ? std::min(t1, schedule[j + 1].t_start) : t1;
    if (hi <= lo) {
      continue;
    }
    const double w = (hi - lo) / span;
    if (w == 1.0) {
      return schedule[j].op;
    }
    const auto & op = schedule[j].op;
    avg.Q_U += w * op.Q_U;
    avg.Q_F += w * op.Q_F;
    avg.Q_W += w * op.Q_W;
    avg.phi_F += w * op.phi_F;
    avg.psi_F += w * op.psi_F;
  }
  return avg;
}

Simulator::Simulator(const Scenario & scenario)
: scenario_(scenario)
{
  validate(scenario_);
  grid_ = build_grid(scenario_.geometry, scenario_.N);
  double q_sup = 0.0;
  for (const auto & e : scenario_.schedule) {
    q_sup = std::max(q_sup, e.op.Q_F + e.op.Q_W);
  }
  cfl_ = cfl_dt(grid_, scenario_.params, q_sup);
  dt_ = scenario_.safety * cfl_.dt_max;
  if (scenario_.initial_state.water) {
    state_ = water_state(grid_);
  } else {
    state_ = {scenario_.initial_state.phi, scenario_.initial_state.psi, 0.0};
  }
}

OutletSample Simulator::step()
{
  const double t0 = static_cast<double>(steps_) * dt_;
  const double t1 = static_cast<double>(steps_ + 1) * dt_;
  const OperatingPoint op = average_controls(scenario_.schedule, t0, t1);
  const StepResidual r = advance(state_, grid_, op, scenario_.params, dt_);
  ++steps_;
  state_.t = t1;
  return {t1, outlets(state_, grid_), r.phi, r.psi};
}

TimeSeries run(const Scenario & scenario)
{
  Simulator sim(scenario);
  TimeSeries ts;
  const Grid & grid = sim.grid();
  ts.z.resize(grid.N);
  for (int k = 0; k < grid.N; ++k) {
    ts.z[k] = grid.cell_center(k);
  }
  ts.dt = sim.dt();
  ts.cfl = sim.cfl();

  const auto n_steps = static_cast<long long>(std::ceil(scenario.T_end / sim.dt() - 1e-9));
  const auto n_snap = static_cast<long long>(std::floor(scenario.T_end / scenario.output_every));
  ts.outlets.reserve(static_cast<std::size_t>(n_steps));

  const auto snapshot = [&]() {
      ts.times.push_back(sim.state().t);
      ts.phi.push_back(sim.state().phi);
      ts.psi.push_back(sim.state().psi);
    };
  snapshot();
  long long next = 1;
  for (long long n = 0; n < n_steps; ++n) {
    ts.outlets.push_back(sim.step());
    while (next <= n_snap &&
      sim.state().t >= static_cast<double>(next) * scenario.output_every - 1e-9 * sim.dt())
    {
      snapshot();
      ++next;
    }
  }
  // guard against rounding leaving the final snapshot untaken
  while (next <= n_snap) {
    snapshot();
    ++next;
  }
  return ts;
}

}  // namespace flotcol
