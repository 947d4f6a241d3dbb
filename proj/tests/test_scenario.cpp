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

#include <doctest.h>

#include <cmath>

#include "flotcol/errors.hpp"
#include "flotcol/scenario.hpp"
#include "flotcol/steady_state.hpp"

using namespace flotcol;

namespace
{

OperatingPoint diamond()
{
  return {5.85e-5, 8.846e-5, 2e-6, 0.3, 0.2};
}

Scenario base(int N = 60, double T_end = 50.0)
{
  Scenario s;
  s.schedule = {{0.0, diamond()}};
  s.N = N;
  s.T_end = T_end;
  s.output_every = 10.0;
  return s;
}

ErrorCode code_of(auto && fn)
{
  try {
    fn();
  } catch (const Error & e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::DomainError;
}

}  // namespace

TEST_CASE("scenario validation")
{
  CHECK_NOTHROW(validate(base()));

  auto s = base();
  s.schedule.clear();
  CHECK(code_of([&] {validate(s);}) == ErrorCode::InvalidSchedule);

  s = base();
  s.schedule[0].t_start = 1.0;
  CHECK(code_of([&] {validate(s);}) == ErrorCode::InvalidSchedule);

  s = base();
  s.schedule.push_back({0.0, diamond()});
  CHECK(code_of([&] {validate(s);}) == ErrorCode::InvalidSchedule);

  s = base();
  s.schedule[0].op.Q_U = 1.0;
  CHECK(code_of([&] {validate(s);}) == ErrorCode::InvalidSchedule);

  s = base();
  s.schedule[0].op.psi_F = 0.8;
  CHECK(code_of([&] {validate(s);}) == ErrorCode::InvalidSchedule);

  s = base();
  s.T_end = 0.0;
  CHECK(code_of([&] {validate(s);}) == ErrorCode::InvalidSchedule);

  s = base();
  s.N = 3;
  CHECK(code_of([&] {validate(s);}) == ErrorCode::GridTooCoarse);

  s = base();
  s.initial_state.water = false;
  s.initial_state.phi = Eigen::VectorXd::Zero(5);
  s.initial_state.psi = Eigen::VectorXd::Zero(5);
  CHECK(code_of([&] {validate(s);}) == ErrorCode::InvalidSchedule);

  s.initial_state.phi = Eigen::VectorXd::Constant(s.N, 0.6);
  s.initial_state.psi = Eigen::VectorXd::Constant(s.N, 0.6);
  CHECK(code_of([&] {validate(s);}) == ErrorCode::InvalidSchedule);
}

TEST_CASE("controls are averaged over a step")
{
  auto a = diamond();
  auto b = diamond();
  b.Q_U = 5.0e-5;
  b.phi_F = 0.1;
  const std::vector<ScheduleEntry> sched{{0.0, a}, {10.0, b}};
  CHECK(average_controls(sched, 2.0, 4.0) == a);
  CHECK(average_controls(sched, 10.0, 12.0) == b);
  const auto m = average_controls(sched, 9.0, 12.0);
  CHECK(m.Q_U == doctest::Approx((a.Q_U + 2 * b.Q_U) / 3));
  CHECK(m.phi_F == doctest::Approx((0.3 + 2 * 0.1) / 3));
  CHECK(m.Q_F == doctest::Approx(a.Q_F));
}

TEST_CASE("time step uses the largest flow of the schedule")
{
  auto s = base();
  auto big = diamond();
  big.Q_F = 1.2e-4;
  s.schedule.push_back({20.0, big});
  Simulator sim(s);
  CHECK(sim.cfl().Q_sup == doctest::Approx(big.Q_F + big.Q_W));
  CHECK(sim.dt() == doctest::Approx(0.95 * sim.cfl().dt_max).epsilon(1e-15));
}

TEST_CASE("series sizes")
{
  const auto s = base(60, 55.0);
  const auto ts = run(s);
  CHECK(ts.times.size() == 6);
  CHECK(ts.phi.size() == 6);
  CHECK(ts.psi.size() == 6);
  CHECK(ts.times.front() == 0.0);
  const auto steps = static_cast<std::size_t>(std::ceil(55.0 / ts.dt));
  CHECK(ts.outlets.size() == steps);
  CHECK(ts.outlets.back().t >= 55.0);
  for (std::size_t k = 1; k < ts.times.size(); ++k) {
    CHECK(ts.times[k] >= 10.0 * k);
    CHECK(ts.times[k] < 10.0 * k + ts.dt);
  }
  CHECK(ts.z.size() == 60);
}

TEST_CASE("runs are deterministic")
{
  const auto a = run(base(80, 30.0));
  const auto b = run(base(80, 30.0));
  REQUIRE(a.phi.size() == b.phi.size());
  for (std::size_t k = 0; k < a.phi.size(); ++k) {
    CHECK(a.phi[k] == b.phi[k]);
    CHECK(a.psi[k] == b.psi[k]);
  }
}

TEST_CASE("a later control change leaves earlier steps untouched")
{
  auto plain = base(60, 40.0);
  auto changed = plain;
  auto other = diamond();
  other.Q_U = 5.0e-5;
  changed.schedule.push_back({20.0, other});
  Simulator a(plain);
  Simulator b(changed);
  REQUIRE(a.dt() == b.dt());
  bool diverged = false;
  while (a.state().t < 40.0) {
    const double t_next = static_cast<double>(a.steps() + 1) * a.dt();
    a.step();
    b.step();
    const bool same = a.state().phi == b.state().phi && a.state().psi == b.state().psi;
    if (t_next <= 20.0) {
      CHECK(same);
    } else if (!same) {
      diverged = true;
    }
  }
  CHECK(diverged);
}

TEST_CASE("custom initial state is used")
{
  auto s = base(40, 1.0);
  s.initial_state.water = false;
  s.initial_state.phi = Eigen::VectorXd::Constant(40, 0.2);
  s.initial_state.psi = Eigen::VectorXd::Constant(40, 0.1);
  Simulator sim(s);
  CHECK(sim.state().phi[10] == 0.2);
  CHECK(sim.state().psi[10] == 0.1);
}

TEST_CASE("long run approaches the desired steady state")
{
  auto s = base(100, 30000.0);
  s.schedule[0].op = {5.9972e-5, 8.9927e-5, 2e-6, 0.3, 0.2};
  s.output_every = 30000.0;
  Simulator sim(s);
  OutletSample last;
  while (sim.state().t < s.T_end) {
    last = sim.step();
    CHECK(last.mass_residual_phi <= 1e-13);
    CHECK(last.mass_residual_psi <= 1e-13);
  }
  CHECK(last.values.phi_U <= 1e-6);
  CHECK(last.values.psi_E <= 1e-6);
  const double phiE = effluent_fraction(s.schedule[0].op);
  CHECK(std::fabs(last.values.phi_E - phiE) <= 1e-3);
}
