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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "flotcol/chart.hpp"
#include "flotcol/errors.hpp"
#include "flotcol/export.hpp"

using namespace flotcol;

namespace
{

ChartSpec markers_spec()
{
  ChartSpec s;
  s.qU_range = {5.0e-5, 6.3e-5};
  s.qF_range = {8.84e-5, 8.846e-5};
  s.nU = 27;
  s.nF = 2;
  s.Q_W = 2e-6;
  s.phi_F = 0.3;
  s.psi_F = 0.2;
  return s;
}

ChartSpec wide_spec(int n = 41)
{
  ChartSpec s;
  s.qU_range = {0.0, 1.2e-4};
  s.qF_range = {1e-6, 1.5e-4};
  s.nU = n;
  s.nF = n;
  s.Q_W = 2e-6;
  s.phi_F = 0.3;
  s.psi_F = 0.2;
  return s;
}

std::string slurp(const std::filesystem::path & p)
{
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const ConditionBoundary & boundary(const ChartResult & r, const std::string & name)
{
  for (const auto & b : r.boundaries) {
    if (b.name == name) {
      return b;
    }
  }
  FAIL("missing boundary " << name);
  return r.boundaries.front();
}

}  // namespace

TEST_CASE("chart classifies the three markers")
{
  const auto r = evaluate_chart(markers_spec(), 1);
  const auto & diamond = r.at(17, 1);
  const auto & square = r.at(0, 1);
  const auto & circle = r.at(26, 0);
  CHECK(diamond.Q_U == doctest::Approx(5.85e-5).epsilon(1e-12));
  CHECK(diamond.report.feasible());
  CHECK(std::isfinite(diamond.z_fr));
  CHECK_FALSE(square.report.feasible());
  CHECK(square.z_fr == INFINITY);
  CHECK_FALSE(circle.report.feasible());
  CHECK(circle.z_fr == -INFINITY);
}

TEST_CASE("chart boundaries")
{
  const auto r = evaluate_chart(wide_spec(), 1);
  std::set<std::string> names;
  for (const auto & b : r.boundaries) {
    names.insert(b.name);
  }
  CHECK(names == std::set<std::string>{"fib", "fias", "froth1_lower", "froth1_upper",
      "froth2", "froth3"});

  // both wedge lines pass through the vertex (Q_W, 0)
  const double phi_c = r.spec.params.phi_c;
  const auto line_fit = [&](const std::string & name) {
      const auto & lines = boundary(r, name).lines;
      REQUIRE_FALSE(lines.empty());
      const auto & pts = lines.front();
      REQUIRE(pts.size() >= 2);
      const auto & a = pts.front();
      const auto & b = pts.back();
      const double slope = (b[0] - a[0]) / (b[1] - a[1]);  // dQ_U / dQ_F
      const double at_zero = a[0] - slope * a[1];
      return std::pair{slope, at_zero};
    };
  const auto [s_lo, v_lo] = line_fit("froth1_lower");
  const auto [s_hi, v_hi] = line_fit("froth1_upper");
  CHECK(v_lo == doctest::Approx(2e-6).epsilon(1e-6));
  CHECK(v_hi == doctest::Approx(2e-6).epsilon(1e-6));
  CHECK(s_lo == doctest::Approx(1.0 - 0.3 / phi_c).epsilon(1e-9));
  CHECK(s_hi - s_lo == doctest::Approx(0.3 * (1.0 / phi_c - 1.0)).epsilon(1e-9));
}

TEST_CASE("feasible region vanishes for strong wash water")
{
  auto s = wide_spec(31);
  s.Q_W = 1e-3;
  s.qU_range = {0.0, 1.2e-3};
  const auto r = evaluate_chart(s, 1);
  for (const auto & c : r.cells) {
    CHECK_FALSE(c.report.feasible());
  }
}

TEST_CASE("chart CSV of a two-by-two grid")
{
  auto s = wide_spec(2);
  s.qU_range = {0.0, 1e-5};
  s.qF_range = {1e-6, 2e-6};
  const auto r = evaluate_chart(s, 1);
  const auto dir = std::filesystem::temp_directory_path() / "flotcol_chart_small";
  std::filesystem::create_directories(dir);
  const auto path = dir / "chart.csv";
  write_chart_csv(r, path.string());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == kChartHeader);
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) {
      ++rows;
    }
  }
  CHECK(rows == 4);
  for (const auto & c : r.cells) {
    CHECK_FALSE(c.report.feasible());
  }
}

TEST_CASE("chart CSV round trip")
{
  const auto r = evaluate_chart(wide_spec(21), 1);
  const auto dir = std::filesystem::temp_directory_path() / "flotcol_chart_rt";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "chart.csv").string();
  export_chart(r, path);
  CHECK(std::filesystem::exists(dir / "chart.svg"));
  const auto back = read_chart_csv(path);
  const auto rows = chart_rows(r);
  REQUIRE(back.size() == rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(back[k].fib == rows[k].fib);
    CHECK(back[k].fias == rows[k].fias);
    CHECK(back[k].froth1 == rows[k].froth1);
    CHECK(back[k].froth2 == rows[k].froth2);
    CHECK(back[k].froth3 == rows[k].froth3);
    CHECK(back[k].feasible == rows[k].feasible);
    CHECK(back[k].Q_U == rows[k].Q_U);
    CHECK(back[k].Q_F == rows[k].Q_F);
    const double a = back[k].z_fr;
    const double b = rows[k].z_fr;
    CHECK(((std::isnan(a) && std::isnan(b)) || a == b));
  }
}

TEST_CASE("chart output does not depend on the thread count")
{
  const auto spec = wide_spec(33);
  const auto dir = std::filesystem::temp_directory_path() / "flotcol_chart_threads";
  std::filesystem::create_directories(dir);
  write_chart_csv(evaluate_chart(spec, 1), (dir / "one.csv").string());
  write_chart_csv(evaluate_chart(spec, 4), (dir / "four.csv").string());
  CHECK(slurp(dir / "one.csv") == slurp(dir / "four.csv"));
}

TEST_CASE("thread count from the environment")
{
  setenv("FLOTCOL_THREADS", "3", 1);
  CHECK(chart_threads() == 3);
  setenv("FLOTCOL_THREADS", "0", 1);
  CHECK(chart_threads() >= 1);
  unsetenv("FLOTCOL_THREADS");
}

TEST_CASE("chart spec validation")
{
  auto s = wide_spec();
  s.nU = 1;
  CHECK_THROWS_AS(validate(s), Error);
  s = wide_spec();
  s.qF_range = {2e-5, 1e-5};
  try {
    validate(s);
    FAIL("expected InvalidChartSpec");
  } catch (const Error & e) {
    CHECK(e.code() == ErrorCode::InvalidChartSpec);
  }
}

TEST_CASE("inadmissible points are marked")
{
  const auto r = evaluate_chart(wide_spec(21), 1);
  int bad = 0;
  for (const auto & c : r.cells) {
    if (c.Q_U >= c.Q_F + 2e-6) {
      CHECK_FALSE(c.admissible);
      CHECK(std::isnan(c.z_fr));
      ++bad;
    }
  }
  CHECK(bad > 0);
}

TEST_CASE("marching squares on a linear field")
{
  const int n = 11;
  Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(n, 0.0, 1.0);
  Eigen::VectorXd y = Eigen::VectorXd::LinSpaced(n, 0.0, 2.0);
  Eigen::MatrixXd f(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      f(j, i) = x[i] - 0.43;
    }
  }
  const auto lines = zero_contours(f, x, y);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].size() == static_cast<std::size_t>(n));
  for (const auto & p : lines[0]) {
    CHECK(p[0] == doctest::Approx(0.43).epsilon(1e-12));
  }
}

TEST_CASE("marching squares closes a circle")
{
  const int n = 41;
  Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(n, -1.0, 1.0);
  Eigen::MatrixXd f(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      f(j, i) = x[i] * x[i] + x[j] * x[j] - 0.25;
    }
  }
  const auto lines = zero_contours(f, x, x);
  REQUIRE(lines.size() == 1);
  const auto & l = lines[0];
  CHECK(l.front() == l.back());
  for (const auto & p : l) {
    CHECK(std::hypot(p[0], p[1]) == doctest::Approx(0.5).epsilon(0.01));
  }
}

TEST_CASE("marching squares skips NaN corners")
{
  Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(3, 0.0, 1.0);
  Eigen::MatrixXd f(3, 3);
  f << -1, 1, 1,
    -1, NAN, 1,
    -1, 1, 1;
  const auto lines = zero_contours(f, x, x);
  CHECK(lines.empty());
}
