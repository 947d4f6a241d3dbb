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

#include "flotcol/chart.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>
#include <unordered_map>
#include <utility>

#include "flotcol/errors.hpp"

namespace flotcol
{

namespace
{

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ChartCell evaluate_cell(const ChartSpec & spec, int i, int j)
{
  ChartCell cell;
  cell.Q_U = spec.Q_U(i);
  cell.Q_F = spec.Q_F(j);
  const OperatingPoint op{cell.Q_U, cell.Q_F, spec.Q_W, spec.phi_F, spec.psi_F};
  try {
    cell.report = check_conditions(op, spec.params, spec.geometry);
  } catch (const Error & e) {
    cell.admissible = false;
    FeasibilityReport & r = cell.report;
    r.phi_E = kNaN;
    r.margin_fib = r.margin_fias = r.margin_froth1 = kNaN;
    r.margin_froth1_lower = r.margin_froth1_upper = kNaN;
    r.margin_froth2 = r.margin_froth3 = kNaN;
    r.notes.emplace_back(std::string(e.name()) + ": " + e.what());
    cell.z_fr = kNaN;
    return cell;
  }
  switch (cell.report.froth_status) {
    case FrothStatus::InColumn:
      cell.z_fr = *cell.report.z_fr;
      break;
    case FrothStatus::NoFroth:
      cell.z_fr = kInf;
      break;
    case FrothStatus::FillsColumn:
      cell.z_fr = -kInf;
      break;
  }
  return cell;
}

// Edge of the nodal lattice: node (r, c) plus direction (0 along x, 1 along y).
using EdgeKey = long long;

struct Segment
{
  EdgeKey a;
  EdgeKey b;
};

}  // namespace

double ChartSpec::Q_U(int i) const
{
  return qU_range[0] + (qU_range[1] - qU_range[0]) * i / (nU - 1);
}

double ChartSpec::Q_F(int j) const
{
  return qF_range[0] + (qF_range[1] - qF_range[0]) * j / (nF - 1);
}

void validate(const ChartSpec & spec)
{
  if (spec.nU < 2 || spec.nF < 2) {
    throw Error(ErrorCode::InvalidChartSpec, "grid resolution must be at least 2 x 2");
  }
  for (const auto & r : {spec.qU_range, spec.qF_range}) {
    if (!std::isfinite(r[0]) || !std::isfinite(r[1]) || !(r[1] > r[0]) || r[0] < 0.0) {
      throw Error(ErrorCode::InvalidChartSpec, "flow ranges must be nonnegative with positive length");
    }
  }
  if (!(spec.Q_W >= 0.0) || !(spec.phi_F >= 0.0) || !(spec.psi_F >= 0.0) ||
    !(spec.phi_F + spec.psi_F <= 1.0))
  {
    throw Error(ErrorCode::InvalidChartSpec, "invalid fixed wash-water flow or feed fractions");
  }
  validate(spec.geometry);
  validate(spec.params);
}

int chart_threads()
{
  if (const char * env = std::getenv("FLOTCOL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) {
      return n;
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Polyline> zero_contours(const Eigen::MatrixXd & field,
  const Eigen::VectorXd & x, const Eigen::VectorXd & y)
{
  const long long ny = field.rows();
  const long long nx = field.cols();
  const auto key = [nx](long long r, long long c, int dir) {return 2 * (r * nx + c) + dir;};
  const auto inside = [](double v) {return v >= 0.0;};

  // crossing point on an edge, interpolated from its lower-index node
  const auto point = [&](EdgeKey k) {
      const int dir = static_cast<int>(k % 2);
      const long long node = k / 2;
      const long long r = node / nx;
      const long long c = node % nx;
      const long long r1 = dir == 1 ? r + 1 : r;
      const long long c1 = dir == 0 ? c + 1 : c;
      const double v0 = field(r, c);
      const double v1 = field(r1, c1);
      const double t = v0 / (v0 - v1);
      return std::array<double, 2>{x[c] + t * (x[c1] - x[c]), y[r] + t * (y[r1] - y[r])};
    };

  std::vector<Segment> segments;
  for (long long r = 0; r + 1 < ny; ++r) {
    for (long long c = 0; c + 1 < nx; ++c) {
      // corners counter-clockwise from bottom-left
      const double v[4] = {field(r, c), field(r, c + 1), field(r + 1, c + 1), field(r + 1, c)};
      if (std::any_of(std::begin(v), std::end(v), [](double a) {return std::isnan(a);})) {
        continue;
      }
      // edges: bottom, right, top, left; edge e joins corners e and e+1
      const EdgeKey edge[4] = {key(r, c, 0), key(r, c + 1, 1), key(r + 1, c, 0), key(r, c, 1)};
      bool crossed[4];
      int count = 0;
      for (int e = 0; e < 4; ++e) {
        crossed[e] = inside(v[e]) != inside(v[(e + 1) % 4]);
        count += crossed[e] ? 1 : 0;
      }
      if (count == 2) {
        EdgeKey ends[2];
        int n = 0;
        for (int e = 0; e < 4; ++e) {
          if (crossed[e]) {
            ends[n++] = edge[e];
          }
        }
        segments.push_back({ends[0], ends[1]});
      } else if (count == 4) {
        // saddle: separate the corners that differ from the centre value
        const bool centre = inside(0.25 * (v[0] + v[1] + v[2] + v[3]));
        for (int corner = 0; corner < 4; ++corner) {
          if (inside(v[corner]) != centre) {
            segments.push_back({edge[(corner + 3) % 4], edge[corner]});
          }
        }
      }
    }
  }

  std::unordered_map<EdgeKey, std::vector<std::size_t>> touching;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    touching[segments[s].a].push_back(s);
    touching[segments[s].b].push_back(s);
  }
  std::vector<bool> used(segments.size(), false);
  std::vector<Polyline> lines;

  const auto trace = [&](std::size_t first, EdgeKey start) {
      Polyline line{point(start)};
      EdgeKey at = start;
      std::size_t seg = first;
      while (true) {
        used[seg] = true;
        const EdgeKey next = segments[seg].a == at ? segments[seg].b : segments[seg].a;
        line.push_back(point(next));
        at = next;
        std::size_t follow = segments.size();
        for (std::size_t cand : touching[at]) {
          if (!used[cand]) {
            follow = cand;
            break;
          }
        }
        if (follow == segments.size()) {
          break;
        }
        seg = follow;
      }
      lines.push_back(std::move(line));
    };

  // open lines start at edges touched once; the rest are closed loops
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (used[s]) {
      continue;
    }
    for (EdgeKey end : {segments[s].a, segments[s].b}) {
      if (touching[end].size() == 1) {
        trace(s, end);
        break;
      }
    }
  }
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (!used[s]) {
      trace(s, segments[s].a);
    }
  }
  return lines;
}

ChartResult evaluate_chart(const ChartSpec & spec, int threads)
{
  validate(spec);
  ChartResult result;
  result.spec = spec;
  result.cells.resize(static_cast<std::size_t>(spec.nU) * spec.nF);

  const int workers = std::clamp(threads > 0 ? threads : chart_threads(), 1, spec.nF);
  std::atomic<int> next_row{0};
  const auto work = [&]() {
      for (int j = next_row++; j < spec.nF; j = next_row++) {
        for (int i = 0; i < spec.nU; ++i) {
          result.cells[static_cast<std::size_t>(j * spec.nU + i)] = evaluate_cell(spec, i, j);
        }
      }
    };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
    for (auto & t : pool) {
      t.join();
    }
  }

  Eigen::VectorXd x(spec.nU);
  Eigen::VectorXd y(spec.nF);
  for (int i = 0; i < spec.nU; ++i) {
    x[i] = spec.Q_U(i);
  }
  for (int j = 0; j < spec.nF; ++j) {
    y[j] = spec.Q_F(j);
  }
  const std::pair<const char *, double FeasibilityReport::*> margins[] = {
    {"fib", &FeasibilityReport::margin_fib},
    {"fias", &FeasibilityReport::margin_fias},
    {"froth1_lower", &FeasibilityReport::margin_froth1_lower},
    {"froth1_upper", &FeasibilityReport::margin_froth1_upper},
    {"froth2", &FeasibilityReport::margin_froth2},
    {"froth3", &FeasibilityReport::margin_froth3},
  };
  for (const auto & [name, member] : margins) {
    Eigen::MatrixXd field(spec.nF, spec.nU);
    for (int j = 0; j < spec.nF; ++j) {
      for (int i = 0; i < spec.nU; ++i) {
        field(j, i) = result.at(i, j).report.*member;
      }
    }
    result.boundaries.push_back({name, zero_contours(field, x, y)});
  }
  return result;
}

}  // namespace flotcol
