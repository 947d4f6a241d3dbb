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

#include "flotcol/export.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "flotcol/errors.hpp"

namespace flotcol
{

namespace
{

std::ofstream open_output(const std::string & path)
{
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  }
  return out;
}

void finish(std::ofstream & out, const std::string & path)
{
  out.flush();
  if (!out) {
    throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
  }
}

std::string svg_header(int width, int height)
{
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return s.str();
}

// z_fr in [lo, hi] mapped to a blue-to-yellow ramp
std::string ramp(double t)
{
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(40 + 215 * t));
  const int g = static_cast<int>(std::lround(60 + 170 * t));
  const int b = static_cast<int>(std::lround(200 - 160 * t));
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

bool parse_flag(const std::string & s)
{
  if (s == "1") {
    return true;
  }
  if (s == "0") {
    return false;
  }
  throw Error(ErrorCode::ParseError, "expected 0 or 1, got '" + s + "'");
}

double parse_double(const std::string & s)
{
  char * end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_number(double x)
{
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) {
      break;
    }
  }
  return buf;
}

void write_profile_csv(const SteadyProfile & profile, const std::string & path)
{
  auto out = open_output(path);
  out << "z,phi,psi\n";
  for (Eigen::Index k = 0; k < profile.z.size(); ++k) {
    out << format_number(profile.z[k]) << ',' << format_number(profile.phi[k]) << ','
        << format_number(profile.psi[k]) << '\n';
  }
  finish(out, path);
}

void write_series_csv(const TimeSeries & series, const std::string & path)
{
  auto out = open_output(path);
  out << "t,z,phi,psi\n";
  for (std::size_t s = 0; s < series.times.size(); ++s) {
    const std::string t = format_number(series.times[s]);
    for (Eigen::Index k = 0; k < series.z.size(); ++k) {
      out << t << ',' << format_number(series.z[k]) << ',' << format_number(series.phi[s][k])
          << ',' << format_number(series.psi[s][k]) << '\n';
    }
  }
  finish(out, path);
}

void write_outlets_csv(const TimeSeries & series, const std::string & path)
{
  auto out = open_output(path);
  out << "t,phi_U,phi_E,psi_U,psi_E,mass_residual_phi,mass_residual_psi\n";
  for (const auto & o : series.outlets) {
    out << format_number(o.t) << ',' << format_number(o.values.phi_U) << ','
        << format_number(o.values.phi_E) << ',' << format_number(o.values.psi_U) << ','
        << format_number(o.values.psi_E) << ',' << format_number(o.mass_residual_phi) << ','
        << format_number(o.mass_residual_psi) << '\n';
  }
  finish(out, path);
}

void write_profile_svg(const Eigen::VectorXd & z, const Eigen::VectorXd & phi,
  const Eigen::VectorXd & psi, const std::string & title, const std::string & path)
{
  constexpr int W = 480;
  constexpr int H = 560;
  constexpr int pad = 50;
  const double z_lo = z.size() ? z.minCoeff() : 0.0;
  const double z_hi = z.size() ? z.maxCoeff() : 1.0;
  const double span = z_hi > z_lo ? z_hi - z_lo : 1.0;
  const auto px = [&](double v) {return pad + v * (W - 2 * pad);};
  const auto py = [&](double h) {return H - pad - (h - z_lo) / span * (H - 2 * pad);};

  auto out = open_output(path);
  out << svg_header(W, H);
  out << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title << "</text>\n";
  out << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << W - 2 * pad
      << "\" height=\"" << H - 2 * pad << "\" fill=\"none\" stroke=\"black\"/>\n";
  const std::pair<const Eigen::VectorXd *, const char *> curves[] = {
    {&phi, "#1f5fbf"}, {&psi, "#c0392b"}};
  for (const auto & [values, colour] : curves) {
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (Eigen::Index k = 0; k < z.size(); ++k) {
      out << px((*values)[k]) << ',' << py(z[k]) << ' ';
    }
    out << "\"/>\n";
  }
  out << "<text x=\"" << W - pad << "\" y=\"" << H - 15 << "\" text-anchor=\"end\">"
      << "phi (blue), psi (red)</text>\n";
  out << "<text x=\"15\" y=\"" << H / 2 << "\">z</text>\n";
  out << "</svg>\n";
  finish(out, path);
}

std::vector<ChartRow> chart_rows(const ChartResult & result)
{
  std::vector<ChartRow> rows;
  rows.reserve(result.cells.size());
  for (const auto & c : result.cells) {
    const auto & r = c.report;
    rows.push_back({c.Q_U, c.Q_F, r.fib_ok, r.fias_ok, r.froth1_ok, r.froth2_ok, r.froth3_ok,
        r.feasible(), c.z_fr});
  }
  return rows;
}

void write_chart_csv(const ChartResult & result, const std::string & path)
{
  auto out = open_output(path);
  out << kChartHeader << '\n';
  for (const auto & row : chart_rows(result)) {
    out << format_number(row.Q_U) << ',' << format_number(row.Q_F) << ',' << row.fib << ','
        << row.fias << ',' << row.froth1 << ',' << row.froth2 << ',' << row.froth3 << ','
        << row.feasible << ',' << format_number(row.z_fr) << '\n';
  }
  finish(out, path);
}

std::vector<ChartRow> read_chart_csv(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line) || line != kChartHeader) {
    throw Error(ErrorCode::ParseError, "unexpected chart CSV header");
  }
  std::vector<ChartRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) {
      f.push_back(item);
    }
    if (f.size() != 9) {
      throw Error(ErrorCode::ParseError, "chart CSV row must have 9 fields");
    }
    rows.push_back({parse_double(f[0]), parse_double(f[1]), parse_flag(f[2]), parse_flag(f[3]),
        parse_flag(f[4]), parse_flag(f[5]), parse_flag(f[6]), parse_flag(f[7]),
        parse_double(f[8])});
  }
  return rows;
}

void write_chart_svg(const ChartResult & result, const std::string & path)
{
  constexpr int W = 640;
  constexpr int H = 600;
  constexpr int pad = 60;
  const ChartSpec & s = result.spec;
  const double du = (s.qU_range[1] - s.qU_range[0]) / (s.nU - 1);
  const double dF = (s.qF_range[1] - s.qF_range[0]) / (s.nF - 1);
  const double x0 = s.qU_range[0] - 0.5 * du;
  const double x1 = s.qU_range[1] + 0.5 * du;
  const double y0 = s.qF_range[0] - 0.5 * dF;
  const double y1 = s.qF_range[1] + 0.5 * dF;
  const auto px = [&](double q) {return pad + (q - x0) / (x1 - x0) * (W - 2 * pad);};
  const auto py = [&](double q) {return H - pad - (q - y0) / (y1 - y0) * (H - 2 * pad);};
  const double cw = px(x0 + du) - px(x0);
  const double ch = py(y0) - py(y0 + dF);
  const double z_lo = s.geometry.z_F;
  const double z_hi = s.geometry.z_E;

  auto out = open_output(path);
  out << svg_header(W, H);
  for (const auto & c : result.cells) {
    std::string fill = "#bdbdbd";
    if (!c.admissible) {
      fill = "#8c8c8c";
    } else if (c.report.feasible()) {
      fill = ramp((c.z_fr - z_lo) / (z_hi - z_lo));
    }
    out << "<rect x=\"" << px(c.Q_U) - 0.5 * cw << "\" y=\"" << py(c.Q_F) - 0.5 * ch
        << "\" width=\"" << cw << "\" height=\"" << ch << "\" fill=\"" << fill << "\"/>\n";
  }
  const std::map<std::string, std::string> colours = {
    {"fib", "black"}, {"fias", "#2e7d32"}, {"froth1_lower", "#c62828"},
    {"froth1_upper", "#c62828"}, {"froth2", "#6a1b9a"}, {"froth3", "#1565c0"}};
  for (const auto & b : result.boundaries) {
    const auto it = colours.find(b.name);
    const std::string colour = it == colours.end() ? "black" : it->second;
    for (const auto & line : b.lines) {
      out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
      for (const auto & p : line) {
        out << px(p[0]) << ',' << py(p[1]) << ' ';
      }
      out << "\"><title>" << b.name << "</title></polyline>\n";
    }
  }
  out << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << W - 2 * pad
      << "\" height=\"" << H - 2 * pad << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"" << H - 20 << "\" text-anchor=\"middle\">Q_U [m^3/s] "
      << format_number(s.qU_range[0]) << " .. " << format_number(s.qU_range[1]) << "</text>\n";
  out << "<text x=\"20\" y=\"" << H / 2 << "\" transform=\"rotate(-90 20 " << H / 2
      << ")\" text-anchor=\"middle\">Q_F [m^3/s] " << format_number(s.qF_range[0]) << " .. "
      << format_number(s.qF_range[1]) << "</text>\n";
  out << "</svg>\n";
  finish(out, path);
}

void export_chart(const ChartResult & result, const std::string & path)
{
  write_chart_csv(result, path);
  write_chart_svg(result, std::filesystem::path(path).replace_extension(".svg").string());
}

}  // namespace flotcol
