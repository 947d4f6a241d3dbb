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

#include "flotcol/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "flotcol/errors.hpp"

namespace flotcol
{

namespace
{

json number(double x)
{
  return std::isfinite(x) ? json(x) : json(nullptr);
}

double read_number(const json & j, const char * key)
{
  const json & v = j.at(key);
  return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
}

double read_number(const json & j, const char * key, double fallback)
{
  return j.contains(key) ? read_number(j, key) : fallback;
}

json optional_number(const std::optional<double> & x)
{
  return x ? number(*x) : json(nullptr);
}

std::optional<double> read_optional(const json & j, const char * key)
{
  if (!j.contains(key) || j.at(key).is_null()) {
    return std::nullopt;
  }
  return j.at(key).get<double>();
}

const char * status_name(FrothStatus s)
{
  switch (s) {
    case FrothStatus::InColumn:
      return "in_column";
    case FrothStatus::NoFroth:
      return "no_froth";
    case FrothStatus::FillsColumn:
      return "fills_column";
  }
  return "unknown";
}

FrothStatus parse_status(const std::string & s)
{
  if (s == "in_column") {
    return FrothStatus::InColumn;
  }
  if (s == "no_froth") {
    return FrothStatus::NoFroth;
  }
  if (s == "fills_column") {
    return FrothStatus::FillsColumn;
  }
  throw Error(ErrorCode::ParseError, "unknown froth_status '" + s + "'");
}

// Parameters given either directly or through physical constants.
ConstitutiveParams read_params(const json & j)
{
  if (j.contains("params")) {
    return j.at("params").get<ConstitutiveParams>();
  }
  if (j.contains("physical")) {
    return j.at("physical").get<PhysicalConfig>().derive();
  }
  return default_constitutive_params();
}

ColumnGeometry read_geometry(const json & j)
{
  return j.contains("geometry") ? j.at("geometry").get<ColumnGeometry>() : ColumnGeometry{};
}

Eigen::VectorXd read_array(const json & j)
{
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

}  // namespace

void to_json(json & j, const PhysicalParams & v)
{
  j = {{"rho_f", v.rho_f}, {"mu", v.mu}, {"r_b", v.r_b}, {"C_PB", v.C_PB},
    {"gamma_w", v.gamma_w}, {"g", v.g}, {"m", v.m_fit}, {"n_S", v.n_S}};
}

void from_json(const json & j, PhysicalParams & v)
{
  const PhysicalParams d = default_physical_params();
  v.rho_f = read_number(j, "rho_f", d.rho_f);
  v.mu = read_number(j, "mu", d.mu);
  v.r_b = read_number(j, "r_b", d.r_b);
  v.C_PB = read_number(j, "C_PB", d.C_PB);
  v.gamma_w = read_number(j, "gamma_w", d.gamma_w);
  v.g = read_number(j, "g", d.g);
  v.m_fit = read_number(j, "m", d.m_fit);
  v.n_S = read_number(j, "n_S", d.n_S);
}

void to_json(json & j, const ConstitutiveParams & v)
{
  j = {{"v_term", v.v_term}, {"n_b", v.n_b}, {"n_S", v.n_S}, {"phi_c", v.phi_c},
    {"v_drain", v.v_drain}, {"d_cap", v.d_cap}, {"v_inf", v.v_inf}, {"n_RZ", v.n_RZ}};
}

void from_json(const json & j, ConstitutiveParams & v)
{
  v.v_term = read_number(j, "v_term");
  v.n_b = read_number(j, "n_b");
  v.n_S = read_number(j, "n_S");
  v.phi_c = read_number(j, "phi_c");
  v.v_drain = read_number(j, "v_drain");
  v.d_cap = read_number(j, "d_cap");
  v.v_inf = read_number(j, "v_inf");
  v.n_RZ = read_number(j, "n_RZ");
}

void to_json(json & j, const ColumnGeometry & v)
{
  j = {{"z_U", v.z_U}, {"z_F", v.z_F}, {"z_E", v.z_E}, {"A_U", v.A_U}, {"A_E", v.A_E}};
}

void from_json(const json & j, ColumnGeometry & v)
{
  const ColumnGeometry d;
  v.z_U = read_number(j, "z_U", d.z_U);
  v.z_F = read_number(j, "z_F", d.z_F);
  v.z_E = read_number(j, "z_E", d.z_E);
  v.A_U = read_number(j, "A_U", d.A_U);
  v.A_E = read_number(j, "A_E", d.A_E);
}

void to_json(json & j, const OperatingPoint & v)
{
  j = {{"Q_U", v.Q_U}, {"Q_F", v.Q_F}, {"Q_W", v.Q_W}, {"phi_F", v.phi_F}, {"psi_F", v.psi_F}};
}

void from_json(const json & j, OperatingPoint & v)
{
  v.Q_U = read_number(j, "Q_U");
  v.Q_F = read_number(j, "Q_F");
  v.Q_W = read_number(j, "Q_W");
  v.phi_F = read_number(j, "phi_F");
  v.psi_F = read_number(j, "psi_F");
}

void to_json(json & j, const FeasibilityReport & v)
{
  j = {
    {"feasible", v.feasible()},
    {"fib", v.fib_ok}, {"fias", v.fias_ok}, {"froth1", v.froth1_ok},
    {"froth2", v.froth2_ok}, {"froth3", v.froth3_ok},
    {"phi_E", number(v.phi_E)},
    {"phi_bar2", optional_number(v.phi_bar2)},
    {"z_fr", optional_number(v.z_fr)},
    {"varphi_1", optional_number(v.varphi_1)},
    {"varphi_U", optional_number(v.varphi_U)},
    {"margin_fib", number(v.margin_fib)},
    {"margin_fias", number(v.margin_fias)},
    {"margin_froth1_lower", number(v.margin_froth1_lower)},
    {"margin_froth1_upper", number(v.margin_froth1_upper)},
    {"margin_froth1", number(v.margin_froth1)},
    {"margin_froth2", number(v.margin_froth2)},
    {"margin_froth3", number(v.margin_froth3)},
    {"froth_status", status_name(v.froth_status)},
    {"marginal", v.marginal},
    {"notes", v.notes},
  };
}

void from_json(const json & j, FeasibilityReport & v)
{
  v.fib_ok = j.at("fib").get<bool>();
  v.fias_ok = j.at("fias").get<bool>();
  v.froth1_ok = j.at("froth1").get<bool>();
  v.froth2_ok = j.at("froth2").get<bool>();
  v.froth3_ok = j.at("froth3").get<bool>();
  v.phi_E = read_number(j, "phi_E");
  v.phi_bar2 = read_optional(j, "phi_bar2");
  v.z_fr = read_optional(j, "z_fr");
  v.varphi_1 = read_optional(j, "varphi_1");
  v.varphi_U = read_optional(j, "varphi_U");
  v.margin_fib = read_number(j, "margin_fib");
  v.margin_fias = read_number(j, "margin_fias");
  v.margin_froth1_lower = read_number(j, "margin_froth1_lower");
  v.margin_froth1_upper = read_number(j, "margin_froth1_upper");
  v.margin_froth1 = read_number(j, "margin_froth1");
  v.margin_froth2 = read_number(j, "margin_froth2");
  v.margin_froth3 = read_number(j, "margin_froth3");
  v.froth_status = parse_status(j.at("froth_status").get<std::string>());
  v.marginal = j.at("marginal").get<bool>();
  v.notes = j.at("notes").get<std::vector<std::string>>();
}

void to_json(json & j, const CflData & v)
{
  j = {{"M1", v.M1}, {"M2", v.M2}, {"A_min", v.A_min}, {"Q_sup", v.Q_sup},
    {"norm_v", v.norm_v}, {"norm_vprime", v.norm_vprime}, {"norm_d", v.norm_d},
    {"vhs0", v.vhs0}, {"norm_vhs_prime", v.norm_vhs_prime},
    {"beta1", v.beta1}, {"beta2", v.beta2}, {"dt_max", v.dt_max}};
}

void to_json(json & j, const ScheduleEntry & v)
{
  j = v.op;
  j["t_start"] = v.t_start;
}

void from_json(const json & j, ScheduleEntry & v)
{
  v.t_start = read_number(j, "t_start");
  v.op = j.get<OperatingPoint>();
}

void to_json(json & j, const ChartSpec & v)
{
  j = {{"qU_range", v.qU_range}, {"qF_range", v.qF_range}, {"nU", v.nU}, {"nF", v.nF},
    {"Q_W", v.Q_W}, {"phi_F", v.phi_F}, {"psi_F", v.psi_F},
    {"geometry", v.geometry}, {"params", v.params}};
}

void from_json(const json & j, ChartSpec & v)
{
  v.qU_range = j.at("qU_range").get<std::array<double, 2>>();
  v.qF_range = j.at("qF_range").get<std::array<double, 2>>();
  v.nU = j.at("nU").get<int>();
  v.nF = j.at("nF").get<int>();
  v.Q_W = read_number(j, "Q_W");
  v.phi_F = read_number(j, "phi_F");
  v.psi_F = read_number(j, "psi_F");
  v.geometry = read_geometry(j);
  v.params = read_params(j);
}

void to_json(json & j, const Scenario & v)
{
  j = {{"geometry", v.geometry}, {"params", v.params}, {"schedule", v.schedule},
    {"N", v.N}, {"T_end", v.T_end}, {"output_every", v.output_every}, {"safety", v.safety}};
  if (v.initial_state.water) {
    j["initial_state"] = "water";
  } else {
    const auto & s = v.initial_state;
    j["initial_state"] = {
      {"phi", std::vector<double>(s.phi.data(), s.phi.data() + s.phi.size())},
      {"psi", std::vector<double>(s.psi.data(), s.psi.data() + s.psi.size())}};
  }
}

void from_json(const json & j, Scenario & v)
{
  v.geometry = read_geometry(j);
  v.params = read_params(j);
  v.schedule = j.value("schedule", std::vector<ScheduleEntry>{});
  v.N = j.value("N", 800);
  v.T_end = read_number(j, "T_end", 0.0);
  v.output_every = read_number(j, "output_every", 0.0);
  v.safety = read_number(j, "safety", 0.95);
  v.initial_state = InitialState{};
  if (j.contains("initial_state")) {
    const json & init = j.at("initial_state");
    if (init.is_string()) {
      if (init.get<std::string>() != "water") {
        throw Error(ErrorCode::ParseError, "initial_state must be \"water\" or {phi, psi}");
      }
    } else {
      v.initial_state.water = false;
      v.initial_state.phi = read_array(init.at("phi"));
      v.initial_state.psi = read_array(init.at("psi"));
    }
  }
}

ConstitutiveParams PhysicalConfig::derive() const
{
  return derive_params(physical, v_term, n_b, phi_c, v_inf, n_RZ);
}

void from_json(const json & j, PhysicalConfig & v)
{
  v = PhysicalConfig{};
  v.physical = j.get<PhysicalParams>();
  v.v_term = read_number(j, "v_term", v.v_term);
  v.n_b = read_number(j, "n_b", v.n_b);
  v.phi_c = read_number(j, "phi_c", v.phi_c);
  v.v_inf = read_number(j, "v_inf", v.v_inf);
  v.n_RZ = read_number(j, "n_RZ", v.n_RZ);
}

void from_json(const json & j, PointInput & v)
{
  v.op = j.contains("operating_point") ? j.at("operating_point").get<OperatingPoint>() :
    j.get<OperatingPoint>();
  v.geometry = read_geometry(j);
  v.params = read_params(j);
}

json read_json_file(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::exception & e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace flotcol
