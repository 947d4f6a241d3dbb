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

#ifndef FLOTCOL_STEADY_STATE_HPP_
#define FLOTCOL_STEADY_STATE_HPP_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "flotcol/column.hpp"
#include "flotcol/constitutive.hpp"

namespace flotcol
{

/// Location of the pulp-froth interface obtained from the froth ODE.
struct FrothInterface
{
  double z_fr = 0.0;           // may lie below z_U when out_of_column is set
  bool out_of_column = false;  // the froth branch does not fit inside the vessel
  bool marginal = false;       // endpoint singularity handled by substitution
};

/// Where the froth sits relative to the column, as far as it can be told.
enum class FrothStatus { InColumn, NoFroth, FillsColumn };

/// Outcome of the necessary conditions for a desired steady state.
/// Margins are signed: nonnegative (positive for strict inequalities)
/// when the condition holds, NaN when the condition could not be evaluated.
struct FeasibilityReport
{
  bool fib_ok = false;
  bool fias_ok = false;
  bool froth1_ok = false;
  bool froth2_ok = false;
  bool froth3_ok = false;

  double phi_E = 0.0;
  std::optional<double> phi_bar2;
  std::optional<double> z_fr;
  std::optional<double> varphi_1;
  std::optional<double> varphi_U;

  double margin_fib = 0.0;            // phi_Z(q_1) - phi_bar2
  double margin_fias = 0.0;           // A_U f_1(varphi_M) - Q_F psi_F [m^3/s]
  double margin_froth1_lower = 0.0;   // (Q_U - Q_W) - Q_F (1 - phi_F/phi_c) [m^3/s]
  double margin_froth1_upper = 0.0;   // Q_F (1 - phi_F) - (Q_U - Q_W) [m^3/s]
  double margin_froth1 = 0.0;         // min of the two above
  double margin_froth2 = 0.0;         // z_fr - z_F [m]
  double margin_froth3 = 0.0;         // j_2(...) - s_F [m/s]

  FrothStatus froth_status = FrothStatus::NoFroth;
  bool marginal = false;
  std::vector<std::string> notes;

  bool feasible() const {return fib_ok && fias_ok && froth1_ok && froth2_ok && froth3_ok;}
};

struct SolidsFeedSolution
{
  double varphi_1;
  double varphi_U;
};

struct SteadyProfile
{
  Eigen::VectorXd z;
  Eigen::VectorXd phi;
  Eigen::VectorXd psi;
  double phi_E = 0.0;
  double varphi_U = 0.0;
  std::optional<double> z_fr;
  std::optional<double> phi_bar2;
  std::optional<double> varphi_1;
};

/// Effluent aggregate fraction Q_F phi_F / (Q_W + Q_F - Q_U).
double effluent_fraction(const OperatingPoint & op);

/// Zone-2 constant below the froth: smallest root of j_2(phi) = s_F on
/// [0, phi_2^M]. Throws NoRoot when the feed flux exceeds the local maximum.
double solve_fjc(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom);

/// Pulp-froth interface by quadrature of d/(j_2 - s_F) over [phi_c, phi_E].
FrothInterface compute_z_fr(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom);

/// Same interface obtained by marching the froth ODE down from z_E with
/// event detection at phi_c; independent of the quadrature route.
FrothInterface compute_z_fr_ode(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom);

/// Froth branch phi(z) sampled at heights in [z_fr, z_E].
Eigen::VectorXd froth_profile(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom, const Eigen::Ref<const Eigen::VectorXd> & z);

/// Solids fraction in zone 1 and in the underflow.
SolidsFeedSolution solve_fjcs(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom);

FeasibilityReport check_conditions(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom);

/// Desired steady state sampled at the given heights. Throws Infeasible
/// unless every condition of the report holds.
SteadyProfile desired_steady_state(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom, const Eigen::Ref<const Eigen::VectorXd> & z);

/// Uniform sampling of [z_U, z_E] with n points.
SteadyProfile desired_steady_state(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom, int n);

}  // namespace flotcol

#endif  // FLOTCOL_STEADY_STATE_HPP_
