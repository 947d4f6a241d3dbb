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

#ifndef FLOTCOL_SCHEME_HPP_
#define FLOTCOL_SCHEME_HPP_

#include <Eigen/Core>

#include "flotcol/column.hpp"
#include "flotcol/constitutive.hpp"

namespace flotcol
{

/// Uniform grid of N cells: N-2 inside the vessel plus one outlet cell
/// below z_U and one above z_E. Cell k spans [z_bnd[k], z_bnd[k+1]).
struct Grid
{
  int N = 0;
  double dz = 0.0;
  Eigen::VectorXd z_bnd;      // N+1 boundary heights; z_bnd[1] = z_U, z_bnd[N-1] = z_E
  Eigen::VectorXd area_cell;  // N cell averages of A(z)
  Eigen::VectorXd area_bnd;   // N+1 averages of A(z) over the dual cells
  Eigen::VectorXd gamma;      // N+1; 1 at boundaries inside [z_U, z_E], else 0
  int feed_cell = 0;

  // CFL area constants
  double M1 = 0.0;
  double M2 = 0.0;
  double A_min = 0.0;

  double cell_center(int k) const {return 0.5 * (z_bnd[k] + z_bnd[k + 1]);}
};

Grid build_grid(const ColumnGeometry & geom, int N);

struct State
{
  Eigen::VectorXd phi;
  Eigen::VectorXd psi;
  double t = 0.0;
};

/// Column filled with water only.
State water_state(const Grid & grid);

struct CflData
{
  double M1 = 0.0;
  double M2 = 0.0;
  double A_min = 0.0;
  double Q_sup = 0.0;
  double norm_v = 0.0;
  double norm_vprime = 0.0;
  double norm_d = 0.0;
  double vhs0 = 0.0;
  double norm_vhs_prime = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double dt_max = 0.0;
};

/// Largest time step allowed by the CFL condition for a flow bound Q_sup
/// on Q_F + Q_W.
CflData cfl_dt(const Grid & grid, const ConstitutiveParams & p, double Q_sup);

/// Volumetric bulk flow [m^3/s] through boundary i (positive upward).
double boundary_flow(const Grid & grid, const OperatingPoint & op, int i);

/// Numerical aggregate flux at boundary i, 0 <= i <= N.
double aggregate_flux(const State & state, const Grid & grid, const OperatingPoint & op,
  const ConstitutiveParams & p, int i);

/// Numerical solids flux at boundary i, 0 <= i <= N.
double solids_flux(const State & state, const Grid & grid, const OperatingPoint & op,
  const ConstitutiveParams & p, int i);

/// Engquist-Osher flux of f(psi) = psi v_hs(psi / psi_max),
/// psi_max = 1 - max(phi_left, phi_right).
double eo_flux(double psi_left, double psi_right, double phi_left, double phi_right,
  const ConstitutiveParams & p);

Eigen::VectorXd step_phi(const State & state, const Grid & grid, const OperatingPoint & op,
  const ConstitutiveParams & p, double dt);

/// Solids update; uses the phi of the same time level as psi.
Eigen::VectorXd step_psi(const State & state, const Grid & grid, const OperatingPoint & op,
  const ConstitutiveParams & p, double dt);

struct Outlets
{
  double phi_U = 0.0;
  double phi_E = 0.0;
  double psi_U = 0.0;
  double psi_E = 0.0;
};

Outlets outlets(const State & state, const Grid & grid);

/// Relative mass-balance residuals of one step for both phases.
struct StepResidual
{
  double phi = 0.0;
  double psi = 0.0;
};

/// Advances both phases by dt from the same time level and reports the
/// telescoping mass-balance residuals.
StepResidual advance(State & state, const Grid & grid, const OperatingPoint & op,
  const ConstitutiveParams & p, double dt);

}  // namespace flotcol

#endif  // FLOTCOL_SCHEME_HPP_
