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

#include "flotcol/scheme.hpp"

#include <algorithm>
#include <cmath>

#include "flotcol/errors.hpp"

namespace flotcol
{

namespace
{

constexpr double kDivisionGuard = 1e-12;
constexpr double kCflSlack = 1e-12;

// Integral of the two-piece area over [a, b].
double area_integral(const ColumnGeometry & geom, double a, double b)
{
  const double below = std::clamp(geom.z_F, a, b) - a;
  const double above = b - std::clamp(geom.z_F, a, b);
  return geom.A_U * below + geom.A_E * above;
}

double pos(double a) {return a > 0.0 ? a : 0.0;}
double neg(double a) {return a < 0.0 ? a : 0.0;}

// psi / (1 - phi), zero where the fluid fraction vanishes
double solids_ratio(double psi, double phi)
{
  const double free = 1.0 - phi;
  return free < kDivisionGuard ? 0.0 : psi / free;
}

double eo_unchecked(double psi_l, double psi_r, double phi_l, double phi_r,
  const ConstitutiveParams & p)
{
  const double psi_max = 1.0 - std::max(phi_l, phi_r);
  if (psi_max <= 0.0) {
    return 0.0;
  }
  const auto f = [&](double psi) {
      const double u = psi / psi_max;
      return u >= 1.0 ? 0.0 : psi * p.v_inf * std::pow(1.0 - u, p.n_RZ);
    };
  const double hat = psi_max / (1.0 + p.n_RZ);
  if (psi_l <= hat && psi_r <= hat) {
    return f(psi_r);
  }
  if (psi_l <= hat) {
    return f(hat);
  }
  if (psi_r <= hat) {
    return f(psi_l) + f(psi_r) - f(hat);
  }
  return f(psi_l);
}

// Values on both sides of a boundary; ghost cells outside the grid are zero.
struct Neighbours
{
  double phi_l = 0.0;
  double phi_r = 0.0;
  double psi_l = 0.0;
  double psi_r = 0.0;
  double vt_r = 0.0;  // vtilde(phi_r)
  double D_l = 0.0;
  double D_r = 0.0;
};

// Per-cell constitutive values evaluated once per time level.
struct CellCache
{
  Eigen::VectorXd vt;
  Eigen::VectorXd D;

  CellCache(const State & s, const ConstitutiveParams & p)
  : vt(s.phi.size()), D(s.phi.size())
  {
    for (Eigen::Index k = 0; k < s.phi.size(); ++k) {
      vt[k] = kernel::vtilde(s.phi[k], p);
      D[k] = kernel::diffusion_D(s.phi[k], p);
    }
  }
};

Neighbours neighbours(const State & s, const CellCache & c, const ConstitutiveParams & p,
  const Grid & grid, int i)
{
  Neighbours nb;
  if (i >= 1) {
    nb.phi_l = s.phi[i - 1];
    nb.psi_l = s.psi[i - 1];
    nb.D_l = c.D[i - 1];
  } else {
    nb.D_l = kernel::diffusion_D(0.0, p);
  }
  if (i <= grid.N - 1) {
    nb.phi_r = s.phi[i];
    nb.psi_r = s.psi[i];
    nb.vt_r = c.vt[i];
    nb.D_r = c.D[i];
  } else {
    nb.vt_r = kernel::vtilde(0.0, p);
    nb.D_r = kernel::diffusion_D(0.0, p);
  }
  return nb;
}

Neighbours neighbours(const State & s, const ConstitutiveParams & p, const Grid & grid, int i)
{
  Neighbours nb;
  if (i >= 1) {
    nb.phi_l = s.phi[i - 1];
    nb.psi_l = s.psi[i - 1];
  }
  if (i <= grid.N - 1) {
    nb.phi_r = s.phi[i];
    nb.psi_r = s.psi[i];
  }
  nb.vt_r = kernel::vtilde(nb.phi_r, p);
  nb.D_l = kernel::diffusion_D(nb.phi_l, p);
  nb.D_r = kernel::diffusion_D(nb.phi_r, p);
  return nb;
}

// Area-weighted numerical fluxes A_i Phi_i and A_i Psi_i.
double weighted_aggregate_flux(const Neighbours & nb, const Grid & grid, double Q, int i)
{
  double flux = nb.phi_l * pos(Q) + nb.phi_r * neg(Q);
  if (grid.gamma[i] != 0.0) {
    flux += grid.area_bnd[i] * grid.gamma[i] *
      (nb.phi_l * nb.vt_r - (nb.D_r - nb.D_l) / grid.dz);
  }
  return flux;
}

double weighted_solids_flux(const Neighbours & nb, const Grid & grid, double Q,
  const ConstitutiveParams & p, int i)
{
  double flux = nb.psi_l * pos(Q) + nb.psi_r * neg(Q);
  if (grid.gamma[i] != 0.0) {
    const double dD = nb.D_r - nb.D_l;
    const double settling = eo_unchecked(nb.psi_l, nb.psi_r, nb.phi_l, nb.phi_r, p);
    const double carried = solids_ratio(nb.psi_r, nb.phi_r) *
      (nb.phi_l * nb.vt_r - neg(dD) / grid.dz);
    const double pushed = solids_ratio(nb.psi_l, nb.phi_l) * pos(dD) / grid.dz;
    flux -= grid.area_bnd[i] * grid.gamma[i] * (settling + carried - pushed);
  }
  return flux;
}

void check_index(const Grid & grid, int i)
{
  if (i < 0 || i > grid.N) {
    throw Error(ErrorCode::IndexOutOfRange, "boundary index outside [0, N]");
  }
}

void check_step(const Grid & grid, const ConstitutiveParams & p, const OperatingPoint & op,
  double dt)
{
  const double limit = cfl_dt(grid, p, op.Q_F + op.Q_W).dt_max;
  if (!(dt > 0.0) || dt > limit * (1.0 + kCflSlack)) {
    throw Error(ErrorCode::CflViolation, "time step exceeds the CFL bound");
  }
}

template<typename FluxFn>
Eigen::VectorXd weighted_fluxes(const State & s, const Grid & grid, const OperatingPoint & op,
  const ConstitutiveParams & p, FluxFn && flux)
{
  const CellCache cache(s, p);
  Eigen::VectorXd F(grid.N + 1);
  for (int i = 0; i <= grid.N; ++i) {
    F[i] = flux(neighbours(s, cache, p, grid, i), boundary_flow(grid, op, i), i);
  }
  return F;
}

Eigen::VectorXd apply_update(const Eigen::VectorXd & u, const Eigen::VectorXd & F,
  const Grid & grid, double source, double dt)
{
  const double lambda = dt / grid.dz;
  Eigen::VectorXd out(grid.N);
  for (int k = 0; k < grid.N; ++k) {
    double net = F[k] - F[k + 1];
    if (k == grid.feed_cell) {
      net += source;
    }
    out[k] = u[k] + lambda / grid.area_cell[k] * net;
  }
  return out;
}

double mass_residual(const Eigen::VectorXd & before, const Eigen::VectorXd & after,
  const Eigen::VectorXd & F, const Grid & grid, double source, double dt)
{
  long double mass_before = 0.0L;
  long double mass_after = 0.0L;
  long double change = 0.0L;
  for (int k = 0; k < grid.N; ++k) {
    const long double w = static_cast<long double>(grid.area_cell[k]) * grid.dz;
    mass_before += w * before[k];
    mass_after += w * after[k];
    change += w * (static_cast<long double>(after[k]) - before[k]);
  }
  const long double inflow = static_cast<long double>(dt) *
    (static_cast<long double>(F[0]) - F[grid.N] + source);
  const long double scale = std::max({mass_before, mass_after,
      static_cast<long double>(dt) * (std::fabs(F[0]) + std::fabs(F[grid.N]) + std::fabs(source))});
  if (scale == 0.0L) {
    return 0.0;
  }
  return static_cast<double>(std::fabs(change - inflow) / scale);
}

}  // namespace

Grid build_grid(const ColumnGeometry & geom, int N)
{
  validate(geom);
  if (N < 4) {
    throw Error(ErrorCode::GridTooCoarse, "need at least 4 cells");
  }
  Grid g;
  g.N = N;
  g.dz = geom.height() / (N - 2);
  g.z_bnd.resize(N + 1);
  g.area_cell.resize(N);
  g.area_bnd.resize(N + 1);
  g.gamma.setZero(N + 1);
  for (int i = 0; i <= N; ++i) {
    g.z_bnd[i] = geom.z_U + (i - 1) * g.dz;
  }
  // pin the outlet boundaries to the geometry exactly
  g.z_bnd[1] = geom.z_U;
  g.z_bnd[N - 1] = geom.z_E;
  for (int i = 0; i <= N; ++i) {
    g.area_bnd[i] = area_integral(geom, g.z_bnd[i] - 0.5 * g.dz, g.z_bnd[i] + 0.5 * g.dz) / g.dz;
    g.gamma[i] = (i >= 1 && i <= N - 2) ? 1.0 : 0.0;
  }
  g.feed_cell = -1;
  for (int k = 0; k < N; ++k) {
    g.area_cell[k] = area_integral(geom, g.z_bnd[k], g.z_bnd[k + 1]) / g.dz;
    if (g.z_bnd[k] <= geom.z_F && geom.z_F < g.z_bnd[k + 1]) {
      g.feed_cell = k;
    }
  }
  if (g.feed_cell < 1 || g.feed_cell > N - 2) {
    throw Error(ErrorCode::InvalidGeometry, "feed level must lie inside the vessel");
  }

  g.M1 = 0.0;
  g.M2 = 0.0;
  g.A_min = std::min(g.area_cell.minCoeff(), g.area_bnd.minCoeff());
  for (int k = 0; k < N; ++k) {
    g.M1 = std::max({g.M1, g.area_bnd[k] / g.area_cell[k], g.area_bnd[k + 1] / g.area_cell[k]});
    g.M2 = std::max(g.M2, (g.area_bnd[k] + g.area_bnd[k + 1]) / g.area_cell[k]);
  }
  return g;
}

State water_state(const Grid & grid)
{
  return {Eigen::VectorXd::Zero(grid.N), Eigen::VectorXd::Zero(grid.N), 0.0};
}

CflData cfl_dt(const Grid & grid, const ConstitutiveParams & p, double Q_sup)
{
  CflData c;
  c.M1 = grid.M1;
  c.M2 = grid.M2;
  c.A_min = grid.A_min;
  c.Q_sup = Q_sup;
  c.norm_v = p.v_term;
  const double free_c = 1.0 - p.phi_c;
  c.norm_vprime = std::max(p.v_term * p.n_b,
      p.v_drain * (2.0 * p.n_S + 1.0) * std::pow(free_c, 2.0 * p.n_S));
  // d vanishes below phi_c; above it, phi (1-phi)^n_S peaks at 1/(1+n_S)
  const double phi_peak = std::max(p.phi_c, 1.0 / (1.0 + p.n_S));
  c.norm_d = p.v_drain * p.d_cap * phi_peak * std::pow(1.0 - phi_peak, p.n_S);
  c.vhs0 = p.v_inf;
  c.norm_vhs_prime = p.v_inf * p.n_RZ;
  c.beta1 = c.M1 * c.norm_v + c.M2 * c.norm_d / grid.dz;
  c.beta2 = c.M1 * std::max(c.vhs0, c.norm_vhs_prime) + c.M2 * free_c * c.norm_d / grid.dz;
  c.dt_max = grid.dz /
    (2.0 * Q_sup / c.A_min + c.M1 * c.norm_vprime + std::max(c.beta1, c.beta2));
  return c;
}

double boundary_flow(const Grid & grid, const OperatingPoint & op, int i)
{
  check_index(grid, i);
  // Exact volumetric flows keyed to the feed cell keep pure-fluid and
  // pure-aggregate columns stationary.
  if (i <= grid.feed_cell) {
    return -op.Q_U;
  }
  if (i <= grid.N - 2) {
    return op.Q_F - op.Q_U;
  }
  return op.Q_E();
}

double aggregate_flux(const State & state, const Grid & grid, const OperatingPoint & op,
  const ConstitutiveParams & p, int i)
{
  check_index(grid, i);
  return weighted_aggregate_flux(neighbours(state, p, grid, i), grid,
           boundary_flow(grid, op, i), i) / grid.area_bnd[i];
}

double solids_flux(const State & state, const Grid & grid, const OperatingPoint & op,
  const ConstitutiveParams & p, int i)
{
  check_index(grid, i);
  return weighted_solids_flux(neighbours(state, p, grid, i), grid,
           boundary_flow(grid, op, i), p, i) / grid.area_bnd[i];
}

double eo_flux(double psi_left, double psi_right, double phi_left, double phi_right,
  const ConstitutiveParams & p)
{
  for (double x : {psi_left, psi_right, phi_left, phi_right}) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw Error(ErrorCode::DomainError, "eo_flux: arguments must lie in [0, 1]");
    }
  }
  return eo_unchecked(psi_left, psi_right, phi_left, phi_right, p);
}

Eigen::VectorXd step_phi(const State & state, const Grid & grid, const OperatingPoint & op,
  const ConstitutiveParams & p, double dt)
{
  check_step(grid, p, op, dt);
  const auto F = weighted_fluxes(state, grid, op, p,
      [&](const Neighbours & nb, double Q, int i) {
        return weighted_aggregate_flux(nb, grid, Q, i);
      });
  return apply_update(state.phi, F, grid, op.Q_F * op.phi_F, dt);
}

Eigen::VectorXd step_psi(const State & state, const Grid & grid, const OperatingPoint & op,
  const ConstitutiveParams & p, double dt)
{
  check_step(grid, p, op, dt);
  const auto F = weighted_fluxes(state, grid, op, p,
      [&](const Neighbours & nb, double Q, int i) {
        return weighted_solids_flux(nb, grid, Q, p, i);
      });
  return apply_update(state.psi, F, grid, op.Q_F * op.psi_F, dt);
}

Outlets outlets(const State & state, const Grid & grid)
{
  const int top = grid.N - 1;
  return {state.phi[0], state.phi[top], state.psi[0], state.psi[top]};
}

StepResidual advance(State & state, const Grid & grid, const OperatingPoint & op,
  const ConstitutiveParams & p, double dt)
{
  check_step(grid, p, op, dt);
  Eigen::VectorXd F_phi(grid.N + 1);
  Eigen::VectorXd F_psi(grid.N + 1);
  const CellCache cache(state, p);
  for (int i = 0; i <= grid.N; ++i) {
    const Neighbours nb = neighbours(state, cache, p, grid, i);
    const double Q = boundary_flow(grid, op, i);
    F_phi[i] = weighted_aggregate_flux(nb, grid, Q, i);
    F_psi[i] = weighted_solids_flux(nb, grid, Q, p, i);
  }
  const double src_phi = op.Q_F * op.phi_F;
  const double src_psi = op.Q_F * op.psi_F;
  Eigen::VectorXd phi = apply_update(state.phi, F_phi, grid, src_phi, dt);
  Eigen::VectorXd psi = apply_update(state.psi, F_psi, grid, src_psi, dt);
  StepResidual r;
  r.phi = mass_residual(state.phi, phi, F_phi, grid, src_phi, dt);
  r.psi = mass_residual(state.psi, psi, F_psi, grid, src_psi, dt);
  state.phi = std::move(phi);
  state.psi = std::move(psi);
  state.t += dt;
  return r;
}

}  // namespace flotcol
