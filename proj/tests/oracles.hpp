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

// Independent reference formulas used by the tests. Everything here is
// written from the model equations in extended precision and shares no
// code with the library beyond plain parameter structs.

#ifndef FLOTCOL_TESTS_ORACLES_HPP_
#define FLOTCOL_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "flotcol/column.hpp"
#include "flotcol/constitutive.hpp"

namespace oracle
{

using ld = long double;
using Params = flotcol::BasicConstitutiveParams<ld>;

struct Physical
{
  ld rho_f = 1000.0L;
  ld mu = 1e-3L;
  ld r_b = 4.13e-4L;
  ld C_PB = 50.0L;
  ld gamma_w = 3.5e-2L;
  ld g = 9.81L;
  ld m = 1.28L;
  ld n_S = 0.46L;
};

inline ld d_cap(const Physical & ph)
{
  return ph.n_S * ph.gamma_w / (ph.m * ph.r_b * ph.rho_f * ph.g);
}

inline ld v_drain_compat(ld v_term, ld n_b, ld n_S, ld phi_c)
{
  return v_term * std::pow(1.0L - phi_c, n_b - 1.0L - 2.0L * n_S);
}

inline Params lab()
{
  Params p;
  p.v_term = 0.027L;
  p.n_b = 2.5L;
  p.n_S = 0.46L;
  p.phi_c = 0.74L;
  p.v_drain = v_drain_compat(p.v_term, p.n_b, p.n_S, p.phi_c);
  p.d_cap = d_cap(Physical{});
  p.v_inf = 5e-3L;
  p.n_RZ = 1.5L;
  return p;
}

inline ld vt_low(ld phi, const Params & p) {return p.v_term * std::pow(1.0L - phi, p.n_b);}
inline ld vt_high(ld phi, const Params & p)
{
  return p.v_drain * std::pow(1.0L - phi, 2.0L * p.n_S + 1.0L);
}

inline ld vt(ld phi, const Params & p)
{
  return phi <= p.phi_c ? vt_low(phi, p) : vt_high(phi, p);
}

inline ld jb(ld phi, const Params & p) {return phi * vt(phi, p);}

inline ld d(ld phi, const Params & p)
{
  if (phi <= p.phi_c) {
    return 0.0L;
  }
  return p.v_drain * p.d_cap * phi * std::pow(1.0L - phi, p.n_S);
}

/// D(phi) by adaptive Gauss-Kronrod quadrature of d.
inline ld D_quad(ld phi, const Params & p)
{
  if (phi <= p.phi_c) {
    return 0.0L;
  }
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<ld, 61>::integrate(
    [&](ld x) {return d(x, p);}, p.phi_c, phi, 20, 1e-16L);
}

inline ld vhs(ld u, const Params & p) {return p.v_inf * std::pow(1.0L - u, p.n_RZ);}
inline ld fb(ld u, const Params & p) {return u * vhs(u, p);}

/// Pulp-froth interface: z_E minus the integral of d / (j_2 - s_F) over
/// [phi_c, phi_E], with the endpoint singularity removed by x = phi_E - t^2
/// when the denominator vanishes at phi_E.
inline ld z_fr(const flotcol::OperatingPoint & op, const flotcol::ColumnGeometry & g,
  const Params & p)
{
  const ld QU = op.Q_U;
  const ld QF = op.Q_F;
  const ld QW = op.Q_W;
  const ld AE = g.A_E;
  const ld q2 = (QF - QU) / AE;
  const ld sF = QF * static_cast<ld>(op.phi_F) / AE;
  const ld phiE = QF * static_cast<ld>(op.phi_F) / (QW + QF - QU);
  auto integrand = [&](ld x) {return d(x, p) / (jb(x, p) + q2 * x - sF);};
  using boost::math::quadrature::gauss_kronrod;
  const ld len = phiE - p.phi_c;
  if (len <= 0.0L) {
    return g.z_E;
  }
  const ld mid = p.phi_c + 0.5L * len;
  ld I = gauss_kronrod<ld, 61>::integrate(integrand, p.phi_c, mid, 25, 1e-15L);
  const ld tmax = std::sqrt(phiE - mid);
  I += gauss_kronrod<ld, 61>::integrate(
    [&](ld t) {return t == 0.0L ? 0.0L : 2.0L * t * integrand(phiE - t * t);},
    0.0L, tmax, 25, 1e-15L);
  return static_cast<ld>(g.z_E) - I;
}

/// Godunov flux of f on data (u_L, u_R) by exhaustive search over a grid
/// of n + 1 points plus both endpoints.
template <typename F>
ld godunov(F && f, ld uL, ld uR, int n)
{
  const ld lo = std::min(uL, uR);
  const ld hi = std::max(uL, uR);
  const bool take_min = uL <= uR;
  ld best = f(uL);
  auto consider = [&](ld v) {best = take_min ? std::min(best, v) : std::max(best, v);};
  consider(f(uR));
  for (int k = 0; k <= n; ++k) {
    consider(f(lo + (hi - lo) * k / n));
  }
  return best;
}

/// Settling flux psi vhs(psi / psi_max) truncated at psi_max.
inline ld settling_flux(ld psi, ld psi_max, const Params & p)
{
  if (psi_max <= 0.0L) {
    return 0.0L;
  }
  const ld u = psi / psi_max;
  return u >= 1.0L ? 0.0L : psi * vhs(u, p);
}

/// Two-piece area averaged over [a, b].
inline ld area_average(const flotcol::ColumnGeometry & g, ld a, ld b)
{
  const ld zF = g.z_F;
  const ld below = std::clamp(zF, a, b) - a;
  const ld above = b - std::clamp(zF, a, b);
  return (static_cast<ld>(g.A_U) * below + static_cast<ld>(g.A_E) * above) / (b - a);
}

/// Time-step bound with sup-norms sampled at n + 1 points.
inline ld cfl_dt_sampled(const flotcol::ColumnGeometry & g, const Params & p, int N,
  ld Q_sup, int n)
{
  const ld H = static_cast<ld>(g.z_E) - g.z_U;
  const ld dz = H / (N - 2);
  auto zb = [&](int i) {return static_cast<ld>(g.z_U) + (i - 1) * dz;};
  std::vector<ld> Ab(N + 1);
  std::vector<ld> Ac(N);
  for (int i = 0; i <= N; ++i) {
    Ab[i] = area_average(g, zb(i) - dz / 2, zb(i) + dz / 2);
  }
  for (int k = 0; k < N; ++k) {
    Ac[k] = area_average(g, zb(k), zb(k + 1));
  }
  ld M1 = 0.0L;
  ld M2 = 0.0L;
  ld Amin = std::numeric_limits<ld>::max();
  for (int k = 0; k < N; ++k) {
    M1 = std::max({M1, Ab[k] / Ac[k], Ab[k + 1] / Ac[k]});
    M2 = std::max(M2, (Ab[k] + Ab[k + 1]) / Ac[k]);
    Amin = std::min({Amin, Ac[k], Ab[k]});
  }
  Amin = std::min(Amin, Ab[N]);

  ld nv = 0.0L;
  ld nvp = 0.0L;
  ld nd = 0.0L;
  ld nvhsp = 0.0L;
  for (int k = 0; k <= n; ++k) {
    const ld x = static_cast<ld>(k) / n;
    nv = std::max(nv, std::fabs(vt(x, p)));
    nd = std::max(nd, std::fabs(d(x, p)));
    // branch derivatives from differentiating the closed forms
    const ld dlow = p.v_term * p.n_b * std::pow(1.0L - x, p.n_b - 1.0L);
    const ld dhigh = p.v_drain * (2.0L * p.n_S + 1.0L) * std::pow(1.0L - x, 2.0L * p.n_S);
    nvp = std::max(nvp, x <= p.phi_c ? dlow : dhigh);
    nvhsp = std::max(nvhsp, p.v_inf * p.n_RZ * std::pow(1.0L - x, p.n_RZ - 1.0L));
  }
  // one-sided limits at the kink belong to the supremum as well
  nvp = std::max(nvp, p.v_drain * (2.0L * p.n_S + 1.0L) * std::pow(1.0L - p.phi_c, 2.0L * p.n_S));
  nd = std::max(nd, p.v_drain * p.d_cap * p.phi_c * std::pow(1.0L - p.phi_c, p.n_S));
  const ld b1 = M1 * nv + M2 * nd / dz;
  const ld b2 = M1 * std::max(vhs(0.0L, p), nvhsp) + M2 * (1.0L - p.phi_c) * nd / dz;
  return dz / (2.0L * Q_sup / Amin + M1 * nvp + std::max(b1, b2));
}

/// D(phi) from the antiderivative -(1-x)^(s+1) ((s+1)x + 1) / ((s+1)(s+2)).
inline ld D_closed(ld phi, const Params & p)
{
  if (phi <= p.phi_c) {
    return 0.0L;
  }
  const ld s = p.n_S;
  auto F = [&](ld x) {
      return -std::pow(1.0L - x, s + 1.0L) * ((s + 1.0L) * x + 1.0L) / ((s + 1.0L) * (s + 2.0L));
    };
  return p.v_drain * p.d_cap * (F(phi) - F(p.phi_c));
}

/// Grid data rebuilt from the geometry: N cells, N + 1 boundaries.
struct RefGrid
{
  int N = 0;
  ld dz = 0.0L;
  std::vector<ld> Ab;
  std::vector<ld> Ac;
  int feed = -1;
};

inline RefGrid ref_grid(const flotcol::ColumnGeometry & g, int N)
{
  RefGrid r;
  r.N = N;
  r.dz = (static_cast<ld>(g.z_E) - g.z_U) / (N - 2);
  auto zb = [&](int i) {return static_cast<ld>(g.z_U) + (i - 1) * r.dz;};
  for (int i = 0; i <= N; ++i) {
    r.Ab.push_back(area_average(g, zb(i) - r.dz / 2, zb(i) + r.dz / 2));
  }
  for (int k = 0; k < N; ++k) {
    r.Ac.push_back(area_average(g, zb(k), zb(k + 1)));
    if (zb(k) <= g.z_F && g.z_F < zb(k + 1)) {
      r.feed = k;
    }
  }
  return r;
}

/// Bulk volumetric flow through boundary i: underflow below the feed cell,
/// feed minus underflow inside zone 2 and the effluent flow at the top.
inline ld ref_Q(const RefGrid & r, const flotcol::OperatingPoint & op, int i)
{
  if (i <= r.feed) {
    return -static_cast<ld>(op.Q_U);
  }
  if (i <= r.N - 2) {
    return static_cast<ld>(op.Q_F) - op.Q_U;
  }
  return static_cast<ld>(op.Q_W) + op.Q_F - op.Q_U;
}

/// Engquist-Osher flux in the case form of the scheme definition.
inline ld ref_eo(ld psi_lo, ld psi_up, ld phi_lo, ld phi_up, const Params & p)
{
  const ld pmax = 1.0L - std::max(phi_lo, phi_up);
  const ld hat = pmax / (1.0L + p.n_RZ);
  auto f = [&](ld x) {return settling_flux(x, pmax, p);};
  if (psi_lo <= hat && psi_up <= hat) {
    return f(psi_up);
  }
  if (psi_lo <= hat && hat < psi_up) {
    return f(hat);
  }
  if (psi_up <= hat && hat < psi_lo) {
    return f(psi_lo) + f(psi_up) - f(hat);
  }
  return f(psi_lo);
}

struct RefStep
{
  std::vector<ld> phi;
  std::vector<ld> psi;
};

/// One explicit step of both conservation laws from the same time level.
inline RefStep ref_step(const std::vector<ld> & phi, const std::vector<ld> & psi,
  const RefGrid & r, const flotcol::OperatingPoint & op, const Params & p, ld dt)
{
  const int N = r.N;
  auto at = [&](const std::vector<ld> & u, int k) {return k < 0 || k >= N ? 0.0L : u[k];};
  std::vector<ld> AF(N + 1);
  std::vector<ld> AG(N + 1);
  for (int i = 0; i <= N; ++i) {
    const ld Q = ref_Q(r, op, i);
    const ld lo = at(phi, i - 1);
    const ld up = at(phi, i);
    const ld slo = at(psi, i - 1);
    const ld sup = at(psi, i);
    AF[i] = lo * std::max(Q, 0.0L) + up * std::min(Q, 0.0L);
    AG[i] = slo * std::max(Q, 0.0L) + sup * std::min(Q, 0.0L);
    if (i >= 1 && i <= N - 2) {
      const ld dD = D_closed(up, p) - D_closed(lo, p);
      AF[i] += r.Ab[i] * (lo * vt(up, p) - dD / r.dz);
      const ld ratio_up = 1.0L - up < 1e-12L ? 0.0L : sup / (1.0L - up);
      const ld ratio_lo = 1.0L - lo < 1e-12L ? 0.0L : slo / (1.0L - lo);
      AG[i] -= r.Ab[i] * (ref_eo(slo, sup, lo, up, p) +
        ratio_up * (lo * vt(up, p) - std::min(dD, 0.0L) / r.dz) -
        ratio_lo * std::max(dD, 0.0L) / r.dz);
    }
  }
  RefStep out{phi, psi};
  const ld lambda = dt / r.dz;
  for (int k = 0; k < N; ++k) {
    const ld feed = k == r.feed ? 1.0L : 0.0L;
    out.phi[k] += lambda / r.Ac[k] *
      (AF[k] - AF[k + 1] + feed * static_cast<ld>(op.Q_F) * op.phi_F);
    out.psi[k] += lambda / r.Ac[k] *
      (AG[k] - AG[k + 1] + feed * static_cast<ld>(op.Q_F) * op.psi_F);
  }
  return out;
}

}  // namespace oracle

#endif  // FLOTCOL_TESTS_ORACLES_HPP_
