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

#include "flotcol/constitutive.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "flotcol/numerics.hpp"

namespace flotcol
{

PhysicalParams default_physical_params()
{
  return {1.0e3, 1.0e-3, 4.13e-4, 50.0, 3.5e-2, 9.81, 1.28, 0.46};
}

ConstitutiveParams default_constitutive_params()
{
  return derive_params(default_physical_params(), 2.7e-2, 2.5, 0.74, 5.0e-3, 1.5);
}

void validate(const PhysicalParams & phys)
{
  const double values[] = {phys.rho_f, phys.mu, phys.r_b, phys.C_PB, phys.gamma_w, phys.g,
    phys.m_fit, phys.n_S};
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::NonPositiveParameter, "physical parameters must be positive");
    }
  }
  if (!(phys.n_S < 1.0)) {
    throw Error(ErrorCode::DomainError, "n_S must lie in (0,1)");
  }
}

double capillary_length(const PhysicalParams & phys)
{
  return phys.n_S * phys.gamma_w / (phys.m_fit * phys.r_b * phys.rho_f * phys.g);
}

double drainage_velocity_physical(const PhysicalParams & phys)
{
  // C^2 = sqrt(3) - pi/2 is the Plateau-border area factor.
  const double c2 = std::sqrt(3.0) - std::numbers::pi / 2.0;
  return phys.m_fit * phys.m_fit * c2 * phys.r_b * phys.r_b * phys.rho_f * phys.g /
         (3.0 * phys.C_PB * phys.mu);
}

namespace
{

void check_flux_exponents(double n_b, double n_S)
{
  if (n_b < 1.0 + 2.0 * n_S) {
    throw Error(ErrorCode::HindranceExponentTooSmall,
      "n_b must satisfy n_b >= 1 + 2 n_S (got n_b=" + std::to_string(n_b) +
      ", 1+2n_S=" + std::to_string(1.0 + 2.0 * n_S) + ")");
  }
}

}  // namespace

ConstitutiveParams derive_params(
  const PhysicalParams & phys, double v_term, double n_b, double phi_c,
  double v_inf, double n_RZ)
{
  validate(phys);
  if (!(v_term > 0.0) || !(v_inf > 0.0) || !(n_b > 0.0)) {
    throw Error(ErrorCode::NonPositiveParameter, "v_term, v_inf and n_b must be positive");
  }
  if (!(phi_c > 0.0 && phi_c < 1.0)) {
    throw Error(ErrorCode::DomainError, "phi_c must lie in (0,1)");
  }
  if (!(n_RZ > 1.0)) {
    throw Error(ErrorCode::DomainError, "n_RZ must exceed 1");
  }
  check_flux_exponents(n_b, phys.n_S);

  ConstitutiveParams p;
  p.v_term = v_term;
  p.n_b = n_b;
  p.n_S = phys.n_S;
  p.phi_c = phi_c;
  p.v_drain = v_term * std::pow(1.0 - phi_c, n_b - 1.0 - 2.0 * phys.n_S);
  p.d_cap = capillary_length(phys);
  p.v_inf = v_inf;
  p.n_RZ = n_RZ;
  return p;
}

void validate(const ConstitutiveParams & p)
{
  if (!(p.phi_c > 0.0 && p.phi_c < 1.0)) {
    throw Error(ErrorCode::DomainError, "phi_c must lie in (0,1)");
  }
  if (!(p.v_term > 0.0) || !(p.v_inf > 0.0) || !(p.v_drain > 0.0) || !(p.d_cap >= 0.0) ||
    !(p.n_S > 0.0) || !(p.n_b > 0.0))
  {
    throw Error(ErrorCode::NonPositiveParameter, "constitutive parameters must be positive");
  }
  if (!(p.n_RZ > 1.0)) {
    throw Error(ErrorCode::DomainError, "n_RZ must exceed 1");
  }
  check_flux_exponents(p.n_b, p.n_S);
  const double expected = p.v_term * std::pow(1.0 - p.phi_c, p.n_b - 1.0 - 2.0 * p.n_S);
  if (std::abs(p.v_drain - expected) > 1e-12 * expected) {
    throw Error(ErrorCode::IncompatibleParameters,
      "v_drain violates continuity of the bubble velocity at phi_c");
  }
}

double inflection_point(const ConstitutiveParams & p, FluxKind kind)
{
  if (kind == FluxKind::Solids) {
    return 2.0 / (p.n_RZ + 1.0);
  }
  // With n_b >= 1+2n_S the high branch is convex, so the only sign change of
  // j_b'' is the one of the low branch, capped by the kink at phi_c.
  return std::min(2.0 / (p.n_b + 1.0), p.phi_c);
}

CriticalPoints critical_points(double q, const ConstitutiveParams & p, FluxKind kind)
{
  validate(p);
  std::function<double(double)> base;
  std::function<double(double)> base_prime;
  if (kind == FluxKind::Aggregate) {
    base = [&p](double x) {return batch_flux_jb(x, p);};
    base_prime = [&p](double x) {return jb_prime(x, p);};
  } else {
    base = [&p](double x) {return fb(x, p);};
    base_prime = [&p](double x) {return fb_prime(x, p);};
  }
  auto flux = [&](double x) {return base(x) + q * x;};

  CriticalPoints cp{};
  cp.phi_infl = inflection_point(p, kind);
  cp.q_neg = -base_prime(0.0);
  cp.q_bar = -base_prime(cp.phi_infl);

  // base' is strictly decreasing on (0, phi_infl)
  if (q <= cp.q_neg) {
    cp.phi_sup_M = 0.0;
  } else if (q >= cp.q_bar) {
    cp.phi_sup_M = cp.phi_infl;
  } else {
    cp.phi_sup_M = numerics::bisect(
      [&](double x) {return base_prime(x) + q;}, 0.0, cp.phi_infl);
  }

  if (q > cp.q_neg && q < 0.0) {
    // flux is positive at phi_sup_M, equals q < 0 at 1 and decreases in between
    cp.phi_Z = numerics::bisect(flux, cp.phi_sup_M, 1.0);
  }

  if (q >= cp.q_bar) {
    cp.phi_sub_M = cp.phi_infl;
  } else if (q >= 0.0) {
    // base' increases from -q_bar at phi_infl to 0 at 1
    cp.phi_sub_M = numerics::bisect(
      [&](double x) {return base_prime(x) + q;}, cp.phi_infl, 1.0);
  }

  if (cp.phi_sub_M) {
    const double level = flux(*cp.phi_sub_M);
    if (*cp.phi_sub_M == cp.phi_sup_M) {
      cp.phi_m = cp.phi_sup_M;
    } else {
      cp.phi_m = numerics::bisect(
        [&](double x) {return flux(x) - level;}, 0.0, cp.phi_sup_M);
    }
  }
  return cp;
}

}  // namespace flotcol
