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

#ifndef FLOTCOL_CONSTITUTIVE_HPP_
#define FLOTCOL_CONSTITUTIVE_HPP_

#include <algorithm>
#include <cmath>
#include <optional>

#include "flotcol/errors.hpp"

namespace flotcol
{

/// Material constants of the liquid, the bubbles and the Plateau-border
/// channel-radius power law (SI units).
struct PhysicalParams
{
  double rho_f;    // fluid density [kg/m^3]
  double mu;       // fluid viscosity [Pa s]
  double r_b;      // bubble radius [m]
  double C_PB;     // Plateau-border drag coefficient [-]
  double gamma_w;  // surface tension [N/m]
  double g;        // gravity [m/s^2]
  double m_fit;    // channel-radius fit coefficient [-]
  double n_S;      // channel-radius fit exponent [-]

  bool operator==(const PhysicalParams &) const = default;
};

/// Coefficients of the drift-flux, capillary-diffusion and hindered-settling
/// functions. Templated so that oracles can evaluate in extended precision.
template <typename Scalar>
struct BasicConstitutiveParams
{
  Scalar v_term;   // terminal bubble rise velocity [m/s]
  Scalar n_b;      // bubble hindrance exponent [-]
  Scalar n_S;      // drainage exponent [-]
  Scalar phi_c;    // critical aggregate fraction [-]
  Scalar v_drain;  // drainage velocity [m/s]
  Scalar d_cap;    // capillarity-to-gravity length [m]
  Scalar v_inf;    // Stokes settling velocity of solids [m/s]
  Scalar n_RZ;     // Richardson-Zaki exponent [-]

  template <typename Other>
  BasicConstitutiveParams<Other> cast() const
  {
    return {Other(v_term), Other(n_b), Other(n_S), Other(phi_c),
      Other(v_drain), Other(d_cap), Other(v_inf), Other(n_RZ)};
  }

  bool operator==(const BasicConstitutiveParams &) const = default;
};

using ConstitutiveParams = BasicConstitutiveParams<double>;

/// Which one-sided derivative to return at the kink phi = phi_c.
enum class Side { Left, Right };

enum class FluxKind { Aggregate, Solids };

/// Critical points of a zone flux j(phi) = base(phi) + q*phi, where base is
/// the aggregate batch flux j_b or the solids batch flux f_b.
struct CriticalPoints
{
  double phi_sup_M;                  // local maximum (0 or phi_infl at the extremes)
  std::optional<double> phi_Z;       // positive zero, for q_neg < q < 0
  std::optional<double> phi_sub_M;   // local minimum above the inflection, q >= 0
  std::optional<double> phi_m;       // flux(phi_m) == flux(phi_sub_M), phi_m <= phi_infl
  double phi_infl;
  double q_neg;                      // -base'(0)
  double q_bar;                      // -base'(phi_infl)
};

/// Defaults reproducing the laboratory column parameter set.
PhysicalParams default_physical_params();
ConstitutiveParams default_constitutive_params();

/// Capillarity-to-gravity length n_S*gamma_w / (m*r_b*rho_f*g).
double capillary_length(const PhysicalParams & phys);

/// Drainage velocity from the Plateau-border force balance. Diagnostic only:
/// the model uses the value enforced by continuity of the drift flux.
double drainage_velocity_physical(const PhysicalParams & phys);

/// Builds a consistent parameter set; v_drain is fixed by continuity of the
/// bubble velocity at phi_c.
ConstitutiveParams derive_params(
  const PhysicalParams & phys, double v_term, double n_b, double phi_c,
  double v_inf, double n_RZ);

void validate(const PhysicalParams & phys);
void validate(const ConstitutiveParams & p);

namespace kernel
{
// Unchecked kernels. Arguments are clamped to [0,1] so that rounding
// overshoot in a time-stepping loop never produces NaN from pow.

template <typename Scalar>
inline Scalar clamp01(Scalar x)
{
  return std::clamp(x, Scalar(0), Scalar(1));
}

template <typename Scalar>
inline Scalar vtilde(Scalar phi, const BasicConstitutiveParams<Scalar> & p)
{
  using std::pow;
  phi = clamp01(phi);
  if (phi <= p.phi_c) {
    return p.v_term * pow(1 - phi, p.n_b);
  }
  return p.v_drain * pow(1 - phi, 2 * p.n_S + 1);
}

template <typename Scalar>
inline Scalar diffusion_D(Scalar phi, const BasicConstitutiveParams<Scalar> & p)
{
  using std::pow;
  phi = clamp01(phi);
  if (phi <= p.phi_c) {
    return Scalar(0);
  }
  const Scalar e = p.n_S + 1;
  auto omega = [&](Scalar x) {return pow(1 - x, e) * (e * x + 1);};
  return p.v_drain * p.d_cap * (omega(p.phi_c) - omega(phi)) / (e * (p.n_S + 2));
}

template <typename Scalar>
inline Scalar v_hs(Scalar varphi, const BasicConstitutiveParams<Scalar> & p)
{
  using std::pow;
  return p.v_inf * pow(1 - clamp01(varphi), p.n_RZ);
}

}  // namespace kernel

namespace detail
{
template <typename Scalar>
inline void check_unit_interval(Scalar x, const char * what)
{
  if (!(x >= Scalar(0) && x <= Scalar(1))) {
    throw Error(ErrorCode::DomainError,
      std::string(what) + ": argument outside [0,1]");
  }
}
}  // namespace detail

/// Bubble (aggregate) velocity in a closed vessel.
template <typename Scalar>
Scalar vtilde(Scalar phi, const BasicConstitutiveParams<Scalar> & p)
{
  detail::check_unit_interval(phi, "vtilde");
  return kernel::vtilde(phi, p);
}

template <typename Scalar>
Scalar vtilde_prime(Scalar phi, const BasicConstitutiveParams<Scalar> & p, Side side = Side::Left)
{
  using std::pow;
  detail::check_unit_interval(phi, "vtilde_prime");
  const bool low = phi < p.phi_c || (phi == p.phi_c && side == Side::Left);
  if (low) {
    return -p.v_term * p.n_b * pow(1 - phi, p.n_b - 1);
  }
  return -p.v_drain * (2 * p.n_S + 1) * pow(1 - phi, 2 * p.n_S);
}

/// Batch drift flux j_b(phi) = phi * vtilde(phi).
template <typename Scalar>
Scalar batch_flux_jb(Scalar phi, const BasicConstitutiveParams<Scalar> & p)
{
  return phi * vtilde(phi, p);
}

template <typename Scalar>
Scalar jb_prime(Scalar phi, const BasicConstitutiveParams<Scalar> & p, Side side = Side::Left)
{
  using std::pow;
  detail::check_unit_interval(phi, "jb_prime");
  const bool low = phi < p.phi_c || (phi == p.phi_c && side == Side::Left);
  if (low) {
    return p.v_term * pow(1 - phi, p.n_b - 1) * (1 - (1 + p.n_b) * phi);
  }
  return p.v_drain * pow(1 - phi, 2 * p.n_S) * (1 - (2 + 2 * p.n_S) * phi);
}

template <typename Scalar>
Scalar jb_second(Scalar phi, const BasicConstitutiveParams<Scalar> & p)
{
  using std::pow;
  detail::check_unit_interval(phi, "jb_second");
  // u(1-u)^n has second derivative n(1-u)^(n-2) ((n+1)u - 2)
  if (phi <= p.phi_c) {
    return p.v_term * p.n_b * pow(1 - phi, p.n_b - 2) * ((p.n_b + 1) * phi - 2);
  }
  const Scalar n = 2 * p.n_S + 1;
  return p.v_drain * n * pow(1 - phi, n - 2) * ((n + 1) * phi - 2);
}

/// Capillary diffusion coefficient d(phi) = D'(phi); zero up to phi_c.
template <typename Scalar>
Scalar diffusion_d(Scalar phi, const BasicConstitutiveParams<Scalar> & p)
{
  using std::pow;
  detail::check_unit_interval(phi, "diffusion_d");
  if (phi <= p.phi_c) {
    return Scalar(0);
  }
  return p.v_drain * p.d_cap * phi * pow(1 - phi, p.n_S);
}

/// Integrated diffusion function D(phi), closed form.
template <typename Scalar>
Scalar diffusion_D(Scalar phi, const BasicConstitutiveParams<Scalar> & p)
{
  detail::check_unit_interval(phi, "diffusion_D");
  return kernel::diffusion_D(phi, p);
}

/// Richardson-Zaki hindered settling velocity.
template <typename Scalar>
Scalar hindered_settling(Scalar varphi, const BasicConstitutiveParams<Scalar> & p)
{
  detail::check_unit_interval(varphi, "hindered_settling");
  return kernel::v_hs(varphi, p);
}

template <typename Scalar>
Scalar hindered_settling_prime(Scalar varphi, const BasicConstitutiveParams<Scalar> & p)
{
  using std::pow;
  detail::check_unit_interval(varphi, "hindered_settling_prime");
  return -p.v_inf * p.n_RZ * pow(1 - varphi, p.n_RZ - 1);
}

/// Batch settling flux f_b(varphi) = varphi * v_hs(varphi).
template <typename Scalar>
Scalar fb(Scalar varphi, const BasicConstitutiveParams<Scalar> & p)
{
  return varphi * hindered_settling(varphi, p);
}

template <typename Scalar>
Scalar fb_prime(Scalar varphi, const BasicConstitutiveParams<Scalar> & p)
{
  using std::pow;
  detail::check_unit_interval(varphi, "fb_prime");
  return p.v_inf * pow(1 - varphi, p.n_RZ - 1) * (1 - (1 + p.n_RZ) * varphi);
}

/// Inflection point of the batch flux of the given kind.
double inflection_point(const ConstitutiveParams & p, FluxKind kind);

CriticalPoints critical_points(double q, const ConstitutiveParams & p, FluxKind kind);

}  // namespace flotcol

#endif  // FLOTCOL_CONSTITUTIVE_HPP_
