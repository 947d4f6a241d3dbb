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

#include "flotcol/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "flotcol/numerics.hpp"

namespace flotcol
{

namespace
{

constexpr double kSingularDenominator = 1e-14;  // [m/s]
constexpr double kOdeTolerance = 1e-12;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Froth-branch ingredients. The high-branch formulas are used as smooth
// extensions so that quadrature nodes and ODE trial stages never see the
// kink at phi_c.
struct FrothSetup
{
  ConstitutiveParams p;
  double phi_E;
  double q2;
  double s_F;
  bool marginal = false;

  double d(double phi) const
  {
    return p.v_drain * p.d_cap * phi * std::pow(1.0 - phi, p.n_S);
  }
  double denominator(double phi) const
  {
    const double jb = p.v_drain * phi * std::pow(1.0 - phi, 2.0 * p.n_S + 1.0);
    return jb + q2 * phi - s_F;
  }
  // dphi/dz of the froth ODE
  double slope(double phi) const {return denominator(phi) / d(phi);}
};

FrothSetup prepare_froth(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom)
{
  validate(op);
  validate(p);
  validate(geom);
  FrothSetup s{p, effluent_fraction(op), q_zone2(op, geom), feed_flux(op, geom)};
  if (!(s.phi_E > p.phi_c) || s.phi_E > 1.0) {
    throw Error(ErrorCode::PhiEOutOfRange, "froth requires phi_c < phi_E <= 1");
  }
  // j_2 is convex above phi_c, so its minimum over [phi_c, phi_E] sits at an
  // end or at the local minimum phi_2M; the uniform samples are a backstop.
  std::vector<double> probes;
  constexpr int kSamples = 256;
  for (int k = 0; k < kSamples; ++k) {
    probes.push_back(p.phi_c + (s.phi_E - p.phi_c) * k / kSamples);
  }
  const auto cp = critical_points(s.q2, p, FluxKind::Aggregate);
  if (cp.phi_sub_M && *cp.phi_sub_M > p.phi_c && *cp.phi_sub_M < s.phi_E) {
    probes.push_back(*cp.phi_sub_M);
  }
  for (double x : probes) {
    if (!(s.denominator(x) > 0.0)) {
      throw Error(ErrorCode::FrothConditionViolated,
        "j_2 - s_F is not positive on [phi_c, phi_E)");
    }
  }
  const double at_top = s.denominator(s.phi_E);
  if (at_top < 0.0) {
    throw Error(ErrorCode::FrothConditionViolated, "j_2(phi_E) < s_F");
  }
  s.marginal = at_top < kSingularDenominator;
  return s;
}

// Adaptive Dormand-Prince march of phi downward from z_E in s = z_E - z.
// Stops at s_target or when phi reaches phi_c; returns true on reaching the
// target without crossing.
class FrothMarcher
{
public:
  explicit FrothMarcher(const FrothSetup & setup)
  : setup_(setup), y_(setup.phi_E) {}

  double s() const {return s_;}
  double phi() const {return y_;}

  bool advance_to(double s_target)
  {
    const auto rhs = [this](double, double y) {return -setup_.slope(y);};
    while (s_ < s_target) {
      double h = std::min(h_, s_target - s_);
      const auto step = numerics::dormand_prince_step(rhs, s_, y_, h);
      if (!std::isfinite(step.y) || step.error > kOdeTolerance) {
        const double ratio = std::isfinite(step.error) ? kOdeTolerance / step.error : 0.0;
        h_ = h * std::clamp(0.9 * std::pow(ratio, 0.2), 0.1, 0.5);
        if (h_ < 1e-16) {
          throw Error(ErrorCode::QuadratureFailure, "froth ODE step size underflow");
        }
        continue;
      }
      if (step.y <= setup_.p.phi_c) {
        // event inside (s, s+h]: locate by bisection on the step length
        double lo = 0.0;
        double hi = h;
        for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (numerics::dormand_prince_step(rhs, s_, y_, mid).y <= setup_.p.phi_c) {
            hi = mid;
          } else {
            lo = mid;
          }
        }
        s_ += 0.5 * (lo + hi);
        y_ = setup_.p.phi_c;
        crossed_ = true;
        return false;
      }
      s_ += h;
      y_ = step.y;
      const double grow = step.error > 0.0 ?
        0.9 * std::pow(kOdeTolerance / step.error, 0.2) : 5.0;
      h_ = std::max(h_, h * std::clamp(grow, 1.0, 5.0));
    }
    return true;
  }

  bool crossed() const {return crossed_;}

private:
  const FrothSetup & setup_;
  double s_ = 0.0;
  double y_;
  double h_ = 1e-4;
  bool crossed_ = false;
};

double zone2_flux(double phi, const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom)
{
  return zone_flux_aggregate(phi, Zone::Two, geom, op, p);
}

}  // namespace

double effluent_fraction(const OperatingPoint & op)
{
  const double q_e = op.Q_E();
  if (!(q_e > 0.0)) {
    throw Error(ErrorCode::NonPositiveEffluentFlow, "Q_E = Q_W + Q_F - Q_U must be positive");
  }
  return op.Q_F * op.phi_F / q_e;
}

double solve_fjc(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom)
{
  const double s_F = feed_flux(op, geom);
  const auto cp = critical_points(q_zone2(op, geom), p, FluxKind::Aggregate);
  const double peak = zone2_flux(cp.phi_sup_M, op, p, geom);
  if (s_F > peak) {
    throw Error(ErrorCode::NoRoot, "feed flux exceeds the local maximum of j_2");
  }
  if (s_F <= 0.0) {
    return 0.0;
  }
  if (s_F == peak) {
    return cp.phi_sup_M;
  }
  return numerics::bisect(
    [&](double x) {return zone2_flux(x, op, p, geom) - s_F;}, 0.0, cp.phi_sup_M);
}

FrothInterface compute_z_fr(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom)
{
  const FrothSetup s = prepare_froth(op, p, geom);
  const auto integrand = [&s](double phi) {return s.d(phi) / s.denominator(phi);};
  constexpr double kAbsTol = 1e-10;
  constexpr double kRelTol = 1e-12;

  numerics::QuadratureResult total;
  if (!s.marginal) {
    total = numerics::integrate(integrand, p.phi_c, s.phi_E, kAbsTol, kRelTol);
  } else {
    // phi = phi_E - t^2 on the last piece tames an endpoint zero of the
    // denominator whenever the singularity is integrable.
    const double split = s.phi_E - 0.5 * (s.phi_E - p.phi_c);
    const auto regular = numerics::integrate(integrand, p.phi_c, split, kAbsTol, kRelTol);
    const auto singular = numerics::integrate(
      [&](double t) {return 2.0 * t * integrand(s.phi_E - t * t);},
      0.0, std::sqrt(s.phi_E - split), kAbsTol, kRelTol);
    total.value = regular.value + singular.value;
    total.error = regular.error + singular.error;
    total.converged = regular.converged && singular.converged;
  }

  FrothInterface result;
  result.marginal = s.marginal;
  const double height = geom.height();
  if (!total.converged || !std::isfinite(total.value)) {
    result.out_of_column = true;
    result.z_fr = -std::numeric_limits<double>::infinity();
    return result;
  }
  result.z_fr = geom.z_E - total.value;
  result.out_of_column = total.value > height;
  return result;
}

FrothInterface compute_z_fr_ode(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom)
{
  const FrothSetup s = prepare_froth(op, p, geom);
  FrothInterface result;
  result.marginal = s.marginal;
  if (s.marginal) {
    result.out_of_column = true;
    result.z_fr = -std::numeric_limits<double>::infinity();
    return result;
  }
  FrothMarcher marcher(s);
  const bool reached = marcher.advance_to(geom.height());
  result.z_fr = geom.z_E - marcher.s();
  result.out_of_column = reached;
  return result;
}

Eigen::VectorXd froth_profile(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom, const Eigen::Ref<const Eigen::VectorXd> & z)
{
  const FrothInterface iface = compute_z_fr(op, p, geom);
  if (iface.out_of_column) {
    throw Error(ErrorCode::FrothConditionViolated, "froth branch does not fit in the column");
  }
  const FrothSetup s = prepare_froth(op, p, geom);
  constexpr double kSlack = 1e-9;
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    if (z[k] < iface.z_fr - kSlack || z[k] > geom.z_E + kSlack) {
      throw Error(ErrorCode::DomainError, "froth_profile: height outside [z_fr, z_E]");
    }
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(z.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&z](auto a, auto b) {return z[a] > z[b];});

  Eigen::VectorXd phi(z.size());
  if (s.marginal) {
    // the branch is pinned at phi_E when j_2(phi_E) = s_F
    phi.setConstant(s.phi_E);
    return phi;
  }
  FrothMarcher marcher(s);
  bool alive = true;
  for (auto k : order) {
    const double target = std::max(0.0, geom.z_E - z[k]);
    if (alive) {
      alive = marcher.advance_to(target);
    }
    phi[k] = alive ? marcher.phi() : p.phi_c;
  }
  return phi;
}

SolidsFeedSolution solve_fjcs(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom)
{
  const double load = op.Q_F * op.psi_F;
  if (load <= 0.0) {
    return {0.0, 0.0};
  }
  if (op.Q_U <= 0.0) {
    throw Error(ErrorCode::ZeroUnderflow, "solids fed with no underflow to remove them");
  }
  const double q1 = q_zone1(op, geom);
  // f_1(varphi, 0; q_1) = f_b(varphi) - q_1 varphi has bulk coefficient -q_1 >= 0
  const auto cp = critical_points(-q1, p, FluxKind::Solids);
  const auto f1 = [&](double x) {return zone_flux_solids(x, 0.0, Zone::One, geom, op, p);};
  const double capacity = geom.A_U * f1(*cp.phi_sub_M);
  if (capacity < load) {
    throw Error(ErrorCode::SolidsOverload, "solids feed exceeds the zone-1 limiting flux");
  }
  const double upper = *cp.phi_m;
  const double varphi_1 = (geom.A_U * f1(upper) == load) ? upper :
    numerics::bisect([&](double x) {return geom.A_U * f1(x) - load;}, 0.0, upper);
  const double varphi_U = varphi_1 + geom.A_U * fb(varphi_1, p) / op.Q_U;
  return {varphi_1, varphi_U};
}

FeasibilityReport check_conditions(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom)
{
  validate(op);
  validate(p);
  validate(geom);

  FeasibilityReport r;
  r.phi_E = effluent_fraction(op);
  const double s_F = feed_flux(op, geom);
  const double q1 = q_zone1(op, geom);
  const double q2 = q_zone2(op, geom);

  // (Froth1)
  r.margin_froth1_lower = (op.Q_U - op.Q_W) - op.Q_F * (1.0 - op.phi_F / p.phi_c);
  r.margin_froth1_upper = op.Q_F * (1.0 - op.phi_F) - (op.Q_U - op.Q_W);
  r.margin_froth1 = std::min(r.margin_froth1_lower, r.margin_froth1_upper);
  r.froth1_ok = r.margin_froth1_lower > 0.0 && r.margin_froth1_upper >= 0.0;

  // (FIb)
  try {
    r.phi_bar2 = solve_fjc(op, p, geom);
  } catch (const Error & e) {
    if (e.code() != ErrorCode::NoRoot) {
      throw;
    }
    r.notes.emplace_back("no root of the feed jump condition: feed flux exceeds j_2 maximum");
  }
  if (r.phi_bar2) {
    const auto cp1 = critical_points(q1, p, FluxKind::Aggregate);
    if (cp1.phi_Z) {
      r.margin_fib = *cp1.phi_Z - *r.phi_bar2;
    } else {
      // j_1 has no positive zero: only phi_bar2 = 0 fits below it
      r.margin_fib = -*r.phi_bar2;
      if (op.Q_U == 0.0) {
        r.notes.emplace_back("FIb evaluated with phi_Z undefined (Q_U = 0)");
      }
    }
    r.fib_ok = r.margin_fib >= 0.0;
  } else {
    r.margin_fib = kNaN;
    r.fib_ok = false;
  }

  // (FIas)
  {
    const auto cps = critical_points(-q1, p, FluxKind::Solids);
    const double f1 = zone_flux_solids(*cps.phi_sub_M, 0.0, Zone::One, geom, op, p);
    r.margin_fias = geom.A_U * f1 - op.Q_F * op.psi_F;
    r.fias_ok = r.margin_fias >= 0.0;
    if (r.fias_ok) {
      try {
        const auto sol = solve_fjcs(op, p, geom);
        r.varphi_1 = sol.varphi_1;
        r.varphi_U = sol.varphi_U;
      } catch (const Error & e) {
        if (e.code() != ErrorCode::ZeroUnderflow) {
          throw;
        }
        r.fias_ok = false;
        r.notes.emplace_back("solids fed with zero underflow");
      }
    }
  }

  // (Froth3)
  if (r.phi_E <= 1.0) {
    const auto cp2 = critical_points(q2, p, FluxKind::Aggregate);
    // For q_2 < 0 the zone flux decreases all the way to phi = 1.
    const double phi_2M = cp2.phi_sub_M.value_or(1.0);
    if (phi_2M < r.phi_E) {
      r.margin_froth3 = zone2_flux(phi_2M, op, p, geom) - s_F;
      r.froth3_ok = r.margin_froth3 > 0.0;
    } else {
      r.margin_froth3 = zone2_flux(r.phi_E, op, p, geom) - s_F;
      r.froth3_ok = r.margin_froth3 > 0.0 || (r.margin_froth3 == 0.0 && phi_2M == r.phi_E);
    }
  } else {
    r.margin_froth3 = kNaN;
    r.froth3_ok = false;
  }

  // (Froth2)
  r.margin_froth2 = kNaN;
  if (r.phi_E <= p.phi_c) {
    r.froth_status = FrothStatus::NoFroth;
  } else if (!r.froth1_ok || !r.froth3_ok) {
    r.froth_status = FrothStatus::FillsColumn;
  } else {
    try {
      const FrothInterface iface = compute_z_fr(op, p, geom);
      r.marginal = iface.marginal;
      if (iface.marginal) {
        r.notes.emplace_back("marginal: j_2(phi_E) - s_F below singularity threshold");
      }
      if (std::isfinite(iface.z_fr)) {
        r.margin_froth2 = iface.z_fr - geom.z_F;
      }
      if (iface.out_of_column) {
        r.froth_status = FrothStatus::FillsColumn;
      } else {
        r.froth_status = FrothStatus::InColumn;
        r.z_fr = iface.z_fr;
      }
    } catch (const Error & e) {
      if (e.code() != ErrorCode::FrothConditionViolated) {
        throw;
      }
      r.froth_status = FrothStatus::FillsColumn;
      r.notes.emplace_back(e.what());
    }
  }
  r.froth2_ok = r.z_fr.has_value() && r.margin_froth2 > 0.0;

  r.notes.emplace_back("conditions are necessary, not sufficient, for a desired steady state");
  return r;
}

SteadyProfile desired_steady_state(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom, const Eigen::Ref<const Eigen::VectorXd> & z)
{
  const FeasibilityReport report = check_conditions(op, p, geom);
  if (!report.feasible()) {
    throw Error(ErrorCode::Infeasible, "operating point violates the steady-state conditions");
  }
  SteadyProfile prof;
  prof.z = z;
  prof.phi = Eigen::VectorXd::Zero(z.size());
  prof.psi = Eigen::VectorXd::Zero(z.size());
  prof.phi_E = report.phi_E;
  prof.z_fr = report.z_fr;
  prof.phi_bar2 = report.phi_bar2;
  prof.varphi_1 = report.varphi_1.value_or(0.0);
  prof.varphi_U = report.varphi_U.value_or(0.0);

  const double z_fr = *report.z_fr;
  std::vector<Eigen::Index> froth_idx;
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    const double h = z[k];
    if (h >= geom.z_E) {
      prof.phi[k] = report.phi_E;
    } else if (h >= z_fr) {
      froth_idx.push_back(k);
    } else if (h >= geom.z_F) {
      prof.phi[k] = *report.phi_bar2;
    } else if (h >= geom.z_U) {
      prof.psi[k] = *prof.varphi_1;  // phi = 0, so psi = varphi
    } else {
      prof.psi[k] = prof.varphi_U;
    }
  }
  if (!froth_idx.empty()) {
    Eigen::VectorXd heights(static_cast<Eigen::Index>(froth_idx.size()));
    for (std::size_t j = 0; j < froth_idx.size(); ++j) {
      heights[static_cast<Eigen::Index>(j)] = z[froth_idx[j]];
    }
    const Eigen::VectorXd branch = froth_profile(op, p, geom, heights);
    for (std::size_t j = 0; j < froth_idx.size(); ++j) {
      prof.phi[froth_idx[j]] = branch[static_cast<Eigen::Index>(j)];
    }
  }
  return prof;
}

SteadyProfile desired_steady_state(const OperatingPoint & op, const ConstitutiveParams & p,
  const ColumnGeometry & geom, int n)
{
  if (n < 2) {
    throw Error(ErrorCode::DomainError, "need at least two sample heights");
  }
  const Eigen::VectorXd z = Eigen::VectorXd::LinSpaced(n, geom.z_U, geom.z_E);
  return desired_steady_state(op, p, geom, z);
}

}  // namespace flotcol
