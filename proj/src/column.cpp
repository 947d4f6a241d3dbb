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

#include "flotcol/column.hpp"

#include <cmath>

namespace flotcol
{

void validate(const ColumnGeometry & geom)
{
  if (!(geom.z_U < geom.z_F && geom.z_F < geom.z_E)) {
    throw Error(ErrorCode::InvalidGeometry, "heights must satisfy z_U < z_F < z_E");
  }
  if (!(geom.A_U > 0.0) || !(geom.A_E > 0.0)) {
    throw Error(ErrorCode::InvalidGeometry, "cross-sectional areas must be positive");
  }
}

void validate(const OperatingPoint & op)
{
  if (!(op.Q_U >= 0.0) || !(op.Q_F > 0.0) || !(op.Q_W >= 0.0)) {
    throw Error(ErrorCode::InvalidOperatingPoint, "require Q_U >= 0, Q_F > 0, Q_W >= 0");
  }
  if (!(op.phi_F >= 0.0) || !(op.psi_F >= 0.0) || !(op.phi_F + op.psi_F <= 1.0)) {
    throw Error(ErrorCode::InvalidOperatingPoint,
      "feed fractions must be nonnegative with phi_F + psi_F <= 1");
  }
  if (!(op.Q_E() > 0.0)) {
    throw Error(ErrorCode::NonPositiveEffluentFlow, "Q_E = Q_W + Q_F - Q_U must be positive");
  }
}

double q_effluent(const OperatingPoint & op, const ColumnGeometry & geom)
{
  return (-op.Q_U + op.Q_F + op.Q_W) / geom.A_E;
}

double q_zone2(const OperatingPoint & op, const ColumnGeometry & geom)
{
  return (-op.Q_U + op.Q_F) / geom.A_E;
}

double q_zone1(const OperatingPoint & op, const ColumnGeometry & geom)
{
  return -op.Q_U / geom.A_U;
}

double feed_flux(const OperatingPoint & op, const ColumnGeometry & geom)
{
  return op.Q_F * op.phi_F / geom.A_E;
}

Zone zone_at(double z, const ColumnGeometry & geom)
{
  if (z >= geom.z_E) {
    return Zone::Effluent;
  }
  if (z >= geom.z_F) {
    return Zone::Two;
  }
  if (z >= geom.z_U) {
    return Zone::One;
  }
  return Zone::Underflow;
}

double bulk_velocity(Zone zone, const ColumnGeometry & geom, const OperatingPoint & op)
{
  switch (zone) {
    case Zone::Effluent: return q_effluent(op, geom);
    case Zone::Two: return q_zone2(op, geom);
    case Zone::One:
    case Zone::Underflow: return q_zone1(op, geom);
  }
  return 0.0;
}

double bulk_velocity(double z, const ColumnGeometry & geom, const OperatingPoint & op)
{
  return bulk_velocity(zone_at(z, geom), geom, op);
}

double zone_flux_aggregate(double phi, Zone zone, const ColumnGeometry & geom,
  const OperatingPoint & op, const ConstitutiveParams & p)
{
  detail::check_unit_interval(phi, "zone_flux_aggregate");
  const double q = bulk_velocity(zone, geom, op);
  if (zone == Zone::Effluent || zone == Zone::Underflow) {
    return q * phi;
  }
  return q * phi + batch_flux_jb(phi, p);
}

double zone_flux_solids(double varphi, double phi, Zone zone, const ColumnGeometry & geom,
  const OperatingPoint & op, const ConstitutiveParams & p)
{
  detail::check_unit_interval(varphi, "zone_flux_solids");
  detail::check_unit_interval(phi, "zone_flux_solids");
  const double q = bulk_velocity(zone, geom, op);
  if (zone == Zone::Effluent || zone == Zone::Underflow) {
    return -(1.0 - phi) * q * varphi;
  }
  return (1.0 - phi) * fb(varphi, p) + (batch_flux_jb(phi, p) - (1.0 - phi) * q) * varphi;
}

}  // namespace flotcol
