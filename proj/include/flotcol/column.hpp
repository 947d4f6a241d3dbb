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

#ifndef FLOTCOL_COLUMN_HPP_
#define FLOTCOL_COLUMN_HPP_

#include "flotcol/constitutive.hpp"

namespace flotcol
{

/// Vessel heights and the two-piece cross-sectional area
/// (A_E at and above the feed level, A_U below it).
struct ColumnGeometry
{
  double z_U = 0.0;
  double z_F = 0.33;
  double z_E = 1.0;
  double A_U = 8.365e-3;
  double A_E = 7.225e-3;

  double height() const {return z_E - z_U;}
  double area(double z) const {return z >= z_F ? A_E : A_U;}

  bool operator==(const ColumnGeometry &) const = default;
};

/// Volumetric flows [m^3/s] and feed volume fractions.
struct OperatingPoint
{
  double Q_U = 0.0;
  double Q_F = 0.0;
  double Q_W = 0.0;
  double phi_F = 0.0;
  double psi_F = 0.0;

  double Q_E() const {return Q_W + Q_F - Q_U;}

  bool operator==(const OperatingPoint &) const = default;
};

enum class Zone { Underflow, One, Two, Effluent };

void validate(const ColumnGeometry & geom);
void validate(const OperatingPoint & op);

double q_effluent(const OperatingPoint & op, const ColumnGeometry & geom);
double q_zone2(const OperatingPoint & op, const ColumnGeometry & geom);
double q_zone1(const OperatingPoint & op, const ColumnGeometry & geom);
/// Feed mass flux of aggregates per unit area, Q_F phi_F / A_E.
double feed_flux(const OperatingPoint & op, const ColumnGeometry & geom);

/// Zone containing height z; intervals are closed at their lower end.
Zone zone_at(double z, const ColumnGeometry & geom);

double bulk_velocity(double z, const ColumnGeometry & geom, const OperatingPoint & op);
double bulk_velocity(Zone zone, const ColumnGeometry & geom, const OperatingPoint & op);

/// Convective aggregate flux j_k(phi) of a zone (positive upward).
double zone_flux_aggregate(double phi, Zone zone, const ColumnGeometry & geom,
  const OperatingPoint & op, const ConstitutiveParams & p);

/// Convective solids flux f_k(varphi, phi) of a zone (positive downward).
double zone_flux_solids(double varphi, double phi, Zone zone, const ColumnGeometry & geom,
  const OperatingPoint & op, const ConstitutiveParams & p);

}  // namespace flotcol

#endif  // FLOTCOL_COLUMN_HPP_
