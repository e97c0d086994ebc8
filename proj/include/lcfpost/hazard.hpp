#pragma once

#include <span>
#include <vector>

#include "lcfpost/material.hpp"
#include "lcfpost/quadrature.hpp"
#include "lcfpost/strain_life.hpp"

namespace lcfpost {

struct WeibullLife {
  double shape_m = 1.0;   // >= 1
  double scale_eta = 1.0; // cycles, > 0
};

// Per-quadrature-point deterministic scale values, aligned with the
// quadrature point list.
struct NdetField {
  std::vector<double> values;
};

// Sample-independent per-point data: quadrature weight*area_scale,
// temperature and the equivalent strain amplitude (von Mises -> cycle
// amplitude factor -> Neuber). Elasticity and Ramberg-Osgood tables are
// held fixed in calibration, so this cache is valid across bootstrap
// samples.
struct SurfaceLoading {
  std::vector<double> wa;
  std::vector<double> temperature;
  std::vector<double> eps_a;
};

SurfaceLoading compute_surface_loading(const SurfaceQuadrature& quad,
                                       const MaterialTables& tables,
                                       double amplitude_factor,
                                       ClampStats* stats = nullptr);

// Full per-point pipeline: params_at -> von Mises -> amplitude factor ->
// Neuber -> CMB inversion. Out-of-range CMB errors carry the face and
// point location unless clamp_life is set.
NdetField evaluate_ndet_field(const SurfaceQuadrature& quad, const MaterialTables& tables,
                              double amplitude_factor, const CmbOptions& opts = {},
                              ClampStats* stats = nullptr, int workers = 1);

// CMB stage only, reusing a loading cache.
NdetField evaluate_ndet_field(const SurfaceLoading& loading, const MaterialTables& tables,
                              const CmbOptions& opts = {}, int workers = 1);

// eta = (Σ wa * N^-m)^(-1/m). Terms are evaluated as exp(-m log N) and
// combined with the deterministic pairwise reduction.
double scale_eta(const SurfaceQuadrature& quad, const NdetField& ndet, double shape_m);
double scale_eta(std::span<const double> wa, std::span<const double> ndet, double shape_m);

// F_N(n) = 1 - exp(-(n/eta)^m)
double pof(double n, const WeibullLife& life);

// rho(n) = (m/N)(n/N)^(m-1)
double hazard_density(double n, double ndet_value, double shape_m);

// h(n) = Σ wa * rho(n); equals (m/eta)(n/eta)^(m-1) with eta from
// scale_eta.
double hazard_rate(double n, const SurfaceQuadrature& quad, const NdetField& ndet,
                   double shape_m);

// Area-weighted face means of rho, for the grid exporter.
std::vector<double> hazard_face_values(double n, const SurfaceQuadrature& quad,
                                       const NdetField& ndet, double shape_m);

}  // namespace lcfpost
