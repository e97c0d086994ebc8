#pragma once

#include "lcfpost/material.hpp"

namespace lcfpost {

struct CmbOptions {
  double n_min = 1e-3;
  double n_max = 1e12;
  // When the strain amplitude falls below the n_max strain ("infinite
  // life"), return n_max instead of throwing. High-strain inputs below
  // n_min always throw.
  bool clamp_life = false;
};

// Strain-life curve: (sigma_f/E) (2N)^b + eps_f (2N)^c. Strictly
// decreasing in N for b, c < 0.
double cmb_strain(double n_cycles, const PointParams& p);

// Inverts cmb_strain: the unique N with cmb_strain(N) == eps_a, to 1e-10
// relative. Newton in log(2N) with a bisection safeguard. Throws
// ComputationError when eps_a lies outside [cmb_strain(n_max),
// cmb_strain(n_min)] (subject to clamp_life).
double solve_ndet(double eps_a, const PointParams& p, const CmbOptions& opts = {});

}  // namespace lcfpost
