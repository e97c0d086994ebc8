#pragma once

#include <functional>
#include <span>
#include <vector>

namespace lcfpost {

struct SimplexOptions {
  int max_iterations = 50000;
  // Convergence: max infinity-norm distance of any vertex from the best
  // vertex falls below this.
  double diameter_tol = 1e-8;
};

struct SimplexResult {
  std::vector<double> best;
  double fbest = 0.0;
  int iterations = 0;
  int evaluations = 0;
  double diameter = 0.0;
  bool converged = false;
};

// Standard Nelder-Mead minimization with deterministic tie-breaking.
// +inf objective values are legal and act as a retreat barrier.
SimplexResult nelder_mead_minimize(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> start, double initial_step,
    const SimplexOptions& options = {});

}  // namespace lcfpost
