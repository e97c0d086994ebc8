#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcfpost/material.hpp"
#include "lcfpost/strain_life.hpp"

namespace lcfpost {

// One strain-controlled specimen test. `censored` marks a runout: the test
// stopped at `cycles` before the first crack.
struct SpecimenRecord {
  double eps_a = 0.0;
  double temperature = 0.0;
  double gauge_area = 1.0;
  double cycles = 0.0;
  bool censored = false;
};

// Delimited text with header eps_a temperature gauge_area cycles censored.
std::vector<SpecimenRecord> load_specimen_file(const std::string& path);
void save_specimen_file(const std::string& path, std::span<const SpecimenRecord> records);

// Estimation setup. Free parameters are sigma_f, b_exp, eps_f, c_exp per
// knot plus one global shape m; young/ro_K/ro_n are inputs held fixed.
struct CalibrationProblem {
  std::vector<SpecimenRecord> records;
  std::vector<double> knots;
  std::vector<double> young;  // per knot, fixed
  std::vector<double> ro_K;   // per knot, fixed (unused by specimen terms,
  std::vector<double> ro_n;   //   carried into the fitted tables)
  bool allow_temperature_clamp = false;
  double reference_area = 1.0;  // documentation convention: calibrated
                                // coefficients are per unit of this area
  CmbOptions cmb;

  std::size_t knot_count() const { return knots.size(); }
  std::size_t theta_size() const { return 1 + 4 * knots.size(); }

  // Record sanity, temperature coverage, and at least one uncensored
  // record per nearest-knot neighborhood.
  void validate() const;

  // Assembles full tables from free CMB values + the fixed columns.
  MaterialTables tables_from(std::span<const double> sigma_f, std::span<const double> b_exp,
                             std::span<const double> eps_f, std::span<const double> c_exp) const;
};

// Natural-units free parameter vector:
//   theta = [m, sigma_f[0..K), b_exp[0..K), eps_f[0..K), c_exp[0..K)]
MaterialTables theta_tables(std::span<const double> theta, const CalibrationProblem& problem);
std::vector<double> pack_theta(double shape_m, const MaterialTables& tables);

struct FitDiagnostics {
  bool converged = false;
  int iterations = 0;
  int evaluations = 0;
  int restarts_used = 0;
  double final_diameter = 0.0;
  // m finished within 5% of the shape_max option: the data carry no
  // scatter information and the reported m is a bound, not an estimate.
  bool boundary_shape = false;
  std::uint64_t clamp_below = 0;
  std::uint64_t clamp_above = 0;
};

struct FittedModel {
  double shape_m = 1.0;
  MaterialTables tables;
  double log_likelihood = 0.0;
  FitDiagnostics diagnostics;
};

struct FitOptions {
  int restarts = 3;
  double restart_scale = 0.25;
  std::uint64_t restart_seed = 902740;  // fixed default; all restarts are deterministic
  double diameter_tol = 1e-8;
  int max_iterations = 50000;
  double initial_step = 0.25;
  double shape_max = 500.0;
};

// Uniform-gauge specialization of the scale integral:
// eta_i = N_det(eps_a, T) * gauge_area^(-1/m).
double specimen_eta(const SpecimenRecord& rec, const MaterialTables& tables, double shape_m,
                    const CmbOptions& opts = {});

// Weibull log likelihood over the records; censored records contribute the
// survival term only. Returns -inf (sentinel, not an exception) when any
// record's CMB inversion fails or a constraint is violated.
double log_likelihood(std::span<const double> theta, const CalibrationProblem& problem);

// Data-driven start: per-knot alternating log-log regressions for the CMB
// values, median-rank Weibull fit of life ratios for m.
std::vector<double> default_initial_theta(const CalibrationProblem& problem);

// Maximum likelihood fit via Nelder-Mead in a transformed unconstrained
// space (log for coefficients, -log magnitudes for exponents,
// 1 + softplus for m), with deterministic random restarts. Throws
// ComputationError on infeasible init or non-convergence.
FittedModel mle_fit(const CalibrationProblem& problem,
                    std::span<const double> init_theta = {}, const FitOptions& options = {});

void save_fitted_model(const std::string& path, const FittedModel& model,
                       const std::string& header = "");
FittedModel load_fitted_model(const std::string& path);

}  // namespace lcfpost
