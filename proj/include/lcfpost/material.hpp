#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

namespace lcfpost {

// Strain-life and cyclic stress-strain parameters at one temperature.
struct PointParams {
  double sigma_f = 0.0;  // fatigue strength coefficient, stress units
  double b_exp = 0.0;    // fatigue strength exponent, < 0
  double eps_f = 0.0;    // fatigue ductility coefficient
  double c_exp = 0.0;    // fatigue ductility exponent, < 0
  double young = 0.0;    // Young's modulus, stress units
  double ro_K = 0.0;     // Ramberg-Osgood cyclic strength coefficient
  double ro_n = 0.0;     // Ramberg-Osgood cyclic hardening exponent, (0,1]
};

// Out-of-range temperature lookups clamp to the nearest knot; the counts
// here are the diagnostic record of those events.
struct ClampStats {
  std::atomic<std::uint64_t> below{0};
  std::atomic<std::uint64_t> above{0};

  std::uint64_t total() const {
    return below.load(std::memory_order_relaxed) + above.load(std::memory_order_relaxed);
  }
};

// Temperature-knot tables for all point parameters. One shared ascending
// knot vector; values interpolate linearly between knots and clamp outside.
struct MaterialTables {
  std::vector<double> knots;
  std::vector<double> sigma_f;
  std::vector<double> b_exp;
  std::vector<double> eps_f;
  std::vector<double> c_exp;
  std::vector<double> young;
  std::vector<double> ro_K;
  std::vector<double> ro_n;

  std::size_t knot_count() const { return knots.size(); }

  PointParams at_knot(std::size_t k) const;

  // Throws ValidationError on empty/non-ascending knots, non-finite values
  // or sign-constraint violations.
  void validate() const;
};

struct MaterialConfig {
  MaterialTables tables;
  // Stress amplitude of one shutdown/operate cycle as a fraction of the
  // operating von Mises stress.
  double amplitude_factor = 0.5;
};

// Block-structured text file: `TABLE <name>` blocks with (temperature,
// value) rows plus an optional `amplitude_factor <v>` line.
MaterialConfig load_material_file(const std::string& path);
void save_material_tables(const std::string& path, const MaterialTables& tables,
                          double amplitude_factor);

PointParams params_at(const MaterialTables& tables, double temperature,
                      ClampStats* stats = nullptr);

// sqrt(1/2 [(sxx-syy)^2 + (syy-szz)^2 + (szz-sxx)^2] + 3 (sxy^2+syz^2+szx^2))
double von_mises_amplitude(const std::array<double, 6>& stress);

// Elastic-plastic strain amplitude from the elastic stress amplitude:
// solves s * (s/E + (s/K')^(1/n')) = sigma_el^2 / E for s in [0, sigma_el]
// and returns the strain at the solution.
double neuber_correction(double sigma_el, const PointParams& p);

}  // namespace lcfpost
