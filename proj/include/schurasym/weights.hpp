#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "schurasym/exact.hpp"

namespace schurasym {

/// The n distinct variable values x_1 > ... > x_n > 0 and their asymptotic
/// densities gamma_j (summing to exactly 1).
class WeightSpectrum {
 public:
  /// Throws std::invalid_argument unless values are strictly decreasing and
  /// positive, densities lie in [0,1] and sum to 1, and lengths agree.
  static WeightSpectrum create(std::vector<ExactValue> values, std::vector<ExactValue> densities);

  std::size_t size() const { return values_.size(); }
  const std::vector<ExactValue>& values() const { return values_; }
  const std::vector<ExactValue>& densities() const { return densities_; }

 private:
  WeightSpectrum(std::vector<ExactValue> v, std::vector<ExactValue> d)
      : values_(std::move(v)), densities_(std::move(d)) {}
  std::vector<ExactValue> values_;
  std::vector<ExactValue> densities_;
};

/// A concrete tuple X = (x_1, ..., x_N): K_j copies of each spectrum value,
/// largest value first.
struct VariableSet {
  std::vector<ExactValue> entries;
  std::vector<std::size_t> multiplicities;

  std::size_t size() const { return entries.size(); }
};

/// W = (u_1, ..., u_k, x_{k+1}, ..., x_N).
struct PerturbedSet {
  std::vector<GaussianRational> entries;
  std::size_t k = 0;

  std::size_t size() const { return entries.size(); }
  bool is_real() const;
  /// Throws std::domain_error if some perturbation is non-real.
  std::vector<ExactValue> real_entries() const;
};

/// Atoms a_j = x_j^m with weights gamma_j; zero-weight atoms are dropped
/// since they never contribute to f, F or g.
class Profile {
 public:
  Profile(const WeightSpectrum& spectrum, int m);

  int order() const { return m_; }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<ExactValue>& atoms() const { return atoms_; }
  const std::vector<ExactValue>& weights() const { return weights_; }
  std::span<const double> atoms_d() const { return atoms_d_; }
  std::span<const double> weights_d() const { return weights_d_; }

  /// f(0), the largest atom.
  double top() const { return atoms_d_.front(); }
  /// f(1), the smallest atom.
  double bottom() const { return atoms_d_.back(); }

 private:
  int m_;
  std::vector<ExactValue> atoms_;
  std::vector<ExactValue> weights_;
  std::vector<double> atoms_d_;
  std::vector<double> weights_d_;
};

/// Multiplicities by cumulative half-up rounding:
/// K_j = round(N * sum_{i<=j} gamma_i) - round(N * sum_{i<j} gamma_i).
/// Requires N >= n.
VariableSet realize(const WeightSpectrum& spectrum, std::size_t N);

/// Replaces the first U.size() entries of X. Throws if U is longer than X.
PerturbedSet perturb(const VariableSet& X, std::span<const GaussianRational> U);
PerturbedSet perturb(const VariableSet& X, std::span<const ExactValue> U);

/// Step function f(t) = a_i on [sum_{j<i} gamma_j, sum_{j<=i} gamma_j).
/// Throws std::out_of_range for t outside [0,1).
const ExactValue& f_profile(const Profile& profile, const ExactValue& t);
const ExactValue& f_profile(const Profile& profile, double t);

/// w_sigma(i)^m with the bases sorted non-increasingly. Real entries only.
std::vector<ExactValue> sorted_powers(const PerturbedSet& W, int m);

struct Discrepancy {
  double r1 = 0.0;
  double r_inf = 0.0;
};

/// R1 = sum_i |w^_i - f(i/N)| and R_inf = max_i |w^_i - f(i/N)|, with f(1)
/// taken as the smallest atom.
Discrepancy discrepancy(const PerturbedSet& W, int m, const Profile& profile);

}  // namespace schurasym
