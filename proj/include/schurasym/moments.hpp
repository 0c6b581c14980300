#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schurasym/exact.hpp"

namespace schurasym {

class MomentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters of the contour-integral moment formula for the limiting
/// counting measure at level kappa.
struct MomentProblem {
  std::vector<double> x;  // distinct positive atoms x_1..x_n
  /// (i, y_i) for i in I_2 intersected with {1..n}; indices are 1-based.
  std::vector<std::pair<std::size_t, double>> y_weights;
  double kappa = 0.5;
  int m = 1;

  std::size_t n() const { return x.size(); }

  /// Throws std::invalid_argument unless 0 < kappa < 1, the atoms are
  /// distinct and positive, m >= 1, and every y_i > 0 with a valid index.
  static MomentProblem create(std::vector<double> x,
                              std::vector<std::pair<std::size_t, double>> y_weights,
                              double kappa, int m);
};

struct Contour {
  Complex center;
  double radius = 1.0;
  std::size_t points = 256;  // starting node count for the trapezoidal rule
};

/// Q'_kappa(z). The per-atom term m z^{m-1}/(z^m - x^m) - 1/(z - x) is
/// evaluated as P'(z)/P(z) with P(z) = sum_r z^r x^{m-1-r}, which removes the
/// cancelling poles at z = x exactly.
Complex qprime_kappa(const MomentProblem& problem, Complex z);

/// (1/z) (z Q'_kappa(z) + sum_j z/(n(z - x_j)))^{p+1}, evaluated as
/// z^p (Q'_kappa(z) + sum_j 1/(n(z - x_j)))^{p+1} so that z = 0 is harmless.
Complex integrand(const MomentProblem& problem, int p, Complex z);

/// Poles that a moment contour must leave outside: x_j e^{2 pi i k/m} for
/// k = 1..m-1, and -1/y_i.
std::vector<Complex> excluded_singularities(const MomentProblem& problem);

struct ContourCheck {
  bool ok = true;
  std::string message;
  std::optional<Complex> offender;
  double distance = 0.0;

  explicit operator bool() const { return ok; }
};

inline constexpr double kContourMargin = 1e-6;

ContourCheck validate_contour(const MomentProblem& problem, const Contour& contour);

/// Circle about (x_max + x_min)/2 of radius (x_max - x_min)/2 + gap/2, where
/// gap is the distance from [x_min, x_max] to the nearest excluded
/// singularity (x_max when there is none). Not validated here.
Contour default_contour(const MomentProblem& problem);

struct QuadratureSettings {
  std::size_t max_points = std::size_t{1} << 14;
  double tolerance = 1e-10;
  double imag_tolerance = 1e-8;
};

/// p-th moment by the trapezoidal rule on the circle, doubling the node
/// count until successive estimates agree. Throws MomentError on an invalid
/// contour, non-convergence, or a non-negligible imaginary part.
double moment_quadrature(const MomentProblem& problem, int p, const Contour& contour,
                         const QuadratureSettings& settings = {});

/// Independent route: one small circle per atom (radius a quarter of the
/// distance to the nearest other singularity, atom or origin), summed.
double moment_residues(const MomentProblem& problem, int p,
                       const QuadratureSettings& settings = {});

}  // namespace schurasym
