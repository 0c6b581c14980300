#pragma once

#include <cstdint>
#include <span>

#include "schurasym/exact.hpp"
#include "schurasym/weights.hpp"

namespace schurasym {

/// Saddle point of y log(xi) - F(xi; f) on the branch xi0 > f(0).
struct SaddleResult {
  double xi0 = 0.0;
  double eta0 = 0.0;          // log xi0
  double value = 0.0;         // y eta0 - F(xi0; f)
  double second_deriv = 0.0;  // d^2 F(e^eta; f)/d eta^2 at eta0, equal to -g'(xi0) xi0
  double residual = 0.0;      // |g(xi0)|
  int iterations = 0;
};

/// Q(u) = sum_j gamma_j log[(u^m - x_j^m)/(u - x_j)], each quotient taken as
/// the polynomial sum_r u^r x_j^{m-1-r} (principal log per term).
Complex q_eval(const WeightSpectrum& spectrum, int m, Complex u);

/// dQ/du = sum_j gamma_j [m u^{m-1}/(u^m - x_j^m) - 1/(u - x_j)].
Complex q_derivative(const WeightSpectrum& spectrum, int m, Complex u);

/// sum_i [Q(u_i) - Q(x_i)]; x_head and U have equal length k.
Complex theorem_limit(const WeightSpectrum& spectrum, int m, std::span<const Complex> x_head,
                      std::span<const Complex> U);

/// F(xi; f) = sum_j gamma_j log(xi - a_j), the exact value of the integral of
/// log(xi - f(t)) over [0,1] for the step profile.
Complex F_eval(const Profile& profile, Complex xi);

/// g(xi) = y - sum_j gamma_j xi/(xi - a_j).
double g_eval(const Profile& profile, double y, double xi);

/// g'(xi) = sum_j gamma_j a_j/(xi - a_j)^2.
double g_derivative(const Profile& profile, double xi);

/// Unique root of g on (a_1, inf) for y > 1: geometric bracket expansion,
/// bisection to 1e-13 relative (at most 200 steps), one Newton polish.
SaddleResult critical_point(const Profile& profile, double y);

/// y = (lambda1 + N - 1)/(mN).
double saddle_height(std::int64_t lambda1, std::int64_t N, int m);

/// Leading steepest-descent term y eta1 - F(e^eta1; f) of
/// (1/N) log s_lambda(W)/s_staircase(W). Throws if y <= 1.
double steepest_value(const Profile& profile, std::int64_t lambda1, std::int64_t N, int m);

/// delta(eps) = 1/2 log(1 + 2 f1 xi0 (1 - cos eps)/(xi0 - f1)^2).
double delta_eps(double xi0, double f1, double eps);

}  // namespace schurasym
