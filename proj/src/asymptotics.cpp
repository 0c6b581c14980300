#include "schurasym/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schurasym {

namespace {

// sum_{r=0}^{m-1} u^r x^{m-1-r} and its u-derivative
std::pair<Complex, Complex> quotient_poly(Complex u, double x, int m) {
  Complex p = 0.0;
  Complex dp = 0.0;
  Complex upow = 1.0;  // u^r
  Complex upow_prev = 0.0;  // u^{r-1}
  for (int r = 0; r < m; ++r) {
    const double xpow = std::pow(x, m - 1 - r);
    p += upow * xpow;
    if (r > 0) dp += static_cast<double>(r) * upow_prev * xpow;
    upow_prev = upow;
    upow *= u;
  }
  return {p, dp};
}

constexpr int kMaxIterations = 200;
constexpr double kRelTol = 1e-13;

}  // namespace

Complex q_eval(const WeightSpectrum& spectrum, int m, Complex u) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  Complex total = 0.0;
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    const auto [p, dp] = quotient_poly(u, spectrum.values()[j].get_d(), m);
    if (p == Complex(0.0)) throw std::domain_error("Q evaluated at a zero of (u^m - x^m)/(u - x)");
    total += spectrum.densities()[j].get_d() * std::log(p);
  }
  return total;
}

Complex q_derivative(const WeightSpectrum& spectrum, int m, Complex u) {
  Complex total = 0.0;
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    const auto [p, dp] = quotient_poly(u, spectrum.values()[j].get_d(), m);
    if (p == Complex(0.0)) throw std::domain_error("Q' evaluated at a pole");
    total += spectrum.densities()[j].get_d() * dp / p;
  }
  return total;
}

Complex theorem_limit(const WeightSpectrum& spectrum, int m, std::span<const Complex> x_head,
                      std::span<const Complex> U) {
  if (x_head.size() != U.size())
    throw std::invalid_argument("theorem_limit needs as many perturbations as head values");
  Complex total = 0.0;
  for (std::size_t i = 0; i < U.size(); ++i)
    total += q_eval(spectrum, m, U[i]) - q_eval(spectrum, m, x_head[i]);
  return total;
}

Complex F_eval(const Profile& profile, Complex xi) {
  Complex total = 0.0;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    const Complex d = xi - profile.atoms_d()[j];
    if (d == Complex(0.0)) throw std::domain_error("F evaluated at an atom of f");
    total += profile.weights_d()[j] * std::log(d);
  }
  return total;
}

double g_eval(const Profile& profile, double y, double xi) {
  double s = 0.0;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    const double d = xi - profile.atoms_d()[j];
    if (d == 0.0) throw std::domain_error("g evaluated at an atom of f");
    s += profile.weights_d()[j] * xi / d;
  }
  return y - s;
}

double g_derivative(const Profile& profile, double xi) {
  double s = 0.0;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    const double d = xi - profile.atoms_d()[j];
    s += profile.weights_d()[j] * profile.atoms_d()[j] / (d * d);
  }
  return s;
}

SaddleResult critical_point(const Profile& profile, double y) {
  if (!(y > 1.0)) throw std::domain_error("critical_point requires y > 1");
  const double a1 = profile.top();

  double lo = a1 * (1.0 + std::ldexp(1.0, -20));
  double hi = 2.0 * a1 * y / (y - 1.0);
  for (int i = 0; g_eval(profile, y, lo) >= 0.0; ++i) {
    if (i == kMaxIterations) throw std::runtime_error("could not bracket the saddle from below");
    lo = a1 + 0.5 * (lo - a1);
  }
  for (int i = 0; g_eval(profile, y, hi) <= 0.0; ++i) {
    if (i == kMaxIterations) throw std::runtime_error("could not bracket the saddle from above");
    hi *= 2.0;
  }

  SaddleResult out;
  int it = 0;
  while (hi - lo > kRelTol * hi && it < kMaxIterations) {
    const double mid = 0.5 * (lo + hi);
    if (g_eval(profile, y, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
    ++it;
  }
  double xi = 0.5 * (lo + hi);
  double gx = g_eval(profile, y, xi);
  // g' > 0 on the bracket, so a Newton step from inside stays well behaved
  const double newton = xi - gx / g_derivative(profile, xi);
  if (newton > a1) {
    const double gn = g_eval(profile, y, newton);
    if (std::fabs(gn) <= std::fabs(gx)) {
      xi = newton;
      gx = gn;
    }
  }

  out.xi0 = xi;
  out.eta0 = std::log(xi);
  out.value = y * out.eta0 - F_eval(profile, xi).real();
  out.second_deriv = -g_derivative(profile, xi) * xi;
  out.residual = std::fabs(gx);
  out.iterations = it;
  return out;
}

double saddle_height(std::int64_t lambda1, std::int64_t N, int m) {
  return static_cast<double>(lambda1 + N - 1) / (static_cast<double>(m) * static_cast<double>(N));
}

double steepest_value(const Profile& profile, std::int64_t lambda1, std::int64_t N, int m) {
  if (m != profile.order()) throw std::invalid_argument("profile order does not match m");
  return critical_point(profile, saddle_height(lambda1, N, m)).value;
}

double delta_eps(double xi0, double f1, double eps) {
  if (!(f1 > 0.0 && xi0 > f1)) throw std::domain_error("delta_eps requires xi0 > f1 > 0");
  if (!(eps >= 0.0 && eps <= std::numbers::pi)) throw std::domain_error("eps must lie in [0, pi]");
  const double d = xi0 - f1;
  return 0.5 * std::log1p(2.0 * f1 * xi0 * (1.0 - std::cos(eps)) / (d * d));
}

}  // namespace schurasym
