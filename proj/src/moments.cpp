#include "schurasym/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace schurasym {

namespace {

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::fabs(z.imag()) << "i";
  return os.str();
}

double distance_to_segment(Complex s, double a, double b) {
  if (s.real() < a) return std::abs(s - Complex(a));
  if (s.real() > b) return std::abs(s - Complex(b));
  return std::fabs(s.imag());
}

struct CircleIntegral {
  Complex value;
  std::size_t nodes;
};

// (1/(2 pi i)) times the contour integral of f over the circle, by the
// trapezoidal rule; old nodes are reused on each doubling.
template <class F>
CircleIntegral circle_integral(F&& f, Complex center, double radius, std::size_t start,
                               const QuadratureSettings& s) {
  auto node_term = [&](std::size_t k, std::size_t M) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(M);
    const Complex e = std::polar(1.0, theta);
    return f(center + radius * e) * e;
  };
  std::size_t M = std::max<std::size_t>(start, 4);
  Complex sum = 0.0;
  for (std::size_t k = 0; k < M; ++k) sum += node_term(k, M);
  Complex estimate = radius * sum / static_cast<double>(M);
  while (2 * M <= s.max_points) {
    for (std::size_t k = 1; k < 2 * M; k += 2) sum += node_term(k, 2 * M);
    M *= 2;
    const Complex next = radius * sum / static_cast<double>(M);
    const double change = std::abs(next - estimate);
    estimate = next;
    if (change <= s.tolerance * std::max(1.0, std::abs(next))) return {estimate, M};
  }
  throw MomentError("trapezoidal rule did not converge with " + std::to_string(M) + " nodes");
}

double real_moment(Complex total, int p, const QuadratureSettings& s) {
  const Complex moment = total / static_cast<double>(p + 1);
  if (std::fabs(moment.imag()) > s.imag_tolerance * std::max(1.0, std::fabs(moment.real())))
    throw MomentError("moment has imaginary part " + std::to_string(moment.imag()) +
                      "; the contour likely encloses an excluded singularity");
  return moment.real();
}

}  // namespace

MomentProblem MomentProblem::create(std::vector<double> x,
                                    std::vector<std::pair<std::size_t, double>> y_weights,
                                    double kappa, int m) {
  if (x.empty()) throw std::invalid_argument("moment problem needs at least one atom");
  if (!(kappa > 0.0 && kappa < 1.0)) throw std::invalid_argument("kappa must lie in (0,1)");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !std::isfinite(x[i]))
      throw std::invalid_argument("atoms must be positive and finite");
    for (std::size_t j = 0; j < i; ++j)
      if (x[i] == x[j]) throw std::invalid_argument("atoms must be distinct");
  }
  for (std::size_t a = 0; a < y_weights.size(); ++a) {
    const auto [idx, y] = y_weights[a];
    if (idx < 1 || idx > x.size())
      throw std::invalid_argument("I_2 index " + std::to_string(idx) + " outside 1..n");
    if (!(y > 0.0) || !std::isfinite(y)) throw std::invalid_argument("y weights must be positive");
    for (std::size_t b = 0; b < a; ++b)
      if (y_weights[b].first == idx) throw std::invalid_argument("repeated I_2 index");
  }
  MomentProblem p;
  p.x = std::move(x);
  p.y_weights = std::move(y_weights);
  p.kappa = kappa;
  p.m = m;
  return p;
}

Complex qprime_kappa(const MomentProblem& problem, Complex z) {
  const double n = static_cast<double>(problem.n());
  Complex atoms = 0.0;
  for (double x : problem.x) {
    Complex p = 0.0;
    Complex dp = 0.0;
    Complex zr = 1.0;
    Complex zr_prev = 0.0;
    for (int r = 0; r < problem.m; ++r) {
      const double xp = std::pow(x, problem.m - 1 - r);
      p += zr * xp;
      if (r > 0) dp += static_cast<double>(r) * zr_prev * xp;
      zr_prev = zr;
      zr *= z;
    }
    if (p == Complex(0.0)) throw std::domain_error("Q'_kappa evaluated at a root of z^m = x^m");
    atoms += dp / p;
  }
  Complex ys = 0.0;
  for (const auto& [idx, y] : problem.y_weights) {
    const Complex d = 1.0 + y * z;
    if (d == Complex(0.0)) throw std::domain_error("Q'_kappa evaluated at -1/y");
    ys += y / d;
  }
  const double scale = 1.0 / (n * (1.0 - problem.kappa));
  return scale * atoms + problem.kappa * scale * ys;
}

Complex integrand(const MomentProblem& problem, int p, Complex z) {
  if (p < 0) throw std::invalid_argument("moment order must be non-negative");
  const double n = static_cast<double>(problem.n());
  Complex bracket = qprime_kappa(problem, z);
  for (double x : problem.x) {
    if (z == Complex(x)) throw std::domain_error("integrand evaluated at an atom");
    bracket += 1.0 / (n * (z - x));
  }
  return std::pow(z, p) * std::pow(bracket, p + 1);
}

std::vector<Complex> excluded_singularities(const MomentProblem& problem) {
  std::vector<Complex> s;
  for (double x : problem.x)
    for (int k = 1; k < problem.m; ++k)
      s.push_back(std::polar(x, 2.0 * std::numbers::pi * k / problem.m));
  for (const auto& [idx, y] : problem.y_weights) s.push_back(Complex(-1.0 / y));
  return s;
}

ContourCheck validate_contour(const MomentProblem& problem, const Contour& contour) {
  ContourCheck check;
  if (!(contour.radius > 0.0) || contour.points == 0) {
    check.ok = false;
    check.message = "contour needs a positive radius and node count";
    return check;
  }
  if (problem.n() == 0) {
    check.ok = false;
    check.message = "contour encloses no poles";
    return check;
  }
  for (double x : problem.x) {
    const double d = std::abs(Complex(x) - contour.center);
    if (!(d < contour.radius * (1.0 - kContourMargin))) {
      check.ok = false;
      check.offender = Complex(x);
      check.distance = d;
      check.message = "atom " + format_complex(Complex(x)) + " at distance " + std::to_string(d) +
                      " is not inside radius " + std::to_string(contour.radius);
      return check;
    }
  }
  for (Complex s : excluded_singularities(problem)) {
    const double d = std::abs(s - contour.center);
    if (!(d > contour.radius * (1.0 + kContourMargin))) {
      check.ok = false;
      check.offender = s;
      check.distance = d;
      check.message = "singularity " + format_complex(s) + " at distance " + std::to_string(d) +
                      " lies inside radius " + std::to_string(contour.radius);
      return check;
    }
  }
  return check;
}

Contour default_contour(const MomentProblem& problem) {
  const auto [lo_it, hi_it] = std::minmax_element(problem.x.begin(), problem.x.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  double gap = std::numeric_limits<double>::infinity();
  for (Complex s : excluded_singularities(problem)) gap = std::min(gap, distance_to_segment(s, lo, hi));
  if (!std::isfinite(gap)) gap = hi;
  return {Complex(0.5 * (lo + hi)), 0.5 * (hi - lo) + 0.5 * gap, 256};
}

double moment_quadrature(const MomentProblem& problem, int p, const Contour& contour,
                         const QuadratureSettings& settings) {
  if (auto check = validate_contour(problem, contour); !check)
    throw MomentError("invalid contour: " + check.message);
  auto f = [&](Complex z) { return integrand(problem, p, z); };
  const auto r = circle_integral(f, contour.center, contour.radius, contour.points, settings);
  return real_moment(r.value, p, settings);
}

double moment_residues(const MomentProblem& problem, int p, const QuadratureSettings& settings) {
  const auto excluded = excluded_singularities(problem);
  auto f = [&](Complex z) { return integrand(problem, p, z); };
  Complex total = 0.0;
  for (std::size_t j = 0; j < problem.n(); ++j) {
    const double xj = problem.x[j];
    double nearest = xj;  // distance to the origin
    for (std::size_t i = 0; i < problem.n(); ++i)
      if (i != j) nearest = std::min(nearest, std::fabs(problem.x[i] - xj));
    for (Complex s : excluded) nearest = std::min(nearest, std::abs(s - Complex(xj)));
    total += circle_integral(f, Complex(xj), 0.25 * nearest, 256, settings).value;
  }
  return real_moment(total, p, settings);
}

}  // namespace schurasym
