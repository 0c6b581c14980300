#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "schurasym/moments.hpp"

using namespace schurasym;

namespace {

MomentProblem problem(std::vector<double> x, int m, double kappa,
                      std::vector<std::pair<std::size_t, double>> y = {}) {
  return MomentProblem::create(std::move(x), std::move(y), kappa, m);
}

double moment(const MomentProblem& p, int k) { return moment_quadrature(p, k, default_contour(p)); }

}  // namespace

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(problem({1, 1}, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(problem({1, -2}, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(problem({1}, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(problem({1}, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(problem({1}, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(problem({1}, 1, 0.5, {{2, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(problem({1}, 1, 0.5, {{1, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(problem({}, 1, 0.5), std::invalid_argument);
}

TEST_CASE("qprime_kappa") {
  const auto trivial = problem({2, 1}, 1, 0.3);
  for (Complex z : {Complex(0.5), Complex(3, 1), Complex(-2, 0.5)})
    CHECK(std::abs(qprime_kappa(trivial, z)) == 0.0);
  const auto one = problem({1}, 2, 0.5);
  CHECK(std::abs(qprime_kappa(one, 3.0) - 0.5) < 1e-15);
  CHECK_THROWS_AS(qprime_kappa(one, -1.0), std::domain_error);
  const auto with_y = problem({1}, 1, 0.5, {{1, 1.0}});
  CHECK_THROWS_AS(qprime_kappa(with_y, -1.0), std::domain_error);

  // Q'_kappa is regular at the atoms: no residue there
  const auto two = problem({2, 1}, 3, 0.4, {{2, 0.5}});
  for (double x : two.x) {
    Complex sum = 0.0;
    const int M = 64;
    for (int k = 0; k < M; ++k) {
      const Complex e = std::polar(1.0, 2.0 * std::numbers::pi * k / M);
      sum += qprime_kappa(two, x + 0.1 * e) * 0.1 * e;
    }
    CHECK(std::abs(sum / double(M)) < 1e-13);
  }
}

TEST_CASE("integrand") {
  const auto p = problem({2, 1}, 2, 0.5, {{1, 1.0}});
  for (int k = 0; k <= 4; ++k) CHECK(std::isfinite(std::abs(integrand(p, k, 0.0))));
  CHECK_THROWS_AS(integrand(p, 0, 2.0), std::domain_error);
  CHECK_THROWS_AS(integrand(p, -1, 0.5), std::invalid_argument);

  // p = 0, m = 1: residue 1/n at each atom
  const auto flat = problem({3, 2, 1}, 1, 0.5);
  for (double x : flat.x) {
    Complex sum = 0.0;
    const int M = 256;
    for (int k = 0; k < M; ++k) {
      const Complex e = std::polar(1.0, 2.0 * std::numbers::pi * k / M);
      sum += integrand(flat, 0, x + 0.25 * e) * 0.25 * e;
    }
    CHECK(std::abs(sum / double(M) - 1.0 / 3.0) < 1e-13);
  }
}

TEST_CASE("excluded singularities") {
  const auto p = problem({2, 1}, 2, 0.5, {{2, 4.0}});
  const auto s = excluded_singularities(p);
  REQUIRE(s.size() == 3);
  CHECK(std::abs(s[0] + 2.0) < 1e-15);
  CHECK(std::abs(s[1] + 1.0) < 1e-15);
  CHECK(std::abs(s[2] + 0.25) < 1e-15);
  CHECK(excluded_singularities(problem({2, 1}, 1, 0.5)).empty());
}

TEST_CASE("validate_contour") {
  const auto two = problem({2, 1}, 2, 0.5);
  CHECK(validate_contour(two, {Complex(1.5), 1.0}).ok);

  const auto quartic = problem({1}, 4, 0.5);
  const auto bad = validate_contour(quartic, {Complex(1.0), 1.5});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.offender);
  CHECK(std::abs(*bad.offender - Complex(0, 1)) < 1e-15);
  CHECK(bad.distance == doctest::Approx(std::sqrt(2.0)));
  CHECK_FALSE(bad.message.empty());

  // no atoms inside
  CHECK_FALSE(validate_contour(two, {Complex(10.0), 1.0}).ok);
  // only one atom inside
  CHECK_FALSE(validate_contour(two, {Complex(2.0), 0.5}).ok);
  // atom on the margin
  CHECK_FALSE(validate_contour(two, {Complex(1.5), 0.5}).ok);
  // -1/y inside
  const auto ypole = problem({2, 1}, 1, 0.5, {{1, 2.0}});
  CHECK_FALSE(validate_contour(ypole, {Complex(1.0), 1.6}).ok);
  CHECK(validate_contour(ypole, {Complex(1.5), 1.0}).ok);

  CHECK_THROWS_AS(moment_quadrature(quartic, 0, {Complex(1.0), 1.5}), MomentError);
}

TEST_CASE("moment values against exact residue sums") {
  const auto A = problem({2, 1}, 2, 1.0 / 3.0);
  const double a[] = {1, 5.0 / 4, 389.0 / 192, 945.0 / 256, 3971507.0 / 552960};
  const auto B = problem({1}, 1, 0.5, {{1, 1.0}});
  const double b[] = {1, 1, 4.0 / 3, 2, 16.0 / 5};
  const auto C = problem({2, 1}, 2, 0.5);
  const double c[] = {1, 1.5, 205.0 / 72, 97.0 / 16, 714863.0 / 51840};
  const auto D = problem({2, 1}, 2, 0.5, {{1, 1.0}});
  const double d[] = {1, 43.0 / 24, 71.0 / 18, 8369.0 / 864, 657719.0 / 25920};
  for (int k = 0; k <= 4; ++k) {
    CHECK(moment(A, k) == doctest::Approx(a[k]).epsilon(1e-10));
    CHECK(moment(B, k) == doctest::Approx(b[k]).epsilon(1e-10));
    CHECK(moment(C, k) == doctest::Approx(c[k]).epsilon(1e-10));
    CHECK(moment(D, k) == doctest::Approx(d[k]).epsilon(1e-10));
    CHECK(moment_residues(A, k) == doctest::Approx(a[k]).epsilon(1e-10));
    CHECK(moment_residues(D, k) == doctest::Approx(d[k]).epsilon(1e-10));
  }
}

TEST_CASE("single atom with m = 1: uniform measure on [0,1]") {
  // the integrand is z^p/(z-x)^{p+1}, residue 1, so the moment is 1/(p+1)
  for (double x : {0.5, 1.0, 3.0}) {
    const auto p = problem({x}, 1, 0.5);
    for (int k = 0; k <= 4; ++k) CHECK(moment(p, k) == doctest::Approx(1.0 / (k + 1)));
  }
}

TEST_CASE("property: mass, route agreement and contour invariance") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  int accepted = 0;
  while (accepted < 30) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<double> x;
    while (x.size() < n) {
      const double v = 0.5 + std::floor(U(rng) * 20) / 4;
      if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
    }
    std::vector<std::pair<std::size_t, double>> y;
    for (std::size_t i = 1; i <= n; ++i)
      if (rng() % 2) y.push_back({i, 0.25 + U(rng)});
    const double kappas[] = {0.1, 0.5, 0.9};
    const auto p = problem(x, 1 + static_cast<int>(rng() % 3), kappas[rng() % 3], y);
    const Contour c = default_contour(p);
    if (!validate_contour(p, c)) continue;
    ++accepted;
    // same center, radius halfway between the atoms and the default circle
    const double spread = 0.5 * (*std::max_element(x.begin(), x.end()) -
                                 *std::min_element(x.begin(), x.end()));
    const Contour inner{c.center, 0.5 * (c.radius + spread), 256};
    REQUIRE(validate_contour(p, inner).ok);
    CHECK(moment_quadrature(p, 0, c) == doctest::Approx(1.0).epsilon(1e-8));
    for (int k = 0; k <= 4; ++k) {
      const double qv = moment_quadrature(p, k, c);
      CHECK(std::fabs(qv - moment_residues(p, k)) <= 1e-8 * std::max(1.0, std::fabs(qv)));
      CHECK(std::fabs(qv - moment_quadrature(p, k, inner)) <= 1e-8 * std::max(1.0, std::fabs(qv)));
    }
  }
}
