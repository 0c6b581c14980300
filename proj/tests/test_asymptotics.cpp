#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "schurasym/asymptotics.hpp"

using namespace schurasym;

namespace {

ExactValue q(const char* s) { return parse_rational(s); }

WeightSpectrum spectrum(std::vector<ExactValue> v, std::vector<ExactValue> d) {
  return WeightSpectrum::create(std::move(v), std::move(d));
}

// n <= 4 atoms with values p/4 in (0, 10], densities in multiples of 1/10.
WeightSpectrum random_spectrum(std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 4;
  std::vector<long> nums;
  while (nums.size() < n) {
    long p = 1 + static_cast<long>(rng() % 40);
    if (std::find(nums.begin(), nums.end(), p) == nums.end()) nums.push_back(p);
  }
  std::sort(nums.rbegin(), nums.rend());
  std::vector<ExactValue> v, d(n, ExactValue(1, 10));
  for (long p : nums) v.push_back(make_ratio(p, 4));
  for (std::size_t u = n; u < 10; ++u) d[rng() % n] += ExactValue(1, 10);
  return spectrum(v, d);
}

double random_y(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  return 5.0 - 4.0 * U(rng);  // (1, 5]
}

}  // namespace

TEST_CASE("q_eval examples") {
  const auto one = spectrum({1}, {1});
  CHECK(q_eval(one, 2, 1.0).real() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(q_eval(one, 2, 3.0).real() == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  const auto two = spectrum({2, 1}, {q("1/2"), q("1/2")});
  for (double u : {0.5, 2.0, 7.0}) CHECK(std::abs(q_eval(two, 1, u)) == 0.0);
  CHECK(q_eval(two, 2, 2.5).real() - q_eval(two, 2, 2.0).real() ==
        doctest::Approx(0.13596685774182093).epsilon(1e-14));
}

TEST_CASE("theorem_limit") {
  const auto one = spectrum({1}, {1});
  const Complex x[] = {1.0};
  const Complex u[] = {3.0};
  CHECK(theorem_limit(one, 2, x, u).real() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(std::abs(theorem_limit(one, 2, x, x)) == 0.0);
  CHECK(std::abs(theorem_limit(one, 2, {}, {})) == 0.0);
  CHECK_THROWS_AS(theorem_limit(one, 2, x, {}), std::invalid_argument);
}

TEST_CASE("property: q_derivative matches finite differences") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> U(0.2, 6.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_spectrum(rng);
    const int m = 1 + static_cast<int>(rng() % 3);
    const Complex u(U(rng), 0.5 * U(rng));
    const double h = 1e-5;
    const Complex fd = (q_eval(s, m, u + h) - q_eval(s, m, u - h)) / (2.0 * h);
    CHECK(std::abs(fd - q_derivative(s, m, u)) < 1e-6 * (1.0 + std::abs(fd)));
  }
}

TEST_CASE("F_eval") {
  const Profile one(spectrum({1}, {1}), 1);
  CHECK(F_eval(one, 3.0).real() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  const Profile two(spectrum({2, 1}, {q("1/2"), q("1/2")}), 2);  // atoms (4, 1)
  CHECK(F_eval(two, 6.0).real() == doctest::Approx(1.1512925464970227).epsilon(1e-15));
  CHECK(std::fabs(F_eval(two, 1e9).real() - std::log(1e9)) < 1e-8);
  CHECK_THROWS_AS(F_eval(two, 4.0), std::domain_error);
}

TEST_CASE("g_eval") {
  const Profile one(spectrum({1}, {1}), 1);
  CHECK(g_eval(one, 2.0, 2.0) == doctest::Approx(0.0));
  const Profile two(spectrum({2, 1}, {q("1/2"), q("1/2")}), 2);
  CHECK(std::fabs(g_eval(two, 2.0, (15.0 + std::sqrt(97.0)) / 4.0)) < 1e-12);
  CHECK(g_eval(two, 2.0, 1e12) == doctest::Approx(1.0));
}

TEST_CASE("critical_point closed forms") {
  const Profile one(spectrum({1}, {1}), 2);
  auto r = critical_point(one, 2.0);
  CHECK(r.xi0 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.value == doctest::Approx(std::log(4.0)).epsilon(1e-12));

  const Profile two_m1(spectrum({2}, {1}), 1);
  CHECK(critical_point(two_m1, 3.0).xi0 == doctest::Approx(3.0).epsilon(1e-12));

  const Profile two(spectrum({2, 1}, {q("1/2"), q("1/2")}), 2);
  CHECK(critical_point(two, 2.0).xi0 ==
        doctest::Approx((15.0 + std::sqrt(97.0)) / 4.0).epsilon(1e-12));

  CHECK_THROWS_AS(critical_point(one, 1.0), std::domain_error);
  CHECK_THROWS_AS(critical_point(one, 0.5), std::domain_error);

  // xi0 = y a/(y-1) blows up as y -> 1+
  const double near = critical_point(one, 1.0 + 1e-6).xi0;
  CHECK(near > 1e5);

  // single atom scaled by c: value = y log(y a/(y-1)) - log(a/(y-1))
  for (double c : {0.5, 3.0, 10.0}) {
    const ExactValue cc = from_double(c);
    const Profile p(spectrum({cc}, {1}), 1);
    const double y = 2.5;
    CHECK(critical_point(p, y).value ==
          doctest::Approx(y * std::log(y * c / (y - 1)) - std::log(c / (y - 1))).epsilon(1e-12));
  }
}

TEST_CASE("steepest_value and saddle_height") {
  CHECK(saddle_height(16, 8, 2) == 23.0 / 16.0);
  const Profile one(spectrum({1}, {1}), 2);
  // lambda1 + N - 1 = 4N gives y = 2
  CHECK(steepest_value(one, 3 * 10 + 1, 10, 2) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK_THROWS_AS(steepest_value(one, 31, 10, 3), std::invalid_argument);
  // staircase head: y < 1
  CHECK_THROWS_AS(steepest_value(one, 9, 10, 2), std::domain_error);
}

TEST_CASE("property: critical point on random profiles") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Profile f(random_spectrum(rng), 1 + static_cast<int>(rng() % 3));
    const double y = random_y(rng);
    const auto r = critical_point(f, y);
    CHECK(r.residual <= 1e-12 * y);
    CHECK(std::fabs(g_eval(f, y, r.xi0)) <= 1e-12 * y);
    CHECK(r.xi0 > f.top());
    CHECK(r.second_deriv < 0.0);
    CHECK(r.eta0 == std::log(r.xi0));
  }
}

TEST_CASE("property: g is increasing on (a1, inf)") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Profile f(random_spectrum(rng), 1 + static_cast<int>(rng() % 3));
    const double y = random_y(rng);
    double prev = g_eval(f, y, f.top() * (1 + 1e-9));
    for (int i = 1; i <= 100; ++i) {
      const double xi = f.top() * (1.0 + 0.1 * i);
      const double g = g_eval(f, y, xi);
      CHECK(g > prev);
      CHECK(g_derivative(f, xi) > 0.0);
      prev = g;
    }
  }
}

TEST_CASE("delta_eps") {
  CHECK(delta_eps(2.0, 1.0, std::numbers::pi) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(delta_eps(2.0, 1.0, 0.0) == 0.0);
  CHECK(delta_eps(2.0, 1.0, std::numbers::pi / 2) ==
        doctest::Approx(0.5 * std::log(5.0)).epsilon(1e-15));
  CHECK_THROWS_AS(delta_eps(1.0, 2.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(delta_eps(2.0, 1.0, 4.0), std::domain_error);
}

TEST_CASE("property: descent and separation on the circle through the saddle") {
  std::mt19937_64 rng(47);
  int violations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Profile f(random_spectrum(rng), 1 + static_cast<int>(rng() % 3));
    const double y = random_y(rng);
    const auto r = critical_point(f, y);
    const double peak = y * std::log(r.xi0) - F_eval(f, r.xi0).real();
    for (double eps : {0.1, 0.5, 1.0}) {
      const double bound = delta_eps(r.xi0, f.bottom(), eps);
      for (int k = 0; k < 64; ++k) {
        // angles spread over eps <= |theta| <= pi, both signs
        const double theta = (k % 2 ? -1.0 : 1.0) * (eps + (std::numbers::pi - eps) * (k / 2) / 31.0);
        const Complex xi = std::polar(r.xi0, theta);
        const double drop = F_eval(f, xi).real() - F_eval(f, r.xi0).real();
        if (!(y * std::log(std::abs(xi)) - F_eval(f, xi).real() < peak)) ++violations;
        if (!(std::fabs(drop) >= bound * (1.0 - 1e-12))) ++violations;
      }
    }
  }
  CHECK(violations == 0);
}
