#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "schurasym/weights.hpp"

using namespace schurasym;

namespace {

ExactValue q(const char* s) { return parse_rational(s); }

WeightSpectrum two_atoms() { return WeightSpectrum::create({2, 1}, {q("1/2"), q("1/2")}); }

std::vector<ExactValue> values(std::initializer_list<const char*> xs) {
  std::vector<ExactValue> out;
  for (const char* x : xs) out.push_back(q(x));
  return out;
}

PerturbedSet plain(std::vector<ExactValue> xs) {
  VariableSet X;
  X.entries = std::move(xs);
  return perturb(X, std::span<const ExactValue>());
}

// Random spectrum with n atoms: integer values, densities with denominator 12.
WeightSpectrum random_spectrum(std::mt19937_64& rng, std::size_t n) {
  std::vector<ExactValue> v;
  int top = 1 + static_cast<int>(n) + static_cast<int>(rng() % 6);
  for (std::size_t j = 0; j < n; ++j) {
    v.emplace_back(top);
    top -= 1 + static_cast<int>(rng() % 2);
    if (top < 1) top = 1;
  }
  for (std::size_t j = 1; j < n; ++j)
    if (!(v[j] < v[j - 1])) v[j] = v[j - 1] / 2;
  std::vector<ExactValue> d(n, 0);
  for (int unit = 0; unit < 12; ++unit) d[unit < static_cast<int>(n) ? unit : rng() % n] += ExactValue(1, 12);
  return WeightSpectrum::create(v, d);
}

}  // namespace

TEST_CASE("spectrum validation") {
  CHECK_NOTHROW(two_atoms());
  CHECK_THROWS_AS(WeightSpectrum::create({1, 2}, {q("1/2"), q("1/2")}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSpectrum::create({2, 1}, {q("1/2"), q("1/3")}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSpectrum::create({2, 0}, {q("1/2"), q("1/2")}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSpectrum::create({2}, {q("1/2"), q("1/2")}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSpectrum::create({2, 1}, {q("3/2"), q("-1/2")}), std::invalid_argument);
}

TEST_CASE("realize: cumulative half-up rounding") {
  CHECK(realize(two_atoms(), 4).multiplicities == std::vector<std::size_t>{2, 2});
  CHECK(realize(two_atoms(), 5).multiplicities == std::vector<std::size_t>{3, 2});
  const auto single = WeightSpectrum::create({3}, {1});
  CHECK(realize(single, 7).multiplicities == std::vector<std::size_t>{7});
  CHECK(realize(two_atoms(), 5).entries == values({"2", "2", "2", "1", "1"}));
  CHECK_THROWS_AS(realize(two_atoms(), 1), std::invalid_argument);
}

TEST_CASE("property: realized counts sum to N and track the densities") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_spectrum(rng, 1 + rng() % 4);
    const std::size_t N = s.size() + rng() % 200;
    const auto X = realize(s, N);
    REQUIRE(X.size() == N);
    std::size_t total = 0;
    ExactValue cumulative = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      total += X.multiplicities[j];
      cumulative += s.densities()[j];
      // cumulative counts stay within 1/2 of cumulative * N
      const ExactValue gap = ExactValue(static_cast<unsigned long>(total)) -
                             cumulative * static_cast<unsigned long>(N);
      CHECK(abs(gap) <= ExactValue(1, 2));
    }
    CHECK(total == N);
    for (std::size_t i = 1; i < N; ++i) CHECK(X.entries[i] <= X.entries[i - 1]);
  }
}

TEST_CASE("perturb replaces the leading entries") {
  VariableSet X;
  X.entries = values({"2", "2", "1", "1"});
  const ExactValue u[] = {q("5/2")};
  const auto W = perturb(X, u);
  CHECK(W.k == 1);
  CHECK(W.real_entries() == values({"5/2", "2", "1", "1"}));
  CHECK(perturb(X, std::span<const ExactValue>()).real_entries() == X.entries);

  VariableSet Y;
  Y.entries = values({"2", "1"});
  const ExactValue uu[] = {3, 3};
  CHECK(perturb(Y, uu).real_entries() == values({"3", "3"}));
  const ExactValue three[] = {1, 2, 3};
  CHECK_THROWS_AS(perturb(Y, three), std::invalid_argument);

  const GaussianRational c[] = {{1, 1}};
  const auto Z = perturb(Y, c);
  CHECK_FALSE(Z.is_real());
  CHECK_THROWS_AS(Z.real_entries(), std::domain_error);
}

TEST_CASE("f_profile") {
  const Profile f(two_atoms(), 2);
  CHECK(f_profile(f, 0.3) == 4);
  CHECK(f_profile(f, 0.5) == 1);
  CHECK(f_profile(f, q("1/2")) == 1);
  CHECK(f_profile(f, 0.0) == 4);
  CHECK_THROWS_AS(f_profile(f, 1.0), std::out_of_range);
  CHECK_THROWS_AS(f_profile(f, -0.1), std::out_of_range);

  const Profile c(WeightSpectrum::create({3}, {1}), 1);
  for (double t : {0.0, 0.25, 0.999}) CHECK(f_profile(c, t) == 3);
  CHECK(c.top() == 3.0);
  CHECK(c.bottom() == 3.0);
}

TEST_CASE("profile drops zero-density atoms") {
  const Profile f(WeightSpectrum::create({3, 2, 1}, {q("1/2"), 0, q("1/2")}), 1);
  CHECK(f.size() == 2);
  CHECK(f.atoms() == values({"3", "1"}));
}

TEST_CASE("property: f is non-increasing") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile f(random_spectrum(rng, 1 + rng() % 4), 1 + static_cast<int>(rng() % 3));
    ExactValue prev = f.atoms().front();
    for (int i = 0; i < 60; ++i) {
      const auto& cur = f_profile(f, make_ratio(i, 60));
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("sorted_powers") {
  CHECK(sorted_powers(plain(values({"1", "2"})), 2) == values({"4", "1"}));
  CHECK(sorted_powers(plain(values({"2", "2"})), 3) == values({"8", "8"}));
  CHECK(sorted_powers(plain(values({"3"})), 1) == values({"3"}));
}

TEST_CASE("discrepancy") {
  const auto s = two_atoms();
  const auto X4 = realize(s, 4);
  const auto d = discrepancy(perturb(X4, std::span<const ExactValue>()), 1, Profile(s, 1));
  CHECK(d.r1 == 1.0);
  CHECK(d.r_inf == 1.0);

  const auto one = WeightSpectrum::create({3}, {1});
  for (int m = 1; m <= 3; ++m) {
    const auto e = discrepancy(perturb(realize(one, 9), std::span<const ExactValue>()), m,
                               Profile(one, m));
    CHECK(e.r1 == 0.0);
    CHECK(e.r_inf == 0.0);
  }
}

TEST_CASE("property: realized discrepancy is bounded uniformly in N") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = random_spectrum(rng, 1 + rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 3);
    const Profile f(s, m);
    const double amax = f.top();
    for (std::size_t N = 16; N <= 128; N *= 2) {
      const auto d = discrepancy(perturb(realize(s, N), std::span<const ExactValue>()), m, f);
      CHECK(d.r1 <= static_cast<double>(s.size()) * amax);
      CHECK(d.r_inf <= amax);
    }
  }
}
