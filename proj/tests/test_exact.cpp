#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "schurasym/exact.hpp"

using namespace schurasym;

TEST_CASE("parse_rational") {
  CHECK(parse_rational("5/2") == ExactValue(5, 2));
  CHECK(parse_rational(" 4/6 ") == ExactValue(2, 3));
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("0.25") == ExactValue(1, 4));
  CHECK(parse_rational("-1.5") == ExactValue(-3, 2));
  CHECK(parse_rational("2.") == 2);
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1.2.3", ".", "--1", "1e5"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("logs of huge rationals") {
  const mpz_class big = mpz_class(1) << 5000;
  CHECK(log_abs(big) == doctest::Approx(5000 * std::log(2.0)).epsilon(1e-15));
  CHECK(log_abs(-big) == log_abs(big));
  ExactValue q(big, mpz_class(3));
  CHECK(log_magnitude(q).value ==
        doctest::Approx(5000 * std::log(2.0) - std::log(3.0)).epsilon(1e-15));
  CHECK(log_magnitude(ExactValue(1)).value == 0.0);
  CHECK_THROWS_AS(log_magnitude(ExactValue(0)), std::domain_error);
  CHECK_THROWS_AS(log_magnitude(ExactValue(-2)), std::domain_error);
}

TEST_CASE("helpers") {
  CHECK(pow(ExactValue(2, 3), 3) == ExactValue(8, 27));
  CHECK(pow(ExactValue(5), 0) == 1);
  CHECK(make_ratio(6, -4) == ExactValue(-3, 2));
  CHECK(from_double(0.375) == ExactValue(3, 8));
  CHECK(to_double(ExactValue(1, 4)) == 0.25);
  CHECK(to_string(make_ratio(6, 4)) == "3/2");
  const GaussianRational z{1, 2};
  CHECK_FALSE(z.is_real());
  CHECK(z.to_complex() == Complex(1, 2));
  CHECK(GaussianRational{3, 0}.is_real());
}
