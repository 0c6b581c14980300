#include "schurasym/exact.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schurasym {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

ExactValue parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    ExactValue q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
      int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac.empty() && !all_digits(frac)) ||
        (int_part.empty() && frac.empty()))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string digits = std::string(int_part) + std::string(frac);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    ExactValue q(neg ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

  return ExactValue(parse_integer(text, text));
}

double log_abs(const mpz_class& z) {
  if (z == 0) throw std::domain_error("log of zero");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::numbers::ln2;
}

LogMagnitude log_magnitude(const ExactValue& v) {
  if (sgn(v) <= 0) throw std::domain_error("log of a non-positive exact value");
  return {log_abs(v.get_num()) - log_abs(v.get_den())};
}

ExactValue pow(const ExactValue& base, unsigned long exponent) {
  ExactValue r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;  // gcd(num,den)=1 is preserved by powers
}

ExactValue from_double(double d) {
  if (!std::isfinite(d)) throw std::domain_error("non-finite double");
  ExactValue q;
  mpq_set_d(q.get_mpq_t(), d);
  return q;
}

std::string to_string(const ExactValue& v) { return v.get_str(10); }

}  // namespace schurasym
