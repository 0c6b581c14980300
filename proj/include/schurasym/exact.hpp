#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace schurasym {

/// Arbitrary-precision rational in canonical form.
using ExactValue = mpq_class;
using Complex = std::complex<double>;

/// Natural log of a positive exact quantity (or a 1/N multiple of one).
struct LogMagnitude {
  double value = 0.0;
};

/// Parses "p/q", "p" or a plain decimal such as "2.5" into a canonical
/// rational. Throws std::invalid_argument on malformed input.
ExactValue parse_rational(std::string_view text);

/// log|z| for a nonzero big integer, via mantissa/exponent split so that
/// values far outside double range are handled.
double log_abs(const mpz_class& z);

/// log(v) for v > 0, computed as log|num| - log|den|.
/// Throws std::domain_error if v <= 0.
LogMagnitude log_magnitude(const ExactValue& v);

ExactValue pow(const ExactValue& base, unsigned long exponent);

/// num/den in canonical form.
inline ExactValue make_ratio(long num, long den) {
  ExactValue q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

inline double to_double(const ExactValue& v) { return v.get_d(); }

/// Exact conversion of a finite double.
ExactValue from_double(double d);

std::string to_string(const ExactValue& v);

/// Exact complex rational, used for perturbation values.
struct GaussianRational {
  ExactValue re;
  ExactValue im;

  bool is_real() const { return sgn(im) == 0; }
  Complex to_complex() const { return {re.get_d(), im.get_d()}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace schurasym
