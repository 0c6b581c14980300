#include "schurasym/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schurasym {

namespace {

struct ValueGroup {
  ExactValue value;
  std::size_t multiplicity;
};

// Groups equal values, keeping first-occurrence order.
std::vector<ValueGroup> group_values(std::span<const ExactValue> X) {
  std::vector<ValueGroup> groups;
  for (const auto& x : X) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const ValueGroup& g) { return g.value == x; });
    if (it == groups.end())
      groups.push_back({x, 1});
    else
      ++it->multiplicity;
  }
  return groups;
}

ExactValue pow_int(const ExactValue& v, std::int64_t e) {
  if (e >= 0) return pow(v, static_cast<unsigned long>(e));
  if (sgn(v) == 0) throw std::domain_error("negative power of zero");
  return 1 / pow(v, static_cast<unsigned long>(-e));
}

bool all_distinct(std::span<const ExactValue> X) {
  return group_values(X).size() == X.size();
}

void require_distinct_powers(std::span<const ExactValue> W, int m) {
  std::vector<ExactValue> powers;
  powers.reserve(W.size());
  for (const auto& w : W) powers.push_back(pow(w, static_cast<unsigned long>(m)));
  for (std::size_t i = 0; i < powers.size(); ++i)
    for (std::size_t j = i + 1; j < powers.size(); ++j)
      if (powers[i] == powers[j])
        throw std::domain_error("coincident m-th powers at positions " + std::to_string(i) +
                                " and " + std::to_string(j));
}

std::vector<std::int64_t> shifted_exponents(const Partition& lambda) {
  const std::size_t N = lambda.size();
  std::vector<std::int64_t> e(N);
  for (std::size_t i = 0; i < N; ++i)
    e[i] = lambda[i] + static_cast<std::int64_t>(N - 1 - i);
  return e;
}

// c_{k+1} = c_k (p - k)/(k+1)
std::vector<ExactValue> general_binomials(const ExactValue& p, std::size_t count) {
  std::vector<ExactValue> c(count);
  if (count == 0) return c;
  c[0] = 1;
  for (std::size_t k = 0; k + 1 < count; ++k)
    c[k + 1] = c[k] * (p - static_cast<unsigned long>(k)) / static_cast<unsigned long>(k + 1);
  return c;
}

void multiply_truncated(std::vector<ExactValue>& s, const std::vector<ExactValue>& t) {
  const std::size_t n = s.size();
  std::vector<ExactValue> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(s[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += s[i] * t[j];
  }
  s = std::move(out);
}

class SsytEnumerator {
 public:
  SsytEnumerator(const Partition& lambda, std::span<const ExactValue> X) : X_(X) {
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      rows_.push_back(static_cast<std::size_t>(lambda[r]));
      for (std::size_t c = 0; c < rows_.back(); ++c) cells_.push_back({r, c});
    }
    grid_.resize(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) grid_[r].assign(rows_[r], 0);
  }

  ExactValue run() {
    total_ = 0;
    fill(0, ExactValue(1));
    return total_;
  }

 private:
  void fill(std::size_t idx, const ExactValue& product) {
    if (idx == cells_.size()) {
      total_ += product;
      return;
    }
    auto [r, c] = cells_[idx];
    std::size_t lo = 1;
    if (c > 0) lo = std::max(lo, grid_[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid_[r - 1][c] + 1);
    for (std::size_t v = lo; v <= X_.size(); ++v) {
      grid_[r][c] = v;
      fill(idx + 1, product * X_[v - 1]);
    }
    grid_[r][c] = 0;
  }

  std::span<const ExactValue> X_;
  std::vector<std::size_t> rows_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<std::vector<std::size_t>> grid_;
  ExactValue total_;
};

}  // namespace

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  mpz_class tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a_ij <- (a_ij a_kk - a_ik a_kj) / prev, exact by Sylvester's identity
        mpz_mul(tmp.get_mpz_t(), a[i][j].get_mpz_t(), a[k][k].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

ExactValue exact_determinant(const ExactMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<std::vector<mpz_class>> ints(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t j = 0; j < n; ++j) {
    mpz_class l = 1;
    for (std::size_t i = 0; i < n; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i][j].get_den_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      mpz_divexact(ints[i][j].get_mpz_t(), l.get_mpz_t(), a[i][j].get_den_mpz_t());
      ints[i][j] *= a[i][j].get_num();
    }
    scale *= l;
  }
  ExactValue det(bareiss_determinant(std::move(ints)), scale);
  det.canonicalize();
  return det;
}

ExactValue confluent_alternant(std::span<const std::int64_t> exponents,
                               std::span<const ExactValue> X) {
  const std::size_t N = X.size();
  if (exponents.size() != N) throw std::invalid_argument("alternant needs N exponents for N values");
  ExactMatrix M(N, std::vector<ExactValue>(N));
  std::size_t col = 0;
  mpz_class binom;
  for (const auto& g : group_values(X)) {
    for (std::size_t r = 0; r < g.multiplicity; ++r, ++col) {
      for (std::size_t i = 0; i < N; ++i) {
        const std::int64_t e = exponents[i];
        if (e < static_cast<std::int64_t>(r)) continue;  // derivative of a lower power vanishes
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e), r);
        M[i][col] = ExactValue(binom) * pow(g.value, static_cast<unsigned long>(e) - r);
      }
    }
  }
  return exact_determinant(M);
}

ExactValue schur_bialternant(const Partition& lambda, std::span<const ExactValue> X) {
  const std::size_t N = X.size();
  if (lambda.size() != N)
    throw std::invalid_argument("partition length " + std::to_string(lambda.size()) +
                                " does not match " + std::to_string(N) + " variables");
  std::vector<std::int64_t> delta(N);
  for (std::size_t i = 0; i < N; ++i) delta[i] = static_cast<std::int64_t>(N - 1 - i);
  ExactValue den = confluent_alternant(delta, X);
  if (sgn(den) == 0) throw std::domain_error("degenerate Vandermonde determinant");
  return confluent_alternant(shifted_exponents(lambda), X) / den;
}

ExactValue schur_ssyt(const Partition& lambda, std::span<const ExactValue> X) {
  if (lambda.size() != X.size())
    throw std::invalid_argument("partition length does not match the number of variables");
  if (weight(lambda) > 12 || X.size() > 5)
    throw std::invalid_argument("tableau enumeration limited to |lambda| <= 12 and N <= 5");
  return SsytEnumerator(lambda, X).run();
}

ExactValue staircase_product(int m, std::span<const ExactValue> X) {
  if (m < 1) throw std::invalid_argument("staircase order m must be >= 1");
  const auto groups = group_values(X);
  const unsigned long mm = static_cast<unsigned long>(m);
  ExactValue result = 1;
  for (const auto& g : groups) {
    // x_i = x_j: the factor reduces to m x^{m-1}
    std::size_t pairs = g.multiplicity * (g.multiplicity - 1) / 2;
    if (pairs > 0) result *= pow(ExactValue(mm) * pow(g.value, mm - 1), pairs);
  }
  for (std::size_t a = 0; a < groups.size(); ++a) {
    for (std::size_t b = a + 1; b < groups.size(); ++b) {
      ExactValue factor = 0;
      for (unsigned long r = 0; r < mm; ++r)
        factor += pow(groups[a].value, r) * pow(groups[b].value, mm - 1 - r);
      result *= pow(factor, groups[a].multiplicity * groups[b].multiplicity);
    }
  }
  return result;
}

ExactValue ratio_general(const Partition& lambda, int m, std::span<const ExactValue> W,
                         std::size_t l) {
  const std::size_t N = W.size();
  if (lambda.size() != N) throw std::invalid_argument("partition length does not match W");
  if (head_length(lambda, m) > l)
    throw std::invalid_argument("partition differs from the staircase beyond the first " +
                                std::to_string(l) + " parts");
  if (l == 0) return 1;
  if (l > 3 || N > 12 || l > N)
    throw std::invalid_argument("ratio_general is limited to l <= 3 and N <= 12");
  require_distinct_powers(W, m);

  const unsigned long mm = static_cast<unsigned long>(m);
  std::vector<ExactValue> a(N);
  for (std::size_t j = 0; j < N; ++j) a[j] = pow(W[j], mm);
  std::vector<ExactValue> inv_den(N);
  for (std::size_t r = 0; r < N; ++r) {
    ExactValue d = 1;
    for (std::size_t s = 0; s < N; ++s)
      if (s != r) d *= a[r] - a[s];
    inv_den[r] = 1 / d;
  }

  const auto exps = shifted_exponents(lambda);
  std::vector<std::size_t> perm(l);
  ExactValue total = 0;
  std::vector<std::size_t> J(l);
  std::iota(J.begin(), J.end(), 0);
  while (true) {
    ExactValue weight_J = 1;
    for (std::size_t r : J) weight_J *= inv_den[r];

    ExactValue inner = 0;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int sign = 1;
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j)
          if (perm[i] > perm[j]) sign = -sign;
      ExactMatrix M(l, std::vector<ExactValue>(l));
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t t = 0; t < l; ++t)
          M[i][t] = pow(W[J[t]], static_cast<unsigned long>(m * i + exps[perm[t]]));
      ExactValue d = exact_determinant(M);
      if (sign > 0)
        inner += d;
      else
        inner -= d;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += weight_J * inner;

    // next l-subset of [N] in lexicographic order
    std::size_t i = l;
    while (i > 0 && J[i - 1] == N - l + (i - 1)) --i;
    if (i == 0) break;
    ++J[i - 1];
    for (std::size_t j = i; j < l; ++j) J[j] = J[j - 1] + 1;
  }
  return total;
}

ExactValue ratio_onerow(std::int64_t lambda1, int m, std::span<const ExactValue> W) {
  const std::size_t N = W.size();
  if (N == 0) throw std::invalid_argument("empty variable set");
  if (m < 1) throw std::invalid_argument("staircase order m must be >= 1");
  const std::int64_t second = N >= 2 ? static_cast<std::int64_t>(m - 1) * (N - 2) : 0;
  if (lambda1 < second)
    throw std::invalid_argument("lambda1 = " + std::to_string(lambda1) +
                                " breaks monotonicity against the staircase tail");

  const unsigned long mm = static_cast<unsigned long>(m);
  const auto groups = group_values(W);
  std::vector<ExactValue> powers;
  for (const auto& g : groups) {
    if (sgn(g.value) == 0) throw std::domain_error("zero entry in W");
    powers.push_back(pow(g.value, mm));
  }
  for (std::size_t a = 0; a < groups.size(); ++a)
    for (std::size_t b = a + 1; b < groups.size(); ++b)
      if (powers[a] == powers[b])
        throw std::domain_error("distinct entries with coincident m-th powers");

  const std::int64_t L = lambda1 + static_cast<std::int64_t>(N) - 1;
  const ExactValue p = make_ratio(static_cast<long>(L), m);

  // Residue at xi = a_g of phi(xi) / prod_h (xi - a_h)^{mu_h}, phi(xi) = xi^{L/m}
  // on the branch with phi(a_g) = w_g^L: the t^{mu_g - 1} coefficient of the
  // product of the local Taylor series.
  ExactValue total = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::size_t mu = groups[g].multiplicity;
    const auto binoms = general_binomials(p, mu);
    std::vector<ExactValue> series(mu);
    ExactValue wpow = pow_int(groups[g].value, L);
    const ExactValue inv_a = 1 / powers[g];
    for (std::size_t k = 0; k < mu; ++k) {
      series[k] = binoms[k] * wpow;
      wpow *= inv_a;
    }
    for (std::size_t h = 0; h < groups.size(); ++h) {
      if (h == g) continue;
      const ExactValue d = powers[g] - powers[h];
      const std::size_t nu = groups[h].multiplicity;
      // (d + t)^{-nu} = sum_k binom(-nu, k) d^{-nu-k} t^k
      std::vector<ExactValue> factor(mu);
      factor[0] = pow_int(d, -static_cast<std::int64_t>(nu));
      for (std::size_t k = 0; k + 1 < mu; ++k)
        factor[k + 1] = factor[k] * -static_cast<long>(nu + k) /
                        (static_cast<unsigned long>(k + 1) * d);
      multiply_truncated(series, factor);
    }
    total += series[mu - 1];
  }
  return total;
}

RatioDecomposition decompose_ratio(const Partition& lambda, int m, const PerturbedSet& W,
                                   const VariableSet& X) {
  const std::size_t N = X.size();
  if (W.size() != N || lambda.size() != N)
    throw std::invalid_argument("lambda, W and X must have the same length");
  const std::vector<ExactValue> w = W.real_entries();
  const std::size_t l = head_length(lambda, m);

  auto stair_ratio = [&](std::span<const ExactValue> vals) -> ExactValue {
    if (l == 0) return 1;
    if (l == 1) return ratio_onerow(lambda[0], m, vals);
    if (l <= 3 && N <= 12 && all_distinct(vals)) return ratio_general(lambda, m, vals, l);
    ExactValue stair = staircase_product(m, vals);
    if (sgn(stair) == 0) throw std::domain_error("staircase Schur value vanishes");
    return schur_bialternant(lambda, vals) / stair;
  };

  RatioDecomposition out;
  out.s1 = stair_ratio(w);
  ExactValue stair_x = staircase_product(m, X.entries);
  if (sgn(stair_x) == 0) throw std::domain_error("staircase Schur value of X vanishes");
  out.s2 = staircase_product(m, w) / stair_x;
  ExactValue rx = stair_ratio(X.entries);
  if (sgn(rx) == 0) throw std::domain_error("s_lambda(X) vanishes");
  out.s3 = 1 / rx;
  return out;
}

LogMagnitude log_ratio_full(const Partition& lambda, int m, const PerturbedSet& W,
                            const VariableSet& X) {
  const RatioDecomposition d = decompose_ratio(lambda, m, W, X);
  const double total =
      log_magnitude(d.s1).value + log_magnitude(d.s2).value + log_magnitude(d.s3).value;
  return {total / static_cast<double>(X.size())};
}

}  // namespace schurasym
