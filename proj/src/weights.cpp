#include "schurasym/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurasym {

namespace {

// floor(q + 1/2)
mpz_class round_half_up(const ExactValue& q) {
  ExactValue shifted = q + ExactValue(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return r;
}

}  // namespace

WeightSpectrum WeightSpectrum::create(std::vector<ExactValue> values,
                                      std::vector<ExactValue> densities) {
  if (values.empty()) throw std::invalid_argument("spectrum must have at least one value");
  if (values.size() != densities.size())
    throw std::invalid_argument("spectrum values and densities differ in length");
  ExactValue total = 0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (sgn(values[j]) <= 0) throw std::invalid_argument("spectrum values must be positive");
    if (j > 0 && !(values[j - 1] > values[j]))
      throw std::invalid_argument("spectrum values must be strictly decreasing");
    if (sgn(densities[j]) < 0 || densities[j] > 1)
      throw std::invalid_argument("densities must lie in [0,1]");
    total += densities[j];
  }
  if (total != 1) throw std::invalid_argument("densities must sum to 1, got " + to_string(total));
  return WeightSpectrum(std::move(values), std::move(densities));
}

bool PerturbedSet::is_real() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& w) { return w.is_real(); });
}

std::vector<ExactValue> PerturbedSet::real_entries() const {
  std::vector<ExactValue> out;
  out.reserve(entries.size());
  for (const auto& w : entries) {
    if (!w.is_real()) throw std::domain_error("perturbed set has a non-real entry");
    out.push_back(w.re);
  }
  return out;
}

Profile::Profile(const WeightSpectrum& spectrum, int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("profile order m must be >= 1");
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    if (sgn(spectrum.densities()[j]) == 0) continue;
    atoms_.push_back(pow(spectrum.values()[j], static_cast<unsigned long>(m)));
    weights_.push_back(spectrum.densities()[j]);
    atoms_d_.push_back(atoms_.back().get_d());
    weights_d_.push_back(weights_.back().get_d());
  }
}

VariableSet realize(const WeightSpectrum& spectrum, std::size_t N) {
  const std::size_t n = spectrum.size();
  if (N < n)
    throw std::invalid_argument("realize needs N >= n (N=" + std::to_string(N) +
                                ", n=" + std::to_string(n) + ")");
  VariableSet X;
  X.entries.reserve(N);
  ExactValue cumulative = 0;
  mpz_class previous = 0;
  for (std::size_t j = 0; j < n; ++j) {
    cumulative += spectrum.densities()[j];
    mpz_class current = round_half_up(cumulative * static_cast<unsigned long>(N));
    mpz_class count = current - previous;
    previous = current;
    std::size_t K = count.get_ui();
    X.multiplicities.push_back(K);
    X.entries.insert(X.entries.end(), K, spectrum.values()[j]);
  }
  return X;
}

PerturbedSet perturb(const VariableSet& X, std::span<const GaussianRational> U) {
  if (U.size() > X.size())
    throw std::invalid_argument("perturbation of length " + std::to_string(U.size()) +
                                " exceeds N=" + std::to_string(X.size()));
  PerturbedSet W;
  W.k = U.size();
  W.entries.reserve(X.size());
  W.entries.insert(W.entries.end(), U.begin(), U.end());
  for (std::size_t i = U.size(); i < X.size(); ++i) W.entries.push_back({X.entries[i], 0});
  return W;
}

PerturbedSet perturb(const VariableSet& X, std::span<const ExactValue> U) {
  std::vector<GaussianRational> g;
  g.reserve(U.size());
  for (const auto& u : U) g.push_back({u, 0});
  return perturb(X, std::span<const GaussianRational>(g));
}

const ExactValue& f_profile(const Profile& profile, const ExactValue& t) {
  if (sgn(t) < 0 || t >= 1) throw std::out_of_range("f is defined on [0,1) only");
  ExactValue upper = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    upper += profile.weights()[i];
    if (t < upper) return profile.atoms()[i];
  }
  return profile.atoms().back();  // unreachable: weights sum to 1
}

const ExactValue& f_profile(const Profile& profile, double t) {
  if (!(t >= 0.0 && t < 1.0)) throw std::out_of_range("f is defined on [0,1) only");
  return f_profile(profile, from_double(t));
}

std::vector<ExactValue> sorted_powers(const PerturbedSet& W, int m) {
  std::vector<ExactValue> base = W.real_entries();
  std::sort(base.begin(), base.end(), [](const auto& a, const auto& b) { return a > b; });
  for (auto& w : base) w = pow(w, static_cast<unsigned long>(m));
  return base;
}

Discrepancy discrepancy(const PerturbedSet& W, int m, const Profile& profile) {
  const std::vector<ExactValue> hat = sorted_powers(W, m);
  const std::size_t N = hat.size();
  ExactValue r1 = 0;
  ExactValue r_inf = 0;
  for (std::size_t i = 1; i <= N; ++i) {
    const ExactValue t = make_ratio(static_cast<long>(i), static_cast<long>(N));
    const ExactValue& f = i == N ? profile.atoms().back() : f_profile(profile, t);
    ExactValue d = abs(hat[i - 1] - f);
    r1 += d;
    if (d > r_inf) r_inf = d;
  }
  return {r1.get_d(), r_inf.get_d()};
}

}  // namespace schurasym
