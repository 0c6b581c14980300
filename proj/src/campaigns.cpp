#include "schurasym/campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <thread>

#include "schurasym/asymptotics.hpp"
#include "schurasym/partitions.hpp"
#include "schurasym/schur.hpp"
#include "schurasym/weights.hpp"

namespace schurasym {

namespace {

// Evaluates f(0..count-1) on up to `jobs` threads; results keep index order
// and the first failure (by index) is rethrown.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, unsigned jobs, F f) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

std::vector<ExactValue> positive_perturbations(const CampaignConfig& config) {
  std::vector<ExactValue> U;
  for (std::size_t i = 0; i < config.perturbations.size(); ++i) {
    const auto& u = config.perturbations[i];
    if (!u.is_real())
      throw ConfigError("perturbations[" + std::to_string(i) +
                        "] is complex; exact campaigns need positive rationals");
    if (sgn(u.re) <= 0)
      throw ConfigError("perturbations[" + std::to_string(i) + "] must be positive");
    U.push_back(u.re);
  }
  return U;
}

Partition spliced_partition(int m, std::int64_t N, std::int64_t lambda1) {
  const std::int64_t floor_part = N >= 2 ? static_cast<std::int64_t>(m - 1) * (N - 2) : 0;
  if (lambda1 < floor_part)
    throw ConfigError("lambda1 = " + std::to_string(lambda1) + " is below (m-1)(N-2) = " +
                      std::to_string(floor_part) + " at N = " + std::to_string(N));
  const std::int64_t head[] = {lambda1};
  return almost_staircase(m, static_cast<int>(N), head);
}

// u_i^m must differ from every other w_s^m.
void check_perturbations(const PerturbedSet& W, int m) {
  const auto w = W.real_entries();
  for (std::size_t i = 0; i < W.k; ++i) {
    const ExactValue ui = pow(w[i], static_cast<unsigned long>(m));
    for (std::size_t s = 0; s < w.size(); ++s) {
      if (s == i) continue;
      if (pow(w[s], static_cast<unsigned long>(m)) == ui)
        throw ConfigError("perturbation u_" + std::to_string(i + 1) + " = " + to_string(w[i]) +
                          " collides with w_" + std::to_string(s + 1) + " = " + to_string(w[s]) +
                          " (equal m-th powers)");
    }
  }
}

struct Ladder {
  VariableSet X;
  PerturbedSet W;
  Partition lambda;
};

Ladder build_rung(const CampaignConfig& config, std::int64_t N, std::int64_t lambda1) {
  config.require_theorem_fields();
  Partition lambda = spliced_partition(config.m, N, lambda1);
  VariableSet X = realize(*config.spectrum, static_cast<std::size_t>(N));
  const auto U = positive_perturbations(config);
  if (U.size() > X.size()) throw ConfigError("k exceeds N = " + std::to_string(N));
  PerturbedSet W = perturb(X, std::span<const ExactValue>(U));
  check_perturbations(W, config.m);
  return {std::move(X), std::move(W), std::move(lambda)};
}

std::string show(const std::vector<ExactValue>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + to_string(xs[i]);
  return s + ")";
}

void record(IdentityResult& r, bool ok, const std::string& detail) {
  ++r.cases;
  if (ok) return;
  ++r.failures;
  if (r.failure_details.size() < 10) r.failure_details.push_back(detail);
}

}  // namespace

std::int64_t lambda1_for(const CampaignConfig& config, std::int64_t N) {
  if (!config.alpha1) throw ConfigError("campaign needs alpha1");
  ExactValue scaled = *config.alpha1 * ExactValue(mpz_class(std::to_string(N)));
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return fl.get_si();
}

T17Row t17_row(const CampaignConfig& config, std::int64_t N, std::int64_t lambda1) {
  const Ladder rung = build_rung(config, N, lambda1);
  const int m = config.m;
  const RatioDecomposition d = decompose_ratio(rung.lambda, m, rung.W, rung.X);

  T17Row row;
  row.N = N;
  row.lambda1 = lambda1;
  row.log_s1 = log_magnitude(d.s1).value;
  row.log_s2 = log_magnitude(d.s2).value;
  row.log_s3 = log_magnitude(d.s3).value;
  const double invN = 1.0 / static_cast<double>(N);
  row.exact = (row.log_s1 + row.log_s2 + row.log_s3) * invN;
  row.pp1_residual = (row.log_s1 + row.log_s3) * invN;

  std::vector<Complex> x_head;
  std::vector<Complex> U;
  for (std::size_t i = 0; i < rung.W.k; ++i) {
    x_head.emplace_back(rung.X.entries[i].get_d());
    U.push_back(rung.W.entries[i].to_complex());
  }
  row.limit = theorem_limit(*config.spectrum, m, x_head, U).real();
  row.abs_error = std::fabs(row.exact - row.limit);

  if (saddle_height(lambda1, N, m) > 1.0)
    row.steepest = steepest_value(Profile(*config.spectrum, m), lambda1, N, m);
  return row;
}

ConvergenceReport verify_t17(const CampaignConfig& config, unsigned jobs) {
  config.require_theorem_fields();
  ConvergenceReport report;
  report.rows = parallel_map<T17Row>(config.n_list.size(), jobs, [&](std::size_t i) {
    const auto N = config.n_list[i];
    return t17_row(config, N, lambda1_for(config, N));
  });
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    if (!std::isfinite(r.abs_error) || !std::isfinite(r.exact)) report.finite = false;
    if (i > 0 && r.abs_error > report.rows[i - 1].abs_error) report.monotone = false;
  }
  report.final_error = report.rows.back().abs_error;
  return report;
}

P28Row p28_row(const CampaignConfig& config, std::int64_t N, std::int64_t lambda1) {
  const Ladder rung = build_rung(config, N, lambda1);
  const int m = config.m;
  const auto w = rung.W.real_entries();
  const ExactValue s1 =
      head_length(rung.lambda, m) == 0 ? ExactValue(1) : ratio_onerow(lambda1, m, w);

  P28Row row;
  row.N = N;
  row.lambda1 = lambda1;
  row.y = saddle_height(lambda1, N, m);
  row.exact = log_magnitude(s1).value / static_cast<double>(N);
  if (row.y > 1.0) {
    row.steepest = steepest_value(Profile(*config.spectrum, m), lambda1, N, m);
    row.difference = std::fabs(row.exact - *row.steepest);
  } else {
    row.note = "y <= 1: outside the saddle branch";
  }
  return row;
}

P28Report compare_p28(const CampaignConfig& config, unsigned jobs) {
  config.require_theorem_fields();
  P28Report report;
  report.rows = parallel_map<P28Row>(config.n_list.size(), jobs, [&](std::size_t i) {
    const auto N = config.n_list[i];
    return p28_row(config, N, lambda1_for(config, N));
  });
  std::vector<double> diffs;
  for (const auto& r : report.rows)
    if (r.difference) diffs.push_back(*r.difference);
  report.decayed = diffs.size() >= 2 && diffs.back() < diffs.front();
  return report;
}

PP1Report verify_pp1(const CampaignConfig& config, unsigned jobs) {
  config.require_theorem_fields();
  const auto rows = parallel_map<T17Row>(config.n_list.size(), jobs, [&](std::size_t i) {
    const auto N = config.n_list[i];
    return t17_row(config, N, lambda1_for(config, N));
  });
  PP1Report report;
  bool all_zero = true;
  bool strict = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double invN = 1.0 / static_cast<double>(rows[i].N);
    PP1Row r{rows[i].N, rows[i].lambda1, rows[i].log_s1 * invN, rows[i].log_s3 * invN,
             rows[i].pp1_residual};
    if (r.residual != 0.0) all_zero = false;
    if (i > 0 && !(std::fabs(r.residual) < std::fabs(report.rows.back().residual))) strict = false;
    report.rows.push_back(r);
  }
  report.decreasing = all_zero || strict;
  return report;
}

MomentProblem moment_problem_from(const CampaignConfig& config) {
  config.require_moment_fields();
  std::vector<double> x;
  for (const auto& v : config.spectrum->values()) x.push_back(v.get_d());
  std::vector<std::pair<std::size_t, double>> y;
  for (const auto& [idx, w] : config.moments->y_weights) y.emplace_back(idx, w.get_d());
  try {
    return MomentProblem::create(std::move(x), std::move(y), config.moments->kappa.get_d(),
                                 config.m);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("moment problem: ") + e.what());
  }
}

MomentReport run_moments(const CampaignConfig& config) {
  const MomentProblem problem = moment_problem_from(config);
  MomentReport report;
  report.conditioning = 1.0 / (1.0 - problem.kappa);
  report.ill_conditioned = report.conditioning >= kIllConditioned;
  report.contour = default_contour(problem);

  if (auto check = validate_contour(problem, report.contour); !check) {
    double inner = 0.0;
    for (double x : problem.x) inner = std::max(inner, std::abs(Complex(x) - report.contour.center));
    double outer = std::numeric_limits<double>::infinity();
    for (Complex s : excluded_singularities(problem))
      outer = std::min(outer, std::abs(s - report.contour.center));
    report.contour_error = check.message;
    if (inner < outer)
      report.contour_error += "; suggested radius " + std::to_string(0.5 * (inner + outer));
    else
      report.contour_error += "; no circle about this center separates the atoms";
    return report;
  }

  bool ok = true;
  for (int p = 0; p <= config.moments->p_max; ++p) {
    MomentRow row;
    row.p = p;
    row.quadrature = moment_quadrature(problem, p, report.contour);
    row.residues = moment_residues(problem, p);
    row.discrepancy = std::fabs(row.quadrature - row.residues);
    if (!(row.discrepancy <= kMomentAgreement)) ok = false;
    if (p == 0 && !(std::fabs(row.quadrature - 1.0) <= kMomentAgreement)) ok = false;
    report.rows.push_back(row);
  }
  report.passed = ok;
  return report;
}

bool IdentityReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed(); });
}

std::vector<ExactValue> random_distinct_rationals(std::mt19937_64& rng, std::size_t count) {
  std::vector<ExactValue> out;
  while (out.size() < count) {
    const long p = static_cast<long>(rng() % 30) + 1;
    const long q = static_cast<long>(rng() % 7) + 1;
    ExactValue v = make_ratio(p, q);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

std::vector<Partition> partitions_up_to(std::int64_t max_weight, std::size_t N) {
  std::vector<Partition> out;
  std::vector<std::int64_t> parts(N, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t cap, std::int64_t left) -> void {
    if (i == N) {
      out.push_back(Partition::validate(parts));
      return;
    }
    for (std::int64_t v = 0; v <= std::min(cap, left); ++v) {
      parts[i] = v;
      self(self, i + 1, v, left - v);
    }
    parts[i] = 0;
  };
  rec(rec, 0, max_weight, max_weight);
  return out;
}

IdentityResult staircase_identity_suite(std::uint64_t seed, std::size_t samples) {
  IdentityResult r;
  r.name = "staircase_product_formula";
  std::mt19937_64 rng(seed);
  for (int m = 1; m <= 3; ++m)
    for (int N = 2; N <= 6; ++N)
      for (std::size_t s = 0; s < samples; ++s) {
        const auto X = random_distinct_rationals(rng, N);
        const bool ok = schur_bialternant(staircase(m, N), X) == staircase_product(m, X);
        record(r, ok, "m=" + std::to_string(m) + " X=" + show(X));
      }
  return r;
}

IdentityResult ssyt_oracle_suite(std::uint64_t seed, std::size_t samples) {
  IdentityResult r;
  r.name = "bialternant_vs_tableaux";
  std::mt19937_64 rng(seed);
  for (std::size_t N = 1; N <= 4; ++N) {
    const auto shapes = partitions_up_to(6, N);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto X = random_distinct_rationals(rng, N);
      for (const auto& lambda : shapes) {
        const bool ok = schur_bialternant(lambda, X) == schur_ssyt(lambda, X);
        record(r, ok, "lambda=" + to_string(lambda) + " X=" + show(X));
      }
    }
  }
  return r;
}

IdentityResult onerow_ratio_suite(std::uint64_t seed, std::size_t samples) {
  IdentityResult r;
  r.name = "one_row_ratio";
  std::mt19937_64 rng(seed);
  for (int m = 1; m <= 3; ++m)
    for (int N = 1; N <= 6; ++N) {
      const std::int64_t lo = N >= 2 ? static_cast<std::int64_t>(m - 1) * (N - 2) : 0;
      const std::int64_t hi = static_cast<std::int64_t>(m - 1) * (N - 1) + 4;
      for (std::size_t s = 0; s < samples; ++s) {
        const auto W = random_distinct_rationals(rng, N);
        const ExactValue stair = staircase_product(m, W);
        for (std::int64_t l1 = lo; l1 <= hi; ++l1) {
          const std::int64_t head[] = {l1};
          const Partition lambda = almost_staircase(m, N, head);
          const ExactValue direct = schur_bialternant(lambda, W) / stair;
          const ExactValue onerow = ratio_onerow(l1, m, W);
          const ExactValue general = ratio_general(lambda, m, W, 1);
          record(r, onerow == direct && general == direct,
                 "m=" + std::to_string(m) + " lambda=" + to_string(lambda) + " W=" + show(W));
        }
      }
    }
  return r;
}

IdentityResult two_row_ratio_suite(std::uint64_t seed, std::size_t samples) {
  IdentityResult r;
  r.name = "two_row_ratio";
  std::mt19937_64 rng(seed);
  for (int m = 1; m <= 3; ++m)
    for (int N = 2; N <= 5; ++N) {
      const std::int64_t lo2 = N >= 3 ? static_cast<std::int64_t>(m - 1) * (N - 3) : 0;
      const std::int64_t hi2 = static_cast<std::int64_t>(m - 1) * (N - 2) + 2;
      for (std::size_t s = 0; s < samples; ++s) {
        const auto W = random_distinct_rationals(rng, N);
        const ExactValue stair = staircase_product(m, W);
        for (std::int64_t l2 = lo2; l2 <= hi2; ++l2)
          for (std::int64_t l1 = l2; l1 <= l2 + 2; ++l1) {
            const std::int64_t head[] = {l1, l2};
            const Partition lambda = almost_staircase(m, N, head);
            const ExactValue direct = schur_bialternant(lambda, W) / stair;
            record(r, ratio_general(lambda, m, W, 2) == direct,
                   "m=" + std::to_string(m) + " lambda=" + to_string(lambda) + " W=" + show(W));
          }
      }
    }
  return r;
}

IdentityResult worked_examples_suite() {
  IdentityResult r;
  r.name = "worked_examples";
  const std::vector<ExactValue> W = {2, 1};
  const std::int64_t head[] = {3};
  const Partition lambda = almost_staircase(2, 2, head);
  record(r, ratio_onerow(3, 2, W) == 5, "ratio_onerow((3,0), m=2, (2,1)) != 5");
  record(r, ratio_general(lambda, 2, W, 1) == 5, "ratio_general((3,0), m=2, (2,1)) != 5");
  record(r, schur_bialternant(lambda, W) / staircase_product(2, W) == 5,
         "s_(3,0)(2,1) / s_(1,0)(2,1) != 5");
  const std::vector<ExactValue> W3 = {3, 2, 1};
  record(r, ratio_general(staircase(2, 3), 2, W3, 2) == 1, "staircase ratio != 1");
  const std::vector<ExactValue> ones = {1, 1};
  const Partition p21 = Partition::validate({2, 1});
  record(r, schur_ssyt(p21, ones) == 2, "s_(2,1)(1,1) by tableaux != 2");
  record(r, schur_bialternant(p21, ones) == 2, "s_(2,1)(1,1) by confluent bialternant != 2");
  return r;
}

IdentityReport verify_identities(const CampaignConfig& config) {
  IdentityReport report;
  report.suites.push_back(worked_examples_suite());
  report.suites.push_back(staircase_identity_suite(config.seed, 20));
  report.suites.push_back(ssyt_oracle_suite(config.seed + 1, 10));
  report.suites.push_back(onerow_ratio_suite(config.seed + 2, 5));
  report.suites.push_back(two_row_ratio_suite(config.seed + 3, 5));
  return report;
}

}  // namespace schurasym
