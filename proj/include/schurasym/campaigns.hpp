#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "schurasym/config.hpp"
#include "schurasym/moments.hpp"
#include "schurasym/partitions.hpp"

namespace schurasym {

// ---------------------------------------------------------------------------
// Convergence of (1/N) log s_lambda(W)/s_lambda(X) to sum_i [Q(u_i) - Q(x_i)]

struct T17Row {
  std::int64_t N = 0;
  std::int64_t lambda1 = 0;
  double exact = 0.0;         // (1/N) log s_lambda(W)/s_lambda(X), exact arithmetic
  double limit = 0.0;         // sum_i [Q(u_i) - Q(x_i)]
  double abs_error = 0.0;
  std::optional<double> steepest;  // leading saddle term for (1/N) log S1, when y > 1
  double pp1_residual = 0.0;  // (1/N)(log S1 + log S3)
  double log_s1 = 0.0;        // natural logs of the three exact factors
  double log_s2 = 0.0;
  double log_s3 = 0.0;
};

struct ConvergenceReport {
  std::vector<T17Row> rows;
  bool monotone = true;  // abs_error non-increasing in N
  bool finite = true;
  double final_error = 0.0;

  bool passed() const { return monotone && finite; }
};

/// lambda1 = floor(alpha1 N).
std::int64_t lambda1_for(const CampaignConfig& config, std::int64_t N);

/// One ladder rung with an explicit lambda1. Throws ConfigError on an
/// invalid splice or a degenerate perturbation.
T17Row t17_row(const CampaignConfig& config, std::int64_t N, std::int64_t lambda1);

/// Rows are computed on up to `jobs` threads and assembled in N order.
ConvergenceReport verify_t17(const CampaignConfig& config, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Exact (1/N) log S1 against its steepest-descent value

struct P28Row {
  std::int64_t N = 0;
  std::int64_t lambda1 = 0;
  double y = 0.0;
  double exact = 0.0;  // (1/N) log s_lambda(W)/s_staircase(W)
  std::optional<double> steepest;
  std::optional<double> difference;  // |exact - steepest|
  std::string note;                  // reason when the row is skipped
};

struct P28Report {
  std::vector<P28Row> rows;
  bool decayed = false;  // last difference below the first
  bool passed() const { return decayed; }
};

P28Row p28_row(const CampaignConfig& config, std::int64_t N, std::int64_t lambda1);
P28Report compare_p28(const CampaignConfig& config, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Cancellation of log S1 + log S3

struct PP1Row {
  std::int64_t N = 0;
  std::int64_t lambda1 = 0;
  double log_s1 = 0.0;  // (1/N) log S1
  double log_s3 = 0.0;  // (1/N) log S3
  double residual = 0.0;
};

struct PP1Report {
  std::vector<PP1Row> rows;
  bool decreasing = false;  // |r_N| strictly decreasing, or identically zero
  bool passed() const { return decreasing; }
};

PP1Report verify_pp1(const CampaignConfig& config, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Moments of the limiting counting measure

struct MomentRow {
  int p = 0;
  double quadrature = 0.0;
  double residues = 0.0;
  double discrepancy = 0.0;
};

struct MomentReport {
  std::vector<MomentRow> rows;
  Contour contour;
  std::string contour_error;  // non-empty when the default contour failed validation
  double conditioning = 1.0;  // 1/(1 - kappa)
  bool ill_conditioned = false;
  bool passed = false;
};

inline constexpr double kMomentAgreement = 1e-8;
inline constexpr double kIllConditioned = 10.0;

MomentProblem moment_problem_from(const CampaignConfig& config);
MomentReport run_moments(const CampaignConfig& config);

// ---------------------------------------------------------------------------
// Exact identity suites

struct IdentityResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_details;  // first few only
  bool passed() const { return failures == 0 && cases > 0; }
};

struct IdentityReport {
  std::vector<IdentityResult> suites;
  bool passed() const;
};

/// Distinct positive rationals p/q with 1 <= p <= 30, 1 <= q <= 7.
std::vector<ExactValue> random_distinct_rationals(std::mt19937_64& rng, std::size_t count);

/// All partitions of weight <= max_weight with at most N non-zero parts,
/// padded with zeros to length N.
std::vector<Partition> partitions_up_to(std::int64_t max_weight, std::size_t N);

/// s_staircase(m,N)(X) == staircase_product(m,X), m in {1,2,3}, N in 2..6.
IdentityResult staircase_identity_suite(std::uint64_t seed, std::size_t samples);
/// bialternant == tableau sum, |lambda| <= 6, N <= 4.
IdentityResult ssyt_oracle_suite(std::uint64_t seed, std::size_t samples);
/// ratio_onerow == ratio_general(l=1) == exact division, N <= 6, m in {1,2,3}.
IdentityResult onerow_ratio_suite(std::uint64_t seed, std::size_t samples);
/// ratio_general(l=2) == exact division, N <= 5, m in {1,2,3}.
IdentityResult two_row_ratio_suite(std::uint64_t seed, std::size_t samples);
/// Hand-checked fixed cases.
IdentityResult worked_examples_suite();

IdentityReport verify_identities(const CampaignConfig& config);

}  // namespace schurasym
