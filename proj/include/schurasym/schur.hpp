#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schurasym/exact.hpp"
#include "schurasym/partitions.hpp"
#include "schurasym/weights.hpp"

namespace schurasym {

using ExactMatrix = std::vector<std::vector<ExactValue>>;

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination with row pivoting. The argument is consumed.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> a);

/// Exact determinant of a rational matrix: each column is scaled to integers
/// by the lcm of its denominators, then Bareiss is applied.
ExactValue exact_determinant(const ExactMatrix& a);

/// Generalized alternant det[ x_j^{e_i} ]. Repeated x values are handled
/// confluently: the r-th copy of a value v contributes the column
/// binom(e_i, r) v^{e_i - r}, i.e. the r-th derivative divided by r!.
ExactValue confluent_alternant(std::span<const std::int64_t> exponents,
                               std::span<const ExactValue> X);

/// s_lambda(X) = det[x_j^{lambda_i + N - i}] / det[x_j^{N - i}].
///
/// Distinct values give the classical bialternant. Repeated values are
/// specialized exactly through confluent_alternant on both numerator and
/// denominator, so realized variable sets with multiplicities are accepted.
ExactValue schur_bialternant(const Partition& lambda, std::span<const ExactValue> X);

/// Brute-force sum over semistandard tableaux of shape lambda with entries
/// in 1..N. Guarded to |lambda| <= 12 and N <= 5.
ExactValue schur_ssyt(const Partition& lambda, std::span<const ExactValue> X);

/// prod_{i<j} sum_{r=0}^{m-1} x_i^r x_j^{m-1-r}, which equals
/// s_{staircase(m,N)}(X) and stays well defined for repeated values.
ExactValue staircase_product(int m, std::span<const ExactValue> X);

/// s_lambda(W) / s_{staircase(m,N)}(W) by the double sum over index sets
/// J = {j_1 < ... < j_l} and permutations of S_l of signed l x l determinants.
/// lambda must agree with the staircase from part l on. W needs pairwise
/// distinct m-th powers. Exponential in l: guarded to l <= 3, N <= 12.
ExactValue ratio_general(const Partition& lambda, int m, std::span<const ExactValue> W,
                         std::size_t l);

/// s_lambda(W) / s_{staircase(m,N)}(W) for lambda = (lambda1, staircase tail):
/// the residue sum  sum_j w_j^{lambda1+N-1} / prod_{s != j}(w_j^m - w_s^m).
///
/// Equal entries of W are merged into higher-order poles and the residue is
/// taken exactly from truncated Taylor series, so realized sets with
/// multiplicities are supported. Distinct entries with equal m-th powers
/// (where the staircase Schur value itself vanishes) are rejected.
ExactValue ratio_onerow(std::int64_t lambda1, int m, std::span<const ExactValue> W);

/// The three factors of s_lambda(W)/s_lambda(X):
///   s1 = s_lambda(W)/s_stair(W), s2 = s_stair(W)/s_stair(X), s3 = s_stair(X)/s_lambda(X).
struct RatioDecomposition {
  ExactValue s1;
  ExactValue s2;
  ExactValue s3;
};

/// Requires real W. lambda must be a valid almost-staircase partition of
/// order m with the same length as W and X.
RatioDecomposition decompose_ratio(const Partition& lambda, int m, const PerturbedSet& W,
                                   const VariableSet& X);

/// (1/N) log s_lambda(W)/s_lambda(X), assembled as log s1 + log s2 + log s3.
/// Throws std::domain_error on a non-positive exact factor.
LogMagnitude log_ratio_full(const Partition& lambda, int m, const PerturbedSet& W,
                            const VariableSet& X);

}  // namespace schurasym
