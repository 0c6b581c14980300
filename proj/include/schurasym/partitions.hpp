#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurasym {

/// Raised when a sequence is not an element of GT_N^+. `index()` is the
/// 0-based position of the first offending entry.
class PartitionError : public std::invalid_argument {
 public:
  PartitionError(std::size_t index, const std::string& what)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Non-increasing tuple of non-negative integers of fixed length N.
///
/// Stored 0-based; part(i) is lambda_{i+1}. Immutable once built, so it can
/// be shared freely between threads.
class Partition {
 public:
  /// Checks monotonicity and non-negativity. Throws PartitionError.
  static Partition validate(std::vector<std::int64_t> parts);

  std::size_t size() const { return parts_.size(); }
  std::int64_t operator[](std::size_t i) const { return parts_[i]; }
  std::span<const std::int64_t> parts() const { return parts_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {}
  std::vector<std::int64_t> parts_;
};

/// ((m-1)(N-1), (m-1)(N-2), ..., m-1, 0).
Partition staircase(int m, int N);

/// Staircase of order m and length N with its first head.size() parts
/// replaced by `head`. Throws PartitionError if the splice breaks
/// monotonicity.
Partition almost_staircase(int m, int N, std::span<const std::int64_t> head);

/// |lambda|.
std::int64_t weight(const Partition& lambda);

/// Smallest l such that lambda agrees with staircase(m, N) from part l on.
std::size_t head_length(const Partition& lambda, int m);

std::string to_string(const Partition& lambda);

}  // namespace schurasym
