#include "schurasym/partitions.hpp"

#include <numeric>

namespace schurasym {

Partition Partition::validate(std::vector<std::int64_t> parts) {
  if (parts.empty()) throw PartitionError(0, "partition must have at least one part");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0)
      throw PartitionError(i, "negative part at index " + std::to_string(i));
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw PartitionError(i, "parts increase at index " + std::to_string(i));
  }
  return Partition(std::move(parts));
}

Partition staircase(int m, int N) {
  if (m < 1 || N < 1) throw std::invalid_argument("staircase requires m >= 1 and N >= 1");
  std::vector<std::int64_t> parts(N);
  for (int i = 0; i < N; ++i) parts[i] = static_cast<std::int64_t>(m - 1) * (N - 1 - i);
  return Partition::validate(std::move(parts));
}

Partition almost_staircase(int m, int N, std::span<const std::int64_t> head) {
  if (head.size() > static_cast<std::size_t>(N))
    throw std::invalid_argument("head longer than the partition");
  Partition base = staircase(m, N);
  std::vector<std::int64_t> parts(base.parts().begin(), base.parts().end());
  std::copy(head.begin(), head.end(), parts.begin());
  return Partition::validate(std::move(parts));
}

std::int64_t weight(const Partition& lambda) {
  return std::accumulate(lambda.parts().begin(), lambda.parts().end(), std::int64_t{0});
}

std::size_t head_length(const Partition& lambda, int m) {
  const int N = static_cast<int>(lambda.size());
  std::size_t l = 0;
  for (int i = 0; i < N; ++i)
    if (lambda[i] != static_cast<std::int64_t>(m - 1) * (N - 1 - i)) l = i + 1;
  return l;
}

std::string to_string(const Partition& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda[i]);
  }
  return s + ")";
}

}  // namespace schurasym
