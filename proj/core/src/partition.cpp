#include "census/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "census/error.hpp"

namespace census {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p <= 0; }))
    throw Error(ErrorKind::InvalidArgument, "partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (empty()) return {};
  for (int i = 1; i <= parts_.front(); ++i) {
    int count = 0;
    for (int p : parts_)
      if (p >= i) ++count;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
  return s + ")";
}

std::vector<BoxStat> box_stats(const Partition& lambda) {
  std::vector<BoxStat> out;
  for (int j = 1; j <= lambda.length(); ++j) {
    for (int i = 1; i <= lambda.part(j); ++i) {
      int leg = 0;
      for (int k = j + 1; k <= lambda.length(); ++k)
        if (lambda.part(k) >= i) ++leg;
      out.push_back({i, j, lambda.part(j) - i, leg});
    }
  }
  return out;
}

int pairing(const Partition& lambda, const Partition& mu) {
  auto a = lambda.conjugate().parts(), b = mu.conjugate().parts();
  int s = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) s += a[i] * b[i];
  return s;
}

int BlockProfile::n() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0); }

int BlockProfile::before(int i) const {
  return std::accumulate(multiplicities.begin(), multiplicities.begin() + (i - 1), 0);
}

int BlockProfile::after(int i) const {
  return std::accumulate(multiplicities.begin() + i, multiplicities.end(), 0);
}

std::vector<int> BlockProfile::nonempty() const {
  std::vector<int> out;
  for (int i = 1; i <= blocks(); ++i)
    if (r(i) > 0) out.push_back(i);
  return out;
}

BlockProfile block_profile(const Partition& lambda) {
  BlockProfile b;
  if (lambda.empty()) return b;
  b.multiplicities.assign(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int p : lambda.parts()) ++b.multiplicities[static_cast<std::size_t>(p - 1)];
  return b;
}

Partition from_profile(const BlockProfile& profile) {
  std::vector<int> parts;
  for (int i = 1; i <= profile.blocks(); ++i) parts.insert(parts.end(), static_cast<std::size_t>(profile.r(i)), i);
  return Partition(std::move(parts));
}

namespace {
void extend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    extend(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative partition size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(n, n, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int R) {
  if (R < 0) throw Error(ErrorKind::InvalidArgument, "negative size bound");
  std::vector<Partition> out;
  for (int n = 0; n <= R; ++n) {
    auto level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

long long partition_count(int n) {
  // Euler's recurrence via the pentagonal numbers.
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long long sign = (k % 2) ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  }
  return p[n];
}

}  // namespace census
