#pragma once

#include <string>
#include <vector>

namespace census {

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws InvalidArgument on a nonpositive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |λ|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// λ_j with 1-based j; 0 past the end.
  int part(int j) const { return j >= 1 && j <= length() ? parts_[j - 1] : 0; }

  Partition conjugate() const;
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Box (i, j) with 1 <= i <= λ_j: column i, row j counted from the bottom.
struct BoxStat {
  int column;
  int row;
  int arm;  // boxes strictly to the right
  int leg;  // boxes strictly above
};

std::vector<BoxStat> box_stats(const Partition& lambda);

/// Σ_i λ'_i μ'_i.
int pairing(const Partition& lambda, const Partition& mu);

/// λ = (1^{r_1} 2^{r_2} ... t^{r_t}).
struct BlockProfile {
  std::vector<int> multiplicities;  // r_1..r_t, r_t >= 1

  int blocks() const { return static_cast<int>(multiplicities.size()); }
  int r(int i) const { return multiplicities[i - 1]; }
  int n() const;
  /// r_{<i}
  int before(int i) const;
  /// r_{>i}
  int after(int i) const;
  /// 1 + r_{<i}; meaningful when r_i > 0.
  int leader(int i) const { return 1 + before(i); }
  /// Block indices i with r_i > 0, ascending.
  std::vector<int> nonempty() const;
};

BlockProfile block_profile(const Partition& lambda);
Partition from_profile(const BlockProfile& profile);

/// Every partition of 0..R, ordered by size and then reverse lexicographically.
std::vector<Partition> partitions_up_to(int R);
std::vector<Partition> partitions_of(int n);
/// p(n) for the count check.
long long partition_count(int n);

}  // namespace census
