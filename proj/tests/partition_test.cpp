#include <gtest/gtest.h>

#include <set>

#include "census/partition.hpp"

using namespace census;

namespace {

TEST(Partition, EnumerationExamples) {
  auto one = partitions_up_to(1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_TRUE(one[0].empty());
  EXPECT_EQ(one[1], Partition({1}));

  auto three = partitions_up_to(3);
  std::vector<Partition> expect = {Partition{}, Partition({1}), Partition({2}), Partition({1, 1}),
                                   Partition({3}), Partition({2, 1}), Partition({1, 1, 1})};
  EXPECT_EQ(three, expect);

  auto four = partitions_up_to(4);
  EXPECT_EQ(four.size(), 12u);
  EXPECT_EQ(partitions_of(4).size(), 5u);
}

TEST(Partition, CountsMatchEuler) {
  long long total = 0;
  for (int n = 0; n <= 12; ++n) {
    auto ps = partitions_of(n);
    EXPECT_EQ(static_cast<long long>(ps.size()), partition_count(n));
    EXPECT_EQ(std::set<Partition>(ps.begin(), ps.end()).size(), ps.size());
    total += partition_count(n);
    EXPECT_EQ(static_cast<long long>(partitions_up_to(n).size()), total);
  }
  EXPECT_EQ(partition_count(30), 5604);
}

TEST(Partition, ConjugateExamples) {
  EXPECT_EQ(Partition({3, 2}).conjugate(), Partition({2, 2, 1}));
  EXPECT_EQ(Partition({1, 1}).conjugate(), Partition({2}));
  EXPECT_EQ(Partition{}.conjugate(), Partition{});
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) EXPECT_EQ(p.conjugate().conjugate(), p);
}

TEST(Partition, ArmLegOfInteriorBox) {
  Partition lambda({10, 9, 9, 9, 6, 3, 3});
  bool found = false;
  for (const auto& b : box_stats(lambda)) {
    if (b.column == 4 && b.row == 3) {
      EXPECT_EQ(b.arm, 5);
      EXPECT_EQ(b.leg, 2);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Partition, SmallBoxStats) {
  auto one = box_stats(Partition({1}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].arm, 0);
  EXPECT_EQ(one[0].leg, 0);

  auto two = box_stats(Partition({2}));
  ASSERT_EQ(two.size(), 2u);
  for (const auto& b : two) {
    EXPECT_EQ(b.row, 1);
    EXPECT_EQ(b.arm, b.column == 1 ? 1 : 0);
    EXPECT_EQ(b.leg, 0);
  }
}

TEST(Partition, BoxInvariants) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) {
      auto boxes = box_stats(p);
      EXPECT_EQ(static_cast<int>(boxes.size()), n);
      // corners: arm = leg = 0 exactly at the end of the top row of each part size
      int corners = 0;
      for (const auto& b : boxes) corners += (b.arm == 0 && b.leg == 0);
      std::set<int> sizes(p.parts().begin(), p.parts().end());
      EXPECT_EQ(corners, static_cast<int>(sizes.size())) << p.to_string();
    }
  }
}

TEST(Partition, PairingExamples) {
  EXPECT_EQ(pairing(Partition({1}), Partition({1})), 1);
  EXPECT_EQ(pairing(Partition({2}), Partition({2})), 2);
  EXPECT_EQ(pairing(Partition({1, 1}), Partition({1, 1})), 4);
  EXPECT_EQ(pairing(Partition({2, 1}), Partition({1, 1, 1})), 6);
}

TEST(Partition, PairingFromBlocks) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) {
      auto b = block_profile(p);
      int expect = 0;
      for (int i = 1; i <= b.blocks(); ++i) {
        expect += i * b.r(i) * b.r(i);
        for (int j = i + 1; j <= b.blocks(); ++j) expect += 2 * i * b.r(i) * b.r(j);
      }
      EXPECT_EQ(pairing(p, p), expect) << p.to_string();
    }
  }
}

TEST(Partition, BlockProfileExamples) {
  auto a = block_profile(Partition({2, 1, 1}));
  EXPECT_EQ(a.multiplicities, (std::vector<int>{2, 1}));
  EXPECT_EQ(a.n(), 3);
  EXPECT_EQ(a.before(2), 2);
  EXPECT_EQ(a.leader(1), 1);
  EXPECT_EQ(a.leader(2), 3);

  auto b = block_profile(Partition({2}));
  EXPECT_EQ(b.multiplicities, (std::vector<int>{0, 1}));
  EXPECT_EQ(b.n(), 1);
  EXPECT_EQ(b.leader(2), 1);
  EXPECT_EQ(b.nonempty(), (std::vector<int>{2}));

  auto c = block_profile(Partition({1, 1}));
  EXPECT_EQ(c.multiplicities, (std::vector<int>{2}));
  EXPECT_EQ(c.leader(1), 1);

  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) EXPECT_EQ(from_profile(block_profile(p)), p);
}

}  // namespace
