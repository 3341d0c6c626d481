#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hdc/error.hpp"
#include "hdc/gf2.hpp"
#include "hdc/partition.hpp"

using namespace hdc;

namespace {

BitVector bits(const std::string& s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = s[i] == '1';
  return v;
}

// Rank over GF(2) of rows packed as integers.
std::size_t brute_rank(const std::vector<std::uint32_t>& rows) {
  std::set<std::uint32_t> span{0};
  for (auto r : rows) {
    std::set<std::uint32_t> next = span;
    for (auto s : span) next.insert(s ^ r);
    span = std::move(next);
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

}  // namespace

TEST(Gf2, RankAgainstSpanSize) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t width = 1 + rng() % 10;
    std::vector<std::uint32_t> packed;
    std::vector<BitVector> rows;
    for (std::size_t r = 0; r < 1 + rng() % 8; ++r) {
      const std::uint32_t p = rng() & ((1u << width) - 1);
      packed.push_back(p);
      rows.emplace_back(width, p);
    }
    EXPECT_EQ(gf2_rank(rows, width), brute_rank(packed));
  }
}

TEST(Gf2, NullspaceIsOrthogonalAndFull) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    const std::size_t width = 2 + rng() % 9;
    std::vector<BitVector> rows;
    for (std::size_t r = 0; r < 1 + rng() % 6; ++r) rows.emplace_back(width, rng());
    const auto ns = gf2_nullspace(rows, width);
    EXPECT_EQ(ns.size() + gf2_rank(rows, width), width);
    for (const auto& v : ns) {
      for (const auto& r : rows) EXPECT_EQ((v & r).count() % 2, 0u);
    }
    EXPECT_EQ(gf2_rank(ns, width), ns.size());
  }
}

TEST(Gf2, EchelonReduceIsCanonical) {
  Gf2Echelon e(5);
  EXPECT_TRUE(e.insert(bits("11000")));
  EXPECT_TRUE(e.insert(bits("01100")));
  EXPECT_FALSE(e.insert(bits("10100")));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.in_span(bits("10100")));
  EXPECT_FALSE(e.in_span(bits("00001")));
  // Members of one coset share a representative.
  EXPECT_EQ(e.reduce(bits("00011")), e.reduce(bits("11011")));
  EXPECT_EQ(e.reduce(bits("00011")), e.reduce(bits("01111")));
  for (auto p : e.pivots()) EXPECT_FALSE(e.reduce(bits("11111"))[p]);
}

TEST(Gf2, MinWeightInCoset) {
  const std::vector<BitVector> basis{bits("111000"), bits("000111")};
  EXPECT_EQ(min_weight_in_coset(bits("110000"), basis), 1u);
  EXPECT_EQ(min_weight_in_coset(bits("111111"), basis), 0u);
  EXPECT_EQ(min_weight_in_coset(bits("100100"), basis), 2u);
}

TEST(Partition, Stirling) {
  EXPECT_EQ(stirling2(4, 2), 7u);
  EXPECT_EQ(stirling2(6, 3), 90u);
  EXPECT_EQ(stirling2(10, 3), 9330u);
  EXPECT_EQ(stirling2(12, 3), 86526u);
  EXPECT_EQ(stirling2(5, 6), 0u);
}

TEST(Partition, RgsOrderAndCount) {
  std::vector<std::vector<int>> seen;
  for_each_rgs(4, 2, [&](std::span<const int> a) {
    seen.emplace_back(a.begin(), a.end());
    return true;
  });
  const std::vector<std::vector<int>> expected{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 0},
                                               {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 1}};
  EXPECT_EQ(seen, expected);
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= n; ++m) {
      std::uint64_t c = 0;
      for_each_rgs(n, m, [&](std::span<const int>) { return ++c, true; });
      EXPECT_EQ(c, stirling2(n, m)) << n << "," << m;
    }
  }
}

TEST(Partition, RgsEarlyStop) {
  int c = 0;
  for_each_rgs(6, 3, [&](std::span<const int>) { return ++c < 5; });
  EXPECT_EQ(c, 5);
}

TEST(Partition, Construction) {
  const Partition p(5, {{4, 0}, {1, 3}, {2}});
  EXPECT_EQ(p.to_string(), "{1,5}|{2,4}|{3}");
  EXPECT_EQ(p.block_of(4), 0);
  EXPECT_EQ(p.block_of(2), 2);
  const int labels[] = {0, 1, 2, 1, 0};
  EXPECT_EQ(Partition::from_labels(labels), p);
  EXPECT_THROW(Partition(3, {{0}, {1}}), InputError);
  EXPECT_THROW(Partition(3, {{0, 1}, {1, 2}}), InputError);
  EXPECT_THROW(Partition(3, {{0, 1, 2}, {}}), InputError);
}

TEST(Partition, CanonicalAndOrder) {
  const Partition p(4, {{3}, {2, 0}, {1}});
  EXPECT_EQ(p.canonical().to_string(), "{1,3}|{2}|{4}");
  const auto o = p.block_sorted_order();
  EXPECT_EQ(std::vector<int>(o.order().begin(), o.order().end()), (std::vector<int>{3, 0, 2, 1}));
}
