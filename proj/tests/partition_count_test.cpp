#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "twokind/partition_count.hpp"
#include "twokind/qbinomial.hpp"

namespace twokind {
namespace {

// Test-only oracle: choose a multiplicity for every admissible part value
// of each kind, then keep the choices whose sizes and total fit the query.
// Shares no code with the library's walker.
std::uint64_t brute_pbar(const TwoKindQuery& q) {
  std::vector<std::int64_t> values;
  std::vector<int> kind;
  for (std::int64_t m = 1; m <= q.n1; ++m) {
    values.push_back(q.r * m);
    kind.push_back(0);
  }
  for (std::int64_t v = 1; v <= q.n2; ++v) {
    values.push_back(v);
    kind.push_back(1);
  }
  std::uint64_t hits = 0;
  std::int64_t used[2] = {0, 0};
  auto rec = [&](auto&& self, std::size_t i, std::int64_t sum) -> void {
    if (sum > q.n || used[0] > q.k1 || used[1] > q.k2) return;
    if (i == values.size()) {
      if (sum == q.n) ++hits;
      return;
    }
    for (std::int64_t c = 0; sum + c * values[i] <= q.n; ++c) {
      used[kind[i]] += c;
      self(self, i + 1, sum + c * values[i]);
      used[kind[i]] -= c;
    }
  };
  rec(rec, 0, 0);
  return hits;
}

// Distinct parts: subsets of each kind's admissible values, chosen by bitmask.
// `first_bound` is the largest first-kind part allowed.
std::uint64_t brute_qbar(const TwoKindQuery& q, std::int64_t first_bound) {
  std::vector<std::int64_t> firsts;
  for (std::int64_t v = q.r; v <= first_bound; v += q.r) firsts.push_back(v);
  std::uint64_t hits = 0;
  for (std::uint32_t a = 0; a < (1u << firsts.size()); ++a) {
    if (std::popcount(a) != q.k1) continue;
    std::int64_t sum_a = 0;
    for (std::size_t i = 0; i < firsts.size(); ++i) {
      if (a >> i & 1u) sum_a += firsts[i];
    }
    for (std::uint32_t b = 0; b < (1u << q.n2); ++b) {
      if (std::popcount(b) != q.k2) continue;
      std::int64_t sum = sum_a;
      for (std::int64_t v = 1; v <= q.n2; ++v) {
        if (b >> (v - 1) & 1u) sum += v;
      }
      if (sum == q.n) ++hits;
    }
  }
  return hits;
}

std::vector<std::string> rendered(const std::vector<TwoKindPartition>& parts) {
  std::vector<std::string> out;
  for (const auto& part : parts) out.push_back(to_string(part));
  return out;
}

TEST(RestrictedP, Examples) {
  for (std::int64_t N = 0; N <= 4; ++N) {
    for (std::int64_t k = 0; k <= 4; ++k) {
      EXPECT_EQ(p(N, k, 0), 1);
      EXPECT_EQ(p(N, k, N * k + 1), 0);
      EXPECT_EQ(p(N, k, N * k + 7), 0);
    }
  }
  EXPECT_EQ(p(2, 2, 2), 2);
  EXPECT_EQ(p(-1, 3, 0), 0);
  EXPECT_EQ(p(3, 3, -1), 0);
}

TEST(RestrictedP, LargeBoundsClampToN) {
  EXPECT_EQ(p(1000000, 1000000, 10), 42);
  EXPECT_EQ(p(1000000, 2, 10), 6);
}

TEST(RestrictedP, MatchesBruteForce) {
  for (std::int64_t N = 0; N <= 5; ++N) {
    for (std::int64_t k = 0; k <= 5; ++k) {
      for (std::int64_t n = 0; n <= N * k + 1; ++n) {
        EXPECT_EQ(p(N, k, n), brute_pbar({1, 0, N, 0, k, n}));
      }
    }
  }
}

TEST(PartitionNumber, Examples) {
  EXPECT_EQ(partition_p(0), 1);
  EXPECT_EQ(partition_p(6), 11);
  const auto ten = brute_pbar({1, 0, 10, 0, 10, 10});
  EXPECT_EQ(ten, 42u);
  EXPECT_EQ(partition_p(10), ten);
}

TEST(PbarGenfun, Examples) {
  EXPECT_EQ(pbar_genfun({2, 2, 3, 2, 2, 4}), 6);
  EXPECT_EQ(pbar_genfun({2, 2, 3, 2, 2, 3}), 3);
  EXPECT_EQ(brute_pbar({2, 2, 3, 2, 2, 3}), 3u);
  for (std::int64_t r = 1; r <= 3; ++r) {
    EXPECT_EQ(pbar_genfun({r, 3, 1, 4, 2, 0}), 1);
  }
  // Past the top degree N1 k1 r + N2 k2 = 14.
  EXPECT_EQ(pbar_genfun({2, 2, 3, 2, 2, 15}), 0);
  EXPECT_EQ(pbar_genfun({2, 2, 3, 2, 2, 14}), 1);
}

TEST(PbarGenfun, NegativeFieldsCountZero) {
  EXPECT_EQ(pbar_genfun({2, -1, 3, 2, 2, 4}), 0);
  EXPECT_EQ(pbar_genfun({2, 2, 3, 2, 2, -4}), 0);
  EXPECT_EQ(pbar_convolution({2, 2, 3, -1, 2, 4}), 0);
  EXPECT_TRUE(pbar_enumerate({2, 2, 3, 2, -2, 4}).empty());
  EXPECT_THROW(pbar_genfun({0, 2, 3, 2, 2, 4}), std::invalid_argument);
  EXPECT_THROW(pbar_enumerate({0, 2, 3, 2, 2, 4}), std::invalid_argument);
}

TEST(PbarConvolution, Examples) {
  EXPECT_EQ(pbar_convolution({2, 2, 3, 2, 2, 4}), 6);
  for (std::int64_t n = 0; n <= 12; ++n) {
    EXPECT_EQ(pbar_convolution({1, 0, 3, 0, 4, n}), p(3, 4, n));
  }
  EXPECT_EQ(pbar_convolution({3, 1, 1, 1, 1, 4}), 1);
  EXPECT_EQ(brute_pbar({3, 1, 1, 1, 1, 4}), 1u);
}

TEST(PbarEnumerate, SixPartitionsOfFour) {
  const auto parts = pbar_enumerate({2, 2, 3, 2, 2, 4});
  EXPECT_EQ(rendered(parts),
            (std::vector<std::string>{"4", "2+2", "2+2'", "2+1'+1'", "3'+1'",
                                      "2'+2'"}));
}

TEST(PbarEnumerate, EdgeCases) {
  const auto empty = pbar_enumerate({2, 2, 3, 2, 2, 0});
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(to_string(empty[0]), "(empty)");
  EXPECT_TRUE(pbar_enumerate({2, 1, 0, 1, 0, 3}).empty());
}

void expect_valid_pbar(const TwoKindQuery& q,
                       const std::vector<TwoKindPartition>& parts) {
  for (const auto& part : parts) {
    EXPECT_LE(static_cast<std::int64_t>(part.first_kind.size()), q.k1);
    EXPECT_LE(static_cast<std::int64_t>(part.second_kind.size()), q.k2);
    std::int64_t sum = 0;
    for (auto v : part.first_kind) {
      EXPECT_EQ(v % q.r, 0);
      EXPECT_GE(v, q.r);
      EXPECT_LE(v, q.n1 * q.r);
      sum += v;
    }
    for (auto v : part.second_kind) {
      EXPECT_GE(v, 1);
      EXPECT_LE(v, q.n2);
      sum += v;
    }
    EXPECT_EQ(sum, q.n);
    EXPECT_TRUE(std::is_sorted(part.first_kind.rbegin(), part.first_kind.rend()));
    EXPECT_TRUE(std::is_sorted(part.second_kind.rbegin(), part.second_kind.rend()));
  }
  // Canonical order is strictly descending, hence duplicate-free.
  EXPECT_TRUE(std::adjacent_find(parts.begin(), parts.end(),
                                 [](const auto& a, const auto& b) {
                                   return !(a > b);
                                 }) == parts.end());
}

TEST(PbarEnumerate, StructureAndOrderOnGrid) {
  for (std::int64_t r = 1; r <= 3; ++r)
    for (std::int64_t n1 = 0; n1 <= 3; ++n1)
      for (std::int64_t n2 = 0; n2 <= 3; ++n2)
        for (std::int64_t k1 = 0; k1 <= 3; ++k1)
          for (std::int64_t k2 = 0; k2 <= 3; ++k2) {
            TwoKindQuery q{r, n1, n2, k1, k2, 0};
            for (q.n = 0; q.n <= r * n1 * k1 + n2 * k2 + 1; ++q.n) {
              const auto parts = pbar_enumerate(q);
              expect_valid_pbar(q, parts);
              const auto oracle = brute_pbar(q);
              EXPECT_EQ(parts.size(), oracle);
              EXPECT_EQ(pbar_enumerate_count(q), oracle);
              EXPECT_EQ(pbar_genfun(q), oracle);
              EXPECT_EQ(pbar_convolution(q), oracle);
              EXPECT_EQ(pbar_polynomial(q).coeff(q.n), oracle);
            }
          }
}

TEST(QbarGenfun, Examples) {
  EXPECT_EQ(qbar_genfun({1, 2, 0, 2, 0, 3}), 1);
  EXPECT_EQ(qbar_genfun({3, 4, 2, 0, 0, 0}), 1);
  EXPECT_EQ(qbar_genfun({2, 2, 0, 2, 0, 6}), 1);
  EXPECT_EQ(brute_qbar({2, 2, 0, 2, 0, 6}, 4), 1u);
}

TEST(QbarEnumerate, Examples) {
  EXPECT_EQ(rendered(qbar_enumerate({1, 3, 0, 2, 0, 4})),
            std::vector<std::string>{"3+1"});
  EXPECT_EQ(rendered(qbar_enumerate({1, 3, 3, 0, 0, 0})),
            std::vector<std::string>{"(empty)"});
  EXPECT_EQ(rendered(qbar_enumerate({2, 3, 2, 1, 1, 5})),
            std::vector<std::string>{"4+1'"});
}

TEST(QbarEnumerate, MatchesBitmaskOracleOnGrid) {
  for (std::int64_t r = 1; r <= 3; ++r)
    for (std::int64_t n1 = 0; n1 <= 4; ++n1)
      for (std::int64_t n2 = 0; n2 <= 4; ++n2)
        for (std::int64_t k1 = 0; k1 <= 4; ++k1)
          for (std::int64_t k2 = 0; k2 <= 4; ++k2) {
            TwoKindQuery q{r, n1, n2, k1, k2, 0};
            const auto poly = qbar_polynomial(q);
            for (q.n = 0; q.n <= r * n1 * k1 + n2 * k2 + 1; ++q.n) {
              const auto parts = qbar_enumerate(q);
              const auto oracle = brute_qbar(q, n1 * r);
              EXPECT_EQ(parts.size(), oracle);
              EXPECT_EQ(qbar_genfun(q), oracle);
              EXPECT_EQ(poly.coeff(q.n), oracle);
              for (const auto& part : parts) {
                EXPECT_EQ(static_cast<std::int64_t>(part.first_kind.size()), k1);
                EXPECT_EQ(static_cast<std::int64_t>(part.second_kind.size()), k2);
                EXPECT_EQ(std::set(part.first_kind.begin(), part.first_kind.end()).size(),
                          part.first_kind.size());
                EXPECT_EQ(std::set(part.second_kind.begin(), part.second_kind.end()).size(),
                          part.second_kind.size());
              }
            }
          }
}

// The alternative reading "first-kind parts at most N1" (instead of N1 * r)
// disagrees with the generating function once r > 1.
TEST(QbarBound, ReadingWithoutStepContradictsGeneratingFunction) {
  const TwoKindQuery q{2, 2, 0, 1, 0, 4};
  EXPECT_EQ(qbar_polynomial(q), IntPolynomial({0, 0, 1, 0, 1}));
  EXPECT_EQ(brute_qbar(q, q.n1), 0u);
  EXPECT_EQ(qbar_genfun(q), 1);
  EXPECT_EQ(qbar_enumerate_count(q), 1u);
}

TEST(DistinctQ, Examples) {
  EXPECT_EQ(Q(3, 2, 5), 1);
  for (std::int64_t N = 0; N <= 5; ++N) EXPECT_EQ(Q(N, 0, 0), 1);
  for (std::int64_t n = 0; n <= 10; ++n) EXPECT_EQ(Q(2, 3, n), 0);
  for (std::int64_t N = 0; N <= 5; ++N)
    for (std::int64_t k = 0; k <= 5; ++k)
      for (std::int64_t n = 0; n <= 16; ++n) {
        EXPECT_EQ(Q(N, k, n), qbar_enumerate_count({1, N, 0, k, 0, n}));
      }
}

TEST(Choose2, Values) {
  EXPECT_EQ(choose2(-3), 0);
  EXPECT_EQ(choose2(0), 0);
  EXPECT_EQ(choose2(1), 0);
  EXPECT_EQ(choose2(2), 1);
  EXPECT_EQ(choose2(7), 21);
}

}  // namespace
}  // namespace twokind
