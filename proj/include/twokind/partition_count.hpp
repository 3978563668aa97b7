#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "twokind/bigpoly.hpp"

namespace twokind {

/// Parameters of the two-kind counts pbar_r(N1, N2, k1, k2, n) and
/// Qbar_r(N1, N2, k1, k2, n).
///
/// First-kind parts are multiples of r bounded by n1 * r; second-kind parts
/// are bounded by n2. k1 and k2 bound (pbar) or fix (Qbar) the number of
/// parts of each kind. r must be >= 1. A negative value in any other field
/// denotes an empty family: every count is 0 and every enumeration empty.
struct TwoKindQuery {
  std::int64_t r = 1;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  std::int64_t n = 0;

  friend auto operator<=>(const TwoKindQuery&, const TwoKindQuery&) = default;
};

/// A partition into parts of two kinds. Both lists are in descending order.
/// Partitions produced by qbar_enumerate additionally have distinct parts
/// within each kind.
struct TwoKindPartition {
  std::vector<std::int64_t> first_kind;
  std::vector<std::int64_t> second_kind;

  friend auto operator<=>(const TwoKindPartition&,
                          const TwoKindPartition&) = default;
};

/// "4+2+1'+1'": first kind bare, second kind primed; "(empty)" for n = 0.
std::string to_string(const TwoKindPartition& partition);

/// C(m, 2) = m(m-1)/2, zero for m < 2.
std::int64_t choose2(std::int64_t m);

/// Partitions of n into at most k parts, each at most N.
BigInt p(std::int64_t N, std::int64_t k, std::int64_t n);
/// Unrestricted partition number, as p(n, n, n).
BigInt partition_p(std::int64_t n);
/// Partitions of n into exactly k distinct parts, each at most N.
BigInt Q(std::int64_t N, std::int64_t k, std::int64_t n);

/// [N1+k1, N1]_{q^r} * [N2+k2, N2]_q; its q^n coefficient is pbar_r.
IntPolynomial pbar_polynomial(const TwoKindQuery& query);
/// q^{r C(k1+1,2) + C(k2+1,2)} [N1, k1]_{q^r} [N2, k2]_q.
IntPolynomial qbar_polynomial(const TwoKindQuery& query);

/// pbar_r as a coefficient of the product of Gaussian polynomials.
BigInt pbar_genfun(const TwoKindQuery& query);
/// pbar_r as sum_j p(N1, k1, j) p(N2, k2, n - r j).
BigInt pbar_convolution(const TwoKindQuery& query);
/// Qbar_r as a coefficient of qbar_polynomial.
BigInt qbar_genfun(const TwoKindQuery& query);

/// Every two-kind partition counted by pbar_r, in canonical order:
/// descending lexicographic on (first_kind, second_kind).
std::vector<TwoKindPartition> pbar_enumerate(const TwoKindQuery& query);
/// Every distinct-part two-kind partition counted by Qbar_r, same order.
std::vector<TwoKindPartition> qbar_enumerate(const TwoKindQuery& query);

/// Sizes of the enumerations above, without materializing the partitions.
std::uint64_t pbar_enumerate_count(const TwoKindQuery& query);
std::uint64_t qbar_enumerate_count(const TwoKindQuery& query);

}  // namespace twokind
