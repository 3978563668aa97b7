#include "twokind/partition_count.hpp"

#include <algorithm>
#include <stdexcept>

#include "twokind/qbinomial.hpp"

namespace twokind {

namespace {

void require_step(const TwoKindQuery& q) {
  if (q.r < 1) throw std::invalid_argument("divisibility step r must be >= 1");
}

bool has_negative_field(const TwoKindQuery& q) {
  return q.n1 < 0 || q.n2 < 0 || q.k1 < 0 || q.k2 < 0 || q.n < 0;
}

// Largest sum of `count` distinct positive integers not exceeding `max_part`.
std::int64_t max_distinct_sum(std::int64_t max_part, std::int64_t count) {
  if (count > max_part) return -1;
  return count * max_part - choose2(count);
}

// Walks two-kind partitions of q.n in canonical order and hands each one to
// `emit`. First-kind parts are generated as r * multiplier so divisibility
// holds by construction. With `distinct`, parts within a kind are strictly
// decreasing and each kind must have exactly k parts; otherwise parts are
// weakly decreasing and each kind has at most k parts.
template <typename Emit>
class Walker {
 public:
  Walker(const TwoKindQuery& q, bool distinct, Emit& emit)
      : q_(q), distinct_(distinct), emit_(emit) {}

  void run() {
    if (has_negative_field(q_)) return;
    first(q_.n1, q_.n, q_.k1);
  }

 private:
  void first(std::int64_t max_mult, std::int64_t remaining,
             std::int64_t parts_left) {
    if (parts_left > 0) {
      for (std::int64_t m = std::min(max_mult, remaining / q_.r); m >= 1; --m) {
        part_.first_kind.push_back(q_.r * m);
        first(distinct_ ? m - 1 : m, remaining - q_.r * m, parts_left - 1);
        part_.first_kind.pop_back();
      }
    }
    if (distinct_ && parts_left != 0) return;
    second(q_.n2, remaining, q_.k2);
  }

  void second(std::int64_t max_part, std::int64_t remaining,
              std::int64_t parts_left) {
    if (remaining == 0 && (!distinct_ || parts_left == 0)) {
      emit_(part_);
      return;
    }
    if (parts_left == 0 || remaining <= 0) return;
    const std::int64_t capacity = distinct_
                                      ? max_distinct_sum(max_part, parts_left)
                                      : parts_left * max_part;
    if (remaining > capacity) return;
    for (std::int64_t v = std::min(max_part, remaining); v >= 1; --v) {
      part_.second_kind.push_back(v);
      second(distinct_ ? v - 1 : v, remaining - v, parts_left - 1);
      part_.second_kind.pop_back();
    }
  }

  const TwoKindQuery& q_;
  bool distinct_;
  Emit& emit_;
  TwoKindPartition part_;
};

template <typename Emit>
void walk(const TwoKindQuery& q, bool distinct, Emit&& emit) {
  require_step(q);
  Walker<std::remove_reference_t<Emit>> walker(q, distinct, emit);
  walker.run();
}

std::vector<TwoKindPartition> collect(const TwoKindQuery& q, bool distinct) {
  std::vector<TwoKindPartition> out;
  walk(q, distinct, [&out](const TwoKindPartition& part) {
    out.push_back(part);
  });
  return out;
}

std::uint64_t count(const TwoKindQuery& q, bool distinct) {
  std::uint64_t total = 0;
  walk(q, distinct, [&total](const TwoKindPartition&) { ++total; });
  return total;
}

}  // namespace

std::string to_string(const TwoKindPartition& partition) {
  if (partition.first_kind.empty() && partition.second_kind.empty()) {
    return "(empty)";
  }
  std::string out;
  auto append = [&out](std::int64_t part, bool primed) {
    if (!out.empty()) out += '+';
    out += std::to_string(part);
    if (primed) out += '\'';
  };
  for (auto part : partition.first_kind) append(part, false);
  for (auto part : partition.second_kind) append(part, true);
  return out;
}

std::int64_t choose2(std::int64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

BigInt p(std::int64_t N, std::int64_t k, std::int64_t n) {
  if (N < 0 || k < 0 || n < 0) return 0;
  // A partition of n has at most n parts, each at most n.
  N = std::min(N, n);
  k = std::min(k, n);
  return gaussian_truncated({N + k, N, 1}, n).coeff(n);
}

BigInt partition_p(std::int64_t n) {
  if (n < 0) return 0;
  return p(n, n, n);
}

BigInt Q(std::int64_t N, std::int64_t k, std::int64_t n) {
  if (N < 0 || k < 0 || n < 0) return 0;
  const std::int64_t offset = choose2(k + 1);
  if (n < offset) return 0;
  return gaussian_truncated({N, k, 1}, n - offset).coeff(n - offset);
}

IntPolynomial pbar_polynomial(const TwoKindQuery& q) {
  require_step(q);
  return mul(gaussian({q.n1 + q.k1, q.n1, q.r}),
             gaussian({q.n2 + q.k2, q.n2, 1}));
}

IntPolynomial qbar_polynomial(const TwoKindQuery& q) {
  require_step(q);
  if (q.k1 < 0 || q.k2 < 0) return {};
  const IntPolynomial product =
      mul(gaussian({q.n1, q.k1, q.r}), gaussian({q.n2, q.k2, 1}));
  if (product.is_zero()) return product;
  return shift(product, q.r * choose2(q.k1 + 1) + choose2(q.k2 + 1));
}

BigInt pbar_genfun(const TwoKindQuery& q) {
  require_step(q);
  if (has_negative_field(q)) return 0;
  const IntPolynomial first = gaussian_truncated({q.n1 + q.k1, q.n1, q.r}, q.n);
  const IntPolynomial second = gaussian_truncated({q.n2 + q.k2, q.n2, 1}, q.n);
  return mul_truncated(first, second, q.n).coeff(q.n);
}

BigInt pbar_convolution(const TwoKindQuery& q) {
  require_step(q);
  if (has_negative_field(q)) return 0;
  BigInt total = 0;
  for (std::int64_t j = 0; j <= q.n / q.r; ++j) {
    const BigInt first = p(q.n1, q.k1, j);
    if (sgn(first) == 0) continue;
    total += first * p(q.n2, q.k2, q.n - q.r * j);
  }
  return total;
}

BigInt qbar_genfun(const TwoKindQuery& q) {
  require_step(q);
  if (has_negative_field(q)) return 0;
  const std::int64_t offset = q.r * choose2(q.k1 + 1) + choose2(q.k2 + 1);
  const std::int64_t target = q.n - offset;
  if (target < 0) return 0;
  const IntPolynomial first = gaussian_truncated({q.n1, q.k1, q.r}, target);
  const IntPolynomial second = gaussian_truncated({q.n2, q.k2, 1}, target);
  return mul_truncated(first, second, target).coeff(target);
}

std::vector<TwoKindPartition> pbar_enumerate(const TwoKindQuery& q) {
  return collect(q, false);
}

std::vector<TwoKindPartition> qbar_enumerate(const TwoKindQuery& q) {
  return collect(q, true);
}

std::uint64_t pbar_enumerate_count(const TwoKindQuery& q) {
  return count(q, false);
}

std::uint64_t qbar_enumerate_count(const TwoKindQuery& q) {
  return count(q, true);
}

}  // namespace twokind
