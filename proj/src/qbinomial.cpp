#include "twokind/qbinomial.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace twokind {

namespace {

// table_[b][c] holds [b + c, b]_q. Every stored row has the same length, so
// the filled region is always a full rectangle.
class GaussianCache {
 public:
  IntPolynomial get(std::int64_t b, std::int64_t c) {
    const auto bi = static_cast<std::size_t>(b);
    const auto ci = static_cast<std::size_t>(c);
    {
      std::shared_lock lock(mutex_);
      if (bi < table_.size() && ci < table_[bi].size()) return table_[bi][ci];
    }
    std::unique_lock lock(mutex_);
    grow(bi + 1, ci + 1);
    return table_[bi][ci];
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  void grow(std::size_t rows, std::size_t cols) {
    rows = std::max(rows, table_.size());
    cols = std::max(cols, table_.empty() ? std::size_t{0} : table_[0].size());
    table_.resize(rows);
    const IntPolynomial one{1};
    for (std::size_t b = 0; b < rows; ++b) {
      auto& row = table_[b];
      for (std::size_t c = row.size(); c < cols; ++c) {
        if (b == 0 || c == 0) {
          row.push_back(one);
        } else {
          // [b+c, b] = q^b [b+c-1, b] + [b+c-1, b-1]
          row.push_back(add(shift(row[c - 1], static_cast<std::int64_t>(b)),
                            table_[b - 1][c]));
        }
      }
    }
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<IntPolynomial>> table_;
};

GaussianCache& cache() {
  static GaussianCache instance;
  return instance;
}

void require_step(std::int64_t step) {
  if (step < 1) throw std::invalid_argument("Gaussian step must be >= 1");
}

bool out_of_range(const GaussianParams& p) {
  return p.bottom < 0 || p.bottom > p.top;
}

// q^e * p, where a zero p absorbs any exponent.
IntPolynomial times_q_power(const IntPolynomial& p, std::int64_t e) {
  if (p.is_zero()) return p;
  return shift(p, e);
}

}  // namespace

IntPolynomial pochhammer_q(std::int64_t n) {
  IntPolynomial result{1};
  for (std::int64_t i = 1; i <= n; ++i) {
    result = mul(result, sub(IntPolynomial{1}, IntPolynomial::monomial(1, i)));
  }
  return result;
}

IntPolynomial gaussian(const GaussianParams& params) {
  require_step(params.step);
  if (out_of_range(params)) return {};
  const std::int64_t b = std::min(params.bottom, params.top - params.bottom);
  const std::int64_t c = params.top - b;
  return inflate(cache().get(b, c), params.step);
}

IntPolynomial gaussian_truncated(const GaussianParams& params,
                                 std::int64_t max_degree) {
  require_step(params.step);
  if (out_of_range(params) || max_degree < 0) return {};
  const std::int64_t limit = max_degree / params.step;
  // Terms up to q^limit count partitions of at most `limit`, which have at
  // most `limit` parts each at most `limit`; both box sides clamp to it.
  const std::int64_t b =
      std::min({params.bottom, params.top - params.bottom, limit});
  const std::int64_t c =
      std::min(std::max(params.bottom, params.top - params.bottom), limit);
  const auto width = static_cast<std::size_t>(limit) + 1;

  // column[j][d] walks the q^d coefficient of [j + col, j] for col = 0..c.
  std::vector<std::vector<BigInt>> column(static_cast<std::size_t>(b) + 1,
                                          std::vector<BigInt>(width));
  for (auto& coeffs : column) coeffs[0] = 1;
  for (std::int64_t col = 1; col <= c; ++col) {
    for (std::size_t j = 1; j < column.size(); ++j) {
      auto& cur = column[j];
      const auto& prev = column[j - 1];
      // [j+col, j] = q^j [j+col-1, j] + [j+col-1, j-1]; descending d reads
      // cur[d - j] before it is overwritten.
      for (std::size_t d = width; d-- > j;) cur[d] = cur[d - j] + prev[d];
      for (std::size_t d = 0; d < j && d < width; ++d) cur[d] = prev[d];
    }
  }
  return inflate(IntPolynomial(std::move(column.back())), params.step);
}

bool check_gr1(const GaussianParams& params) {
  require_step(params.step);
  if (params.top < 1) throw std::invalid_argument("GR1 requires top >= 1");
  const auto [n, k, r] = params;
  const IntPolynomial lhs = gaussian(params);
  const IntPolynomial rhs =
      add(times_q_power(gaussian({n - 1, k, r}), k * r),
          gaussian({n - 1, k - 1, r}));
  return lhs == rhs;
}

bool check_gr2(const GaussianParams& params) {
  require_step(params.step);
  if (params.top < 1) throw std::invalid_argument("GR2 requires top >= 1");
  const auto [n, k, r] = params;
  const IntPolynomial lhs = gaussian(params);
  const IntPolynomial rhs =
      add(gaussian({n - 1, k, r}),
          times_q_power(gaussian({n - 1, k - 1, r}), (n - k) * r));
  return lhs == rhs;
}

void clear_gaussian_cache() { cache().clear(); }

}  // namespace twokind
