// Test-only oracles, independent of the library's construction paths.

#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace twokind::oracles {

// Euler's pentagonal recurrence:
// p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline std::vector<mpz_class> pentagonal_partition_numbers(std::int64_t n_max) {
  std::vector<mpz_class> table(static_cast<std::size_t>(n_max) + 1);
  table[0] = 1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    mpz_class sum = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      mpz_class term = table[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) term += table[static_cast<std::size_t>(n - g2)];
      if (k % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    table[static_cast<std::size_t>(n)] = sum;
  }
  return table;
}

// ceil(n/2 - 1/4 - sqrt(n/2 + 1/16)) evaluated with 512-bit floats.
inline std::int64_t ceiling_lower_bound(std::int64_t n) {
  const mp_bitcnt_t bits = 512;
  mpf_class half_n(n, bits);
  half_n /= 2;
  mpf_class radicand = half_n + mpf_class(1, bits) / 16;
  mpf_class root(0, bits);
  mpf_sqrt(root.get_mpf_t(), radicand.get_mpf_t());
  mpf_class value = half_n - mpf_class(1, bits) / 4 - root;
  mpf_class up(0, bits);
  mpf_ceil(up.get_mpf_t(), value.get_mpf_t());
  return up.get_si();
}

}  // namespace twokind::oracles
