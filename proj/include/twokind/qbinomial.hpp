#pragma once

#include <cstdint>

#include "twokind/bigpoly.hpp"

namespace twokind {

/// Identifies the Gaussian polynomial [top, bottom] evaluated at q^step.
///
/// Any bottom is accepted: bottom < 0 or bottom > top denotes the zero
/// polynomial. step must be >= 1.
struct GaussianParams {
  std::int64_t top = 0;
  std::int64_t bottom = 0;
  std::int64_t step = 1;
};

/// (q;q)_n = (1-q)(1-q^2)...(1-q^n); 1 for n = 0.
IntPolynomial pochhammer_q(std::int64_t n);

/// The Gaussian polynomial [top, bottom]_{q^step}.
///
/// Built from the Pascal-style recurrence at step 1 and memoized in a
/// process-wide cache (safe for concurrent use), then inflated to q^step.
/// Throws std::invalid_argument if step < 1.
IntPolynomial gaussian(const GaussianParams& params);

/// Terms of degree <= max_degree of gaussian(params), computed by a rolling
/// recurrence without touching the cache. Cheap when max_degree is much
/// smaller than the full degree.
IntPolynomial gaussian_truncated(const GaussianParams& params,
                                 std::int64_t max_degree);

/// [N,k]_{q^r} == q^{kr}[N-1,k]_{q^r} + [N-1,k-1]_{q^r}. Requires top >= 1.
bool check_gr1(const GaussianParams& params);
/// [N,k]_{q^r} == [N-1,k]_{q^r} + q^{(N-k)r}[N-1,k-1]_{q^r}. Requires
/// top >= 1.
bool check_gr2(const GaussianParams& params);

/// Drops every memoized Gaussian polynomial.
void clear_gaussian_cache();

}  // namespace twokind
