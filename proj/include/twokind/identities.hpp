#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "twokind/bigpoly.hpp"
#include "twokind/partition_count.hpp"

namespace twokind {

/// How a verifier sweeps its parameter grid. Both modes produce identical
/// reports; `serial` is the reference path.
enum class Execution { serial, parallel };

struct Failure {
  /// Named parameter tuple, in the order the verifier defines.
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string identity_id;
  std::string grid;
  std::uint64_t checked = 0;
  /// Sorted by parameter tuple.
  std::vector<Failure> failures;

  /// No failures, and at least one tuple was actually checked.
  bool passed() const { return checked > 0 && failures.empty(); }
};

/// {identity_id, grid, checked, failures: [{params, lhs, rhs}]}. Numbers are
/// decimal strings.
nlohmann::json to_json(const VerificationReport& report);

/// Sweep over r in [1, r_max] and N1, N2, k1, k2 in [0, param_max].
struct TwoKindGrid {
  std::int64_t r_max = 3;
  std::int64_t param_max = 4;
};

/// Sweep over N in [0, N_max] and k in [0, k_max].
struct RestrictedGrid {
  std::int64_t N_max = 8;
  std::int64_t k_max = 8;
};

/// Sweep over m in [0, m_max] and n in [0, n_max].
struct GuoYangGrid {
  std::int64_t m_max = 10;
  std::int64_t n_max = 10;
};

enum class Thm33Sign {
  /// (-1)^j on the right-hand side.
  alternating,
  /// Right-hand summands all taken with sign +1. Known to be false; kept as
  /// a regression witness.
  unsigned_terms,
};

// Individual identities as computable operations.

/// sum_j pbar_2(N, N+1-k+2j, j, k-2j, n - C(k-2j, 2)), equal to p(N, k, n).
BigInt expand_p_thm31(std::int64_t N, std::int64_t k, std::int64_t n);

struct CorollaryTerm {
  std::int64_t j = 0;
  TwoKindQuery query;
  BigInt value;
};

struct CorollaryExpansion {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::vector<CorollaryTerm> terms;
  BigInt total;
};

/// Smallest j >= 0 with C(n - 2j, 2) <= n, i.e. the first summand of the
/// p(n) expansion over pbar_2 that can be nonzero.
std::int64_t corollary_lower_bound(std::int64_t n);
/// p(n) = sum_{j=lower}^{floor(n/2)} pbar_2(n, n-2j, j, 2j+1, n - C(n-2j, 2)).
CorollaryExpansion corollary_expansion(std::int64_t n);
BigInt p_by_corollary(std::int64_t n);

/// Left and right sides of the pbar_4 / pbar_2 identity at (N, k, n).
BigInt thm33_lhs(std::int64_t N, std::int64_t k, std::int64_t n);
BigInt thm33_rhs(std::int64_t N, std::int64_t k, std::int64_t n,
                 Thm33Sign sign = Thm33Sign::alternating);

/// sum_{k<=n/2} [m+k,k]_{q^2} [m+1,n-2k]_q q^{C(n-2k,2)}.
IntPolynomial guo_yang_1_lhs(std::int64_t m, std::int64_t n);
/// [m+n, n]_q.
IntPolynomial guo_yang_1_rhs(std::int64_t m, std::int64_t n);
/// sum_{k<=n/4} [m+k,k]_{q^4} [m+1,n-4k]_q q^{C(n-4k,2)}.
IntPolynomial guo_yang_2_lhs(std::int64_t m, std::int64_t n);
/// sum_{k<=n/2} (-1)^k [m+k,k]_{q^2} [m+n-2k,n-2k]_q.
IntPolynomial guo_yang_2_rhs(std::int64_t m, std::int64_t n);

// Verifiers. Each sweeps its grid and reports every mismatching tuple.

VerificationReport verify_guo_yang_1(const GuoYangGrid& grid = {},
                                     Execution exec = Execution::parallel);
VerificationReport verify_guo_yang_2(const GuoYangGrid& grid = {},
                                     Execution exec = Execution::parallel);

/// Convolution route against the enumeration oracle.
VerificationReport verify_thm21(const TwoKindGrid& grid = {},
                                Execution exec = Execution::parallel);
/// Generating-function route against the enumeration oracle.
VerificationReport verify_thm22(const TwoKindGrid& grid = {},
                                Execution exec = Execution::parallel);
/// The three five-term recurrences (grid points with N1, N2 >= 1).
VerificationReport verify_thm23(const TwoKindGrid& grid = {3, 5},
                                Execution exec = Execution::parallel);
/// The three parameter swaps and self-reciprocity.
VerificationReport verify_thm24(const TwoKindGrid& grid = {3, 5},
                                Execution exec = Execution::parallel);
/// Qbar (enumerated) against the shifted pbar (generating function).
VerificationReport verify_thm25(const TwoKindGrid& grid = {3, 5},
                                Execution exec = Execution::parallel);
/// Qbar generating function against enumeration.
VerificationReport verify_thm26(const TwoKindGrid& grid = {3, 5},
                                Execution exec = Execution::parallel);
/// expand_p_thm31 against p.
VerificationReport verify_thm31(const RestrictedGrid& grid = {8, 8},
                                Execution exec = Execution::parallel);
VerificationReport verify_thm33(const RestrictedGrid& grid = {5, 6},
                                Execution exec = Execution::parallel,
                                Thm33Sign sign = Thm33Sign::alternating);
/// p_by_corollary against partition_p for 0 <= n <= n_max.
VerificationReport verify_cor32(std::int64_t n_max = 60,
                                Execution exec = Execution::parallel);

/// Identity ids accepted by run_verifier, in report order ("all" excluded).
const std::vector<std::string>& identity_ids();

/// Grid overrides for run_verifier; unset fields keep each verifier's
/// defaults.
struct GridOverrides {
  std::int64_t r_max = -1;
  std::int64_t param_max = -1;
  std::int64_t N_max = -1;
  std::int64_t k_max = -1;
  std::int64_t m_max = -1;
  std::int64_t n_max = -1;
};

/// Runs one verifier by id. Throws std::invalid_argument for unknown ids.
VerificationReport run_verifier(const std::string& identity_id,
                                const GridOverrides& overrides = {},
                                Execution exec = Execution::parallel);

}  // namespace twokind
