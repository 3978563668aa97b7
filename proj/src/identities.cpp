#include "twokind/identities.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>

#include "twokind/qbinomial.hpp"

namespace twokind {

namespace {

struct PointResult {
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
};

using PointCheck = std::function<PointResult(std::size_t)>;

// Runs `check` on every grid index and merges the results. The merge is in
// index order followed by a sort on parameter tuples, so the report does not
// depend on the execution mode.
VerificationReport sweep(std::string id, std::string grid, std::size_t count,
                         const PointCheck& check, Execution exec) {
  std::vector<PointResult> results(count);
  std::exception_ptr error;
  if (exec == Execution::parallel) {
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        results[static_cast<std::size_t>(i)] =
            check(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(twokind_sweep_error)
        if (!error) error = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) results[i] = check(i);
  }
  if (error) std::rethrow_exception(error);

  VerificationReport report{std::move(id), std::move(grid), 0, {}};
  for (auto& result : results) {
    report.checked += result.checked;
    for (auto& failure : result.failures) {
      report.failures.push_back(std::move(failure));
    }
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const Failure& a, const Failure& b) {
                     return std::lexicographical_compare(
                         a.params.begin(), a.params.end(), b.params.begin(),
                         b.params.end(), [](const auto& x, const auto& y) {
                           return x.second < y.second;
                         });
                   });
  return report;
}

Failure make_failure(std::vector<std::pair<std::string, std::int64_t>> params,
                     const BigInt& lhs, const BigInt& rhs) {
  return {std::move(params), lhs.get_str(), rhs.get_str()};
}

// Every (r, N1, N2, k1, k2) of a two-kind grid, r outermost.
std::vector<TwoKindQuery> two_kind_points(const TwoKindGrid& grid,
                                          std::int64_t min_bound = 0) {
  std::vector<TwoKindQuery> points;
  for (std::int64_t r = 1; r <= grid.r_max; ++r)
    for (std::int64_t n1 = min_bound; n1 <= grid.param_max; ++n1)
      for (std::int64_t n2 = min_bound; n2 <= grid.param_max; ++n2)
        for (std::int64_t k1 = 0; k1 <= grid.param_max; ++k1)
          for (std::int64_t k2 = 0; k2 <= grid.param_max; ++k2)
            points.push_back({r, n1, n2, k1, k2, 0});
  return points;
}

std::string describe(const TwoKindGrid& grid, std::int64_t min_bound = 0) {
  return "r=1.." + std::to_string(grid.r_max) + ", N1,N2=" +
         std::to_string(min_bound) + ".." + std::to_string(grid.param_max) +
         ", k1,k2=0.." + std::to_string(grid.param_max) + ", all n";
}

std::string describe(const RestrictedGrid& grid) {
  return "N=0.." + std::to_string(grid.N_max) + ", k=0.." +
         std::to_string(grid.k_max) + ", n=0..N*k";
}

std::string describe(const GuoYangGrid& grid) {
  return "m=0.." + std::to_string(grid.m_max) + ", n=0.." +
         std::to_string(grid.n_max);
}

std::int64_t max_weight(const TwoKindQuery& q) {
  return q.r * q.n1 * q.k1 + q.n2 * q.k2;
}

std::vector<std::pair<std::string, std::int64_t>> named(const TwoKindQuery& q,
                                                        std::int64_t n) {
  return {{"r", q.r}, {"N1", q.n1}, {"N2", q.n2},
          {"k1", q.k1}, {"k2", q.k2}, {"n", n}};
}

IntPolynomial pbar_poly(std::int64_t r, std::int64_t n1, std::int64_t n2,
                        std::int64_t k1, std::int64_t k2) {
  return pbar_polynomial({r, n1, n2, k1, k2, 0});
}

IntPolynomial times_q_power(const IntPolynomial& p, std::int64_t e) {
  return p.is_zero() ? p : shift(p, e);
}

}  // namespace

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& failure : report.failures) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : failure.params) {
      params[name] = std::to_string(value);
    }
    failures.push_back(
        {{"params", params}, {"lhs", failure.lhs}, {"rhs", failure.rhs}});
  }
  return {{"identity_id", report.identity_id},
          {"grid", report.grid},
          {"checked", std::to_string(report.checked)},
          {"failures", failures}};
}

BigInt expand_p_thm31(std::int64_t N, std::int64_t k, std::int64_t n) {
  BigInt total = 0;
  if (N < 0 || k < 0 || n < 0) return total;
  for (std::int64_t j = 0; j <= k / 2; ++j) {
    total += pbar_genfun(
        {2, N, N + 1 - k + 2 * j, j, k - 2 * j, n - choose2(k - 2 * j)});
  }
  return total;
}

std::int64_t corollary_lower_bound(std::int64_t n) {
  std::int64_t j = 0;
  while (choose2(n - 2 * j) > n) ++j;
  return j;
}

CorollaryExpansion corollary_expansion(std::int64_t n) {
  CorollaryExpansion out;
  if (n < 0) return out;
  out.lower = corollary_lower_bound(n);
  out.upper = n / 2;
  out.total = 0;
  for (std::int64_t j = out.lower; j <= out.upper; ++j) {
    const TwoKindQuery query{2, n, n - 2 * j, j, 2 * j + 1,
                             n - choose2(n - 2 * j)};
    CorollaryTerm term{j, query, pbar_genfun(query)};
    out.total += term.value;
    out.terms.push_back(std::move(term));
  }
  return out;
}

BigInt p_by_corollary(std::int64_t n) { return corollary_expansion(n).total; }

BigInt thm33_lhs(std::int64_t N, std::int64_t k, std::int64_t n) {
  BigInt total = 0;
  if (N < 0 || k < 0) return total;
  for (std::int64_t j = 0; j <= k / 4; ++j) {
    total += pbar_genfun(
        {4, N, N + 1 - k + 4 * j, j, k - 4 * j, n - choose2(k - 4 * j)});
  }
  return total;
}

BigInt thm33_rhs(std::int64_t N, std::int64_t k, std::int64_t n,
                 Thm33Sign sign) {
  BigInt total = 0;
  if (N < 0 || k < 0) return total;
  for (std::int64_t j = 0; j <= k / 2; ++j) {
    const BigInt term = pbar_genfun({2, N, N, j, k - 2 * j, n});
    if (sign == Thm33Sign::alternating && j % 2 == 1) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

IntPolynomial guo_yang_1_lhs(std::int64_t m, std::int64_t n) {
  IntPolynomial total;
  for (std::int64_t k = 0; k <= n / 2; ++k) {
    const IntPolynomial term =
        mul(gaussian({m + k, k, 2}), gaussian({m + 1, n - 2 * k, 1}));
    total = add(total, times_q_power(term, choose2(n - 2 * k)));
  }
  return total;
}

IntPolynomial guo_yang_1_rhs(std::int64_t m, std::int64_t n) {
  return gaussian({m + n, n, 1});
}

IntPolynomial guo_yang_2_lhs(std::int64_t m, std::int64_t n) {
  IntPolynomial total;
  for (std::int64_t k = 0; k <= n / 4; ++k) {
    const IntPolynomial term =
        mul(gaussian({m + k, k, 4}), gaussian({m + 1, n - 4 * k, 1}));
    total = add(total, times_q_power(term, choose2(n - 4 * k)));
  }
  return total;
}

IntPolynomial guo_yang_2_rhs(std::int64_t m, std::int64_t n) {
  IntPolynomial total;
  for (std::int64_t k = 0; k <= n / 2; ++k) {
    const IntPolynomial term =
        mul(gaussian({m + k, k, 2}), gaussian({m + n - 2 * k, n - 2 * k, 1}));
    total = k % 2 == 0 ? add(total, term) : sub(total, term);
  }
  return total;
}

namespace {

VerificationReport verify_polynomial_identity(
    std::string id, const GuoYangGrid& grid, Execution exec,
    IntPolynomial (*lhs)(std::int64_t, std::int64_t),
    IntPolynomial (*rhs)(std::int64_t, std::int64_t)) {
  const std::int64_t width = grid.n_max + 1;
  const auto count = static_cast<std::size_t>(
      std::max<std::int64_t>(0, (grid.m_max + 1) * width));
  return sweep(
      std::move(id), describe(grid), count,
      [&](std::size_t i) {
        const auto m = static_cast<std::int64_t>(i) / width;
        const auto n = static_cast<std::int64_t>(i) % width;
        PointResult result{1, {}};
        const IntPolynomial left = lhs(m, n);
        const IntPolynomial right = rhs(m, n);
        if (left != right) {
          result.failures.push_back(
              {{{"m", m}, {"n", n}}, to_string(left), to_string(right)});
        }
        return result;
      },
      exec);
}

}  // namespace

VerificationReport verify_guo_yang_1(const GuoYangGrid& grid, Execution exec) {
  return verify_polynomial_identity("eq2", grid, exec, guo_yang_1_lhs,
                                    guo_yang_1_rhs);
}

VerificationReport verify_guo_yang_2(const GuoYangGrid& grid, Execution exec) {
  return verify_polynomial_identity("eq3", grid, exec, guo_yang_2_lhs,
                                    guo_yang_2_rhs);
}

VerificationReport verify_thm21(const TwoKindGrid& grid, Execution exec) {
  const auto points = two_kind_points(grid);
  return sweep(
      "thm2.1", describe(grid), points.size(),
      [&](std::size_t i) {
        PointResult result;
        TwoKindQuery q = points[i];
        for (q.n = 0; q.n <= max_weight(q) + 1; ++q.n) {
          ++result.checked;
          const BigInt lhs = pbar_enumerate_count(q);
          const BigInt rhs = pbar_convolution(q);
          if (lhs != rhs) {
            result.failures.push_back(make_failure(named(q, q.n), lhs, rhs));
          }
        }
        return result;
      },
      exec);
}

VerificationReport verify_thm22(const TwoKindGrid& grid, Execution exec) {
  const auto points = two_kind_points(grid);
  return sweep(
      "thm2.2", describe(grid), points.size(),
      [&](std::size_t i) {
        PointResult result;
        TwoKindQuery q = points[i];
        const IntPolynomial genfun = pbar_polynomial(q);
        for (q.n = 0; q.n <= max_weight(q) + 1; ++q.n) {
          ++result.checked;
          const BigInt lhs = pbar_enumerate_count(q);
          const BigInt rhs = genfun.coeff(q.n);
          if (lhs != rhs) {
            result.failures.push_back(make_failure(named(q, q.n), lhs, rhs));
          }
        }
        return result;
      },
      exec);
}

VerificationReport verify_thm23(const TwoKindGrid& grid, Execution exec) {
  const auto points = two_kind_points(grid, 1);
  return sweep(
      "thm2.3", describe(grid, 1), points.size(),
      [&](std::size_t i) {
        PointResult result;
        const auto [r, n1, n2, k1, k2, unused] = points[i];
        const IntPolynomial full = pbar_poly(r, n1, n2, k1, k2);
        const IntPolynomial both = pbar_poly(r, n1 - 1, n2 - 1, k1, k2);
        const IntPolynomial cross1 = pbar_poly(r, n1 - 1, n2, k1, k2 - 1);
        const IntPolynomial cross2 = pbar_poly(r, n1, n2 - 1, k1 - 1, k2);
        const IntPolynomial fewer = pbar_poly(r, n1, n2, k1 - 1, k2 - 1);
        // Exponent offsets of the four subtracted terms, per relation.
        const std::int64_t offsets[3][4] = {
            {k1 * r + k2, k1 * r, k2, 0},
            {0, n2, n1 * r, n1 * r + n2},
            {k1 * r, k1 * r + n2, 0, n2},
        };
        const TwoKindQuery q = points[i];
        for (std::int64_t n = 0; n <= max_weight(q); ++n) {
          for (int rel = 0; rel < 3; ++rel) {
            ++result.checked;
            const auto& off = offsets[rel];
            const BigInt lhs = full.coeff(n);
            const BigInt rhs =
                both.coeff(n - off[0]) + cross1.coeff(n - off[1]) +
                cross2.coeff(n - off[2]) + fewer.coeff(n - off[3]);
            if (lhs != rhs) {
              auto params = named(q, n);
              params.emplace_back("relation", rel + 1);
              result.failures.push_back(
                  make_failure(std::move(params), lhs, rhs));
            }
          }
        }
        return result;
      },
      exec);
}

VerificationReport verify_thm24(const TwoKindGrid& grid, Execution exec) {
  const auto points = two_kind_points(grid);
  return sweep(
      "thm2.4", describe(grid), points.size(),
      [&](std::size_t i) {
        PointResult result;
        const TwoKindQuery q = points[i];
        const auto [r, n1, n2, k1, k2, unused] = q;
        const IntPolynomial base = pbar_poly(r, n1, n2, k1, k2);
        const IntPolynomial swapped[3] = {
            pbar_poly(r, k1, n2, n1, k2),
            pbar_poly(r, n1, k2, k1, n2),
            pbar_poly(r, k1, k2, n1, n2),
        };
        const std::int64_t top = max_weight(q);
        for (std::int64_t n = 0; n <= top; ++n) {
          ++result.checked;
          const BigInt lhs = base.coeff(n);
          for (int s = 0; s < 4; ++s) {
            const BigInt rhs = s < 3 ? swapped[s].coeff(n) : base.coeff(top - n);
            if (lhs != rhs) {
              auto params = named(q, n);
              params.emplace_back("check", s + 1);
              result.failures.push_back(
                  make_failure(std::move(params), lhs, rhs));
            }
          }
        }
        return result;
      },
      exec);
}

VerificationReport verify_thm25(const TwoKindGrid& grid, Execution exec) {
  const auto points = two_kind_points(grid);
  return sweep(
      "thm2.5", describe(grid), points.size(),
      [&](std::size_t i) {
        PointResult result;
        TwoKindQuery q = points[i];
        const IntPolynomial shifted =
            pbar_poly(q.r, q.n1 - q.k1, q.n2 - q.k2, q.k1, q.k2);
        const std::int64_t offset = q.r * choose2(q.k1 + 1) + choose2(q.k2 + 1);
        for (q.n = 0; q.n <= max_weight(q) + 1; ++q.n) {
          ++result.checked;
          const BigInt lhs = qbar_enumerate_count(q);
          const BigInt rhs = shifted.coeff(q.n - offset);
          if (lhs != rhs) {
            result.failures.push_back(make_failure(named(q, q.n), lhs, rhs));
          }
        }
        return result;
      },
      exec);
}

VerificationReport verify_thm26(const TwoKindGrid& grid, Execution exec) {
  const auto points = two_kind_points(grid);
  return sweep(
      "thm2.6", describe(grid), points.size(),
      [&](std::size_t i) {
        PointResult result;
        TwoKindQuery q = points[i];
        const IntPolynomial genfun = qbar_polynomial(q);
        for (q.n = 0; q.n <= max_weight(q) + 1; ++q.n) {
          ++result.checked;
          const BigInt lhs = qbar_enumerate_count(q);
          const BigInt rhs = genfun.coeff(q.n);
          if (lhs != rhs) {
            result.failures.push_back(make_failure(named(q, q.n), lhs, rhs));
          }
        }
        return result;
      },
      exec);
}

namespace {

VerificationReport verify_restricted(
    std::string id, const RestrictedGrid& grid, Execution exec,
    const std::function<std::pair<BigInt, BigInt>(std::int64_t, std::int64_t,
                                                  std::int64_t)>& sides) {
  const std::int64_t width = grid.k_max + 1;
  const auto count = static_cast<std::size_t>(
      std::max<std::int64_t>(0, (grid.N_max + 1) * width));
  return sweep(
      std::move(id), describe(grid), count,
      [&](std::size_t i) {
        const auto N = static_cast<std::int64_t>(i) / width;
        const auto k = static_cast<std::int64_t>(i) % width;
        PointResult result;
        for (std::int64_t n = 0; n <= N * k; ++n) {
          ++result.checked;
          const auto [lhs, rhs] = sides(N, k, n);
          if (lhs != rhs) {
            result.failures.push_back(
                make_failure({{"N", N}, {"k", k}, {"n", n}}, lhs, rhs));
          }
        }
        return result;
      },
      exec);
}

}  // namespace

VerificationReport verify_thm31(const RestrictedGrid& grid, Execution exec) {
  return verify_restricted(
      "thm3.1", grid, exec,
      [](std::int64_t N, std::int64_t k, std::int64_t n) {
        return std::pair{p(N, k, n), expand_p_thm31(N, k, n)};
      });
}

VerificationReport verify_thm33(const RestrictedGrid& grid, Execution exec,
                                Thm33Sign sign) {
  const std::string id =
      sign == Thm33Sign::alternating ? "thm3.3" : "thm3.3-unsigned";
  return verify_restricted(
      id, grid, exec, [sign](std::int64_t N, std::int64_t k, std::int64_t n) {
        return std::pair{thm33_lhs(N, k, n), thm33_rhs(N, k, n, sign)};
      });
}

VerificationReport verify_cor32(std::int64_t n_max, Execution exec) {
  const auto count = static_cast<std::size_t>(std::max<std::int64_t>(0, n_max + 1));
  return sweep(
      "cor3.2", "n=0.." + std::to_string(n_max), count,
      [](std::size_t i) {
        const auto n = static_cast<std::int64_t>(i);
        PointResult result{1, {}};
        const BigInt lhs = partition_p(n);
        const BigInt rhs = p_by_corollary(n);
        if (lhs != rhs) {
          result.failures.push_back(make_failure({{"n", n}}, lhs, rhs));
        }
        return result;
      },
      exec);
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {
      "thm2.1", "thm2.2", "thm2.3", "thm2.4", "thm2.5", "thm2.6",
      "thm3.1", "thm3.3", "cor3.2", "eq2",    "eq3"};
  return ids;
}

VerificationReport run_verifier(const std::string& id,
                                const GridOverrides& o, Execution exec) {
  auto pick = [](std::int64_t value, std::int64_t fallback) {
    return value >= 0 ? value : fallback;
  };
  auto two_kind = [&](TwoKindGrid grid) {
    return TwoKindGrid{pick(o.r_max, grid.r_max),
                       pick(o.param_max, grid.param_max)};
  };
  auto restricted = [&](RestrictedGrid grid) {
    return RestrictedGrid{pick(o.N_max, grid.N_max), pick(o.k_max, grid.k_max)};
  };
  const GuoYangGrid guo_yang{pick(o.m_max, 10), pick(o.n_max, 10)};

  if (id == "thm2.1") return verify_thm21(two_kind({3, 4}), exec);
  if (id == "thm2.2") return verify_thm22(two_kind({3, 4}), exec);
  if (id == "thm2.3") return verify_thm23(two_kind({3, 5}), exec);
  if (id == "thm2.4") return verify_thm24(two_kind({3, 5}), exec);
  if (id == "thm2.5") return verify_thm25(two_kind({3, 5}), exec);
  if (id == "thm2.6") return verify_thm26(two_kind({3, 5}), exec);
  if (id == "thm3.1") return verify_thm31(restricted({8, 8}), exec);
  if (id == "thm3.3") return verify_thm33(restricted({5, 6}), exec);
  if (id == "cor3.2") return verify_cor32(pick(o.n_max, 60), exec);
  if (id == "eq2") return verify_guo_yang_1(guo_yang, exec);
  if (id == "eq3") return verify_guo_yang_2(guo_yang, exec);
  throw std::invalid_argument("unknown identity id: " + id);
}

}  // namespace twokind
