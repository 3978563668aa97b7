#include "twokind/bigpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twokind {

namespace {

// Below this many coefficient products the serial kernel wins.
constexpr std::size_t kParallelMulThreshold = 1u << 14;

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) {
  return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::int64_t exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(exponent) + 1);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

BigInt IntPolynomial::coeff(std::int64_t i) const {
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) {
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<BigInt> out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < x.size() && i < y.size()) {
      out[i] = x[i] + y[i];
    } else {
      out[i] = i < x.size() ? x[i] : y[i];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial negate(const IntPolynomial& p) {
  std::vector<BigInt> out(p.coefficients());
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b) {
  return add(a, negate(b));
}

IntPolynomial scale(const IntPolynomial& p, const BigInt& c) {
  std::vector<BigInt> out(p.coefficients());
  for (auto& x : out) x *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial mul_serial(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<BigInt> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial mul_parallel(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  const auto nx = static_cast<std::int64_t>(x.size());
  const auto ny = static_cast<std::int64_t>(y.size());
  const std::int64_t n_out = nx + ny - 1;
  std::vector<BigInt> out(static_cast<std::size_t>(n_out));

  // Output coefficients are independent: out[k] = sum_i x[i] * y[k - i].
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < n_out; ++k) {
    const std::int64_t lo = std::max<std::int64_t>(0, k - (ny - 1));
    const std::int64_t hi = std::min<std::int64_t>(k, nx - 1);
    mpz_ptr acc = out[static_cast<std::size_t>(k)].get_mpz_t();
    for (std::int64_t i = lo; i <= hi; ++i) {
      mpz_addmul(acc, x[static_cast<std::size_t>(i)].get_mpz_t(),
                 y[static_cast<std::size_t>(k - i)].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coefficients().size() * b.coefficients().size() <
      kParallelMulThreshold) {
    return mul_serial(a, b);
  }
  return mul_parallel(a, b);
}

IntPolynomial mul_truncated(const IntPolynomial& a, const IntPolynomial& b,
                            std::int64_t max_degree) {
  if (max_degree < 0 || a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  const auto limit = static_cast<std::size_t>(max_degree);
  const std::size_t n_out = std::min(x.size() + y.size() - 1, limit + 1);
  std::vector<BigInt> out(n_out);
  for (std::size_t i = 0; i < x.size() && i < n_out; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size() && i + j < n_out; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial shift(const IntPolynomial& p, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("shift exponent must be >= 0");
  if (p.is_zero() || e == 0) return p;
  std::vector<BigInt> out(static_cast<std::size_t>(e));
  const auto& c = p.coefficients();
  out.insert(out.end(), c.begin(), c.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial inflate(const IntPolynomial& p, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("inflation step must be >= 1");
  if (p.is_zero() || r == 1) return p;
  const auto& c = p.coefficients();
  std::vector<BigInt> out((c.size() - 1) * static_cast<std::size_t>(r) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i * static_cast<std::size_t>(r)] = c[i];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial truncate(const IntPolynomial& p, std::int64_t max_degree) {
  if (max_degree < 0) return {};
  if (p.degree() <= max_degree) return p;
  const auto& c = p.coefficients();
  return IntPolynomial(std::vector<BigInt>(
      c.begin(), c.begin() + static_cast<std::ptrdiff_t>(max_degree) + 1));
}

bool is_self_reciprocal(const IntPolynomial& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("zero polynomial has no degree");
  }
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

bool is_unimodal(const IntPolynomial& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("zero polynomial has no degree");
  }
  const auto& c = p.coefficients();
  std::size_t i = 1;
  while (i < c.size() && c[i - 1] <= c[i]) ++i;
  while (i < c.size() && c[i - 1] >= c[i]) ++i;
  return i == c.size();
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    const bool negative = sgn(c[i]) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const BigInt magnitude = abs(c[i]);
    if (i == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << '*';
    out << 'q';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

std::vector<std::string> coefficient_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

}  // namespace twokind
