#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twokind {

using BigInt = mpz_class;

/// Dense polynomial in q with arbitrary-precision integer coefficients.
///
/// Index i of the coefficient vector holds the coefficient of q^i. The
/// representation is always normalized: the last stored coefficient is
/// nonzero, and the zero polynomial stores no coefficients at all.
class IntPolynomial {
 public:
  /// Sentinel returned by degree() for the zero polynomial.
  static constexpr std::int64_t kZeroDegree = INT64_MIN;

  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::int64_t exponent);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t degree() const {
    return coeffs_.empty() ? kZeroDegree
                           : static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  /// Coefficient of q^i; zero outside [0, degree].
  BigInt coeff(std::int64_t i) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial negate(const IntPolynomial& p);
IntPolynomial scale(const IntPolynomial& p, const BigInt& c);

/// Exact product. Large operands are multiplied by the OpenMP kernel, which
/// computes each output coefficient independently.
IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b);
/// Serial schoolbook product; the reference the parallel kernel is tested
/// against.
IntPolynomial mul_serial(const IntPolynomial& a, const IntPolynomial& b);
/// Parallel kernel regardless of operand size.
IntPolynomial mul_parallel(const IntPolynomial& a, const IntPolynomial& b);
/// Product truncated to terms of degree <= max_degree.
IntPolynomial mul_truncated(const IntPolynomial& a, const IntPolynomial& b,
                            std::int64_t max_degree);

/// Multiplies by q^e. Requires e >= 0.
IntPolynomial shift(const IntPolynomial& p, std::int64_t e);
/// Substitutes q -> q^r. Throws std::invalid_argument for r < 1.
IntPolynomial inflate(const IntPolynomial& p, std::int64_t r);
/// Drops every term of degree > max_degree.
IntPolynomial truncate(const IntPolynomial& p, std::int64_t max_degree);

/// Palindromic coefficient sequence. Throws std::invalid_argument on zero.
bool is_self_reciprocal(const IntPolynomial& p);
/// Coefficients c_0..c_deg (zeros included) rise then fall. Throws
/// std::invalid_argument on zero.
bool is_unimodal(const IntPolynomial& p);

/// Ascending powers, e.g. "1 + 2*q^2 - q^5"; the zero polynomial is "0".
std::string to_string(const IntPolynomial& p);
/// Decimal strings of c_0..c_deg.
std::vector<std::string> coefficient_strings(const IntPolynomial& p);

inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  return add(a, b);
}
inline IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return sub(a, b);
}
inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  return mul(a, b);
}

}  // namespace twokind
