#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hallkit {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[v, v^-1] with arbitrary-precision coefficients.
///
/// Stored densely as coefficients of v^low, v^(low+1), ...; the first and
/// last stored coefficients are nonzero, so equal polynomials compare equal
/// member-wise. The zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const BigInt& constant);  // NOLINT(google-explicit-constructor)

  /// c * v^exponent
  static LaurentPoly monomial(int exponent, BigInt coeff = 1);
  static LaurentPoly from_terms(const std::vector<std::pair<int, BigInt>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest / highest exponent with a nonzero coefficient. Undefined on zero.
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int exponent) const;
  /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, BigInt>> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;

  /// v -> v^-1
  LaurentPoly bar() const;

  /// p = sym + low with bar(sym) = sym and low in v^-1 Z[v^-1].
  std::pair<LaurentPoly, LaurentPoly> symmetric_decompose() const;

  /// Every exponent is negative (zero counts).
  bool in_negative_part() const;
  bool is_bar_invariant() const { return *this == bar(); }
  /// Every exponent is even (zero counts).
  bool in_z_v2() const;

  /// Substitute v^2 -> v, for polynomials in Z[v^2].
  LaurentPoly halve_exponents() const;

  /// Human-readable form, e.g. "v^-2 + 1" or "-v^3 + 2v".
  std::string to_string() const;

 private:
  void normalize();
  void add_scaled(const LaurentPoly& rhs, int sign);

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

enum class GaussianVariant { symmetric_bracket, square_bracket, factorial };

/// [[N t]] (polynomial in v^2), [N t] = v^{-t(N-t)} [[N t]], or [[t]]!.
/// N < t gives 0 and t = 0 gives 1. Throws std::invalid_argument for t < 0.
LaurentPoly gaussian(long long n, long long t, GaussianVariant variant);

/// Shorthand for the square-bracket variant, cached.
const LaurentPoly& square_binomial(int n, int t);

}  // namespace hallkit
