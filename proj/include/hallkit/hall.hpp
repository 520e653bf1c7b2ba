#pragma once

#include <map>
#include <string>

#include "hallkit/laurent.hpp"
#include "hallkit/repcat.hpp"
#include "hallkit/word.hpp"

namespace hallkit {

/// Finite combination of the basis elements u~_A with Laurent coefficients.
class HallElement {
 public:
  using Terms = std::map<ThetaMatrix, LaurentPoly>;

  HallElement() = default;
  explicit HallElement(int n) : n_(n) {}
  /// c * u~_A
  static HallElement basis(const ThetaMatrix& a, LaurentPoly c = 1);
  /// The unit u~_0.
  static HallElement one(int n) { return basis(ThetaMatrix(n, {})); }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(const ThetaMatrix& a) const;

  void add_term(const ThetaMatrix& a, const LaurentPoly& c);
  HallElement& operator+=(const HallElement& rhs);
  HallElement& operator-=(const HallElement& rhs);
  friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
  friend HallElement operator-(HallElement a, const HallElement& b) { return a -= b; }
  /// Scalar multiple.
  friend HallElement operator*(const LaurentPoly& c, const HallElement& x);
  friend bool operator==(const HallElement&, const HallElement&) = default;

  /// Apply v -> v^-1 to every coefficient (not the bar involution of the algebra).
  HallElement conjugate_coeffs() const;

  std::string to_string() const;

 private:
  int n_ = 0;
  Terms terms_;
};

/// u~_alpha * x, where u~_alpha is the basis element of the semisimple
/// module with dimension vector alpha.
HallElement semisimple_mult(const DimVector& alpha, const HallElement& x);

/// The monomial m^(w) = u~_{letter_1} ... u~_{letter_t}, expanded in the u~ basis.
/// Results for every suffix are memoized.
HallElement monomial_expand(const Word& w);

/// The unique maximal matrix of the support in the sigma order. Throws
/// InvariantViolation if the support is empty or has several maxima.
ThetaMatrix max_support(const HallElement& x);

/// Leading matrix of m^(w), tracked one letter at a time without expanding
/// the full monomial.
ThetaMatrix leading_matrix(const Word& w);

/// x(w) = sum_k delta(S_{a_k}) + sum_{k<l} <a_k, a_l>: the coefficient of
/// u~_T in m^(w) is v^{x(w) - delta(T)} gamma^T_w(v^2). For a distinguished
/// word x(w) = delta(lead(w)).
long long word_twist(const Word& w);

/// gamma^B_w(v^2) = v^{delta(B) - x(w)} * coeff of u~_B in m^(w), returned as
/// a polynomial in v. Throws InvariantViolation unless it lies in Z[v^2].
LaurentPoly hall_polynomial(const Word& w, const ThetaMatrix& b);

}  // namespace hallkit
