#pragma once

#include <map>

#include "hallkit/hall.hpp"
#include "hallkit/words.hpp"

namespace hallkit {

using Coefficients = std::map<ThetaMatrix, LaurentPoly>;

/// Coefficients c_B with x = sum c_B m^(B) (monomials of the section).
/// x must be homogeneous.
Coefficients to_monomial_basis(const HallElement& x, const DistinguishedSection& section);

/// x * y. Rewrites x in the monomial basis, then multiplies letter by letter.
HallElement product(const HallElement& x, const HallElement& y, const DistinguishedSection& section);

/// The bar involution of the Hall algebra: fixes every m^(A), conjugates coefficients.
HallElement bar_element(const HallElement& x, const DistinguishedSection& section);

struct PbwExpansion {
  ThetaMatrix a;
  HallElement element;  // E_A in the u~ basis
  Coefficients eta;     // coefficients of the periodic u~_C, C < A
};

/// E_A for aperiodic A. Throws std::invalid_argument for periodic A and
/// InvariantViolation if the result is not of the expected shape.
PbwExpansion pbw(const ThetaMatrix& a, const DistinguishedSection& section);

/// The eta coefficients of E_A through the recursion over aperiodic B between C and A.
Coefficients eta_recursive(const ThetaMatrix& a, const DistinguishedSection& section);

struct CanonicalElement {
  ThetaMatrix a;
  HallElement element;
  /// Lower coefficients in the basis the algorithm works against:
  /// u~ for the Hall algebra, E for U+, monomials for the subtractive variant.
  Coefficients p_coeffs;
};

/// c_A: subtract symmetric parts of monomials layer by layer until every
/// lower u~ coefficient lies in v^-1 Z[v^-1].
CanonicalElement canonical_hall(const ThetaMatrix& a, const DistinguishedSection& section);

/// C_A = sum p_{B,A} E_B from the bar-matrix of the PBW basis. A must be aperiodic.
CanonicalElement canonical_uplus(const ThetaMatrix& a, const DistinguishedSection& section);

/// C_A by subtraction of aperiodic monomials. A must be aperiodic.
CanonicalElement canonical_uplus_subtractive(const ThetaMatrix& a, const DistinguishedSection& section);

/// The eight Loewy-length-3 aperiodic families for n = 2 (family 1..8).
ThetaMatrix sl2_family_matrix(int family, int a, int b, int c);
/// The pyramidic word whose monomial is m^(A_i).
Word sl2_family_word(int family, int a, int b, int c);
/// Closed form for the canonical basis element of A_i. Rejects c <= 0.
CanonicalElement sl2_loewy3(int family, int a, int b, int c);

}  // namespace hallkit
