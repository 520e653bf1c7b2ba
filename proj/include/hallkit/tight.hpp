#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hallkit {

/// Cartan datum given by its Euler form <i,j> on vertices 0..size-1;
/// the symmetric form is i.j = <i,j> + <j,i>.
class CartanDatum {
 public:
  /// Throws std::invalid_argument unless the table is square and every i.i
  /// is even and positive.
  explicit CartanDatum(std::vector<std::vector<long long>> euler);
  /// <1,1> = <2,2> = 1, <1,2> = -2, <2,1> = 0 (vertices labelled 1 and 2).
  static CartanDatum kronecker();

  int size() const { return static_cast<int>(euler_.size()); }
  /// Vertices are labelled 1..size().
  long long euler(int i, int j) const;
  long long dot(int i, int j) const { return euler(i, j) + euler(j, i); }

 private:
  std::vector<std::vector<long long>> euler_;
};

/// t x t matrix, row-major.
using FlagMatrix = std::vector<std::vector<long long>>;

/// All nonnegative integer t x t matrices with row and column sums equal to
/// a and a_{rm} = 0 unless i_r = i_m. The diagonal matrix diag(a) is first.
std::vector<FlagMatrix> enumerate_flag_matrices(const std::vector<int>& i, const std::vector<long long>& a);

long long quadratic_form(const FlagMatrix& m, const std::vector<int>& i, const CartanDatum& datum);

struct TightVerdict {
  bool tight = true;
  std::optional<FlagMatrix> witness;  // set when not tight
  long long q = 0;                    // form value at the witness
};

/// Tight iff the form is negative on every flag matrix other than diag(a).
TightVerdict is_tight(const std::vector<int>& i, const std::vector<long long>& a, const CartanDatum& datum);

}  // namespace hallkit
