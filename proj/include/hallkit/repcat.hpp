#pragma once

#include <compare>
#include <stdexcept>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hallkit {

/// Thrown when an internal certification step fails (a computed object does
/// not satisfy a property the mathematics guarantees).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reduce an arbitrary integer vertex to its representative in 1..n.
inline int vertex_mod(long long v, int n) {
  return static_cast<int>(((v - 1) % n + n) % n) + 1;
}

/// One period of an n-periodic integer sequence; entries[k] is vertex k+1.
struct DimVector {
  std::vector<int> entries;

  DimVector() = default;
  explicit DimVector(std::vector<int> e) : entries(std::move(e)) {}
  static DimVector zero(int n) { return DimVector(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  static DimVector unit(int n, int vertex, int scale = 1);

  int n() const { return static_cast<int>(entries.size()); }
  int operator[](int vertex) const { return entries[static_cast<std::size_t>(vertex - 1)]; }
  int& operator[](int vertex) { return entries[static_cast<std::size_t>(vertex - 1)]; }
  long long sigma() const;
  bool is_zero() const;
  /// Every entry positive.
  bool is_sincere() const;
  /// Entrywise order.
  bool leq(const DimVector& rhs) const;

  DimVector& operator+=(const DimVector& rhs);
  DimVector& operator-=(const DimVector& rhs);
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
  friend auto operator<=>(const DimVector&, const DimVector&) = default;
  friend bool operator==(const DimVector&, const DimVector&) = default;

  /// "1,2,3"
  std::string to_string() const;
  static DimVector parse(std::string_view text);
};

/// mult copies of S_vertex[length]: uniserial of the given length with top at vertex.
struct Segment {
  int vertex = 1;
  int length = 1;
  int mult = 1;
  friend auto operator<=>(const Segment&, const Segment&) = default;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// A nilpotent representation of the cyclic quiver, i.e. an element of the
/// periodic upper-triangular matrix set, kept as its sorted segment multiset.
class ThetaMatrix {
 public:
  ThetaMatrix() = default;
  explicit ThetaMatrix(int n) : n_(n) {}
  /// Merges repeated (vertex, length) keys and drops zero multiplicities.
  /// Throws std::invalid_argument on out-of-range vertices or lengths.
  ThetaMatrix(int n, std::vector<Segment> segments);

  /// Semisimple module with the given dimension vector.
  static ThetaMatrix semisimple(const DimVector& d);
  /// Parse "1.3.1,2.1.1" (vertex.length.mult, comma separated; "0" or "" = zero).
  static ThetaMatrix parse(int n, std::string_view text);

  int n() const { return n_; }
  const std::vector<Segment>& segments() const { return segments_; }
  bool is_zero() const { return segments_.empty(); }

  /// Multiplicity of S_vertex[length] (vertex taken mod n).
  int mult(int vertex, int length) const;
  /// Matrix entry a_{i,j}; zero unless i < j.
  int entry(long long i, long long j) const;

  DimVector dim_vector() const;
  long long dim() const;
  int loewy() const;
  int period() const;
  bool aperiodic() const { return period() == 0; }
  bool strongly_periodic() const { return is_zero() || period() == loewy(); }

  /// Top multiplicity at each vertex (row sums of the core).
  DimVector top() const;
  /// Socle multiplicity at each vertex.
  DimVector socle() const;

  ThetaMatrix direct_sum(const ThetaMatrix& rhs) const;

  std::string to_string() const;

  friend auto operator<=>(const ThetaMatrix&, const ThetaMatrix&) = default;
  friend bool operator==(const ThetaMatrix&, const ThetaMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Segment> segments_;
};

struct ThetaMatrixHash {
  std::size_t operator()(const ThetaMatrix& a) const noexcept;
};

struct DimStats {
  DimVector dim_vector;
  long long dim = 0;
  int loewy = 0;
  int period = 0;
  bool aperiodic = true;
  bool strongly_periodic = true;
};

DimStats dim_stats(const ThetaMatrix& a);

/// dim Hom(S_i[l], S_j[m]) for the cyclic quiver with n vertices.
int dim_hom_indec(int i, int l, int j, int m, int n);

/// dim Hom(M(A), M(B)).
long long dim_hom(const ThetaMatrix& a, const ThetaMatrix& b);

/// dim End M(A) - dim M(A).
long long delta(const ThetaMatrix& a);

/// <a,b> = sum a_i b_i - sum a_i b_{i+1}.
long long euler_form(const DimVector& a, const DimVector& b);

/// Semisimple layers soc^k / soc^(k-1), top layer first.
std::vector<DimVector> socle_layers(const ThetaMatrix& a);

struct HookSums {
  DimVector hook;      // row sums of the core
  DimVector diagonal;  // lambda - hook
};

/// Throws std::invalid_argument unless hook <= lambda.
HookSums hook_sums(const ThetaMatrix& a, const DimVector& lambda);

}  // namespace hallkit
