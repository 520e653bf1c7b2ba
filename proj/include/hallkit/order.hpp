#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "hallkit/repcat.hpp"

namespace hallkit {

/// sigma_{i,j}(A) = sum over s <= i, t >= j of a_{s,t}; throws for i == j.
long long sigma(const ThetaMatrix& a, long long i, long long j);

enum class Comparison { less, equal, greater, incomparable, different_class };

/// Compare B against A in the sigma order: `less` means B < A.
Comparison preceq(const ThetaMatrix& b, const ThetaMatrix& a);

/// sigma_{i,i+k}(A) for i = 1..n, k = 1..width, flattened row-major.
std::vector<std::int32_t> sigma_vector(const ThetaMatrix& a, int width);

enum class ThetaFilter { all, aperiodic, periodic };

/// All matrices with dimension vector d, sorted lexicographically.
std::vector<ThetaMatrix> enumerate_theta(int n, const DimVector& d, ThetaFilter filter = ThetaFilter::all);

/// The poset of one stratum (fixed n and dimension vector) with its order
/// relation, covering relation and layer structure precomputed.
class Stratum {
 public:
  Stratum(int n, const DimVector& d);

  int n() const { return n_; }
  const DimVector& dim_vector() const { return d_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ThetaMatrix>& elements() const { return elements_; }
  const ThetaMatrix& element(std::size_t k) const { return elements_[k]; }
  /// Index of a matrix in elements(), or -1.
  int index_of(const ThetaMatrix& a) const;
  bool aperiodic(std::size_t k) const { return aperiodic_[k]; }

  /// Strictly below: b < a.
  bool less(std::size_t b, std::size_t a) const { return (below_[a][b / 64] >> (b % 64)) & 1U; }
  /// All b with b < a, ascending index.
  std::vector<std::size_t> strictly_below(std::size_t a) const;
  /// Pairs (upper, lower) of the covering relation.
  const std::vector<std::pair<std::size_t, std::size_t>>& cover_edges() const { return covers_; }

  /// Layers of {b : b < a}: the first holds the maximal elements, the next the
  /// maximal elements of what remains, and so on.
  std::vector<std::vector<std::size_t>> layers_below(std::size_t a) const;

  /// Every element listed after all elements below it (sorted by total sigma).
  const std::vector<std::size_t>& linear_extension() const { return topo_; }

 private:
  int n_;
  DimVector d_;
  std::vector<ThetaMatrix> elements_;
  std::map<ThetaMatrix, int> index_;
  std::vector<bool> aperiodic_;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> below_;  // bitset rows: below_[a] holds every b < a
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::size_t> topo_;
};

/// Shared, lazily built stratum for (n, d). Safe to call from several threads.
std::shared_ptr<const Stratum> stratum(int n, const DimVector& d);

}  // namespace hallkit
