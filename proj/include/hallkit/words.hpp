#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "hallkit/hall.hpp"
#include "hallkit/repcat.hpp"
#include "hallkit/word.hpp"

namespace hallkit {

/// The maximal matrix in the support of m^(w); throws InvariantViolation if
/// the maximum is not unique.
ThetaMatrix varpi(const Word& w);

/// True if m^(w) = u~_A + (terms strictly below A).
bool is_distinguished_for(const Word& w, const ThetaMatrix& a);

/// How distinguished words are built for aperiodic matrices.
///  - top_peel: the first letter removes the whole top at some vertex.
///  - socle_peel: the last letter removes the whole socle at some vertex.
/// Both search depth-first with backtracking and certify every candidate.
enum class WordStrategy { top_peel, socle_peel };

/// A certified distinguished word for A. Periodic matrices use the
/// aperiodic/strongly periodic decomposition. Throws InvariantViolation if
/// the search runs out of candidates.
Word distinguished_word(const ThetaMatrix& a, WordStrategy strategy = WordStrategy::top_peel);

/// Letters are the socle layers of A, top layer first. Every layer must be
/// sincere, which holds for strongly periodic A.
Word socle_word(const ThetaMatrix& a);

/// The generic extension M(A) * M(B).
ThetaMatrix generic_extension(const ThetaMatrix& a, const ThetaMatrix& b);

/// (A1, A2) with A1 aperiodic, A2 strongly periodic and A1 * A2 = A.
std::pair<ThetaMatrix, ThetaMatrix> decompose_ap_sp(const ThetaMatrix& a);

/// a_1 <= ... <= a_k >= ... >= a_l for some k.
bool is_pyramidic(const std::vector<int>& a);

/// Choice of one distinguished word per matrix, filled lazily. Pinned words
/// take precedence and are certified when pinned.
class DistinguishedSection {
 public:
  explicit DistinguishedSection(int n, WordStrategy strategy = WordStrategy::top_peel)
      : n_(n), strategy_(strategy) {}

  int n() const { return n_; }
  WordStrategy strategy() const { return strategy_; }

  /// Throws InvariantViolation unless w is distinguished for A.
  void pin(const ThetaMatrix& a, const Word& w);
  Word word(const ThetaMatrix& a) const;
  /// m^(A) for this section.
  HallElement monomial(const ThetaMatrix& a) const;
  /// Section identity for cache keys: two sections with equal keys always agree.
  std::size_t id() const { return id_; }

 private:
  int n_;
  WordStrategy strategy_;
  std::size_t id_ = next_id();
  mutable std::mutex mutex_;
  mutable std::map<ThetaMatrix, Word> words_;

  static std::size_t next_id();
};

}  // namespace hallkit
