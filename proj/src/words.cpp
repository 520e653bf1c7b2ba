#include "hallkit/words.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <stdexcept>

#include "hallkit/order.hpp"

namespace hallkit {

ThetaMatrix varpi(const Word& w) { return max_support(monomial_expand(w)); }

namespace {

// True when every support element of x other than A lies strictly below A.
bool dominated_by(const HallElement& x, const ThetaMatrix& a) {
  auto st = stratum(a.n(), a.dim_vector());
  const int top = st->index_of(a);
  for (const auto& [b, c] : x.terms()) {
    if (b == a) continue;
    const int k = st->index_of(b);
    if (k < 0 || !st->less(static_cast<std::size_t>(k), static_cast<std::size_t>(top))) return false;
  }
  return true;
}

// Remove one composition factor at `vertex` from `count` segments that have
// their top (or socle) there, taking the longest such segments first or the
// shortest first.
ThetaMatrix peel(const ThetaMatrix& a, WordStrategy side, int vertex, int count, bool longest_first) {
  const int n = a.n();
  auto touches = [&](const Segment& s) {
    return side == WordStrategy::top_peel ? s.vertex == vertex : vertex_mod(s.vertex + s.length - 1, n) == vertex;
  };
  std::vector<Segment> hit;
  std::vector<Segment> segs;
  for (const auto& s : a.segments()) (touches(s) ? hit : segs).push_back(s);
  if (longest_first) std::reverse(hit.begin(), hit.end());
  for (auto s : hit) {
    const int take = std::min(count, s.mult);
    count -= take;
    if (take < s.mult) segs.push_back({s.vertex, s.length, s.mult - take});
    if (take > 0 && s.length > 1) {
      if (side == WordStrategy::top_peel) {
        segs.push_back({vertex_mod(s.vertex + 1, n), s.length - 1, take});
      } else {
        segs.push_back({s.vertex, s.length - 1, take});
      }
    }
  }
  return ThetaMatrix(n, std::move(segs));
}

class WordSearch {
 public:
  explicit WordSearch(WordStrategy strategy) : strategy_(strategy) {}

  std::optional<Word> aperiodic_word(const ThetaMatrix& a) {
    if (a.is_zero()) return Word(a.n());
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(a);
      if (it != memo_.end()) return it->second;
    }
    std::optional<Word> found = search(a);
    std::lock_guard lock(mutex_);
    memo_.emplace(a, found);
    return found;
  }

 private:
  std::optional<Word> search(const ThetaMatrix& a) {
    const int n = a.n();
    const DimVector layer = strategy_ == WordStrategy::top_peel ? a.top() : a.socle();
    // Whole layers first, then partial layers.
    std::vector<std::pair<int, int>> letters;
    for (int i = 1; i <= n; ++i) {
      if (layer[i] > 0) letters.emplace_back(i, layer[i]);
    }
    for (int i = 1; i <= n; ++i) {
      for (int e = layer[i] - 1; e >= 1; --e) letters.emplace_back(i, e);
    }
    std::set<ThetaMatrix> tried;
    for (const auto& [i, e] : letters) {
      for (bool longest_first : {true, false}) {
        const ThetaMatrix rest = peel(a, strategy_, i, e, longest_first);
        if (!rest.aperiodic() || !tried.insert(rest).second) continue;
        const auto sub = aperiodic_word(rest);
        if (!sub) continue;
        const Word letter(n, {Letter::vertex_power(i, e)});
        const Word w = strategy_ == WordStrategy::top_peel ? letter + *sub : *sub + letter;
        if (is_distinguished_for(w, a)) return w;
      }
    }
    return exhaustive(a);
  }

  // Fallback: the boundary letter i^e may take only part of the layer, and
  // the remaining module ranges over the whole aperiodic stratum.
  std::optional<Word> exhaustive(const ThetaMatrix& a) {
    const int n = a.n();
    const DimVector d = a.dim_vector();
    const DimVector layer = strategy_ == WordStrategy::top_peel ? a.top() : a.socle();
    for (int i = 1; i <= n; ++i) {
      for (int e = layer[i]; e >= 1; --e) {
        const Word letter(n, {Letter::vertex_power(i, e)});
        for (const auto& rest : enumerate_theta(n, d - DimVector::unit(n, i, e), ThetaFilter::aperiodic)) {
          const auto sub = aperiodic_word(rest);
          if (!sub) continue;
          const Word w = strategy_ == WordStrategy::top_peel ? letter + *sub : *sub + letter;
          if (leading_matrix(w) == a && is_distinguished_for(w, a)) return w;
        }
      }
    }
    return std::nullopt;
  }

  WordStrategy strategy_;
  std::mutex mutex_;
  std::map<ThetaMatrix, std::optional<Word>> memo_;
};

WordSearch& search_for(WordStrategy strategy) {
  static WordSearch top(WordStrategy::top_peel);
  static WordSearch socle(WordStrategy::socle_peel);
  return strategy == WordStrategy::top_peel ? top : socle;
}

}  // namespace

bool is_distinguished_for(const Word& w, const ThetaMatrix& a) {
  if (w.n() != a.n() || w.dim_vector() != a.dim_vector()) return false;
  const HallElement m = monomial_expand(w);
  return m.coeff(a) == LaurentPoly(1) && dominated_by(m, a);
}

Word socle_word(const ThetaMatrix& a) {
  std::vector<Letter> letters;
  for (const auto& layer : socle_layers(a)) {
    if (!layer.is_sincere()) {
      throw std::invalid_argument("socle word needs sincere layers; " + a.to_string() + " is not strongly periodic");
    }
    letters.push_back(Letter::sincere_letter(layer));
  }
  return Word(a.n(), std::move(letters));
}

namespace {

Word periodic_word(const ThetaMatrix& a, WordStrategy strategy) {
  const auto [a1, a2] = decompose_ap_sp(a);
  const auto w1 = search_for(strategy).aperiodic_word(a1);
  if (!w1) throw InvariantViolation("no distinguished word found for " + a1.to_string());
  const Word w = *w1 + socle_word(a2);
  if (!is_distinguished_for(w, a)) {
    throw InvariantViolation("word " + w.to_string() + " built from the decomposition of " + a.to_string() +
                             " is not distinguished");
  }
  return w;
}

}  // namespace

Word distinguished_word(const ThetaMatrix& a, WordStrategy strategy) {
  if (a.aperiodic()) {
    const auto w = search_for(strategy).aperiodic_word(a);
    if (!w) throw InvariantViolation("no distinguished word found for " + a.to_string());
    return *w;
  }
  return periodic_word(a, strategy);
}

ThetaMatrix generic_extension(const ThetaMatrix& a, const ThetaMatrix& b) {
  if (a.n() != b.n()) throw std::invalid_argument("generic extension of different ranks");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return leading_matrix(distinguished_word(a) + distinguished_word(b));
}

std::pair<ThetaMatrix, ThetaMatrix> decompose_ap_sp(const ThetaMatrix& a) {
  const int n = a.n();
  if (a.aperiodic()) return {a, ThetaMatrix(n, {})};
  if (a.strongly_periodic()) return {ThetaMatrix(n, {}), a};
  const DimVector d = a.dim_vector();
  // Strongly periodic candidates for A2, largest dimension first.
  std::vector<ThetaMatrix> candidates;
  std::function<void(int, DimVector&)> sub_vectors = [&](int vertex, DimVector& d2) {
    if (vertex > n) {
      if (d2.is_sincere() && d2 != d) {
        for (auto& c : enumerate_theta(n, d2)) {
          if (c.strongly_periodic() && c.loewy() <= a.loewy()) candidates.push_back(std::move(c));
        }
      }
      return;
    }
    for (int x = 0; x <= d[vertex]; ++x) {
      d2[vertex] = x;
      sub_vectors(vertex + 1, d2);
    }
    d2[vertex] = 0;
  };
  DimVector d2 = DimVector::zero(n);
  sub_vectors(1, d2);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const ThetaMatrix& x, const ThetaMatrix& y) { return x.dim() > y.dim(); });
  for (const auto& a2 : candidates) {
    const Word w2 = socle_word(a2);
    for (const auto& a1 : enumerate_theta(n, d - a2.dim_vector(), ThetaFilter::aperiodic)) {
      const auto w1 = search_for(WordStrategy::top_peel).aperiodic_word(a1);
      if (!w1) continue;
      if (leading_matrix(*w1 + w2) == a) return {a1, a2};
    }
  }
  throw InvariantViolation("no aperiodic/strongly periodic decomposition found for " + a.to_string());
}

bool is_pyramidic(const std::vector<int>& a) {
  std::size_t k = 0;
  while (k + 1 < a.size() && a[k] <= a[k + 1]) ++k;
  while (k + 1 < a.size() && a[k] >= a[k + 1]) ++k;
  return k + 1 >= a.size();
}

std::size_t DistinguishedSection::next_id() {
  static std::atomic<std::size_t> counter{1};
  return counter++;
}

void DistinguishedSection::pin(const ThetaMatrix& a, const Word& w) {
  if (a.n() != n_) throw std::invalid_argument("pinned matrix has the wrong rank");
  if (!is_distinguished_for(w, a)) {
    throw InvariantViolation("word " + w.to_string() + " is not distinguished for " + a.to_string());
  }
  std::lock_guard lock(mutex_);
  words_[a] = w;
}

Word DistinguishedSection::word(const ThetaMatrix& a) const {
  {
    std::lock_guard lock(mutex_);
    auto it = words_.find(a);
    if (it != words_.end()) return it->second;
  }
  Word w = distinguished_word(a, strategy_);
  std::lock_guard lock(mutex_);
  return words_.emplace(a, w).first->second;
}

HallElement DistinguishedSection::monomial(const ThetaMatrix& a) const { return monomial_expand(word(a)); }

}  // namespace hallkit
