#include "hallkit/order.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hallkit/kernels.hpp"

namespace hallkit {

namespace {

// Number of s with s = v (mod n) in [lo, hi].
long long count_congruent(long long lo, long long hi, int v, int n) {
  if (hi < lo) return 0;
  auto floor_div = [](long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  return floor_div(hi - v, n) - floor_div(lo - 1 - v, n);
}

}  // namespace

long long sigma(const ThetaMatrix& a, long long i, long long j) {
  if (i == j) throw std::invalid_argument("sigma needs i != j");
  // The lower triangle is empty for these matrices.
  if (i > j) return 0;
  long long total = 0;
  for (const auto& s : a.segments()) {
    total += s.mult * count_congruent(j - s.length, i, s.vertex, a.n());
  }
  return total;
}

std::vector<std::int32_t> sigma_vector(const ThetaMatrix& a, int width) {
  std::vector<std::int32_t> out;
  out.reserve(static_cast<std::size_t>(a.n() * width));
  for (int i = 1; i <= a.n(); ++i) {
    for (int k = 1; k <= width; ++k) out.push_back(static_cast<std::int32_t>(sigma(a, i, i + k)));
  }
  return out;
}

Comparison preceq(const ThetaMatrix& b, const ThetaMatrix& a) {
  if (a.n() != b.n()) throw std::invalid_argument("comparing matrices of different rank");
  if (a.dim_vector() != b.dim_vector()) return Comparison::different_class;
  if (a == b) return Comparison::equal;
  const int width = std::max(a.loewy(), b.loewy());
  const auto sb = sigma_vector(b, width);
  const auto sa = sigma_vector(a, width);
  const auto dom = kernels::dominance(sb, sa);
  if (dom.le) return Comparison::less;
  if (dom.ge) return Comparison::greater;
  return Comparison::incomparable;
}

namespace {

void enumerate_rec(int n, int max_len, std::size_t type, DimVector& remaining, std::vector<Segment>& chosen,
                   std::vector<ThetaMatrix>& out) {
  if (remaining.is_zero()) {
    out.emplace_back(n, chosen);
    return;
  }
  const std::size_t types = static_cast<std::size_t>(n * max_len);
  if (type >= types) return;
  const int vertex = static_cast<int>(type) / max_len + 1;
  const int length = static_cast<int>(type) % max_len + 1;
  const DimVector seg_dim = ThetaMatrix(n, {{vertex, length, 1}}).dim_vector();
  // multiplicity 0
  enumerate_rec(n, max_len, type + 1, remaining, chosen, out);
  int m = 0;
  while (true) {
    remaining -= seg_dim;
    ++m;
    bool ok = true;
    for (int x : remaining.entries) ok = ok && x >= 0;
    if (!ok) break;
    chosen.push_back({vertex, length, m});
    enumerate_rec(n, max_len, type + 1, remaining, chosen, out);
    chosen.pop_back();
  }
  for (int k = 0; k < m; ++k) remaining += seg_dim;
}

}  // namespace

std::vector<ThetaMatrix> enumerate_theta(int n, const DimVector& d, ThetaFilter filter) {
  if (n < 1 || d.n() != n) throw std::invalid_argument("dimension vector must have n entries");
  for (int x : d.entries) {
    if (x < 0) throw std::invalid_argument("dimension vector must be nonnegative");
  }
  std::vector<ThetaMatrix> all;
  DimVector remaining = d;
  std::vector<Segment> chosen;
  const int max_len = static_cast<int>(std::max<long long>(1, d.sigma()));
  enumerate_rec(n, max_len, 0, remaining, chosen, all);
  std::sort(all.begin(), all.end());
  if (filter == ThetaFilter::all) return all;
  std::vector<ThetaMatrix> kept;
  for (auto& a : all) {
    if (a.aperiodic() == (filter == ThetaFilter::aperiodic)) kept.push_back(std::move(a));
  }
  return kept;
}

Stratum::Stratum(int n, const DimVector& d) : n_(n), d_(d), elements_(enumerate_theta(n, d)) {
  const std::size_t count = elements_.size();
  int width = 1;
  for (std::size_t k = 0; k < count; ++k) {
    index_.emplace(elements_[k], static_cast<int>(k));
    aperiodic_.push_back(elements_[k].aperiodic());
    width = std::max(width, elements_[k].loewy());
  }
  std::vector<std::vector<std::int32_t>> sig(count);
  std::vector<long long> total(count, 0);
  for (std::size_t k = 0; k < count; ++k) {
    sig[k] = sigma_vector(elements_[k], width);
    total[k] = std::accumulate(sig[k].begin(), sig[k].end(), 0LL);
  }
  words_ = (count + 63) / 64;
  below_.assign(count, std::vector<std::uint64_t>(words_, 0));
  auto set = [&](std::size_t a, std::size_t b) { below_[a][b / 64] |= std::uint64_t{1} << (b % 64); };
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      const auto dom = kernels::dominance(sig[b], sig[a]);
      if (dom.le && !dom.ge) set(a, b);
      if (dom.ge && !dom.le) set(b, a);
    }
  }
  topo_.resize(count);
  std::iota(topo_.begin(), topo_.end(), 0);
  std::stable_sort(topo_.begin(), topo_.end(), [&](std::size_t x, std::size_t y) { return total[x] < total[y]; });
  for (std::size_t a = 0; a < count; ++a) {
    // Covered elements: below a but not below anything else below a.
    std::vector<std::uint64_t> indirect(words_, 0);
    for (std::size_t c = 0; c < count; ++c) {
      if (!less(c, a)) continue;
      for (std::size_t w = 0; w < words_; ++w) indirect[w] |= below_[c][w];
    }
    for (std::size_t b = 0; b < count; ++b) {
      if (less(b, a) && !((indirect[b / 64] >> (b % 64)) & 1U)) covers_.emplace_back(a, b);
    }
  }
}

int Stratum::index_of(const ThetaMatrix& a) const {
  auto it = index_.find(a);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::size_t> Stratum::strictly_below(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < size(); ++b) {
    if (less(b, a)) out.push_back(b);
  }
  return out;
}

std::vector<std::vector<std::size_t>> Stratum::layers_below(std::size_t a) const {
  std::vector<std::size_t> rest = strictly_below(a);
  std::vector<std::vector<std::size_t>> layers;
  while (!rest.empty()) {
    std::vector<std::size_t> top, remaining;
    for (std::size_t x : rest) {
      bool maximal = true;
      for (std::size_t y : rest) {
        if (less(x, y)) {
          maximal = false;
          break;
        }
      }
      (maximal ? top : remaining).push_back(x);
    }
    layers.push_back(std::move(top));
    rest = std::move(remaining);
  }
  return layers;
}

std::shared_ptr<const Stratum> stratum(int n, const DimVector& d) {
  static std::mutex mutex;
  static std::map<std::pair<int, DimVector>, std::shared_ptr<const Stratum>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, d);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_shared<const Stratum>(n, d)).first;
  return it->second;
}

}  // namespace hallkit
