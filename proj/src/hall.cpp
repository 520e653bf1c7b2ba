#include "hallkit/hall.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "hallkit/order.hpp"

namespace hallkit {

HallElement HallElement::basis(const ThetaMatrix& a, LaurentPoly c) {
  HallElement x(a.n());
  x.add_term(a, c);
  return x;
}

LaurentPoly HallElement::coeff(const ThetaMatrix& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HallElement::add_term(const ThetaMatrix& a, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (n_ == 0) n_ = a.n();
  if (a.n() != n_) throw std::invalid_argument("Hall element terms of different rank");
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HallElement& HallElement::operator+=(const HallElement& rhs) {
  for (const auto& [a, c] : rhs.terms_) add_term(a, c);
  return *this;
}

HallElement& HallElement::operator-=(const HallElement& rhs) {
  for (const auto& [a, c] : rhs.terms_) add_term(a, -c);
  return *this;
}

HallElement operator*(const LaurentPoly& c, const HallElement& x) {
  HallElement out(x.n());
  if (c.is_zero()) return out;
  for (const auto& [a, coeff] : x.terms_) out.add_term(a, c * coeff);
  return out;
}

HallElement HallElement::conjugate_coeffs() const {
  HallElement out(n_);
  for (const auto& [a, c] : terms_) out.terms_.emplace(a, c.bar());
  return out;
}

std::string HallElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*u[" << a.to_string() << ']';
  }
  return os.str();
}

namespace {

// u~_alpha * u~_A by the twisted multiplication formula. Entries are handled
// through offsets: a(i, k) = a_{i,i+k}, t(i, k) = t_{i,i+k}, rows cyclic.
class SemisimpleProduct {
 public:
  SemisimpleProduct(const DimVector& alpha, const ThetaMatrix& a, const LaurentPoly& c, HallElement& out)
      : n_(a.n()), width_(a.loewy() + 1), alpha_(alpha), coeff_(c), out_(out) {
    a_.assign(static_cast<std::size_t>(n_ * (width_ + 2)), 0);
    t_.assign(a_.size(), 0);
    for (const auto& s : a.segments()) at(a_, s.vertex - 1, s.length) = s.mult;
  }

  void run() { fill_row(0, 1, alpha_[1]); }

 private:
  int& at(std::vector<int>& m, int row, int k) {
    return m[static_cast<std::size_t>(((row % n_) + n_) % n_ * (width_ + 2) + k)];
  }
  int get(const std::vector<int>& m, int row, int k) const {
    if (k < 1 || k > width_ + 1) return 0;
    return m[static_cast<std::size_t>(((row % n_) + n_) % n_ * (width_ + 2) + k)];
  }

  // Distribute `left` units of row `row` over offsets k, k+1, ..., width.
  void fill_row(int row, int k, int left) {
    if (row == n_) {
      emit();
      return;
    }
    if (k == width_) {
      // Last slot takes the remainder.
      const int cap = k == 1 ? left : get(a_, row + 1, k - 1);
      if (left > cap) return;
      at(t_, row, k) = left;
      fill_row(row + 1, 1, row + 1 < n_ ? alpha_[row + 2] : 0);
      at(t_, row, k) = 0;
      return;
    }
    const int cap = std::min(left, k == 1 ? left : get(a_, row + 1, k - 1));
    for (int x = 0; x <= cap; ++x) {
      at(t_, row, k) = x;
      fill_row(row, k + 1, left - x);
    }
    at(t_, row, k) = 0;
  }

  void emit() {
    LaurentPoly c = coeff_;
    long long f = 0;
    std::vector<Segment> segs;
    for (int i = 0; i < n_; ++i) {
      // Suffix sums of (a(i,k') - a(i+1,k'-1) - t(i-1,k'+1) + t(i,k')) over k' > k.
      long long suffix = 0;
      for (int k = width_ + 1; k >= 1; --k) {
        const int t = get(t_, i, k);
        f += static_cast<long long>(t) * suffix;
        suffix += get(a_, i, k) - get(a_, i + 1, k - 1) - get(t_, i - 1, k + 1) + t;
        const int r = get(a_, i, k) + t - get(t_, i - 1, k + 1);
        if (r < 0) return;
        if (t > 0) c *= square_binomial(r, t);
        if (r > 0) segs.push_back({i + 1, k, r});
      }
    }
    if (c.is_zero()) return;
    out_.add_term(ThetaMatrix(n_, std::move(segs)), c.shifted(static_cast<int>(f)));
  }

  int n_;
  int width_;
  DimVector alpha_;
  const LaurentPoly& coeff_;
  HallElement& out_;
  std::vector<int> a_;
  std::vector<int> t_;
};

}  // namespace

HallElement semisimple_mult(const DimVector& alpha, const HallElement& x) {
  for (int e : alpha.entries) {
    if (e < 0) throw std::invalid_argument("semisimple_mult needs a nonnegative dimension vector");
  }
  if (alpha.is_zero()) return x;
  HallElement out(alpha.n());
  for (const auto& [a, c] : x.terms()) {
    if (a.n() != alpha.n()) throw std::invalid_argument("rank mismatch in semisimple_mult");
    SemisimpleProduct(alpha, a, c, out).run();
  }
  return out;
}

HallElement monomial_expand(const Word& w) {
  static std::mutex mutex;
  static std::map<Word, HallElement> cache;
  if (w.empty()) return HallElement::one(w.n());
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  HallElement rest = monomial_expand(w.suffix(1));
  HallElement result = semisimple_mult(w.letters().front().alpha(w.n()), rest);
  std::lock_guard lock(mutex);
  cache.emplace(w, result);
  return result;
}

ThetaMatrix max_support(const HallElement& x) {
  if (x.is_zero()) throw InvariantViolation("max_support of zero element");
  std::vector<const ThetaMatrix*> maxima;
  for (const auto& [a, c] : x.terms()) {
    bool dominated = false;
    for (auto it = maxima.begin(); it != maxima.end();) {
      const auto cmp = preceq(a, **it);
      if (cmp == Comparison::less || cmp == Comparison::equal) {
        dominated = true;
        break;
      }
      if (cmp == Comparison::greater) {
        it = maxima.erase(it);
      } else {
        ++it;
      }
    }
    if (!dominated) maxima.push_back(&a);
  }
  if (maxima.size() != 1) {
    throw InvariantViolation("support has " + std::to_string(maxima.size()) + " maximal elements");
  }
  return *maxima.front();
}

ThetaMatrix leading_matrix(const Word& w) {
  ThetaMatrix lead(w.n(), {});
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    lead = max_support(semisimple_mult(it->alpha(w.n()), HallElement::basis(lead)));
  }
  return lead;
}

long long word_twist(const Word& w) {
  long long x = 0;
  std::vector<DimVector> alphas;
  for (const auto& l : w.letters()) alphas.push_back(l.alpha(w.n()));
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    x += delta(ThetaMatrix::semisimple(alphas[k]));
    for (std::size_t l = k + 1; l < alphas.size(); ++l) x += euler_form(alphas[k], alphas[l]);
  }
  return x;
}

LaurentPoly hall_polynomial(const Word& w, const ThetaMatrix& b) {
  if (w.dim_vector() != b.dim_vector()) {
    throw std::invalid_argument("word and matrix have different dimension vectors");
  }
  const HallElement m = monomial_expand(w);
  const LaurentPoly c = m.coeff(b).shifted(static_cast<int>(delta(b) - word_twist(w)));
  if (!c.in_z_v2() || (!c.is_zero() && c.min_exponent() < 0)) {
    throw InvariantViolation("Hall polynomial " + c.to_string() + " is not a polynomial in v^2");
  }
  return c;
}

}  // namespace hallkit
