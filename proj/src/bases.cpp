#include "hallkit/bases.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

#include "hallkit/order.hpp"

namespace hallkit {

namespace {

using Vec = std::vector<LaurentPoly>;

// Memo tables for one stratum under one section. Rows are dense over the
// stratum's element indices.
class StratumBases {
 public:
  StratumBases(const DistinguishedSection& section, int n, const DimVector& d)
      : section_(section), st_(stratum(n, d)) {
    const std::size_t count = st_->size();
    monomial_.resize(count);
    pbw_.resize(count);
    pbw_in_m_.resize(count);
    bar_pbw_.resize(count);
  }

  const Stratum& st() const { return *st_; }
  std::recursive_mutex& mutex() { return mutex_; }

  Vec to_vec(const HallElement& x) const {
    Vec out(st_->size());
    for (const auto& [b, c] : x.terms()) {
      const int k = st_->index_of(b);
      if (k < 0) throw std::invalid_argument("element is not homogeneous of the expected dimension vector");
      out[static_cast<std::size_t>(k)] = c;
    }
    return out;
  }

  HallElement to_element(const Vec& v) const {
    HallElement x(st_->n());
    for (std::size_t k = 0; k < v.size(); ++k) x.add_term(st_->element(k), v[k]);
    return x;
  }

  const Vec& monomial(std::size_t k) {
    if (!monomial_[k]) monomial_[k] = std::make_unique<Vec>(to_vec(section_.monomial(st_->element(k))));
    return *monomial_[k];
  }

  // E_k in the u~ basis.
  const Vec& pbw(std::size_t k) {
    if (!pbw_[k]) {
      require_aperiodic(k);
      const Vec& m = monomial(k);
      Vec e = m;
      for (std::size_t b = 0; b < m.size(); ++b) {
        if (b == k || !st_->aperiodic(b) || m[b].is_zero()) continue;
        const Vec& eb = pbw(b);
        for (std::size_t x = 0; x < eb.size(); ++x) {
          if (!eb[x].is_zero()) e[x] -= m[b] * eb[x];
        }
      }
      pbw_[k] = std::make_unique<Vec>(std::move(e));
    }
    return *pbw_[k];
  }

  // E_k = sum over aperiodic b of G[k][b] m^(b).
  const Vec& pbw_in_monomials(std::size_t k) {
    if (!pbw_in_m_[k]) {
      require_aperiodic(k);
      const Vec& m = monomial(k);
      Vec g(st_->size());
      g[k] = 1;
      for (std::size_t b = 0; b < m.size(); ++b) {
        if (b == k || !st_->aperiodic(b) || m[b].is_zero()) continue;
        const Vec& gb = pbw_in_monomials(b);
        for (std::size_t x = 0; x < gb.size(); ++x) {
          if (!gb[x].is_zero()) g[x] -= m[b] * gb[x];
        }
      }
      pbw_in_m_[k] = std::make_unique<Vec>(std::move(g));
    }
    return *pbw_in_m_[k];
  }

  // bar(E_k) = sum over b of R[k][b] E_b.
  const Vec& bar_pbw(std::size_t k) {
    if (!bar_pbw_[k]) {
      const Vec& g = pbw_in_monomials(k);
      Vec r(st_->size());
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (g[b].is_zero()) continue;
        const LaurentPoly gb = g[b].bar();
        const Vec& m = monomial(b);
        // m^(b) = sum over aperiodic x of m[x] E_x.
        for (std::size_t x = 0; x < m.size(); ++x) {
          if (st_->aperiodic(x) && !m[x].is_zero()) r[x] += gb * m[x];
        }
      }
      bar_pbw_[k] = std::make_unique<Vec>(std::move(r));
    }
    return *bar_pbw_[k];
  }

  LaurentPoly eta(std::size_t a, std::size_t c) {
    const auto key = std::make_pair(a, c);
    auto it = eta_.find(key);
    if (it != eta_.end()) return it->second;
    const Vec& m = monomial(a);
    LaurentPoly value = m[c];
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (b == a || !st_->aperiodic(b) || m[b].is_zero()) continue;
      if (!st_->less(c, b) || !st_->less(b, a)) continue;
      value -= m[b] * eta(b, c);
    }
    eta_.emplace(key, value);
    return value;
  }

 private:
  void require_aperiodic(std::size_t k) const {
    if (!st_->aperiodic(k)) {
      throw std::invalid_argument("PBW element requested for periodic matrix " + st_->element(k).to_string());
    }
  }

  const DistinguishedSection& section_;
  std::shared_ptr<const Stratum> st_;
  std::recursive_mutex mutex_;
  std::vector<std::unique_ptr<Vec>> monomial_;
  std::vector<std::unique_ptr<Vec>> pbw_;
  std::vector<std::unique_ptr<Vec>> pbw_in_m_;
  std::vector<std::unique_ptr<Vec>> bar_pbw_;
  std::map<std::pair<std::size_t, std::size_t>, LaurentPoly> eta_;
};

StratumBases& bases_for(const DistinguishedSection& section, const DimVector& d) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, DimVector>, std::unique_ptr<StratumBases>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(section.id(), d);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<StratumBases>(section, section.n(), d)).first;
  }
  return *it->second;
}

// Split x by dimension vector.
std::map<DimVector, HallElement> homogeneous_parts(const HallElement& x) {
  std::map<DimVector, HallElement> parts;
  for (const auto& [a, c] : x.terms()) {
    auto [it, inserted] = parts.try_emplace(a.dim_vector(), HallElement(x.n()));
    it->second.add_term(a, c);
  }
  return parts;
}

std::size_t index_in(const Stratum& st, const ThetaMatrix& a) {
  const int k = st.index_of(a);
  if (k < 0) throw std::invalid_argument("matrix not found in its stratum");
  return static_cast<std::size_t>(k);
}

}  // namespace

Coefficients to_monomial_basis(const HallElement& x, const DistinguishedSection& section) {
  Coefficients out;
  for (const auto& [d, part] : homogeneous_parts(x)) {
    auto& sb = bases_for(section, d);
    std::lock_guard lock(sb.mutex());
    Vec rest = sb.to_vec(part);
    const auto& order = sb.st().linear_extension();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t k = *it;
      if (rest[k].is_zero()) continue;
      const LaurentPoly c = rest[k];
      const Vec& m = sb.monomial(k);
      for (std::size_t b = 0; b < m.size(); ++b) {
        if (!m[b].is_zero()) rest[b] -= c * m[b];
      }
      out.emplace(sb.st().element(k), c);
    }
  }
  return out;
}

HallElement product(const HallElement& x, const HallElement& y, const DistinguishedSection& section) {
  if (x.n() != 0 && y.n() != 0 && x.n() != y.n()) throw std::invalid_argument("product of different ranks");
  HallElement out(section.n());
  for (const auto& [a, c] : to_monomial_basis(x, section)) {
    const Word w = section.word(a);
    HallElement acc = y;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      acc = semisimple_mult(it->alpha(w.n()), acc);
    }
    out += c * acc;
  }
  return out;
}

HallElement bar_element(const HallElement& x, const DistinguishedSection& section) {
  HallElement out(section.n());
  for (const auto& [a, c] : to_monomial_basis(x, section)) out += c.bar() * section.monomial(a);
  return out;
}

PbwExpansion pbw(const ThetaMatrix& a, const DistinguishedSection& section) {
  if (!a.aperiodic()) throw std::invalid_argument("PBW elements exist only for aperiodic matrices");
  auto& sb = bases_for(section, a.dim_vector());
  std::lock_guard lock(sb.mutex());
  const std::size_t k = index_in(sb.st(), a);
  PbwExpansion out{a, sb.to_element(sb.pbw(k)), {}};
  for (const auto& [b, c] : out.element.terms()) {
    if (b == a) {
      if (c != LaurentPoly(1)) throw InvariantViolation("E_A has leading coefficient " + c.to_string());
      continue;
    }
    if (b.aperiodic()) {
      throw InvariantViolation("E_" + a.to_string() + " keeps the aperiodic term " + b.to_string());
    }
    if (!c.in_negative_part()) {
      throw InvariantViolation("E_" + a.to_string() + " has coefficient " + c.to_string() + " outside v^-1 Z[v^-1]");
    }
    out.eta.emplace(b, c);
  }
  return out;
}

Coefficients eta_recursive(const ThetaMatrix& a, const DistinguishedSection& section) {
  if (!a.aperiodic()) throw std::invalid_argument("eta is defined for aperiodic matrices");
  auto& sb = bases_for(section, a.dim_vector());
  std::lock_guard lock(sb.mutex());
  const auto& st = sb.st();
  const std::size_t k = index_in(st, a);
  Coefficients out;
  for (std::size_t c : st.strictly_below(k)) {
    if (st.aperiodic(c)) continue;
    LaurentPoly value = sb.eta(k, c);
    if (!value.is_zero()) out.emplace(st.element(c), value);
  }
  return out;
}

CanonicalElement canonical_hall(const ThetaMatrix& a, const DistinguishedSection& section) {
  auto& sb = bases_for(section, a.dim_vector());
  std::lock_guard lock(sb.mutex());
  const auto& st = sb.st();
  const std::size_t k = index_in(st, a);
  Vec c = sb.monomial(k);
  for (const auto& layer : st.layers_below(k)) {
    for (std::size_t b : layer) {
      if (c[b].in_negative_part()) continue;
      const LaurentPoly sym = c[b].symmetric_decompose().first;
      const Vec& m = sb.monomial(b);
      for (std::size_t x = 0; x < m.size(); ++x) {
        if (!m[x].is_zero()) c[x] -= sym * m[x];
      }
    }
  }
  CanonicalElement out{a, sb.to_element(c), {}};
  for (const auto& [b, coeff] : out.element.terms()) {
    if (b == a) {
      if (coeff != LaurentPoly(1)) throw InvariantViolation("canonical element has non-unit leading coefficient");
      continue;
    }
    if (!coeff.in_negative_part()) {
      throw InvariantViolation("canonical element keeps coefficient " + coeff.to_string() + " at " + b.to_string());
    }
    out.p_coeffs.emplace(b, coeff);
  }
  return out;
}

CanonicalElement canonical_uplus(const ThetaMatrix& a, const DistinguishedSection& section) {
  if (!a.aperiodic()) throw std::invalid_argument("canonical_uplus needs an aperiodic matrix");
  auto& sb = bases_for(section, a.dim_vector());
  std::lock_guard lock(sb.mutex());
  const auto& st = sb.st();
  const std::size_t top = index_in(st, a);
  const auto& order = st.linear_extension();
  // p[b] for aperiodic b <= a, solved from the top down.
  Vec p(st.size());
  p[top] = 1;
  std::vector<std::size_t> solved{top};
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t b = *it;
    if (!st.aperiodic(b) || !st.less(b, top)) continue;
    LaurentPoly rhs;
    for (std::size_t c : solved) {
      if (!st.less(b, c)) continue;
      const LaurentPoly& r = sb.bar_pbw(c)[b];
      if (!r.is_zero() && !p[c].is_zero()) rhs += r * p[c].bar();
    }
    if (!(rhs + rhs.bar()).is_zero()) {
      throw InvariantViolation("bar system right-hand side " + rhs.to_string() + " is not antisymmetric");
    }
    LaurentPoly neg;
    for (const auto& [e, coeff] : rhs.terms()) {
      if (e < 0) neg += LaurentPoly::monomial(e, coeff);
    }
    p[b] = neg;
    solved.push_back(b);
  }
  CanonicalElement out{a, HallElement(a.n()), {}};
  Vec sum(st.size());
  for (std::size_t b = 0; b < st.size(); ++b) {
    if (p[b].is_zero()) continue;
    if (b != top) out.p_coeffs.emplace(st.element(b), p[b]);
    const Vec& e = sb.pbw(b);
    for (std::size_t x = 0; x < e.size(); ++x) {
      if (!e[x].is_zero()) sum[x] += p[b] * e[x];
    }
  }
  out.element = sb.to_element(sum);
  return out;
}

CanonicalElement canonical_uplus_subtractive(const ThetaMatrix& a, const DistinguishedSection& section) {
  if (!a.aperiodic()) throw std::invalid_argument("canonical_uplus needs an aperiodic matrix");
  auto& sb = bases_for(section, a.dim_vector());
  std::lock_guard lock(sb.mutex());
  const auto& st = sb.st();
  const std::size_t top = index_in(st, a);
  Vec c = sb.monomial(top);
  CanonicalElement out{a, HallElement(a.n()), {}};
  const auto& order = st.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t b = *it;
    if (!st.aperiodic(b) || !st.less(b, top) || c[b].in_negative_part()) continue;
    const LaurentPoly sym = c[b].symmetric_decompose().first;
    const Vec& m = sb.monomial(b);
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (!m[x].is_zero()) c[x] -= sym * m[x];
    }
    out.p_coeffs.emplace(st.element(b), -sym);
  }
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (x != top && !c[x].in_negative_part()) {
      throw InvariantViolation("subtractive canonical element keeps coefficient " + c[x].to_string() + " at " +
                               st.element(x).to_string());
    }
  }
  out.element = sb.to_element(c);
  return out;
}

namespace {

ThetaMatrix swap_vertices(const ThetaMatrix& a) {
  std::vector<Segment> segs;
  for (auto s : a.segments()) {
    s.vertex = 3 - s.vertex;
    segs.push_back(s);
  }
  return ThetaMatrix(2, std::move(segs));
}

Word swap_vertices(const Word& w) {
  std::vector<Letter> letters;
  for (auto l : w.letters()) {
    l.vertex = 3 - l.vertex;
    letters.push_back(l);
  }
  return Word(2, std::move(letters));
}

Word three_letters(int first, int e1, int e2, int e3) {
  std::vector<Letter> letters;
  const int second = 3 - first;
  if (e1 > 0) letters.push_back(Letter::vertex_power(first, e1));
  if (e2 > 0) letters.push_back(Letter::vertex_power(second, e2));
  if (e3 > 0) letters.push_back(Letter::vertex_power(first, e3));
  return Word(2, std::move(letters));
}

void check_family(int family, int a, int b) {
  if (family < 1 || family > 8) throw std::invalid_argument("family must be in 1..8");
  if (a < 0 || b < 0) throw std::invalid_argument("a and b must be nonnegative");
}

}  // namespace

ThetaMatrix sl2_family_matrix(int family, int a, int b, int c) {
  check_family(family, a, b);
  ThetaMatrix m;
  switch ((family + 1) / 2) {
    case 1: m = ThetaMatrix(2, {{1, 1, a}, {1, 2, b}, {1, 3, c}}); break;
    case 2: m = ThetaMatrix(2, {{1, 1, a}, {1, 3, c}, {2, 2, b}}); break;
    case 3: m = ThetaMatrix(2, {{1, 2, b}, {1, 3, c}, {2, 1, a}}); break;
    default: m = ThetaMatrix(2, {{1, 3, c}, {2, 1, a}, {2, 2, b}}); break;
  }
  return family % 2 == 0 ? swap_vertices(m) : m;
}

Word sl2_family_word(int family, int a, int b, int c) {
  check_family(family, a, b);
  Word w;
  switch ((family + 1) / 2) {
    case 1: w = three_letters(1, a + b + c, b + c, c); break;
    case 2: w = three_letters(1, c, b + c, a + b + c); break;
    case 3: w = three_letters(1, b + c, a + b + c, c); break;
    default: w = three_letters(1, c, a + b + c, b + c); break;
  }
  return family % 2 == 0 ? swap_vertices(w) : w;
}

CanonicalElement sl2_loewy3(int family, int a, int b, int c) {
  check_family(family, a, b);
  if (c <= 0) throw std::invalid_argument("c must be positive");
  const ThetaMatrix top = sl2_family_matrix(family, a, b, c);
  if (family >= 5 || a <= b) return {top, monomial_expand(sl2_family_word(family, a, b, c)), {}};
  // A_i^(k) has parameters (a + c - k, b + c - k, k); k = c gives A_i.
  CanonicalElement out{top, HallElement(2), {}};
  for (int k = 0; k <= c; ++k) {
    LaurentPoly coeff = gaussian(a - b - 1 + c - k, a - b - 1, GaussianVariant::square_bracket);
    if ((c - k) % 2 != 0) coeff = -coeff;
    const int ak = a + c - k;
    const int bk = b + c - k;
    out.element += coeff * monomial_expand(sl2_family_word(family, ak, bk, k));
    if (k != c) out.p_coeffs.emplace(sl2_family_matrix(family, ak, bk, k), coeff);
  }
  return out;
}

}  // namespace hallkit
