#include "hallkit/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hallkit/kernels.hpp"

namespace hallkit {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, BigInt coeff) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(std::move(coeff));
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, BigInt>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(e, c);
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, BigInt>> LaurentPoly::terms() const {
  std::vector<std::pair<int, BigInt>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  }
  return out;
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

void LaurentPoly::add_scaled(const LaurentPoly& rhs, int sign) {
  if (rhs.is_zero()) return;
  if (is_zero()) {
    *this = rhs;
    if (sign < 0) {
      for (auto& c : coeffs_) c = -c;
    }
    return;
  }
  const int new_low = std::min(low_, rhs.low_);
  const int new_high = std::max(max_exponent(), rhs.max_exponent());
  if (new_low < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - new_low), BigInt(0));
    low_ = new_low;
  }
  coeffs_.resize(static_cast<std::size_t>(new_high - low_ + 1));
  const std::size_t offset = static_cast<std::size_t>(rhs.low_ - low_);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    if (sign > 0) {
      coeffs_[offset + k] += rhs.coeffs_[k];
    } else {
      coeffs_[offset + k] -= rhs.coeffs_[k];
    }
  }
  normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  add_scaled(rhs, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  add_scaled(rhs, -1);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

namespace {

bool small_coeffs(const std::vector<BigInt>& cs, std::int64_t& max_abs) {
  max_abs = 0;
  for (const auto& c : cs) {
    const BigInt a = abs(c);
    if (a >= (BigInt(1) << 31)) return false;
    max_abs = std::max(max_abs, a.convert_to<std::int64_t>());
  }
  return true;
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.low_ = lhs.low_ + rhs.low_;
  const std::size_t na = lhs.coeffs_.size();
  const std::size_t nb = rhs.coeffs_.size();
  std::int64_t max_a = 0;
  std::int64_t max_b = 0;
  if (small_coeffs(lhs.coeffs_, max_a) && small_coeffs(rhs.coeffs_, max_b) &&
      kernels::convolve_fits(max_a, max_b, std::min(na, nb))) {
    std::vector<std::int64_t> a(na), b(nb), prod(na + nb - 1, 0);
    for (std::size_t k = 0; k < na; ++k) a[k] = lhs.coeffs_[k].convert_to<std::int64_t>();
    for (std::size_t k = 0; k < nb; ++k) b[k] = rhs.coeffs_[k].convert_to<std::int64_t>();
    kernels::convolve(a, b, prod);
    out.coeffs_.reserve(prod.size());
    for (auto c : prod) out.coeffs_.emplace_back(c);
  } else {
    out.coeffs_.assign(na + nb - 1, BigInt(0));
    for (std::size_t i = 0; i < na; ++i) {
      if (lhs.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < nb; ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  out.normalize();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.low_ = -max_exponent();
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return p;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::symmetric_decompose() const {
  LaurentPoly sym;
  for (int k = std::max(0, low_); !is_zero() && k <= max_exponent(); ++k) {
    const BigInt c = coeff(k);
    if (c == 0) continue;
    sym += monomial(k, c);
    if (k > 0) sym += monomial(-k, c);
  }
  LaurentPoly low = *this - sym;
  return {sym, low};
}

bool LaurentPoly::in_negative_part() const { return is_zero() || max_exponent() < 0; }

bool LaurentPoly::in_z_v2() const {
  for (const auto& [e, c] : terms()) {
    if (e % 2 != 0) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::halve_exponents() const {
  if (!in_z_v2()) throw std::invalid_argument("polynomial is not in Z[v^2]");
  LaurentPoly p;
  for (const auto& [e, c] : terms()) p += monomial(e / 2, c);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto ts = terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

// [[N t]] for N >= 0 via the q-Pascal rule with q = v^2.
LaurentPoly symmetric_binomial(long long n, long long t) {
  if (t == 0) return 1;
  if (n < t) return 0;
  // Row-by-row table; rows are short at the sizes used here.
  std::vector<LaurentPoly> row(static_cast<std::size_t>(t) + 1);
  row[0] = 1;
  for (long long m = 1; m <= n; ++m) {
    for (long long k = std::min(m, t); k >= 1; --k) {
      row[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(k)].shifted(2 * static_cast<int>(k));
    }
  }
  return row[static_cast<std::size_t>(t)];
}

}  // namespace

LaurentPoly gaussian(long long n, long long t, GaussianVariant variant) {
  if (t < 0) throw std::invalid_argument("gaussian: t must be nonnegative");
  switch (variant) {
    case GaussianVariant::symmetric_bracket:
      return symmetric_binomial(n, t);
    case GaussianVariant::square_bracket: {
      LaurentPoly p = symmetric_binomial(n, t);
      if (p.is_zero() || t == 0) return p;
      return p.shifted(static_cast<int>(-t * (n - t)));
    }
    case GaussianVariant::factorial: {
      LaurentPoly acc = 1;
      for (long long m = 1; m <= t; ++m) acc *= symmetric_binomial(m, 1);
      return acc;
    }
  }
  return 0;
}

const LaurentPoly& square_binomial(int n, int t) {
  thread_local std::map<std::pair<int, int>, LaurentPoly> cache;
  auto key = std::make_pair(n, t);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, gaussian(n, t, GaussianVariant::square_bracket)).first;
  }
  return it->second;
}

}  // namespace hallkit
