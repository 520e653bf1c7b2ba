#include "hallkit/tight.hpp"

#include <functional>
#include <stdexcept>

namespace hallkit {

CartanDatum::CartanDatum(std::vector<std::vector<long long>> euler) : euler_(std::move(euler)) {
  for (const auto& row : euler_) {
    if (row.size() != euler_.size()) throw std::invalid_argument("Euler table must be square");
  }
  for (int i = 1; i <= size(); ++i) {
    const long long ii = dot(i, i);
    if (ii <= 0 || ii % 2 != 0) throw std::invalid_argument("i.i must be even and positive");
  }
}

CartanDatum CartanDatum::kronecker() { return CartanDatum({{1, -2}, {0, 1}}); }

long long CartanDatum::euler(int i, int j) const {
  if (i < 1 || j < 1 || i > size() || j > size()) throw std::invalid_argument("vertex outside the Cartan datum");
  return euler_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

namespace {

// All nonnegative k x k matrices with row sums and column sums both equal to s.
std::vector<std::vector<std::vector<long long>>> square_tables(const std::vector<long long>& s) {
  const std::size_t k = s.size();
  std::vector<std::vector<std::vector<long long>>> out;
  std::vector<std::vector<long long>> m(k, std::vector<long long>(k, 0));
  std::vector<long long> col_left = s;
  std::function<void(std::size_t, std::size_t, long long)> fill = [&](std::size_t r, std::size_t c, long long row_left) {
    if (r == k) {
      out.push_back(m);
      return;
    }
    if (c == k - 1) {
      if (row_left > col_left[c]) return;
      m[r][c] = row_left;
      col_left[c] -= row_left;
      if (r + 1 < k) {
        fill(r + 1, 0, s[r + 1]);
      } else {
        bool done = true;
        for (auto x : col_left) done = done && x == 0;
        if (done) out.push_back(m);
      }
      col_left[c] += row_left;
      m[r][c] = 0;
      return;
    }
    for (long long x = 0; x <= std::min(row_left, col_left[c]); ++x) {
      m[r][c] = x;
      col_left[c] -= x;
      fill(r, c + 1, row_left - x);
      col_left[c] += x;
    }
    m[r][c] = 0;
  };
  if (k == 0) return {m};
  fill(0, 0, s[0]);
  return out;
}

}  // namespace

std::vector<FlagMatrix> enumerate_flag_matrices(const std::vector<int>& i, const std::vector<long long>& a) {
  if (i.size() != a.size()) throw std::invalid_argument("vertex and exponent sequences differ in length");
  for (auto x : a) {
    if (x < 0) throw std::invalid_argument("exponents must be nonnegative");
  }
  const std::size_t t = i.size();
  // Positions grouped by vertex; classes decouple.
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t r = 0; r < t; ++r) classes[i[r]].push_back(r);
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::vector<std::vector<std::vector<long long>>>> tables;
  for (const auto& [vertex, positions] : classes) {
    std::vector<long long> sums;
    for (auto p : positions) sums.push_back(a[p]);
    groups.push_back(positions);
    tables.push_back(square_tables(sums));
  }
  std::vector<FlagMatrix> out;
  FlagMatrix m(t, std::vector<long long>(t, 0));
  std::function<void(std::size_t)> combine = [&](std::size_t g) {
    if (g == groups.size()) {
      out.push_back(m);
      return;
    }
    const auto& pos = groups[g];
    for (const auto& table : tables[g]) {
      for (std::size_t x = 0; x < pos.size(); ++x) {
        for (std::size_t y = 0; y < pos.size(); ++y) m[pos[x]][pos[y]] = table[x][y];
      }
      combine(g + 1);
    }
  };
  combine(0);
  // Put diag(a) first.
  FlagMatrix diag(t, std::vector<long long>(t, 0));
  for (std::size_t r = 0; r < t; ++r) diag[r][r] = a[r];
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] == diag) {
      std::swap(out[0], out[k]);
      break;
    }
  }
  return out;
}

long long quadratic_form(const FlagMatrix& m, const std::vector<int>& i, const CartanDatum& datum) {
  const std::size_t t = i.size();
  long long q = 0;
  // Column m: pairs of rows p < r, both in column m.
  for (std::size_t col = 0; col < t; ++col) {
    for (std::size_t p = 0; p < t; ++p) {
      for (std::size_t r = p + 1; r < t; ++r) q += datum.euler(i[col], i[col]) * m[p][col] * m[r][col];
    }
  }
  // Entries (p, m) and (r, l) with p < r and l < m.
  for (std::size_t p = 0; p < t; ++p) {
    for (std::size_t r = p + 1; r < t; ++r) {
      for (std::size_t l = 0; l < t; ++l) {
        for (std::size_t col = l + 1; col < t; ++col) q += datum.dot(i[l], i[col]) * m[p][col] * m[r][l];
      }
    }
  }
  // Row r: pairs of columns l < m.
  for (std::size_t r = 0; r < t; ++r) {
    for (std::size_t l = 0; l < t; ++l) {
      for (std::size_t col = l + 1; col < t; ++col) q += datum.euler(i[r], i[r]) * m[r][col] * m[r][l];
    }
  }
  return q;
}

TightVerdict is_tight(const std::vector<int>& i, const std::vector<long long>& a, const CartanDatum& datum) {
  const auto mats = enumerate_flag_matrices(i, a);
  for (std::size_t k = 1; k < mats.size(); ++k) {
    const long long q = quadratic_form(mats[k], i, datum);
    if (q >= 0) return {false, mats[k], q};
  }
  return {};
}

}  // namespace hallkit
