// Fixtures and oracles shared by the unit tests and the acceptance runner.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hallkit/repcat.hpp"
#include "hallkit/word.hpp"

namespace hallkit::testing {

// The 18 isoclasses of dimension vector (1,2,3) for n = 3, indexed 1..18.
inline const std::array<const char*, 19> kStratum123 = {
    "",
    "2.5.1,3.1.1",
    "2.1.1,3.1.1,3.4.1",
    "2.4.1,3.1.2",
    "2.2.1,3.4.1",
    "2.1.1,3.1.2,3.3.1",
    "1.3.1,2.1.1,3.1.2",
    "2.1.1,2.3.1,3.1.2",
    "2.2.1,3.1.1,3.3.1",
    "1.3.1,2.2.1,3.1.1",
    "2.2.1,2.3.1,3.1.1",
    "2.1.1,2.2.1,3.1.1,3.2.1",
    "1.2.1,2.2.1,3.1.2",
    "1.1.1,2.2.2,3.1.1",
    "2.2.2,3.2.1",
    "1.1.1,2.1.1,2.2.1,3.1.2",
    "1.2.1,2.1.1,3.1.3",
    "2.1.2,3.1.2,3.2.1",
    "1.1.1,2.1.2,3.1.3",
};

inline ThetaMatrix A(int k) { return ThetaMatrix::parse(3, kStratum123.at(static_cast<std::size_t>(k))); }

struct PinnedWord {
  int index;
  const char* word;
};
inline const std::array<PinnedWord, 5> kPinnedWords = {{
    {6, "123^32"}, {12, "213^32"}, {16, "13^32^2"}, {9, "12^23^3"}, {13, "2^213^3"},
}};

inline std::vector<DimVector> dim_vectors(int n, int max_sigma, int min_sigma = 1) {
  std::vector<DimVector> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n) {
      if (max_sigma - left >= min_sigma) out.emplace_back(e);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[static_cast<std::size_t>(k)] = x;
      rec(k + 1, left - x);
    }
  };
  rec(0, max_sigma);
  return out;
}

// Words in tight form with at most max_len letters and total dimension <= max_sigma.
inline void for_each_word(int n, std::size_t max_len, int max_sigma, const std::function<void(const Word&)>& fn) {
  std::vector<Letter> alphabet;
  for (int i = 1; i <= n; ++i) {
    for (int e = 1; e <= max_sigma; ++e) alphabet.push_back(Letter::vertex_power(i, e));
  }
  for (const auto& d : dim_vectors(n, max_sigma, n)) {
    if (d.is_sincere()) alphabet.push_back(Letter::sincere_letter(d));
  }
  std::vector<Letter> cur;
  std::function<void(long long)> rec = [&](long long sigma) {
    if (!cur.empty()) {
      const Word w(n, cur);
      if (w.size() != cur.size()) return;  // adjacent letters merged: not tight
      fn(w);
    }
    if (cur.size() == max_len) return;
    for (const auto& l : alphabet) {
      const long long s = l.alpha(n).sigma();
      if (sigma + s > max_sigma) continue;
      cur.push_back(l);
      rec(sigma + s);
      cur.pop_back();
    }
  };
  rec(0);
}

// dim Hom(S_i[l], S_j[m]) by solving f x = x f over F_p in the standard basis.
inline int hom_oracle(int i, int l, int j, int m, int n) {
  constexpr std::int64_t p = 1000003;
  auto vert = [n](int top, int k) { return ((top - 1 + k) % n + n) % n; };
  // unknowns f[a][b]: basis a of the source to basis b of the target, same vertex
  std::vector<std::vector<int>> var(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(m), -1));
  int nv = 0;
  for (int a = 0; a < l; ++a) {
    for (int b = 0; b < m; ++b) {
      if (vert(i, a) == vert(j, b)) var[a][b] = nv++;
    }
  }
  if (nv == 0) return 0;
  // f(x e_a) = x f(e_a): coefficient of e_c on both sides
  std::vector<std::vector<std::int64_t>> rows;
  for (int a = 0; a < l; ++a) {
    for (int c = 0; c < m; ++c) {
      std::vector<std::int64_t> row(static_cast<std::size_t>(nv), 0);
      if (a + 1 < l && var[a + 1][c] >= 0) row[var[a + 1][c]] += 1;
      if (c >= 1 && var[a][c - 1] >= 0) row[var[a][c - 1]] -= 1;
      for (auto& x : row) x = (x % p + p) % p;
      rows.push_back(row);
    }
  }
  auto inv = [&](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int col = 0; col < nv && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t iv = inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = x * iv % p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::int64_t f = rows[r][col];
      for (int c2 = 0; c2 < nv; ++c2) rows[r][c2] = ((rows[r][c2] - f * rows[rank][c2]) % p + p) % p;
    }
    ++rank;
  }
  return nv - rank;
}

// dim Hom between arbitrary matrices via the indecomposable oracle.
inline long long hom_oracle(const ThetaMatrix& a, const ThetaMatrix& b) {
  long long total = 0;
  for (const auto& s : a.segments()) {
    for (const auto& t : b.segments()) {
      total += static_cast<long long>(s.mult) * t.mult * hom_oracle(s.vertex, s.length, t.vertex, t.length, a.n());
    }
  }
  return total;
}

}  // namespace hallkit::testing
