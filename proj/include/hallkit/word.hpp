#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hallkit/repcat.hpp"

namespace hallkit {

/// A vertex letter i^e, or a sincere dimension vector (always exponent 1).
struct Letter {
  int vertex = 0;  // 1..n for a vertex letter, 0 for a sincere letter
  DimVector sincere;
  int exponent = 1;

  static Letter vertex_power(int vertex, int exponent) { return {vertex, {}, exponent}; }
  static Letter sincere_letter(DimVector d) { return {0, std::move(d), 1}; }

  bool is_vertex() const { return vertex > 0; }
  /// Dimension vector of the semisimple module this letter stands for.
  DimVector alpha(int n) const;

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word over vertices and sincere vectors, kept in tight form: adjacent
/// vertex letters are distinct and every exponent is positive.
class Word {
 public:
  Word() = default;
  explicit Word(int n) : n_(n) {}
  Word(int n, std::vector<Letter> letters);

  /// Syntax: "123^32", "1^{12}2", "(1,1)(1,1)", "2(1,1)". Vertices are single
  /// digits; exponents are one digit or braced. Repeated adjacent vertices
  /// are merged, so "11" parses as "1^2".
  static Word parse(int n, std::string_view text);

  int n() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  DimVector dim_vector() const;
  bool vertices_only() const;

  /// Concatenation, merged back into tight form.
  Word operator+(const Word& rhs) const;
  Word suffix(std::size_t from) const;

  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void tighten();

  int n_ = 0;
  std::vector<Letter> letters_;
};

}  // namespace hallkit
