#include "hallkit/word.hpp"

#include <cctype>
#include <stdexcept>

namespace hallkit {

DimVector Letter::alpha(int n) const {
  if (is_vertex()) return DimVector::unit(n, vertex, exponent);
  if (sincere.n() != n) throw std::invalid_argument("sincere letter has the wrong rank");
  DimVector d = sincere;
  for (auto& x : d.entries) x *= exponent;
  return d;
}

Word::Word(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.exponent < 1) throw std::invalid_argument("letter exponents must be positive");
    if (l.is_vertex()) {
      if (l.vertex > n) throw std::invalid_argument("vertex letter out of range");
    } else {
      if (l.sincere.n() != n || !l.sincere.is_sincere()) {
        throw std::invalid_argument("sincere letter must have n positive entries");
      }
      if (l.exponent != 1) throw std::invalid_argument("sincere letters carry exponent 1");
    }
  }
  tighten();
}

void Word::tighten() {
  std::vector<Letter> out;
  for (auto& l : letters_) {
    if (!out.empty() && l.is_vertex() && out.back().is_vertex() && out.back().vertex == l.vertex) {
      out.back().exponent += l.exponent;
    } else {
      out.push_back(std::move(l));
    }
  }
  letters_ = std::move(out);
}

namespace {

int read_number(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  int value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1000000) throw std::invalid_argument("number too large in word");
    ++pos;
  }
  if (pos == start) throw std::invalid_argument("expected a number in word '" + std::string(text) + "'");
  return value;
}

}  // namespace

Word Word::parse(int n, std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    Letter letter;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      letter.vertex = ch - '0';
      if (letter.vertex < 1 || letter.vertex > n) {
        throw std::invalid_argument("vertex " + std::string(1, ch) + " out of range 1.." + std::to_string(n));
      }
      ++pos;
    } else if (ch == '(') {
      const std::size_t close = text.find(')', pos);
      if (close == std::string_view::npos) throw std::invalid_argument("unclosed sincere letter");
      letter.sincere = DimVector::parse(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, ch) + "' in word");
    }
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos < text.size() && text[pos] == '{') {
        ++pos;
        letter.exponent = read_number(text, pos);
        if (pos >= text.size() || text[pos] != '}') throw std::invalid_argument("unclosed exponent brace");
        ++pos;
      } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        letter.exponent = text[pos] - '0';
        ++pos;
      } else {
        throw std::invalid_argument("missing exponent after '^'");
      }
    }
    letters.push_back(std::move(letter));
  }
  return Word(n, std::move(letters));
}

DimVector Word::dim_vector() const {
  DimVector d = DimVector::zero(n_);
  for (const auto& l : letters_) d += l.alpha(n_);
  return d;
}

bool Word::vertices_only() const {
  for (const auto& l : letters_) {
    if (!l.is_vertex()) return false;
  }
  return true;
}

Word Word::operator+(const Word& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("concatenating words of different rank");
  std::vector<Letter> all = letters_;
  all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(n_, std::move(all));
}

Word Word::suffix(std::size_t from) const {
  Word w(n_);
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(std::min(from, letters_.size())), letters_.end());
  return w;
}

std::string Word::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (l.is_vertex()) {
      out += std::to_string(l.vertex);
      if (l.exponent >= 10) {
        out += "^{" + std::to_string(l.exponent) + "}";
      } else if (l.exponent > 1) {
        out += "^" + std::to_string(l.exponent);
      }
    } else {
      out += "(" + l.sincere.to_string() + ")";
    }
  }
  return out;
}

}  // namespace hallkit
