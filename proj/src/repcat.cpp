#include "hallkit/repcat.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hallkit {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

DimVector DimVector::unit(int n, int vertex, int scale) {
  DimVector d = zero(n);
  d[vertex_mod(vertex, n)] = scale;
  return d;
}

long long DimVector::sigma() const {
  long long s = 0;
  for (int x : entries) s += x;
  return s;
}

bool DimVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](int x) { return x == 0; });
}

bool DimVector::is_sincere() const {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](int x) { return x > 0; });
}

bool DimVector::leq(const DimVector& rhs) const {
  if (n() != rhs.n()) throw std::invalid_argument("dimension vectors of different rank");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k] > rhs.entries[k]) return false;
  }
  return true;
}

DimVector& DimVector::operator+=(const DimVector& rhs) {
  if (n() != rhs.n()) throw std::invalid_argument("dimension vectors of different rank");
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] += rhs.entries[k];
  return *this;
}

DimVector& DimVector::operator-=(const DimVector& rhs) {
  if (n() != rhs.n()) throw std::invalid_argument("dimension vectors of different rank");
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] -= rhs.entries[k];
  return *this;
}

std::string DimVector::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(entries[k]);
  }
  return out;
}

DimVector DimVector::parse(std::string_view text) {
  DimVector d;
  for (auto part : split(text, ',')) d.entries.push_back(parse_int(part, "dimension entry"));
  return d;
}

ThetaMatrix::ThetaMatrix(int n, std::vector<Segment> segments) : n_(n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::map<std::pair<int, int>, long long> merged;
  for (const auto& s : segments) {
    if (s.vertex < 1 || s.vertex > n) throw std::invalid_argument("segment vertex out of range");
    if (s.length < 1) throw std::invalid_argument("segment length must be positive");
    if (s.mult < 0) throw std::invalid_argument("segment multiplicity must be nonnegative");
    merged[{s.vertex, s.length}] += s.mult;
  }
  for (const auto& [key, m] : merged) {
    if (m > 0) segments_.push_back({key.first, key.second, static_cast<int>(m)});
  }
}

ThetaMatrix ThetaMatrix::semisimple(const DimVector& d) {
  std::vector<Segment> segs;
  for (int i = 1; i <= d.n(); ++i) {
    if (d[i] < 0) throw std::invalid_argument("negative dimension vector");
    if (d[i] > 0) segs.push_back({i, 1, d[i]});
  }
  return ThetaMatrix(d.n(), std::move(segs));
}

ThetaMatrix ThetaMatrix::parse(int n, std::string_view text) {
  std::vector<Segment> segs;
  if (text.empty() || text == "0") return ThetaMatrix(n, {});
  for (auto part : split(text, ',')) {
    auto fields = split(part, '.');
    if (fields.size() != 3) {
      throw std::invalid_argument("matrix segment must be vertex.length.mult: '" + std::string(part) + "'");
    }
    segs.push_back({parse_int(fields[0], "vertex"), parse_int(fields[1], "length"),
                    parse_int(fields[2], "multiplicity")});
  }
  return ThetaMatrix(n, std::move(segs));
}

int ThetaMatrix::mult(int vertex, int length) const {
  const int v = vertex_mod(vertex, n_);
  for (const auto& s : segments_) {
    if (s.vertex == v && s.length == length) return s.mult;
  }
  return 0;
}

int ThetaMatrix::entry(long long i, long long j) const {
  if (j <= i) return 0;
  return mult(vertex_mod(i, n_), static_cast<int>(j - i));
}

DimVector ThetaMatrix::dim_vector() const {
  DimVector d = DimVector::zero(n_);
  for (const auto& s : segments_) {
    // Full turns around the cycle contribute evenly.
    const int turns = s.length / n_;
    const int rest = s.length % n_;
    for (int k = 1; k <= n_; ++k) d[k] += turns * s.mult;
    for (int k = 0; k < rest; ++k) d[vertex_mod(s.vertex + k, n_)] += s.mult;
  }
  return d;
}

long long ThetaMatrix::dim() const {
  long long total = 0;
  for (const auto& s : segments_) total += static_cast<long long>(s.length) * s.mult;
  return total;
}

int ThetaMatrix::loewy() const {
  int l = 0;
  for (const auto& s : segments_) l = std::max(l, s.length);
  return l;
}

int ThetaMatrix::period() const {
  const int lw = loewy();
  for (int l = lw; l >= 1; --l) {
    int vertices = 0;
    for (const auto& s : segments_) {
      if (s.length == l) ++vertices;
    }
    if (vertices == n_) return l;
  }
  return 0;
}

DimVector ThetaMatrix::top() const {
  DimVector d = DimVector::zero(n_);
  for (const auto& s : segments_) d[s.vertex] += s.mult;
  return d;
}

DimVector ThetaMatrix::socle() const {
  DimVector d = DimVector::zero(n_);
  for (const auto& s : segments_) d[vertex_mod(s.vertex + s.length - 1, n_)] += s.mult;
  return d;
}

ThetaMatrix ThetaMatrix::direct_sum(const ThetaMatrix& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("direct sum of different ranks");
  std::vector<Segment> segs = segments_;
  segs.insert(segs.end(), rhs.segments_.begin(), rhs.segments_.end());
  return ThetaMatrix(n_, std::move(segs));
}

std::string ThetaMatrix::to_string() const {
  if (segments_.empty()) return "0";
  std::string out;
  for (const auto& s : segments_) {
    if (!out.empty()) out += ',';
    out += std::to_string(s.vertex) + '.' + std::to_string(s.length) + '.' + std::to_string(s.mult);
  }
  return out;
}

std::size_t ThetaMatrixHash::operator()(const ThetaMatrix& a) const noexcept {
  std::size_t h = static_cast<std::size_t>(a.n());
  for (const auto& s : a.segments()) {
    for (int x : {s.vertex, s.length, s.mult}) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

DimStats dim_stats(const ThetaMatrix& a) {
  DimStats st;
  st.dim_vector = a.dim_vector();
  st.dim = a.dim();
  st.loewy = a.loewy();
  st.period = a.period();
  st.aperiodic = st.period == 0;
  st.strongly_periodic = a.strongly_periodic();
  return st;
}

int dim_hom_indec(int i, int l, int j, int m, int n) {
  // Each homomorphism is determined by where the top of S_i[l] lands: a
  // nonzero map hits the bottom t layers of S_j[m], t <= min(l, m), and the
  // top of the image must sit at vertex i.
  const int target = vertex_mod(static_cast<long long>(j) + m - i, n);
  int count = 0;
  for (int t = 1; t <= std::min(l, m); ++t) {
    if (vertex_mod(t, n) == target) ++count;
  }
  return count;
}

long long dim_hom(const ThetaMatrix& a, const ThetaMatrix& b) {
  long long total = 0;
  for (const auto& s : a.segments()) {
    for (const auto& t : b.segments()) {
      total += static_cast<long long>(s.mult) * t.mult *
               dim_hom_indec(s.vertex, s.length, t.vertex, t.length, a.n());
    }
  }
  return total;
}

long long delta(const ThetaMatrix& a) { return dim_hom(a, a) - a.dim(); }

long long euler_form(const DimVector& a, const DimVector& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dimension vectors of different rank");
  const int n = a.n();
  long long total = 0;
  for (int i = 1; i <= n; ++i) {
    total += static_cast<long long>(a[i]) * b[i];
    total -= static_cast<long long>(a[i]) * b[vertex_mod(i + 1, n)];
  }
  return total;
}

std::vector<DimVector> socle_layers(const ThetaMatrix& a) {
  const int lw = a.loewy();
  std::vector<DimVector> layers(static_cast<std::size_t>(lw), DimVector::zero(a.n()));
  for (const auto& s : a.segments()) {
    // Socle layer k (k = 1 is the socle) of S_i[l] is the composition factor at i + l - k.
    for (int k = 1; k <= s.length; ++k) {
      layers[static_cast<std::size_t>(lw - k)][vertex_mod(s.vertex + s.length - k, a.n())] += s.mult;
    }
  }
  return layers;
}

HookSums hook_sums(const ThetaMatrix& a, const DimVector& lambda) {
  if (lambda.n() != a.n()) throw std::invalid_argument("lambda has the wrong rank");
  HookSums out;
  out.hook = a.top();
  if (!out.hook.leq(lambda)) {
    throw std::invalid_argument("hook sums " + out.hook.to_string() + " exceed lambda " + lambda.to_string());
  }
  out.diagonal = lambda - out.hook;
  return out;
}

}  // namespace hallkit
