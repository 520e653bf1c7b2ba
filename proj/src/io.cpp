#include "hallkit/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hallkit::io {

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      out.push_back(Json::array({e, c.convert_to<std::int64_t>()}));
    } else {
      out.push_back(Json::array({e, c.str()}));
    }
  }
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) {
      throw std::invalid_argument("polynomial term must be [exponent, coefficient]");
    }
    BigInt c;
    if (term[1].is_number_integer()) {
      c = term[1].get<std::int64_t>();
    } else if (term[1].is_string()) {
      c = BigInt(term[1].get<std::string>());
    } else {
      throw std::invalid_argument("coefficient must be an integer or a decimal string");
    }
    p += LaurentPoly::monomial(term[0].get<int>(), c);
  }
  return p;
}

Json to_json(const ThetaMatrix& a) {
  Json segs = Json::array();
  for (const auto& s : a.segments()) segs.push_back(Json::array({s.vertex, s.length, s.mult}));
  return Json{{"n", a.n()}, {"segments", segs}};
}

ThetaMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("segments")) {
    throw std::invalid_argument("matrix JSON needs \"n\" and \"segments\"");
  }
  std::vector<Segment> segs;
  for (const auto& s : j.at("segments")) {
    if (!s.is_array() || s.size() != 3) throw std::invalid_argument("segment must be [vertex, length, mult]");
    segs.push_back({s[0].get<int>(), s[1].get<int>(), s[2].get<int>()});
  }
  return ThetaMatrix(j.at("n").get<int>(), std::move(segs));
}

Json to_json(const DimVector& d) { return Json(d.entries); }

Json to_json(const HallElement& x) {
  Json terms = Json::array();
  for (const auto& [a, c] : x.terms()) terms.push_back(Json{{"matrix", to_json(a)}, {"coeff", to_json(c)}});
  return Json{{"n", x.n()}, {"terms", terms}};
}

HallElement element_from_json(const Json& j) {
  HallElement x(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) x.add_term(matrix_from_json(t.at("matrix")), laurent_from_json(t.at("coeff")));
  return x;
}

Json basis_json(const ThetaMatrix& a, const HallElement& element, const Coefficients& in_monomials) {
  Json m = Json::array();
  for (const auto& [b, c] : in_monomials) m.push_back(Json{{"B", to_json(b)}, {"coeff", to_json(c)}});
  return Json{{"A", to_json(a)}, {"expansion_u", to_json(element)}, {"expansion_m", m}};
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> edges_within(const Stratum& st, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> pos(st.size(), st.size());
  for (std::size_t k = 0; k < members.size(); ++k) pos[members[k]] = k;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [upper, lower] : st.cover_edges()) {
    if (pos[upper] < st.size() && pos[lower] < st.size()) edges.emplace_back(pos[upper], pos[lower]);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

Json poset_json(const Stratum& st, const std::vector<std::size_t>& members) {
  Json elements = Json::array();
  for (auto k : members) elements.push_back(to_json(st.element(k)));
  Json edges = Json::array();
  for (const auto& [u, l] : edges_within(st, members)) edges.push_back(Json::array({u, l}));
  return Json{{"elements", elements}, {"cover_edges", edges}};
}

std::string poset_dot(const Stratum& st, const std::vector<std::size_t>& members) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=TB;\n";
  for (std::size_t k = 0; k < members.size(); ++k) {
    os << "  n" << k << " [label=\"" << st.element(members[k]).to_string() << "\"];\n";
  }
  for (const auto& [u, l] : edges_within(st, members)) os << "  n" << u << " -> n" << l << ";\n";
  os << "}\n";
  return os.str();
}

void load_section(const Json& j, DistinguishedSection& section) {
  if (!j.is_object() || !j.contains("words")) throw std::invalid_argument("section JSON needs \"words\"");
  if (j.contains("n") && j.at("n").get<int>() != section.n()) {
    throw std::invalid_argument("section file rank does not match --n");
  }
  for (const auto& entry : j.at("words")) {
    const auto& m = entry.at("matrix");
    const ThetaMatrix a = m.is_string() ? ThetaMatrix::parse(section.n(), m.get<std::string>()) : matrix_from_json(m);
    section.pin(a, Word::parse(section.n(), entry.at("word").get<std::string>()));
  }
}

}  // namespace hallkit::io
