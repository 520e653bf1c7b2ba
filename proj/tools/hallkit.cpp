// hallkit: command-line front end.
//
// Exit codes: 0 success, 1 internal invariant violation, 2 usage error.

#include <fstream>
#include <memory>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hallkit/bases.hpp"
#include "hallkit/io.hpp"
#include "hallkit/order.hpp"
#include "hallkit/tight.hpp"
#include "hallkit/words.hpp"

using namespace hallkit;
using io::Json;

namespace {

struct Options {
  int n = 0;
  std::string dim;
  std::string matrix;
  std::string word;
  std::string target;
  std::string left;
  std::string right;
  std::string filter = "all";
  std::string format = "json";
  std::string algebra = "hall";
  std::string cartan = "kronecker";
  std::string strategy = "top";
  std::string below;
  std::string seed_section;
  bool check_agreement = false;
  bool assert_distinguished = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void need(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

DimVector parse_dim(const Options& o) {
  need(!o.dim.empty(), "--dim is required");
  DimVector d = DimVector::parse(o.dim);
  need(d.n() == o.n, "--dim must have --n entries");
  for (int x : d.entries) need(x >= 0, "--dim entries must be nonnegative");
  return d;
}

ThetaMatrix parse_matrix(const Options& o, const std::string& text, const std::string& flag) {
  need(!text.empty(), flag + " is required");
  return ThetaMatrix::parse(o.n, text);
}

WordStrategy parse_strategy(const Options& o) {
  if (o.strategy == "top") return WordStrategy::top_peel;
  if (o.strategy == "socle") return WordStrategy::socle_peel;
  throw UsageError("--strategy must be top or socle");
}

std::unique_ptr<DistinguishedSection> make_section(const Options& o) {
  auto section = std::make_unique<DistinguishedSection>(o.n, parse_strategy(o));
  if (!o.seed_section.empty()) {
    std::ifstream in(o.seed_section);
    need(static_cast<bool>(in), "cannot read " + o.seed_section);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("bad section file: ") + e.what());
    }
    io::load_section(j, *section);
  }
  return section;
}

int run_enumerate(const Options& o) {
  const DimVector d = parse_dim(o);
  ThetaFilter filter = ThetaFilter::all;
  if (o.filter == "aperiodic") {
    filter = ThetaFilter::aperiodic;
  } else if (o.filter == "periodic") {
    filter = ThetaFilter::periodic;
  } else {
    need(o.filter == "all", "--filter must be all, aperiodic or periodic");
  }
  const auto mats = enumerate_theta(o.n, d, filter);
  if (o.format == "text") {
    for (const auto& a : mats) std::cout << a.to_string() << '\n';
    return 0;
  }
  need(o.format == "json", "--format must be json or text for enumerate");
  Json out = Json::array();
  for (const auto& a : mats) out.push_back(io::to_json(a));
  print(out);
  return 0;
}

int run_hasse(const Options& o) {
  const DimVector d = parse_dim(o);
  auto st = stratum(o.n, d);
  std::vector<std::size_t> members;
  if (o.below.empty()) {
    for (std::size_t k = 0; k < st->size(); ++k) members.push_back(k);
  } else {
    const ThetaMatrix top = ThetaMatrix::parse(o.n, o.below);
    const int k = st->index_of(top);
    need(k >= 0, "--below matrix is not in the stratum");
    members.push_back(static_cast<std::size_t>(k));
    for (auto b : st->strictly_below(static_cast<std::size_t>(k))) members.push_back(b);
    std::sort(members.begin(), members.end());
  }
  if (o.format == "dot") {
    std::cout << io::poset_dot(*st, members);
  } else if (o.format == "text") {
    const auto j = io::poset_json(*st, members);
    for (const auto& e : j.at("cover_edges")) {
      std::cout << st->element(members[e[0].get<std::size_t>()]).to_string() << " > "
                << st->element(members[e[1].get<std::size_t>()]).to_string() << '\n';
    }
  } else {
    need(o.format == "json", "--format must be json, dot or text");
    print(io::poset_json(*st, members));
  }
  return 0;
}

int run_monomial(const Options& o) {
  Word w;
  if (!o.word.empty()) {
    w = Word::parse(o.n, o.word);
  } else {
    const ThetaMatrix a = parse_matrix(o, o.matrix, "--word or --matrix");
    w = make_section(o)->word(a);
  }
  const HallElement m = monomial_expand(w);
  print(Json{{"word", w.to_string()}, {"leading", io::to_json(max_support(m))}, {"expansion_u", io::to_json(m)}});
  return 0;
}

int run_pbw(const Options& o) {
  const ThetaMatrix a = parse_matrix(o, o.matrix, "--matrix");
  need(a.aperiodic(), "pbw needs an aperiodic matrix");
  const auto section_ptr = make_section(o);
  const auto& section = *section_ptr;
  const auto e = pbw(a, section);
  Json out = io::basis_json(a, e.element, to_monomial_basis(e.element, section));
  Json eta = Json::array();
  for (const auto& [c, coeff] : e.eta) eta.push_back(Json{{"C", io::to_json(c)}, {"coeff", io::to_json(coeff)}});
  out["eta"] = eta;
  print(out);
  return 0;
}

int run_canonical(const Options& o) {
  const ThetaMatrix a = parse_matrix(o, o.matrix, "--matrix");
  need(o.algebra == "hall" || o.algebra == "uplus", "--algebra must be hall or uplus");
  const auto section_ptr = make_section(o);
  const auto& section = *section_ptr;
  std::optional<CanonicalElement> hall_c;
  std::optional<CanonicalElement> uplus_c;
  if (o.algebra == "hall" || o.check_agreement) hall_c = canonical_hall(a, section);
  if (o.algebra == "uplus" || o.check_agreement) {
    need(a.aperiodic(), "the U+ canonical basis is indexed by aperiodic matrices");
    uplus_c = canonical_uplus(a, section);
  }
  const CanonicalElement& chosen = o.algebra == "hall" ? *hall_c : *uplus_c;
  Json out = io::basis_json(a, chosen.element, to_monomial_basis(chosen.element, section));
  if (o.check_agreement) {
    const bool agree = hall_c->element == uplus_c->element;
    out["agreement"] = agree;
    print(out);
    if (!agree) {
      std::cerr << "error: Hall-algebra and U+ canonical elements differ\n";
      std::cerr << "  hall:  " << hall_c->element.to_string() << '\n';
      std::cerr << "  uplus: " << uplus_c->element.to_string() << '\n';
      return 1;
    }
    return 0;
  }
  print(out);
  return 0;
}

int run_hallpoly(const Options& o) {
  need(!o.word.empty(), "--word is required");
  const Word w = Word::parse(o.n, o.word);
  const ThetaMatrix b = parse_matrix(o, o.target, "--target");
  need(w.dim_vector() == b.dim_vector(), "--word and --target have different dimension vectors");
  print(Json{{"word", w.to_string()},
             {"leading", io::to_json(leading_matrix(w))},
             {"target", io::to_json(b)},
             {"gamma", io::to_json(hall_polynomial(w, b))}});
  return 0;
}

int run_distinguished(const Options& o) {
  const ThetaMatrix a = parse_matrix(o, o.matrix, "--matrix");
  if (!o.word.empty()) {
    const Word w = Word::parse(o.n, o.word);
    const bool ok = is_distinguished_for(w, a);
    print(Json{{"matrix", io::to_json(a)}, {"word", w.to_string()}, {"distinguished", ok}});
    if (!ok && o.assert_distinguished) {
      std::cerr << "error: word " << w.to_string() << " is not distinguished for " << a.to_string() << '\n';
      return 1;
    }
    return 0;
  }
  const Word w = make_section(o)->word(a);
  print(Json{{"matrix", io::to_json(a)}, {"word", w.to_string()}, {"distinguished", true}});
  return 0;
}

int run_gext(const Options& o) {
  const ThetaMatrix a = parse_matrix(o, o.left, "--left");
  const ThetaMatrix b = parse_matrix(o, o.right, "--right");
  print(io::to_json(generic_extension(a, b)));
  return 0;
}

int run_tight(const Options& o) {
  need(!o.word.empty(), "--word is required");
  need(o.cartan == "kronecker", "only --cartan kronecker is built in");
  std::vector<int> verts;
  std::vector<long long> exps;
  std::stringstream ss(o.word);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    need(colon != std::string::npos, "tight word entries look like vertex:exponent");
    int v = 0;
    long long e = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item.substr(0, colon), &used);
      need(used == colon, "bad vertex in " + item);
      const std::string rest = item.substr(colon + 1);
      e = std::stoll(rest, &used);
      need(used == rest.size(), "bad exponent in " + item);
    } catch (const std::logic_error&) {
      throw UsageError("bad tight word entry '" + item + "'");
    }
    need(v == 1 || v == 2, "Kronecker vertices are 1 and 2");
    need(e > 0, "exponents must be positive");
    verts.push_back(v);
    exps.push_back(e);
  }
  need(!verts.empty(), "--word is empty");
  const auto verdict = is_tight(verts, exps, CartanDatum::kronecker());
  Json out{{"tight", verdict.tight}};
  if (verdict.witness) {
    out["witness"] = *verdict.witness;
    out["q"] = verdict.q;
  }
  print(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial, PBW and canonical bases of Hall algebras of cyclic quivers"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "number of vertices")->required()->check(CLI::Range(2, 9)); };
  auto add_dim = [&](CLI::App* sub) { sub->add_option("--dim", o.dim, "dimension vector, e.g. 1,2,3")->required(); };
  auto add_section = [&](CLI::App* sub) {
    sub->add_option("--seed-section", o.seed_section, "JSON file of pinned distinguished words");
    sub->add_option("--strategy", o.strategy, "word search strategy: top or socle");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list the matrices of one dimension vector");
  add_n(enumerate);
  add_dim(enumerate);
  enumerate->add_option("--filter", o.filter, "all, aperiodic or periodic");
  enumerate->add_option("--format", o.format, "json or text");

  auto* hasse = app.add_subcommand("hasse", "covering relation of the order");
  add_n(hasse);
  add_dim(hasse);
  hasse->add_option("--below", o.below, "restrict to the matrices below this one");
  hasse->add_option("--format", o.format, "json, dot or text");

  auto* monomial = app.add_subcommand("monomial", "expand a monomial in the u~ basis");
  add_n(monomial);
  monomial->add_option("--word", o.word, "word such as 123^32");
  monomial->add_option("--matrix", o.matrix, "use the section's word for this matrix");
  add_section(monomial);

  auto* pbw_cmd = app.add_subcommand("pbw", "PBW basis element E_A");
  add_n(pbw_cmd);
  pbw_cmd->add_option("--matrix", o.matrix, "matrix, e.g. 1.3.1,2.1.1,3.1.2")->required();
  add_section(pbw_cmd);

  auto* canonical = app.add_subcommand("canonical", "canonical basis element");
  add_n(canonical);
  canonical->add_option("--matrix", o.matrix, "matrix")->required();
  canonical->add_option("--algebra", o.algebra, "hall or uplus");
  canonical->add_flag("--check-agreement", o.check_agreement, "run both algorithms and compare");
  add_section(canonical);

  auto* hallpoly = app.add_subcommand("hallpoly", "Hall polynomial of a word at a target matrix");
  add_n(hallpoly);
  hallpoly->add_option("--word", o.word, "word")->required();
  hallpoly->add_option("--target", o.target, "target matrix")->required();

  auto* distinguished = app.add_subcommand("distinguished", "distinguished word of a matrix");
  add_n(distinguished);
  distinguished->add_option("--matrix", o.matrix, "matrix")->required();
  distinguished->add_option("--word", o.word, "check this word instead of searching");
  distinguished->add_flag("--assert-distinguished", o.assert_distinguished, "exit 1 if --word is not distinguished");
  add_section(distinguished);

  auto* gext = app.add_subcommand("gext", "generic extension M(left) * M(right)");
  add_n(gext);
  gext->add_option("--left", o.left, "matrix")->required();
  gext->add_option("--right", o.right, "matrix")->required();

  auto* tight = app.add_subcommand("tight", "tightness of a monomial via the quadratic form");
  tight->add_option("--word", o.word, "vertex:exponent list, e.g. 1:1,2:2,1:1")->required();
  tight->add_option("--cartan", o.cartan, "Cartan datum (kronecker)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*enumerate) return run_enumerate(o);
    if (*hasse) return run_hasse(o);
    if (*monomial) return run_monomial(o);
    if (*pbw_cmd) return run_pbw(o);
    if (*canonical) return run_canonical(o);
    if (*hallpoly) return run_hallpoly(o);
    if (*distinguished) return run_distinguished(o);
    if (*gext) return run_gext(o);
    if (*tight) return run_tight(o);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
