#pragma once

#include <string>

#include "json.hpp"

#include "hallkit/bases.hpp"
#include "hallkit/hall.hpp"
#include "hallkit/laurent.hpp"
#include "hallkit/order.hpp"
#include "hallkit/repcat.hpp"
#include "hallkit/words.hpp"

namespace hallkit::io {

using Json = nlohmann::ordered_json;

/// [[exponent, coefficient], ...] by increasing exponent. Coefficients that
/// do not fit in 64 bits are written as decimal strings.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {"n": n, "segments": [[vertex, length, mult], ...]}
Json to_json(const ThetaMatrix& a);
ThetaMatrix matrix_from_json(const Json& j);

Json to_json(const DimVector& d);

/// {"n": n, "terms": [{"matrix": ..., "coeff": ...}, ...]} sorted by matrix.
Json to_json(const HallElement& x);
HallElement element_from_json(const Json& j);

/// {"A": matrix, "expansion_u": element, "expansion_m": [{"B": matrix, "coeff": poly}]}
Json basis_json(const ThetaMatrix& a, const HallElement& element, const Coefficients& in_monomials);

/// {"elements": [...], "cover_edges": [[upper, lower], ...]} (indices into elements).
Json poset_json(const Stratum& st, const std::vector<std::size_t>& members);
/// Graphviz digraph; edges point from the covering element to the covered one.
std::string poset_dot(const Stratum& st, const std::vector<std::size_t>& members);

/// {"n": n, "words": [{"matrix": "1.3.1,...", "word": "123^32"}, ...]}; every
/// word is certified as it is pinned.
void load_section(const Json& j, DistinguishedSection& section);

}  // namespace hallkit::io
