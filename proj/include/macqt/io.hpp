// JSON and text encodings for every value that crosses the CLI or the
// cache boundary. JSON uses ordered keys so identical inputs always
// produce byte-identical output.
#pragma once

#include <json.hpp>

#include "macqt/qtcoeff.hpp"
#include "macqt/shapes.hpp"
#include "macqt/hspace.hpp"
#include "macqt/symfun.hpp"

namespace macqt {

using Json = nlohmann::ordered_json;

/// {"num": [[c,i,j],...], "den": [[c,i,j],...]}, c a decimal string,
/// terms sorted graded-lex descending.
Json to_json(const QtScalar& s);
QtScalar qtscalar_from_json(const Json& j);

Json poly_terms_json(const QtPoly& p);
QtPoly poly_from_json(const Json& j);

Json to_json(const Partition& p); // [3,2,1]
Partition partition_from_json(const Json& j);

/// Shell-friendly partition syntax: "3,2,1"; "0" or "[]" for the empty
/// partition. Throws ParseError.
Partition partition_from_string(const std::string& s);

Json to_json(const SymFun& f); // {"basis":"m","terms":[{"part":..,"coeff":..}]}
SymFun symfun_from_json(const Json& j);

Json to_json(const StandardTableau& t); // [[1,2],[3]]

/// H-basis expansions serialize like symmetric functions with the
/// basis tag "H".
Json to_json(const HExp& f);
HExp hexp_from_json(const Json& j);

} // namespace macqt
