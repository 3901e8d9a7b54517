#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "colligo/arith/ratfun.hpp"
#include "colligo/building/char_map.hpp"
#include "colligo/colligation/colligation.hpp"
#include "colligo/colligation/invariants.hpp"
#include "colligo/lattice/quasi_lattice.hpp"
#include "colligo/lattice/tree.hpp"

namespace colligo::io {

using Json = nlohmann::ordered_json;

/// Parses text, throwing ParseError with the byte offset on malformed input.
Json parse(std::string_view text);
/// Two-space indented with a trailing newline.
std::string dump(const Json& j);

// Every reader throws ParseError naming the JSON pointer of the offending value.
// `where` is the pointer of `j` itself.

Json to_json(const arith::Rational& x);
arith::Rational rational_from_json(const Json& j, const std::string& where = "");

Json to_json(const arith::QMatrix& m);
arith::QMatrix matrix_from_json(const Json& j, const std::string& where = "");

/// Coefficients low to high.
Json to_json(const arith::Poly& p);
arith::Poly poly_from_json(const Json& j, const std::string& where = "");

/// {"num": [...], "den": [...]}
Json to_json(const arith::RatFun& f);
arith::RatFun ratfun_from_json(const Json& j, const std::string& where = "");

/// {"numerator": [[poly]], "denominator": poly}
Json to_json(const arith::RatFunMat& f);
arith::RatFunMat ratfun_mat_from_json(const Json& j, const std::string& where = "");

/// {"p", "dim", "columns": list of columns, "exponents": [int or "-inf"]}
Json to_json(const lattice::QuasiLattice& m);
lattice::QuasiLattice lattice_from_json(const Json& j, const std::string& where = "");

Json to_json(const lattice::TreeVertex& v);

/// {"alpha", "m", "N", "entries"}
Json to_json(const coll::Colligation& g);
coll::Colligation colligation_from_json(const Json& j, const std::string& where = "");

/// [{"point": rational | "inf" | {"min_poly": [...]}, "mult": int | "inf"}]
Json to_json(const coll::Divisor& d);
coll::Divisor divisor_from_json(const Json& j, const std::string& where = "");

Json to_json(const coll::InvariantSignature& s);
coll::InvariantSignature signature_from_json(const Json& j, const std::string& where = "");

Json to_json(const building::CharMapResult& r);
/// Edge list with statuses and the four counters.
Json to_json(const building::TreeMapReport& r);

}  // namespace colligo::io
