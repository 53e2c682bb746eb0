#pragma once

// JSON encodings shared by the command line tool and the Python bindings.
//
// Configuration: {"field": "Q" | {"Fp": p}, "d": int, "n": int,
//                 "columns": [[scalar, ...], ...]}
// Scalars over ℚ are strings "a/b" (integers and JSON numbers are accepted on
// input); over 𝔽_p they are integers in [0, p).

#include <string>
#include <string_view>

#include <json.hpp>

#include "veronese/bracket.hpp"
#include "veronese/conic.hpp"
#include "veronese/configuration.hpp"
#include "veronese/higher.hpp"
#include "veronese/hypergraph.hpp"

namespace veronese {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "veronese-kit/1";

/// Malformed input. `where` is a JSON pointer or a "line:column" location.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what) : Error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Parses text, reporting syntax errors with their line and column.
Json parse_json_text(std::string_view text);

Json field_to_json(const Field& f);
Field field_from_json(const Json& j, const std::string& where = "/field");

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const Field& f, const std::string& where);

Json index_set_to_json(const IndexSet& s);
IndexSet index_set_from_json(const Json& j, int ground, const std::string& where);

Json config_to_json(const PointConfiguration& p);
PointConfiguration config_from_json(const Json& j);

/// {"ground", "width", "terms": [{"coeff": int, "factors": [[int...]...]}]}
Json bracket_to_json(const BracketPolynomial& p);
BracketPolynomial bracket_from_json(const Json& j);

/// Edges as an array of 1-based vertex arrays.
Json hypergraph_to_json(const Hypergraph& h);
/// Accepts either a bare edge array (n and k inferred unless given) or
/// {"n", "k", "edges"}.
Hypergraph hypergraph_from_json(const Json& j, int n = 0, int k = 0);

Json report_to_json(const PointConfiguration& p, const ConicEquationReport& r);
Json report_to_json(const HigherEquationReport& r);

}  // namespace veronese
