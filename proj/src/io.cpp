#include "veronese/io.hpp"

#include <algorithm>

namespace veronese {

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Byte offset → line:column.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(std::to_string(line) + ":" + std::to_string(col), msg);
  }
}

Json field_to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return Json{{"Fp", f.characteristic()}};
}

Field field_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return Field::parse(j.get<std::string>());
    if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer()) {
      const auto p = j["Fp"].get<long long>();
      if (p < 2) throw ParseError(where + "/Fp", "modulus must be a prime");
      return Field::prime(static_cast<std::uint64_t>(p));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where, e.what());
  }
  throw ParseError(where, "expected \"Q\" or {\"Fp\": p}");
}

Json scalar_to_json(const Scalar& s) {
  if (s.field().is_rational()) return s.to_string();
  return s.residue();
}

Scalar scalar_from_json(const Json& j, const Field& f, const std::string& where) {
  try {
    if (j.is_number_integer()) {
      if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v > static_cast<std::uint64_t>(INT64_MAX)) throw ParseError(where, "integer out of range");
        return f.from_int(static_cast<long long>(v));
      }
      return f.from_int(j.get<long long>());
    }
    if (j.is_string()) return f.parse_scalar(j.get<std::string>());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where, e.what());
  }
  throw ParseError(where, "expected an integer or a string \"a/b\"");
}

Json index_set_to_json(const IndexSet& s) {
  Json out = Json::array();
  for (int i : s) out.push_back(i);
  return out;
}

IndexSet index_set_from_json(const Json& j, int ground, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of indices");
  std::vector<int> members;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw ParseError(where + "/" + std::to_string(i), "expected an integer");
    members.push_back(j[i].get<int>());
  }
  std::sort(members.begin(), members.end());
  try {
    return IndexSet(ground, std::move(members));
  } catch (const Error& e) {
    throw ParseError(where, e.what());
  }
}

Json config_to_json(const PointConfiguration& p) {
  Json cols = Json::array();
  for (int i = 0; i < p.n(); ++i) {
    Json col = Json::array();
    for (const auto& s : p.point(static_cast<std::size_t>(i))) col.push_back(scalar_to_json(s));
    cols.push_back(std::move(col));
  }
  return Json{{"schema", kSchemaVersion},
              {"field", field_to_json(p.field())},
              {"d", p.d()},
              {"n", p.n()},
              {"columns", std::move(cols)}};
}

namespace {

int int_member(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("/") + key, "missing");
  if (!j[key].is_number_integer()) throw ParseError(std::string("/") + key, "expected an integer");
  return j[key].get<int>();
}

}  // namespace

PointConfiguration config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("/", "configuration must be a JSON object");
  if (j.contains("schema") && j["schema"] != kSchemaVersion) throw ParseError("/schema", "unsupported schema");
  const Field f = j.contains("field") ? field_from_json(j["field"]) : Field::default_prime();
  const int d = int_member(j, "d");
  const int n = int_member(j, "n");
  if (d < 1) throw ParseError("/d", "d must be positive");
  if (n < 1) throw ParseError("/n", "n must be positive");
  if (!j.contains("columns") || !j["columns"].is_array()) throw ParseError("/columns", "expected an array of columns");
  const Json& cols = j["columns"];
  if (static_cast<int>(cols.size()) != n) {
    throw ParseError("/columns", "expected " + std::to_string(n) + " columns, found " + std::to_string(cols.size()));
  }
  MatrixK m(f, static_cast<std::size_t>(d + 1), static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const std::string where = "/columns/" + std::to_string(c);
    if (!cols[c].is_array() || static_cast<int>(cols[c].size()) != d + 1) {
      throw ParseError(where, "expected " + std::to_string(d + 1) + " coordinates");
    }
    for (std::size_t r = 0; r < cols[c].size(); ++r) {
      m(r, c) = scalar_from_json(cols[c][r], f, where + "/" + std::to_string(r));
    }
    if (m.column_is_zero(c)) throw ParseError(where, "zero vector is not a point");
  }
  return PointConfiguration(std::move(m));
}

Json bracket_to_json(const BracketPolynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json factors = Json::array();
    for (const auto& f : t.factors) factors.push_back(index_set_to_json(f));
    terms.push_back(Json{{"coeff", t.coefficient}, {"factors", std::move(factors)}});
  }
  return Json{{"ground", p.ground()}, {"width", p.width()}, {"terms", std::move(terms)}};
}

BracketPolynomial bracket_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("/", "bracket polynomial must be an object");
  const int ground = int_member(j, "ground");
  const int width = int_member(j, "width");
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("/terms", "expected an array");
  std::vector<BracketTerm> terms;
  for (std::size_t i = 0; i < j["terms"].size(); ++i) {
    const Json& t = j["terms"][i];
    const std::string where = "/terms/" + std::to_string(i);
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_number_integer() || !t.contains("factors") ||
        !t["factors"].is_array()) {
      throw ParseError(where, "expected {\"coeff\": int, \"factors\": [...]}");
    }
    BracketTerm term;
    term.coefficient = t["coeff"].get<long long>();
    for (std::size_t k = 0; k < t["factors"].size(); ++k) {
      IndexSet s = index_set_from_json(t["factors"][k], ground, where + "/factors/" + std::to_string(k));
      if (static_cast<int>(s.size()) != width) throw ParseError(where, "factor has the wrong width");
      term.factors.push_back(std::move(s));
    }
    terms.push_back(std::move(term));
  }
  return BracketPolynomial(ground, width, std::move(terms));
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back(index_set_to_json(e));
  return Json{{"n", h.n()}, {"k", h.k()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const Json& j, int n, int k) {
  const Json* edges = &j;
  std::string base;
  if (j.is_object()) {
    if (j.contains("n")) n = int_member(j, "n");
    if (j.contains("k")) k = int_member(j, "k");
    if (!j.contains("edges")) throw ParseError("/edges", "missing");
    edges = &j["edges"];
    base = "/edges";
  }
  if (!edges->is_array()) throw ParseError(base.empty() ? "/" : base, "expected an array of edges");
  std::vector<std::vector<int>> lists;
  for (std::size_t i = 0; i < edges->size(); ++i) {
    const Json& e = (*edges)[i];
    const std::string where = base + "/" + std::to_string(i);
    if (!e.is_array()) throw ParseError(where, "edge must be an array");
    std::vector<int> vs;
    for (const auto& v : e) {
      if (!v.is_number_integer()) throw ParseError(where, "vertices must be integers");
      vs.push_back(v.get<int>());
      n = std::max(n, vs.back());
    }
    if (k == 0) k = static_cast<int>(vs.size());
    lists.push_back(std::move(vs));
  }
  if (k == 0) throw ParseError(base.empty() ? "/" : base, "cannot infer k from an empty edge list");
  try {
    return Hypergraph::from_lists(n, k, lists);
  } catch (const Error& e) {
    throw ParseError(base.empty() ? "/" : base, e.what());
  }
}

namespace {

Classification classify_conic(const PointConfiguration& p, const ConicEquationReport& r) {
  if (is_degenerate(p)) return Classification::InY;
  return r.all_vanish ? Classification::InW_NotY : Classification::NotInW;
}

}  // namespace

Json report_to_json(const PointConfiguration& p, const ConicEquationReport& r) {
  Json out{{"schema", kSchemaVersion},
           {"d", p.d()},
           {"n", p.n()},
           {"field", field_to_json(p.field())},
           {"degenerate", is_degenerate(p)},
           {"all_vanish", r.all_vanish},
           {"classification", to_string(classify_conic(p, r))},
           {"in_V", r.all_vanish ? "true" : "false"},
           {"evaluated", r.evaluated}};
  if (r.nonvanishing_sets.empty()) {
    out["witness"] = nullptr;
  } else {
    out["witness"] = Json{{"I", index_set_to_json(r.nonvanishing_sets.front())}};
    out["witness_value"] = scalar_to_json(phi_pullback_eval(p, r.nonvanishing_sets.front()));
  }
  return out;
}

Json report_to_json(const HigherEquationReport& r) {
  Json out{{"schema", kSchemaVersion},
           {"d", r.d},
           {"n", r.n},
           {"degenerate", r.degenerate},
           {"all_vanish", r.all_vanish},
           {"classification", to_string(r.classification)},
           {"in_V", to_string(r.in_v, r.d, r.n)},
           {"evaluated", r.evaluated},
           {"trivial", r.trivial}};
  if (r.witness) {
    out["witness"] = Json{{"I", index_set_to_json(r.witness->first)}, {"J", index_set_to_json(r.witness->second)}};
    out["witness_value"] = scalar_to_json(*r.witness_value);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace veronese
