#include "veronese/cli.hpp"

#include <sstream>

#include "veronese/gale.hpp"

namespace veronese {

std::string to_string(CommandStatus s) {
  switch (s) {
    case CommandStatus::Ok:
      return "Ok";
    case CommandStatus::PreconditionFailed:
      return "PreconditionFailed";
    case CommandStatus::BudgetExceeded:
      return "BudgetExceeded";
    case CommandStatus::ChecksFailed:
      return "ChecksFailed";
  }
  return "?";
}

int CommandResult::exit_code() const {
  switch (status) {
    case CommandStatus::Ok:
      return 0;
    case CommandStatus::ChecksFailed:
      return 1;
    case CommandStatus::PreconditionFailed:
      return 2;
    case CommandStatus::BudgetExceeded:
      return 3;
  }
  return 1;
}

namespace {

Json header(const std::string& command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

CommandResult failure(CommandStatus status, const std::string& command, const std::string& message,
                      const std::string& where = "") {
  CommandResult r;
  r.status = status;
  r.payload = header(command);
  r.payload["status"] = to_string(status);
  r.payload["error"] = message;
  if (!where.empty()) r.payload["where"] = where;
  r.log.push_back(command + ": " + message);
  return r;
}

// Runs body, mapping library errors onto statuses.
template <class Body>
CommandResult guarded(const std::string& command, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return failure(CommandStatus::PreconditionFailed, command, e.what(), e.where());
  } catch (const BudgetExceededError& e) {
    return failure(CommandStatus::BudgetExceeded, command, e.what());
  } catch (const Error& e) {
    return failure(CommandStatus::PreconditionFailed, command, e.what());
  }
}

CommandResult ok(Json payload) {
  CommandResult r;
  payload["status"] = to_string(CommandStatus::Ok);
  r.payload = std::move(payload);
  return r;
}

std::string label(const IndexSet& i, const IndexSet* j) {
  return "(" + i.to_string() + (j ? "," + j->to_string() : "") + ")";
}

BracketPolynomial normalized_phi() {
  std::vector<BracketTerm> terms = phi_as_bracket_poly().terms();
  for (auto& t : terms) t.coefficient *= kPhiBracketSign;
  return BracketPolynomial(6, 3, std::move(terms));
}

}  // namespace

CommandResult cmd_eqs(int d, int n, EqsFormat format) {
  return guarded("eqs", [&] {
    if (d < 2) throw PreconditionError("eqs needs d >= 2");
    if (d == 2 && n < 6) throw PreconditionError("eqs needs n >= 6 for d = 2");
    if (d >= 3 && n < d + 4) throw PreconditionError("eqs needs n >= d+4 for d >= 3");

    Json payload = header("eqs");
    payload["d"] = d;
    payload["n"] = n;
    Json gens = Json::array();
    std::ostringstream text;
    auto emit = [&](const IndexSet& i, const IndexSet* j, const BracketPolynomial& poly) {
      if (format == EqsFormat::BracketText) {
        text << label(i, j) << ' ' << poly.to_text() << '\n';
      } else {
        Json g{{"I", index_set_to_json(i)}};
        if (j) g["J"] = index_set_to_json(*j);
        g["poly"] = bracket_to_json(poly);
        gens.push_back(std::move(g));
      }
    };

    std::size_t count = 0;
    if (d == 2) {
      const BracketPolynomial phi = normalized_phi();
      for (const auto& i : combinations(n, 6)) {
        emit(i, nullptr, relabel(phi, i));
        ++count;
      }
    } else {
      const auto& base = psi_generators(d);
      for (const auto& j : combinations(n, d + 4)) {
        for (const auto& g : base) {
          emit(g.subset, &j, relabel(g.poly, j));
          ++count;
        }
      }
    }
    payload["count"] = count;
    CommandResult r;
    if (format == EqsFormat::BracketText) {
      r.text = text.str();
    } else {
      payload["generators"] = std::move(gens);
    }
    payload["status"] = to_string(CommandStatus::Ok);
    r.payload = std::move(payload);
    return r;
  });
}

PointConfiguration change_field(const PointConfiguration& p, const Field& target) {
  if (p.field() == target) return p;
  if (!p.field().is_rational()) throw PreconditionError("cannot lift " + p.field().to_string() + " coordinates to " + target.to_string());
  MatrixK m(target, p.coords().rows(), p.coords().cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = p.coords()(r, c).rational();
      const Scalar den = target.from_mpz(q.get_den());
      if (den.is_zero()) throw PreconditionError("denominator divisible by " + std::to_string(target.characteristic()));
      m(r, c) = target.from_mpz(q.get_num()) / den;
    }
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.column_is_zero(c)) throw PreconditionError("point " + std::to_string(c + 1) + " vanishes mod " + std::to_string(target.characteristic()));
  }
  return PointConfiguration(std::move(m));
}

namespace {

PointConfiguration load_config(const std::string& text, const std::optional<Field>& field) {
  PointConfiguration p = config_from_json(parse_json_text(text));
  return field ? change_field(p, *field) : p;
}

}  // namespace

CommandResult cmd_eval(const std::string& config_json, const std::optional<Field>& field) {
  return guarded("eval", [&] {
    const PointConfiguration p = load_config(config_json, field);
    Json payload;
    if (p.d() < 2) throw PreconditionError("eval needs d >= 2");
    if (p.d() == 2) {
      payload = report_to_json(p, w2n_membership(p, ConicEvalOptions{false, true}));
    } else {
      payload = report_to_json(wdn_membership(p));
      payload["field"] = field_to_json(p.field());
    }
    payload["command"] = "eval";
    return ok(std::move(payload));
  });
}

CommandResult cmd_gale(const std::string& config_json, const std::optional<Field>& field) {
  return guarded("gale", [&] {
    const PointConfiguration p = load_config(config_json, field);
    if (p.n() < p.d() + 3) throw PreconditionError("gale needs n >= d+3");
    Json payload = config_to_json(gale_of_config(p));
    payload["command"] = "gale";
    return ok(std::move(payload));
  });
}

CommandResult cmd_sample(const SampleOptions& o) {
  return guarded("sample", [&] {
    if (o.d < 1 || o.n < 1) throw PreconditionError("sample needs d >= 1 and n >= 1");
    const SampleRecipe recipe{o.seed, o.field, o.height};
    RandomSource rng(recipe);
    std::optional<PointConfiguration> p;
    Json extra = Json::object();
    if (o.kind == "rnc") {
      p = sample_random_rnc(o.d, o.n, rng);
    } else if (o.kind == "generic") {
      p = sample_generic(o.d, o.n, rng);
    } else if (o.kind == "degenerate") {
      p = sample_degenerate(o.d, o.n, rng);
    } else if (o.kind == "two-lines") {
      if (o.d != 2) throw PreconditionError("two-lines samples live in P^2 (d = 2)");
      p = sample_two_lines(o.n, o.on_first >= 0 ? o.on_first : o.n / 2, rng);
    } else if (o.kind == "chain") {
      std::vector<int> degrees = o.degrees.empty() ? std::vector<int>(static_cast<std::size_t>(o.d), 1) : o.degrees;
      std::vector<int> counts = o.points_per_component;
      if (counts.empty()) {
        counts.assign(degrees.size(), o.n / static_cast<int>(degrees.size()));
        for (int i = 0; i < o.n % static_cast<int>(degrees.size()); ++i) ++counts[static_cast<std::size_t>(i)];
      }
      int total = 0;
      for (int c : counts) total += c;
      if (total != o.n) throw PreconditionError("points per component must sum to n");
      auto qv = sample_quasi_veronese_chain(o.d, degrees, counts, recipe, o.topology);
      Json degs = Json::array();
      for (int deg : degrees) degs.push_back(deg);
      extra["degrees"] = std::move(degs);
      extra["topology"] = o.topology == ChainTopology::Star ? "star" : "chain";
      Json owner = Json::array();
      for (int c : qv.component_of_point) owner.push_back(c);
      extra["component_of_point"] = std::move(owner);
      p = std::move(qv.config);
    } else {
      throw PreconditionError("unknown sample kind '" + o.kind + "' (rnc, generic, degenerate, two-lines, chain)");
    }
    Json payload = config_to_json(*p);
    payload["command"] = "sample";
    payload["kind"] = o.kind;
    payload["seed"] = o.seed;
    for (auto& [key, value] : extra.items()) payload[key] = value;
    return ok(std::move(payload));
  });
}

namespace {

Json partition_to_json(const BlockPartition& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks()) out.push_back(index_set_to_json(b));
  return out;
}

Json search_to_json(const TransversalSearchResult& r) {
  return Json{{"mode", r.mode == SearchMode::Exact ? "exact" : "greedy"},
              {"size", r.size},
              {"example", hypergraph_to_json(r.example)["edges"]}};
}

}  // namespace

CommandResult cmd_transversal(const std::string& edges_json, const TransversalOptions& o) {
  return guarded("transversal", [&] {
    Json payload = header("transversal");
    int n = o.n;
    int k = o.k;
    if (!o.min_only) {
      const Hypergraph h = hypergraph_from_json(parse_json_text(edges_json), o.n, o.k);
      n = h.n();
      k = h.k();
      if (k > n) throw PreconditionError("transversality needs k <= n");
      const auto failing = failing_partition(h);
      payload["n"] = n;
      payload["k"] = k;
      payload["edges"] = hypergraph_to_json(h)["edges"];
      payload["transversal"] = !failing.has_value();
      payload["failing_partition"] = failing ? partition_to_json(*failing) : Json(nullptr);
    } else {
      if (n < 1 || k < 1 || k > n) throw PreconditionError("--min without edges needs 1 <= k <= n");
      payload["n"] = n;
      payload["k"] = k;
    }
    const auto b = bounds(n, k);
    payload["bounds"] = Json{{"incidence", b.incidence}, {"sterboul", b.sterboul}};
    if (o.min_mode) payload["min"] = search_to_json(min_transversal(n, k, *o.min_mode));
    return ok(std::move(payload));
  });
}

CommandResult cmd_dim(int d, int n, std::uint64_t seed, const Field& field) {
  return guarded("dim", [&] {
    Json payload = header("dim");
    payload["d"] = d;
    payload["n"] = n;
    payload["seed"] = seed;
    payload["field"] = field_to_json(field);
    payload["rank"] = dimension_estimate(d, n, SampleRecipe{seed, field, 100});
    payload["expected"] = d * d + 2 * d + n - 3;
    return ok(std::move(payload));
  });
}

CommandResult cmd_verify(Suite suite, std::uint64_t seed) {
  const VerifyReport report = run_suite(suite, seed);
  CommandResult r;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"criterion", c.criterion}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << "criterion " << c.criterion << " " << (c.passed ? "PASS" : "FAIL") << " (" << c.seconds
         << " s) " << c.name;
    r.log.push_back(line.str());
  }
  r.status = report.passed() ? CommandStatus::Ok : CommandStatus::ChecksFailed;
  r.payload = header("verify");
  r.payload["suite"] = to_string(report.suite);
  r.payload["seed"] = seed;
  r.payload["passed"] = report.passed();
  r.payload["checks"] = std::move(checks);
  r.payload["status"] = to_string(r.status);
  return r;
}

}  // namespace veronese
