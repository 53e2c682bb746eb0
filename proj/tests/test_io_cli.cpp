#include <gtest/gtest.h>

#include "veronese/cli.hpp"
#include "veronese/gale.hpp"

using namespace veronese;

namespace {

const Field kQ = Field::rationals();
const Field kFp = Field::default_prime();

std::string conic_config_text() {
  return R"({"field": "Q", "d": 2, "n": 7, "columns": [
    ["1", "0", "0"], ["1", "1", "1"], ["1", "2", "4"], ["1", "3", "9"],
    ["1", "1/2", "1/4"], ["1", "-1", "1"], ["0", "0", "1"]]})";
}

}  // namespace

TEST(Json, ConfigRoundTrip) {
  for (const auto& f : {kQ, kFp}) {
    RandomSource rng(SampleRecipe{1, f, 50});
    const auto p = sample_generic(3, 7, rng);
    const auto j = config_to_json(p);
    EXPECT_EQ(j["schema"], kSchemaVersion);
    EXPECT_EQ(config_from_json(parse_json_text(j.dump())).coords(), p.coords());
  }
}

TEST(Json, FieldAndScalars) {
  EXPECT_EQ(field_from_json(parse_json_text(R"("Q")")), kQ);
  EXPECT_EQ(field_from_json(parse_json_text(R"({"Fp": 101})")), Field::prime(101));
  EXPECT_THROW(field_from_json(parse_json_text(R"({"Fp": 100})")), Error);
  EXPECT_EQ(scalar_to_json(kQ.parse_scalar("-3/6")), "-1/2");
  EXPECT_EQ(scalar_from_json(parse_json_text(R"("2/4")"), kQ, "/x"), kQ.parse_scalar("1/2"));
  EXPECT_EQ(scalar_from_json(parse_json_text("7"), kQ, "/x"), kQ.from_int(7));
}

TEST(Json, ConfigErrorsCarryLocation) {
  auto where_of = [](const std::string& text) {
    try {
      config_from_json(parse_json_text(text));
    } catch (const ParseError& e) {
      return e.where();
    }
    return std::string("no error");
  };
  EXPECT_EQ(where_of(R"({"field": "Q", "d": 2, "n": 2, "columns": [["1","0","0"], ["1","x","0"]]})"), "/columns/1/1");
  EXPECT_EQ(where_of(R"({"field": "Q", "d": 2, "n": 2, "columns": [["1","0","0"], ["1","0"]]})"), "/columns/1");
  EXPECT_EQ(where_of(R"({"field": "Q", "d": 2, "n": 3, "columns": [["1","0","0"], ["1","0","1"]]})"), "/columns");
  EXPECT_EQ(where_of(R"({"field": "Q", "d": 2, "n": 1})"), "/columns");
  EXPECT_NE(where_of(R"({"field": "Q", "d": 2,)").find(':'), std::string::npos);
}

TEST(Json, BracketAndHypergraphRoundTrip) {
  const auto& g = psi_generators(3).front().poly;
  EXPECT_EQ(bracket_from_json(parse_json_text(bracket_to_json(g).dump())), g);
  const auto h = Hypergraph::from_lists(5, 3, {{1, 2, 3}, {2, 3, 4}});
  EXPECT_EQ(hypergraph_from_json(parse_json_text(hypergraph_to_json(h).dump())), h);
  EXPECT_EQ(hypergraph_from_json(parse_json_text("[[1,2,3],[2,3,4]]"), 5), h);
  EXPECT_THROW(hypergraph_from_json(parse_json_text("[[1,2,3],[2,3]]")), Error);
}

TEST(Eqs, Counts) {
  EXPECT_EQ(cmd_eqs(2, 6, EqsFormat::Json).payload["count"], 1);
  EXPECT_EQ(cmd_eqs(2, 8, EqsFormat::Json).payload["count"], 28);
  EXPECT_EQ(cmd_eqs(3, 7, EqsFormat::Json).payload["count"], 7);
  EXPECT_EQ(cmd_eqs(3, 8, EqsFormat::Json).payload["count"], 56);
  EXPECT_EQ(cmd_eqs(3, 6, EqsFormat::Json).status, CommandStatus::PreconditionFailed);
  EXPECT_EQ(cmd_eqs(3, 6, EqsFormat::Json).exit_code(), 2);
}

TEST(Eqs, TextLinesParse) {
  const auto r = cmd_eqs(3, 7, EqsFormat::BracketText);
  ASSERT_TRUE(r.text.has_value());
  std::istringstream in(*r.text);
  std::string line;
  std::getline(in, line);
  const std::string prefix = "({1,2,3,4,5,6},{1,2,3,4,5,6,7}) ";
  ASSERT_EQ(line.rfind(prefix, 0), 0u) << line;
  EXPECT_EQ(parse_bracket_text(line.substr(prefix.size()), 7),
            parse_bracket_text("|4567||2367||1357||1247| - |3567||2467||1457||1237|", 7));
  int lines = 1;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 7);
}

TEST(Eqs, ConicGeneratorMatchesDeterminant) {
  const auto r = cmd_eqs(2, 6, EqsFormat::Json);
  const auto poly = bracket_from_json(r.payload["generators"][0]["poly"]);
  RandomSource rng(SampleRecipe{2, kFp, 100});
  for (int rep = 0; rep < 20; ++rep) {
    const auto p = sample_generic(2, 6, rng);
    EXPECT_EQ(eval_bracket_poly(poly, p), phi_det(p));
  }
}

TEST(Eval, ConicConfiguration) {
  const auto r = cmd_eval(conic_config_text());
  ASSERT_EQ(r.status, CommandStatus::Ok) << r.payload.dump();
  EXPECT_EQ(r.payload["schema"], kSchemaVersion);
  EXPECT_EQ(r.payload["all_vanish"], true);
  EXPECT_EQ(r.payload["in_V"], "true");
  const auto fp = cmd_eval(conic_config_text(), kFp);
  EXPECT_EQ(fp.payload["all_vanish"], true);
}

TEST(Eval, PlanarNinePointsInP3) {
  SampleOptions o;
  o.kind = "generic";
  o.d = 2;
  o.n = 9;
  o.seed = 4;
  o.field = kQ;
  const auto planar = config_from_json(cmd_sample(o).payload);
  std::vector<std::vector<Scalar>> cols;
  for (int i = 0; i < 9; ++i) {
    auto v = planar.point(static_cast<std::size_t>(i));
    v.push_back(kQ.zero());
    cols.push_back(v);
  }
  const auto r = cmd_eval(config_to_json(make_config(3, 9, cols)).dump());
  ASSERT_EQ(r.status, CommandStatus::Ok) << r.payload.dump();
  EXPECT_EQ(r.payload["classification"], "InY");
  EXPECT_EQ(r.payload["in_V"], "unknown (n≥9)");
}

TEST(Eval, Errors) {
  const auto r = cmd_eval(R"({"field": "Q", "d": 2, "n": 1, "columns": [["0","0","0"]]})");
  EXPECT_EQ(r.status, CommandStatus::PreconditionFailed);
  const auto bad = cmd_eval("{not json");
  EXPECT_EQ(bad.status, CommandStatus::PreconditionFailed);
  EXPECT_TRUE(bad.payload.contains("where"));
}

TEST(Gale, RoundTrip) {
  SampleOptions o;
  o.kind = "rnc";
  o.d = 2;
  o.n = 7;
  o.seed = 3;
  const auto input = cmd_sample(o).payload;
  const auto once = cmd_gale(input.dump());
  ASSERT_EQ(once.status, CommandStatus::Ok) << once.payload.dump();
  EXPECT_EQ(once.payload["d"], 3);
  const auto twice = cmd_gale(once.payload.dump());
  ASSERT_EQ(twice.status, CommandStatus::Ok);
  const auto a = config_from_json(input);
  const auto back = config_from_json(twice.payload);
  EXPECT_TRUE(proportional(maximal_minor_vector(a.coords()), maximal_minor_vector(back.coords())));
  EXPECT_EQ(cmd_gale(conic_config_text().substr(0, 20)).status, CommandStatus::PreconditionFailed);
}

TEST(Sample, DeterministicAndKinds) {
  SampleOptions o;
  o.kind = "chain";
  o.d = 3;
  o.n = 8;
  o.seed = 11;
  o.degrees = {2, 1};
  EXPECT_EQ(cmd_sample(o).payload.dump(), cmd_sample(o).payload.dump());
  EXPECT_EQ(cmd_sample(o).payload["component_of_point"].size(), 8u);
  o.kind = "two-lines";
  EXPECT_EQ(cmd_sample(o).status, CommandStatus::PreconditionFailed);
  o.kind = "bogus";
  EXPECT_EQ(cmd_sample(o).status, CommandStatus::PreconditionFailed);
}

TEST(TransversalCmd, Verdicts) {
  TransversalOptions o;
  const auto yes = cmd_transversal("[[1,2,3],[2,3,4],[3,4,5],[4,5,1],[5,1,2]]", o);
  ASSERT_EQ(yes.status, CommandStatus::Ok) << yes.payload.dump();
  EXPECT_EQ(yes.payload["transversal"], true);
  EXPECT_TRUE(yes.payload["failing_partition"].is_null());
  const auto no = cmd_transversal("[[1,2,3],[2,3,4]]", o);
  EXPECT_EQ(no.payload["transversal"], false);
  EXPECT_EQ(no.payload["failing_partition"].size(), 3u);
}

TEST(TransversalCmd, MinAndBudget) {
  TransversalOptions o;
  o.n = 7;
  o.k = 6;
  o.min_only = true;
  o.min_mode = SearchMode::Exact;
  const auto r = cmd_transversal("", o);
  EXPECT_EQ(r.payload["min"]["size"], 6);
  EXPECT_EQ(r.payload["bounds"]["sterboul"], 5);
  o.n = 8;
  o.k = 4;
  const auto budget = cmd_transversal("", o);
  EXPECT_EQ(budget.status, CommandStatus::BudgetExceeded);
  EXPECT_EQ(budget.exit_code(), 3);
}

TEST(Dim, Payload) {
  const auto r = cmd_dim(2, 6, 1, kFp);
  EXPECT_EQ(r.payload["rank"], 11);
  EXPECT_EQ(r.payload["expected"], 11);
  EXPECT_EQ(cmd_dim(3, 5, 1, kFp).status, CommandStatus::PreconditionFailed);
}

TEST(Verify, ByteStableAndExitCodes) {
  const auto a = cmd_verify(Suite::Conic, 5);
  const auto b = cmd_verify(Suite::Conic, 5);
  EXPECT_EQ(a.payload.dump(), b.payload.dump());
  EXPECT_EQ(a.exit_code(), 0);
  EXPECT_EQ(a.payload["checks"].size(), 2u);
  EXPECT_EQ(parse_suite("transversal"), Suite::Transversal);
  EXPECT_THROW(parse_suite("nope"), Error);
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 2, 4));
}
