// veronese: generators, membership tests, Gale transforms and transversality
// checks for point configurations on rational normal curves.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "veronese/cli.hpp"

namespace {

using namespace veronese;

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const CommandResult& r) {
  for (const auto& line : r.log) std::cerr << line << '\n';
  if (r.text && r.status == CommandStatus::Ok) {
    std::cout << *r.text;
  } else {
    std::cout << r.payload.dump(2) << '\n';
  }
  return r.exit_code();
}

std::optional<Field> optional_field(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Field::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equations and membership tests for Veronese compactifications"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.fallthrough();

  std::string field_text;
  app.add_option("--field", field_text, "Q or Fp:p (default Fp:65521; eval/gale default to the file's field)");

  int d = 2, n = 6;
  std::uint64_t seed = 0;
  std::string format = "text", config_path, suite = "All";

  auto* eqs = app.add_subcommand("eqs", "print the generators of W_{d,n}");
  eqs->add_option("--d", d, "ambient dimension")->required();
  eqs->add_option("--n", n, "number of points")->required();
  eqs->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* eval = app.add_subcommand("eval", "evaluate every generator on a configuration");
  eval->add_option("config", config_path, "configuration JSON file ('-' for stdin)")->required();

  auto* gale = app.add_subcommand("gale", "Gale transform of a configuration");
  gale->add_option("config", config_path, "configuration JSON file ('-' for stdin)")->required();

  SampleOptions sample_opts;
  std::string topology = "chain";
  auto* sample = app.add_subcommand("sample", "draw a seeded configuration");
  sample->add_option("--kind", sample_opts.kind, "rnc, generic, degenerate, two-lines or chain")
      ->check(CLI::IsMember({"rnc", "generic", "degenerate", "two-lines", "chain"}));
  sample->add_option("--d", sample_opts.d)->required();
  sample->add_option("--n", sample_opts.n)->required();
  sample->add_option("--seed", sample_opts.seed);
  sample->add_option("--height", sample_opts.height, "coordinate bound over Q");
  sample->add_option("--degrees", sample_opts.degrees, "chain component degrees")->delimiter(',');
  sample->add_option("--points", sample_opts.points_per_component, "chain points per component")->delimiter(',');
  sample->add_option("--topology", topology)->check(CLI::IsMember({"chain", "star"}));
  sample->add_option("--on-first", sample_opts.on_first, "two-lines: points on the first line");

  TransversalOptions trans_opts;
  std::string edges_path, edges_inline, min_mode;
  auto* trans = app.add_subcommand("transversal", "transversality verdict, failing partition and bounds");
  auto* edges_file_opt = trans->add_option("--edges", edges_path, "JSON file of edges ('-' for stdin)");
  auto* edges_inline_opt = trans->add_option("--edges-json", edges_inline, "edges inline, e.g. [[1,2,3],[2,3,4]]");
  edges_file_opt->excludes(edges_inline_opt);
  trans->add_option("--n", trans_opts.n, "ground set size (default: largest vertex)");
  trans->add_option("--k", trans_opts.k, "edge size (default: size of the first edge)");
  trans->add_option("--min", min_mode, "also search a smallest transversal hypergraph")
      ->check(CLI::IsMember({"exact", "greedy"}));

  auto* dim = app.add_subcommand("dim", "Jacobian-rank estimate of dim V_{d,n}");
  dim->add_option("--d", d)->required();
  dim->add_option("--n", n)->required();
  dim->add_option("--seed", seed);

  auto* verify = app.add_subcommand("verify", "run an acceptance suite");
  verify->add_option("--suite", suite, "Conic, Gale, Higher, Transversal, Dimension or All");
  verify->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    const std::optional<Field> field = optional_field(field_text);
    if (*eqs) return emit(cmd_eqs(d, n, format == "json" ? EqsFormat::Json : EqsFormat::BracketText));
    if (*eval) return emit(cmd_eval(read_input(config_path), field));
    if (*gale) return emit(cmd_gale(read_input(config_path), field));
    if (*sample) {
      if (field) sample_opts.field = *field;
      sample_opts.topology = topology == "star" ? ChainTopology::Star : ChainTopology::Chain;
      return emit(cmd_sample(sample_opts));
    }
    if (*trans) {
      if (!min_mode.empty()) trans_opts.min_mode = min_mode == "exact" ? SearchMode::Exact : SearchMode::Greedy;
      std::string text;
      if (!edges_path.empty()) {
        text = read_input(edges_path);
      } else if (!edges_inline.empty()) {
        text = edges_inline;
      } else {
        trans_opts.min_only = true;
      }
      return emit(cmd_transversal(text, trans_opts));
    }
    if (*dim) return emit(cmd_dim(d, n, seed, field.value_or(Field::default_prime())));
    if (*verify) return emit(cmd_verify(parse_suite(suite), seed));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
