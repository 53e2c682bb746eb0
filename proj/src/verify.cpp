#include "veronese/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "veronese/bracket.hpp"
#include "veronese/conic.hpp"
#include "veronese/configuration.hpp"
#include "veronese/gale.hpp"
#include "veronese/higher.hpp"
#include "veronese/transversality.hpp"

namespace veronese {

Suite parse_suite(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "conic") return Suite::Conic;
  if (s == "gale") return Suite::Gale;
  if (s == "higher") return Suite::Higher;
  if (s == "transversal") return Suite::Transversal;
  if (s == "dimension") return Suite::Dimension;
  if (s == "all") return Suite::All;
  throw Error("unknown suite '" + name + "' (Conic, Gale, Higher, Transversal, Dimension, All)");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Conic:
      return "Conic";
    case Suite::Gale:
      return "Gale";
    case Suite::Higher:
      return "Higher";
    case Suite::Transversal:
      return "Transversal";
    case Suite::Dimension:
      return "Dimension";
    case Suite::All:
      return "All";
  }
  return "?";
}

std::vector<int> criteria_of(Suite s) {
  switch (s) {
    case Suite::Conic:
      return {1, 2};
    case Suite::Gale:
      return {3, 6};
    case Suite::Higher:
      return {4, 5, 10};
    case Suite::Transversal:
      return {7, 8};
    case Suite::Dimension:
      return {9};
    case Suite::All:
      return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  }
  return {};
}

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  // splitmix64 finalizer over a combined key
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + stream * 0xBF58476D1CE4E5B9ull + index * 0x94D049BB133111EBull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) passed = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [FAIL]");
  }
};

Field field_for(std::size_t i) { return i % 10 == 9 ? Field::rationals() : Field::default_prime(); }

RandomSource source(std::uint64_t seed, std::uint64_t stream, std::size_t i) {
  return RandomSource(SampleRecipe{derive_seed(seed, stream, i), field_for(i), 100});
}

std::string pair_label(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string ratio(std::size_t ok, std::size_t total) { return std::to_string(ok) + "/" + std::to_string(total); }

// ------------------------------------------------------------------ 1

void criterion_phi(std::uint64_t seed, Outcome& out) {
  std::size_t conic_zero = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    auto rng = source(seed, 11, i);
    if (phi_det(sample_random_rnc(2, 6, rng)).is_zero()) ++conic_zero;
  }
  out.require(conic_zero == 100, "phi_det = 0 on conic samples " + ratio(conic_zero, 100));

  std::size_t generic_nonzero = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    RandomSource rng(SampleRecipe{derive_seed(seed, 12, i), Field::default_prime(), 100});
    if (!phi_det(sample_generic(2, 6, rng)).is_zero()) ++generic_nonzero;
  }
  out.require(generic_nonzero >= 99, "phi_det != 0 on generic samples over Fp:65521 " + ratio(generic_nonzero, 100));

  std::size_t agree = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    auto rng = source(seed, 13, i);
    const auto p = i % 4 == 3 ? sample_random_rnc(2, 6, rng) : sample_generic(2, 6, rng);
    if (phi_det(p) == phi_bracket(p)) ++agree;
  }
  out.require(agree == 1000, "phi_det == phi_bracket " + ratio(agree, 1000));
}

// ------------------------------------------------------------------ 2

void criterion_v2n(std::uint64_t seed, Outcome& out) {
  const ConicEvalOptions first{false, true};
  for (int n : {7, 8, 9}) {
    std::size_t conic = 0, lines = 0, generic = 0;
    for (std::size_t i = 0; i < 50; ++i) {
      auto r1 = source(seed, 20 + static_cast<std::uint64_t>(n), i);
      if (w2n_membership(sample_random_rnc(2, n, r1), first).all_vanish) ++conic;
      auto r2 = source(seed, 30 + static_cast<std::uint64_t>(n), i);
      const int on_first = static_cast<int>(r2.integer(1, n - 1));
      if (w2n_membership(sample_two_lines(n, on_first, r2), first).all_vanish) ++lines;
      auto r3 = source(seed, 40 + static_cast<std::uint64_t>(n), i);
      const auto rep = w2n_membership(sample_generic(2, n, r3), first);
      if (!rep.all_vanish && !rep.nonvanishing_sets.empty()) ++generic;
    }
    out.require(conic == 50 && lines == 50 && generic == 50,
                "n=" + std::to_string(n) + ": conic " + ratio(conic, 50) + ", two-line " + ratio(lines, 50) +
                    ", generic witness " + ratio(generic, 50));
  }
}

// ------------------------------------------------------------------ 3

void criterion_gale_duality(std::uint64_t seed, Outcome& out) {
  const std::vector<std::pair<int, int>> pairs{{2, 6}, {3, 7}, {3, 8}, {4, 8}, {2, 8}};
  std::size_t instances = 0, certified = 0, rescaled = 0, standard = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const auto [d, n] = pairs[i % pairs.size()];
    auto rng = source(seed, 50, i);
    MatrixK a = rng.matrix(static_cast<std::size_t>(d + 1), static_cast<std::size_t>(n));
    int tries = 0;
    // Full rank with an invertible leading block, so the standard pair exists.
    while (rank(a.select_columns(IndexSet::interval(n, 1, d + 1))) != static_cast<std::size_t>(d + 1)) {
      if (++tries > kMaxSampleRetries) throw SpanFailureError("no full-rank instance");
      a = rng.matrix(static_cast<std::size_t>(d + 1), static_cast<std::size_t>(n));
    }
    ++instances;
    const MatrixK b = affine_gale(a);
    if (duality_certificate(a, b).holds()) ++certified;
    const MatrixK m = rng.invertible_matrix(b.rows());
    if (duality_certificate(a, m * b).holds()) ++rescaled;
    const auto pair = standard_gale_pair(a);
    const auto cert = duality_certificate(pair.a, pair.b);
    if (cert.holds() && cert.lambda.is_one()) ++standard;
  }
  out.require(certified == instances, "kernel-basis pairs with zero failures " + ratio(certified, instances));
  out.require(rescaled == instances, "rescaled pairs with zero failures " + ratio(rescaled, instances));
  out.require(standard == instances, "standard pairs with lambda = 1 " + ratio(standard, instances));
}

// ------------------------------------------------------------------ 4

void criterion_psi_example(std::uint64_t, Outcome& out) {
  const auto& gens = psi_generators(3);
  const BracketPolynomial expected =
      parse_bracket_text("|4567||2367||1357||1247| - |3567||2467||1457||1237|", 7);
  const IndexSet first_six = IndexSet::interval(7, 1, 6);
  bool found = false;
  for (const auto& g : gens) {
    if (g.subset == first_six) found = g.poly == expected;
  }
  out.require(gens.size() == 7, "psi_generators(3) has " + std::to_string(gens.size()) + " generators");
  out.require(found, "psi_[6] == |4567||2367||1357||1247| - |3567||2467||1457||1237|");
}

// ------------------------------------------------------------------ 5

struct ChainType {
  std::vector<int> degrees;
  ChainTopology topology;
};

std::vector<ChainType> chain_types(int d) {
  if (d == 3) {
    return {{{3}, ChainTopology::Chain},
            {{2, 1}, ChainTopology::Chain},
            {{1, 1, 1}, ChainTopology::Chain},
            {{1, 1, 1}, ChainTopology::Star}};
  }
  std::vector<ChainType> out{{{d}, ChainTopology::Chain},
                             {{d - 1, 1}, ChainTopology::Chain},
                             {std::vector<int>(static_cast<std::size_t>(d), 1), ChainTopology::Chain},
                             {std::vector<int>(static_cast<std::size_t>(d), 1), ChainTopology::Star}};
  if (d >= 4) out.push_back({{2, 2}, ChainTopology::Chain});
  return out;
}

QuasiVeroneseSample sample_chain(int d, int n, const ChainType& type, std::uint64_t seed, const Field& f) {
  RandomSource rng(SampleRecipe{seed, f, 100});
  std::vector<int> counts;
  int used = 0;
  for (int deg : type.degrees) {
    counts.push_back(deg + 1);
    used += deg + 1;
  }
  for (; used < n; ++used) ++counts[static_cast<std::size_t>(rng.integer(0, static_cast<long long>(counts.size()) - 1))];
  return sample_quasi_veronese_chain(d, type.degrees, counts, SampleRecipe{rng.next(), f, 100}, type.topology);
}

void criterion_wdn(std::uint64_t seed, Outcome& out) {
  const std::vector<std::pair<int, int>> pairs{{3, 7}, {3, 8}, {3, 9}, {4, 8}};
  for (const auto& [d, n] : pairs) {
    const auto types = chain_types(d);
    std::vector<std::size_t> type_hits(types.size(), 0);
    std::size_t rnc = 0, chain = 0, degenerate = 0, generic = 0;
    for (std::size_t i = 0; i < 30; ++i) {
      const auto tag = static_cast<std::uint64_t>(d * 100 + n);
      auto r1 = source(seed, 500 + tag, i);
      if (wdn_membership(sample_random_rnc(d, n, r1)).all_vanish) ++rnc;

      const std::size_t t = i % types.size();
      const auto qv = sample_chain(d, n, types[t], derive_seed(seed, 1500 + tag, i), field_for(i));
      if (wdn_membership(qv.config).all_vanish) {
        ++chain;
        ++type_hits[t];
      }

      auto r3 = source(seed, 2500 + tag, i);
      const auto deg = wdn_membership(sample_degenerate(d, n, r3));
      if (deg.all_vanish && deg.classification == Classification::InY) ++degenerate;

      auto r4 = source(seed, 3500 + tag, i);
      const auto gen = wdn_membership(sample_generic(d, n, r4));
      if (!gen.all_vanish && gen.witness && gen.classification == Classification::NotInW) ++generic;
    }
    bool every_type = true;
    for (auto h : type_hits) every_type = every_type && h > 0;
    out.require(rnc == 30 && chain == 30 && degenerate == 30 && generic == 30 && every_type,
                pair_label(d, n) + ": rnc " + ratio(rnc, 30) + ", chain " + ratio(chain, 30) + " (" +
                    std::to_string(types.size()) + " types), degenerate " + ratio(degenerate, 30) +
                    ", generic witness " + ratio(generic, 30));
  }
}

// ------------------------------------------------------------------ 6

void criterion_gale_compat(std::uint64_t seed, Outcome& out) {
  std::size_t strong = 0, phi_vanish = 0, double_gale = 0;
  for (std::size_t i = 0; i < 30; ++i) {
    auto rng = source(seed, 60, i);
    const auto p = sample_random_rnc(3, 7, rng);
    if (!is_strongly_nondegenerate(p)) continue;
    ++strong;
    const auto g = gale_of_config(p);
    if (g.d() == 2 && g.n() == 7 && w2n_membership(g).all_vanish) ++phi_vanish;
    const MatrixK twice = affine_gale(affine_gale(p.coords()));
    if (proportional(maximal_minor_vector(p.coords()), maximal_minor_vector(twice))) ++double_gale;
  }
  out.require(strong == 30, "strongly non-degenerate RNC samples in (P^3)^7 " + ratio(strong, 30));
  out.require(phi_vanish == 30, "every phi_I vanishes on the Gale transform " + ratio(phi_vanish, 30));
  out.require(double_gale == 30, "double Gale minors proportional " + ratio(double_gale, 30));
}

// ------------------------------------------------------------------ 7

Hypergraph random_hypergraph(int n, int k, RandomSource& rng) {
  auto all = combinations(n, k);
  rng.shuffle(all);
  const auto m = static_cast<std::size_t>(rng.integer(1, static_cast<long long>(all.size())));
  all.resize(m);
  return Hypergraph(n, k, std::move(all));
}

BlockPartition random_partition(int n, int k, RandomSource& rng) {
  for (;;) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::vector<bool> hit(static_cast<std::size_t>(k), false);
    for (auto& l : labels) {
      l = static_cast<int>(rng.integer(0, k - 1));
      hit[static_cast<std::size_t>(l)] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) == hit.end()) return BlockPartition::from_labels(labels);
  }
}

std::vector<std::vector<Scalar>> random_basis(int k, RandomSource& rng) {
  const MatrixK m = rng.invertible_matrix(static_cast<std::size_t>(k));
  std::vector<std::vector<Scalar>> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

PointConfiguration random_phi_base(RandomSource& rng) {
  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    auto q = sample_generic(2, 6, rng);
    if (!phi_det(q).is_zero()) return q;
  }
  throw SpanFailureError("no six points off a conic");
}

bool some_minor_nonzero(const PointConfiguration& p, const Hypergraph& t) {
  const MinorTable minors(p.coords());
  for (const auto& e : t.edges())
    if (!minors.get(e).is_zero()) return true;
  return false;
}

void criterion_transversality(std::uint64_t seed, Outcome& out) {
  const std::vector<std::pair<int, int>> cases{{6, 3}, {7, 4}, {7, 6}, {8, 6}};
  const ConicEvalOptions first{false, true};
  for (const auto& [n, k] : cases) {
    const bool conic_side = k == 6;
    std::size_t transversal = 0, separated = 0, non_transversal = 0, probes = 0, contradictions = 0;
    for (std::size_t i = 0; i < 50; ++i) {
      auto rng = source(seed, 700 + static_cast<std::uint64_t>(n * 10 + k), i);
      const Hypergraph t = random_hypergraph(n, k, rng);
      const auto failing = failing_partition(t);
      if (failing) {
        ++non_transversal;
        bool ok = false;
        if (conic_side) {
          const auto w = v2n_witness(*failing, random_phi_base(rng));
          ok = v2n_subset_membership(w, t).all_vanish && !w2n_membership(w, first).all_vanish;
        } else {
          const auto w = ydn_witness(*failing, random_basis(k, rng));
          ok = !is_degenerate(w) && !some_minor_nonzero(w, t);
        }
        if (ok) ++separated;
        continue;
      }
      ++transversal;
      for (std::size_t probe = 0; probe < 200; ++probe) {
        ++probes;
        bool hit = false;
        if (conic_side) {
          const auto w = probe % 2 ? v2n_witness(random_partition(n, 6, rng), random_phi_base(rng))
                                   : sample_generic(2, n, rng);
          hit = !v2n_subset_membership(w, t, first).all_vanish;
        } else {
          const auto w = probe % 2 ? ydn_witness(random_partition(n, k, rng), random_basis(k, rng))
                                   : sample_generic(k - 1, n, rng);
          hit = some_minor_nonzero(w, t);
        }
        if (!hit) ++contradictions;
      }
    }
    out.require(separated == non_transversal && contradictions == 0 && transversal + non_transversal == 50,
                pair_label(n, k) + (conic_side ? " V-side" : " Y-side") + ": non-transversal " +
                    std::to_string(non_transversal) + " separated " + std::to_string(separated) + ", transversal " +
                    std::to_string(transversal) + " with " + std::to_string(contradictions) + "/" +
                    std::to_string(probes) + " probes contradicting");
  }
}

// ------------------------------------------------------------------ 8

void criterion_pentagon(std::uint64_t, Outcome& out) {
  const auto edges = combinations(5, 3);
  std::size_t candidates = 0, transversal = 0;
  for (int size = 1; size <= 4; ++size) {
    for (const auto& pick : combinations(static_cast<int>(edges.size()), size)) {
      std::vector<IndexSet> chosen;
      for (int idx : pick) chosen.push_back(edges[static_cast<std::size_t>(idx - 1)]);
      ++candidates;
      if (is_transversal(Hypergraph(5, 3, std::move(chosen)))) ++transversal;
    }
  }
  out.require(candidates == 385 && transversal == 0,
              "3-uniform hypergraphs on [5] with <= 4 edges: " + std::to_string(candidates) + " checked, " +
                  std::to_string(transversal) + " transversal");
  const auto pentagon = Hypergraph::from_lists(5, 3, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}});
  out.require(is_transversal(pentagon), "pentagon is transversal");
  const auto exact53 = min_transversal(5, 3, SearchMode::Exact);
  out.require(exact53.size == 5, "exact minimum at (5,3) = " + std::to_string(exact53.size));

  const auto exact76 = min_transversal(7, 6, SearchMode::Exact);
  out.require(exact76.size == 6, "exact minimum at (7,6) = " + std::to_string(exact76.size));
  const auto sixes = combinations(7, 6);
  std::size_t fives = 0, five_transversal = 0;
  for (const auto& pick : combinations(7, 5)) {
    std::vector<IndexSet> chosen;
    for (int idx : pick) chosen.push_back(sixes[static_cast<std::size_t>(idx - 1)]);
    ++fives;
    if (is_transversal(Hypergraph(7, 6, std::move(chosen)))) ++five_transversal;
  }
  out.require(fives == 21 && five_transversal == 0,
              "five-edge subsets of C([7],6): " + std::to_string(fives) + " checked, " +
                  std::to_string(five_transversal) + " transversal");
  std::size_t six_transversal = 0;
  for (const auto& pick : combinations(7, 6)) {
    std::vector<IndexSet> chosen;
    for (int idx : pick) chosen.push_back(sixes[static_cast<std::size_t>(idx - 1)]);
    if (is_transversal(Hypergraph(7, 6, std::move(chosen)))) ++six_transversal;
  }
  out.require(six_transversal == 7, "every 6 of the 7 edges is transversal " + ratio(six_transversal, 7));
}

// ------------------------------------------------------------------ 9

void criterion_dimension(std::uint64_t seed, Outcome& out) {
  struct Row {
    int d, n, expected;
  };
  const std::vector<Row> rows{{2, 6, 11}, {2, 7, 12}, {3, 7, 19}, {3, 8, 20}, {4, 8, 24}};
  for (const auto& row : rows) {
    std::size_t hits = 0;
    std::map<int, std::size_t> seen;
    for (std::size_t i = 0; i < 10; ++i) {
      const int r = dimension_estimate(row.d, row.n,
                                       SampleRecipe{derive_seed(seed, 900 + static_cast<std::uint64_t>(row.d * 10 + row.n), i),
                                                    Field::default_prime(), 100});
      ++seen[r];
      if (r == row.expected) ++hits;
    }
    std::string got;
    for (const auto& [value, count] : seen) got += (got.empty() ? "" : ",") + std::to_string(value) + "x" + std::to_string(count);
    out.require(hits >= 9, pair_label(row.d, row.n) + " expect " + std::to_string(row.expected) + ": " +
                               ratio(hits, 10) + " (got " + got + ")");
  }
}

// ------------------------------------------------------------------ 10

void criterion_exceptional(std::uint64_t, Outcome& out) {
  std::vector<std::pair<int, int>> hits;
  for (int d = 3; d <= 8; ++d)
    for (int n = d + 4; n <= d + 8; ++n)
      if (y_in_v_dimension_test(d, n)) hits.emplace_back(d, n);
  const std::vector<std::pair<int, int>> expected{{3, 7}, {3, 8}, {4, 8}};
  std::string got;
  for (const auto& [d, n] : hits) got += (got.empty() ? "" : " ") + pair_label(d, n);
  out.require(hits == expected, "true exactly on {" + got + "}");
}

struct CriterionEntry {
  const char* name;
  std::function<void(std::uint64_t, Outcome&)> run;
};

const std::vector<CriterionEntry>& registry() {
  static const std::vector<CriterionEntry> entries{
      {"phi correctness", criterion_phi},
      {"V_{2,n} = W_{2,n} evidence", criterion_v2n},
      {"Gale minor duality", criterion_gale_duality},
      {"psi_[6] structural identity", criterion_psi_example},
      {"W_{d,n} containments", criterion_wdn},
      {"Gale/equation compatibility", criterion_gale_compat},
      {"transversality witnesses", criterion_transversality},
      {"pentagon minimality", criterion_pentagon},
      {"dimension formula", criterion_dimension},
      {"exceptional-pair arithmetic", criterion_exceptional},
  };
  return entries;
}

}  // namespace

CheckResult run_criterion(int criterion, std::uint64_t seed) {
  if (criterion < 1 || criterion > kCriterionCount) throw Error("criterion must be in 1..10");
  const auto& entry = registry()[static_cast<std::size_t>(criterion - 1)];
  CheckResult result;
  result.criterion = criterion;
  result.name = entry.name;
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    entry.run(seed, out);
    result.passed = out.passed;
    result.detail = out.detail.str();
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = out.detail.str() + (out.detail.tellp() > 0 ? "; " : "") + "exception: " + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

VerifyReport run_suite(Suite suite, std::uint64_t seed) {
  VerifyReport report;
  report.suite = suite;
  report.seed = seed;
  for (int c : criteria_of(suite)) report.checks.push_back(run_criterion(c, seed));
  return report;
}

}  // namespace veronese
