#include "veronese/higher.hpp"

#include <map>
#include <mutex>

namespace veronese {

BracketPolynomial phi_as_bracket_poly() {
  auto s = [](std::initializer_list<int> m) { return IndexSet(6, m); };
  return BracketPolynomial(6, 3,
                           {{1, {s({1, 2, 3}), s({1, 4, 5}), s({2, 4, 6}), s({3, 5, 6})}},
                            {-1, {s({1, 2, 4}), s({1, 3, 5}), s({2, 3, 6}), s({4, 5, 6})}}});
}

const std::vector<PsiGenerator>& psi_generators(int d) {
  if (d < 3) throw PreconditionError("psi generators are defined for d >= 3");
  static std::mutex mu;
  static std::map<int, std::vector<PsiGenerator>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  const BracketPolynomial phi = phi_as_bracket_poly();
  std::vector<PsiGenerator> gens;
  for (const auto& subset : combinations(d + 4, 6)) gens.push_back({subset, dualize(relabel(phi, subset))});
  return cache.emplace(d, std::move(gens)).first->second;
}

namespace {

bool y_contained_in_v(int d, int n) { return (d == 3 && (n == 7 || n == 8)) || (d == 4 && n == 8); }

VeroneseVerdict verdict(int d, int n, Classification c) {
  switch (c) {
    case Classification::NotInW:
      return VeroneseVerdict::No;
    case Classification::InW_NotY:
      if (n <= d + 4 || d == 3 || y_contained_in_v(d, n)) return VeroneseVerdict::Yes;
      return VeroneseVerdict::Conjectural;
    case Classification::InY:
      if (n <= d + 3 || y_contained_in_v(d, n)) return VeroneseVerdict::Yes;
      return VeroneseVerdict::Unknown;
  }
  return VeroneseVerdict::Unknown;
}

}  // namespace

HigherEquationReport wdn_membership(const PointConfiguration& p) {
  const int d = p.d();
  const int n = p.n();
  if (d < 3) throw PreconditionError("wdn_membership needs d >= 3 (use w2n_membership for conics)");
  HigherEquationReport report;
  report.d = d;
  report.n = n;
  report.degenerate = is_degenerate(p);
  if (n < d + 4) {
    report.trivial = true;
    report.classification = report.degenerate ? Classification::InY : Classification::InW_NotY;
    report.in_v = VeroneseVerdict::Yes;
    return report;
  }
  const auto& gens = psi_generators(d);
  const MinorTable minors(p.coords());
  for (const auto& along : combinations(n, d + 4)) {
    for (const auto& g : gens) {
      ++report.evaluated;
      Scalar v = eval_bracket_poly(g.poly, minors, &along);
      if (!v.is_zero()) {
        report.all_vanish = false;
        report.witness.emplace(g.subset, along);
        report.witness_value = std::move(v);
        break;
      }
    }
    if (!report.all_vanish) break;
  }
  if (report.degenerate) {
    report.classification = Classification::InY;
  } else {
    report.classification = report.all_vanish ? Classification::InW_NotY : Classification::NotInW;
  }
  report.in_v = verdict(d, n, report.classification);
  return report;
}

Scalar psi_eval(const PointConfiguration& p, const IndexSet& subset, const IndexSet& along) {
  const int d = p.d();
  if (subset.ground() != d + 4 || subset.size() != 6) throw ShapeError("psi_{I,J} needs I in C([d+4], 6)");
  if (along.ground() != p.n() || static_cast<int>(along.size()) != d + 4) throw ShapeError("psi_{I,J} needs J in C([n], d+4)");
  for (const auto& g : psi_generators(d)) {
    if (g.subset == subset) return eval_bracket_poly(g.poly, MinorTable(p.coords()), &along);
  }
  throw ShapeError("no generator for " + subset.to_string());
}

bool y_in_v_dimension_test(int d, int n) {
  if (d < 3 || n < d + 4) throw PreconditionError("y_in_v_dimension_test needs d >= 3 and n >= d+4");
  return n * d - n + d < d * d + 2 * d + n - 3;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::InY:
      return "InY";
    case Classification::InW_NotY:
      return "InW_NotY";
    case Classification::NotInW:
      return "NotInW";
  }
  return "?";
}

std::string to_string(VeroneseVerdict v, int d, int n) {
  switch (v) {
    case VeroneseVerdict::Yes:
      return "true";
    case VeroneseVerdict::No:
      return "false";
    case VeroneseVerdict::Unknown:
      return d == 3 && n >= 9 ? "unknown (n≥9)" : "unknown";
    case VeroneseVerdict::Conjectural:
      return "conjectural";
  }
  return "?";
}

}  // namespace veronese
