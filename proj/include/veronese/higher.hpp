#pragma once

// Equations for d ≥ 3: ψ_I = dualize(φ relabeled along I) on [d+4], their
// pullbacks ψ_{I,J} along J ∈ C([n], d+4), and membership in W_{d,n}.

#include <optional>
#include <string>
#include <vector>

#include "veronese/bracket.hpp"
#include "veronese/configuration.hpp"

namespace veronese {

/// |123||145||246||356| − |124||135||236||456| on ground 6, width 3, with the
/// sign as classically written. phi_det equals kPhiBracketSign times this.
BracketPolynomial phi_as_bracket_poly();

struct PsiGenerator {
  IndexSet subset;  ///< I ∈ C([d+4], 6)
  BracketPolynomial poly;
};

/// ψ_I for every I ∈ C([d+4], 6), lexicographic; built once per d and cached.
/// Requires d ≥ 3.
const std::vector<PsiGenerator>& psi_generators(int d);

enum class Classification { InY, InW_NotY, NotInW };

/// What the equations prove about membership in V_{d,n}.
enum class VeroneseVerdict {
  Yes,
  No,
  Unknown,     ///< degenerate and Y ⊄ V for this (d, n)
  Conjectural  ///< in W \ Y for d ≥ 4, n ≥ d+5
};

struct HigherEquationReport {
  int d = 0;
  int n = 0;
  bool degenerate = false;
  bool all_vanish = true;
  /// First nonvanishing (I, J) in lexicographic order of (J, I).
  std::optional<std::pair<IndexSet, IndexSet>> witness;
  std::optional<Scalar> witness_value;
  Classification classification = Classification::InW_NotY;
  VeroneseVerdict in_v = VeroneseVerdict::Unknown;
  std::size_t evaluated = 0;
  /// n < d+4: no generators, W = (ℙ^d)^n.
  bool trivial = false;
};

/// Evaluates every ψ_{I,J}; stops at the first nonzero value.
HigherEquationReport wdn_membership(const PointConfiguration& p);

/// ψ_{I,J} on p (I ⊆ [d+4], J ⊆ [n]).
Scalar psi_eval(const PointConfiguration& p, const IndexSet& subset, const IndexSet& along);

/// nd − n + d < d² + 2d + n − 3, the dimension condition for Y_{d,n} ⊆ V_{d,n}.
/// Requires d ≥ 3 and n ≥ d+4.
bool y_in_v_dimension_test(int d, int n);

std::string to_string(Classification c);
std::string to_string(VeroneseVerdict v, int d, int n);

}  // namespace veronese
