#pragma once

// The d = 2 equations: φ as a 6×6 determinant of Veronese lifts, its bracket
// form, pullbacks φ_I, and membership in W_{2,n} = V_{2,n}.

#include <map>
#include <optional>
#include <vector>

#include "veronese/configuration.hpp"
#include "veronese/hypergraph.hpp"

namespace veronese {

/// phi_det = kPhiBracketSign · (|123||145||246||356| − |124||135||236||456|)
/// for the lift ordering of veronese_lift.
inline constexpr int kPhiBracketSign = -1;

/// [z0² : z1² : z2² : z0z1 : z0z2 : z1z2]. Throws DegeneratePointError on zero.
std::vector<Scalar> veronese_lift(const std::vector<Scalar>& point);

/// The 6×n matrix of lifted columns.
MatrixK veronese_lift_matrix(const PointConfiguration& p);

/// det[v(p_1) ... v(p_6)]; zero iff the six points lie on a conic.
Scalar phi_det(const PointConfiguration& p);

/// Bracket form of φ, sign-normalized to agree with phi_det.
Scalar phi_bracket(const PointConfiguration& p);

/// phi_det of the sub-configuration on I (|I| = 6).
Scalar phi_pullback_eval(const PointConfiguration& p, const IndexSet& subset);

struct ConicEquationReport {
  bool all_vanish = true;
  /// Size-6 subsets with φ_I ≠ 0, lexicographic.
  std::vector<IndexSet> nonvanishing_sets;
  /// Populated only when requested.
  std::optional<std::map<IndexSet, Scalar>> values;
  std::size_t evaluated = 0;
};

struct ConicEvalOptions {
  bool keep_values = false;
  /// Stop after the first nonvanishing generator.
  bool first_witness_only = false;
};

/// Evaluates every φ_I, I ∈ C([n], 6). For n < 6 the report is trivially
/// all_vanish with no generators.
ConicEquationReport w2n_membership(const PointConfiguration& p, const ConicEvalOptions& options = {});

/// Evaluates only φ_H for H ∈ edges (a 6-uniform hypergraph on [n]).
ConicEquationReport v2n_subset_membership(const PointConfiguration& p, const Hypergraph& edges,
                                          const ConicEvalOptions& options = {});

}  // namespace veronese
