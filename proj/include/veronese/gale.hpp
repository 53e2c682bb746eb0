#pragma once

// Affine and projective Gale transforms and the sign-exact minor duality
//   m_I(A) = (−1)^{S_I + (n−d−1)} · λ · m_{I^c}(B)   for all I ∈ C([n], d+1).

#include <utility>
#include <vector>

#include "veronese/configuration.hpp"

namespace veronese {

class NotGalePairError : public Error {
 public:
  using Error::Error;
};

struct GaleDualityCertificate {
  Scalar lambda;
  std::size_t checked_sets = 0;
  /// Index sets where the identity fails, lexicographic.
  std::vector<IndexSet> failures;

  bool holds() const { return failures.empty(); }
};

/// (n−d−1)×n B with A·Bᵗ = 0: the canonical kernel basis of A.
/// Throws RankDeficiencyError unless A has full row rank d+1 < n.
MatrixK affine_gale(const MatrixK& a);

struct StandardGalePair {
  MatrixK a;  ///< [Id | A̲]
  MatrixK b;  ///< [A̲ᵗ | −Id]
};

/// Brings A into the form [Id | A̲] by its leading block and pairs it with
/// [A̲ᵗ | −Id]. The caller permutes columns beforehand; a singular leading
/// block raises RankDeficiencyError naming an independent column set.
StandardGalePair standard_gale_pair(const MatrixK& a);

/// Solves λ from the lexicographically first I with m_I(A) ≠ 0 and checks the
/// identity on every I. Throws NotGalePairError when A·Bᵗ ≠ 0 or shapes
/// disagree, and Error when every m_I(A) vanishes.
GaleDualityCertificate duality_certificate(const MatrixK& a, const MatrixK& b);

/// A representative of the Gale transform of a strongly non-degenerate
/// configuration, as n points of ℙ^{n−d−2}. Throws PreconditionError naming
/// the point whose removal drops the rank.
PointConfiguration gale_of_config(const PointConfiguration& p);

/// All maximal minors in lexicographic order of the column sets.
std::vector<Scalar> maximal_minor_vector(const MatrixK& m);

/// v = c·u for a single nonzero c (u, v nonzero vectors of equal length).
bool proportional(const std::vector<Scalar>& u, const std::vector<Scalar>& v);

}  // namespace veronese
