#pragma once

// Bracket polynomials: integer combinations of products of maximal minors
// |J| of a coordinate matrix, and their evaluation.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "veronese/configuration.hpp"
#include "veronese/matrix.hpp"

namespace veronese {

struct BracketTerm {
  long long coefficient = 0;
  std::vector<IndexSet> factors;

  friend auto operator<=>(const BracketTerm& a, const BracketTerm& b) {
    if (auto c = a.factors <=> b.factors; c != 0) return c;
    return a.coefficient <=> b.coefficient;
  }
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

/// Σ coefficient · Π |factor|, every factor a `width`-subset of [ground].
/// Always canonical: factors sorted within each term, terms sorted, like
/// terms merged and zero terms dropped, so == is structural equality.
class BracketPolynomial {
 public:
  BracketPolynomial(int ground, int width) : ground_(ground), width_(width) {}
  BracketPolynomial(int ground, int width, std::vector<BracketTerm> terms);

  int ground() const { return ground_; }
  int width() const { return width_; }
  const std::vector<BracketTerm>& terms() const { return terms_; }

  /// Single-line text: "+|1 2 3||1 4 5| -|1 2 4||1 3 5|".
  std::string to_text() const;

  friend bool operator==(const BracketPolynomial&, const BracketPolynomial&) = default;

 private:
  void canonicalize();

  int ground_;
  int width_;
  std::vector<BracketTerm> terms_;
};

/// Parses the bracket text grammar. Factors may be written "|4 5 6 7|" or,
/// when every index is a single digit, "|4567|". A leading term without sign
/// is positive; "+3|...|" carries an integer multiplier.
BracketPolynomial parse_bracket_text(std::string_view text, int ground);

/// Replaces index k by image[k−1] and moves the result to [new_ground].
/// Factors whose images are out of order are re-sorted with the sign of the
/// sorting permutation. Throws ShapeError if image.size() ≠ ground or the
/// map is not injective.
BracketPolynomial relabel(const BracketPolynomial& p, const std::vector<int>& image, int new_ground);

/// Pullback along the increasing inclusion I ⊆ [I.ground()].
BracketPolynomial relabel(const BracketPolynomial& p, const IndexSet& along);

/// |J| ↦ (−1)^{S_J + ground − width} |J^c| on every factor.
BracketPolynomial dualize(const BracketPolynomial& p);

/// Lazily computed maximal minors of a fixed (d+1)×n coordinate matrix.
class MinorTable {
 public:
  explicit MinorTable(const MatrixK& coords);

  const MatrixK& coords() const { return coords_; }
  /// |cols| must equal coords.rows(); cols.ground() must equal coords.cols().
  const Scalar& get(const IndexSet& cols) const;
  /// Same, for members given directly as a sorted 1-based list.
  const Scalar& get(const std::vector<int>& cols) const;

 private:
  MatrixK coords_;
  mutable std::vector<std::optional<Scalar>> cache_;
};

/// Σ coeff · Π minor(coords, factor), with factor indices optionally pushed
/// through the increasing map `along` (so p lives on [|along|]).
Scalar eval_bracket_poly(const BracketPolynomial& p, const MinorTable& minors, const IndexSet* along = nullptr);

/// Requires p.width() = d+1 and p.ground() = n; throws ShapeError otherwise.
Scalar eval_bracket_poly(const BracketPolynomial& p, const PointConfiguration& config);

}  // namespace veronese
