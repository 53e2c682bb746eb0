#pragma once

// Dense exact linear algebra over a Field, plus index-set combinatorics.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "veronese/field.hpp"

namespace veronese {

class RankDeficiencyError : public Error {
 public:
  using Error::Error;
};

/// A strictly increasing subset of [ground] = {1, ..., ground} (1-based).
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws ShapeError unless members are strictly increasing within 1..ground.
  IndexSet(int ground, std::vector<int> members);
  IndexSet(int ground, std::initializer_list<int> members) : IndexSet(ground, std::vector<int>(members)) {}

  static IndexSet full(int n);
  /// {first, first+1, ..., last} inside [ground].
  static IndexSet interval(int ground, int first, int last);

  int ground() const { return ground_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }
  int operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(int i) const;
  /// [ground] \ this.
  IndexSet complement() const;
  /// Same members, different ground set (must still fit).
  IndexSet with_ground(int ground) const;
  /// Zero-based positions, for indexing matrices.
  std::vector<std::size_t> zero_based() const;

  /// "{1,4,5}"
  std::string to_string() const;

  /// Lexicographic on members, then ground.
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) {
    if (auto c = a.members_ <=> b.members_; c != 0) return c;
    return a.ground_ <=> b.ground_;
  }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  int ground_ = 0;
  std::vector<int> members_;
};

/// S_I = Σ_j (i_j − j): adjacent transpositions carrying [k] to I.
long long s_index(const IndexSet& set);

long long binomial(int n, int k);

/// All k-subsets of [n] in lexicographic order.
std::vector<IndexSet> combinations(int n, int k);

/// Position of a k-subset of [n] in the lexicographic order of combinations(n, k).
std::size_t combination_rank(const IndexSet& set);

/// Row-major dense matrix over one Field.
class MatrixK {
 public:
  MatrixK() = default;
  MatrixK(Field field, std::size_t rows, std::size_t cols);

  static MatrixK identity(Field field, std::size_t n);
  static MatrixK from_rows(Field field, const std::vector<std::vector<long long>>& rows);
  static MatrixK from_rows(const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return entries_; }

  std::vector<Scalar> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Scalar>& values);
  bool column_is_zero(std::size_t c) const;
  bool is_zero() const;

  MatrixK transpose() const;
  /// Columns at zero-based positions, in the given order.
  MatrixK select_columns(const std::vector<std::size_t>& cols) const;
  MatrixK select_columns(const IndexSet& cols) const { return select_columns(cols.zero_based()); }
  MatrixK select_rows(const std::vector<std::size_t>& rows) const;
  MatrixK drop_column(std::size_t c) const;
  /// [this | other]
  MatrixK hconcat(const MatrixK& other) const;

  friend MatrixK operator*(const MatrixK& a, const MatrixK& b);
  friend bool operator==(const MatrixK& a, const MatrixK& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Exact determinant. Over ℚ the rows are cleared of denominators and a
/// fraction-free (Bareiss) elimination runs on integers; over 𝔽_p plain
/// Gaussian elimination. Throws ShapeError for non-square input.
Scalar det(const MatrixK& m);

/// Determinant of the submatrix on the given rows and columns.
Scalar minor(const MatrixK& m, const IndexSet& rows, const IndexSet& cols);

/// Minor on all rows and the given columns; requires |cols| = m.rows().
Scalar maximal_minor(const MatrixK& m, const IndexSet& cols);

std::size_t rank(const MatrixK& m);

/// Reduced row echelon form; pivot columns (zero-based) written to `pivots`.
MatrixK rref(const MatrixK& m, std::vector<std::size_t>* pivots = nullptr);

/// For a full-row-rank a×b matrix M (a < b) returns the (b−a)×b matrix B with
/// M·Bᵗ = 0 whose row for the f-th non-pivot column of rref(M) has entry −1
/// at f and R[i][f] at the i-th pivot column. Throws RankDeficiencyError.
MatrixK kernel_basis(const MatrixK& m);

/// Throws RankDeficiencyError for singular input.
MatrixK inverse(const MatrixK& m);

}  // namespace veronese
