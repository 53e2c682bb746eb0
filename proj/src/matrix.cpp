#include "veronese/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace veronese {

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(int ground, std::vector<int> members) : ground_(ground), members_(std::move(members)) {
  if (ground < 0) throw ShapeError("negative ground set size");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > ground) {
      throw ShapeError("index " + std::to_string(members_[i]) + " outside [1," + std::to_string(ground) + "]");
    }
    if (i > 0 && members_[i] <= members_[i - 1]) throw ShapeError("index set members must be strictly increasing");
  }
}

IndexSet IndexSet::full(int n) { return interval(n, 1, n); }

IndexSet IndexSet::interval(int ground, int first, int last) {
  std::vector<int> m;
  for (int i = first; i <= last; ++i) m.push_back(i);
  return IndexSet(ground, std::move(m));
}

bool IndexSet::contains(int i) const { return std::binary_search(members_.begin(), members_.end(), i); }

IndexSet IndexSet::complement() const {
  std::vector<int> out;
  out.reserve(ground_ - members_.size());
  auto it = members_.begin();
  for (int i = 1; i <= ground_; ++i) {
    if (it != members_.end() && *it == i) {
      ++it;
    } else {
      out.push_back(i);
    }
  }
  IndexSet c;
  c.ground_ = ground_;
  c.members_ = std::move(out);
  return c;
}

IndexSet IndexSet::with_ground(int ground) const { return IndexSet(ground, members_); }

std::vector<std::size_t> IndexSet::zero_based() const {
  std::vector<std::size_t> out(members_.size());
  std::transform(members_.begin(), members_.end(), out.begin(), [](int i) { return static_cast<std::size_t>(i - 1); });
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(members_[i]);
  }
  return s + "}";
}

long long s_index(const IndexSet& set) {
  long long s = 0;
  for (std::size_t j = 0; j < set.size(); ++j) s += set[j] - static_cast<long long>(j + 1);
  return s;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<IndexSet> combinations(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 1);
  while (true) {
    out.emplace_back(n, c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::size_t combination_rank(const IndexSet& set) {
  const int n = set.ground();
  const int k = static_cast<int>(set.size());
  std::size_t r = 0;
  int prev = 0;
  for (int j = 0; j < k; ++j) {
    for (int v = prev + 1; v < set[j]; ++v) r += static_cast<std::size_t>(binomial(n - v, k - j - 1));
    prev = set[j];
  }
  return r;
}

// ----------------------------------------------------------------- MatrixK

MatrixK::MatrixK(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

MatrixK MatrixK::identity(Field field, std::size_t n) {
  MatrixK m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

MatrixK MatrixK::from_rows(Field field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  MatrixK m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

MatrixK MatrixK::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty() || rows.front().empty()) throw ShapeError("from_rows needs at least one entry to infer the field");
  const Field field = rows.front().front().field();
  MatrixK m(field, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (rows[i][j].field() != field) throw FieldMismatchError("matrix entries from different fields");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<Scalar> MatrixK::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

void MatrixK::set_column(std::size_t c, const std::vector<Scalar>& values) {
  if (values.size() != rows_) throw ShapeError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) {
    if (values[r].field() != field_) throw FieldMismatchError("column entry from a different field");
    (*this)(r, c) = values[r];
  }
}

bool MatrixK::column_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!(*this)(r, c).is_zero()) return false;
  }
  return true;
}

bool MatrixK::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

MatrixK MatrixK::transpose() const {
  MatrixK t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixK MatrixK::select_columns(const std::vector<std::size_t>& cols) const {
  MatrixK out(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw ShapeError("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, cols[j]);
  }
  return out;
}

MatrixK MatrixK::select_rows(const std::vector<std::size_t>& rows) const {
  MatrixK out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw ShapeError("row index out of range");
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(rows[i], c);
  }
  return out;
}

MatrixK MatrixK::drop_column(std::size_t c) const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols_; ++j)
    if (j != c) keep.push_back(j);
  return select_columns(keep);
}

MatrixK MatrixK::hconcat(const MatrixK& other) const {
  if (rows_ != other.rows_) throw ShapeError("hconcat row mismatch");
  if (field_ != other.field_) throw FieldMismatchError("hconcat field mismatch");
  MatrixK out(field_, rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

MatrixK operator*(const MatrixK& a, const MatrixK& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  if (a.field_ != b.field_) throw FieldMismatchError("matrix product field mismatch");
  MatrixK out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool operator==(const MatrixK& a, const MatrixK& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string MatrixK::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

// ------------------------------------------------------------ elimination

namespace {

std::vector<std::uint64_t> residues(const MatrixK& m) {
  std::vector<std::uint64_t> out;
  out.reserve(m.entries().size());
  for (const auto& s : m.entries()) out.push_back(s.residue());
  return out;
}

// Clears denominators row by row; returns the integer matrix and the product
// of the row multipliers.
std::vector<mpz_class> integer_rows(const MatrixK& m, mpz_class* scale) {
  std::vector<mpz_class> out(m.rows() * m.cols());
  *scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).rational().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m(r, c).rational();
      out[r * m.cols() + c] = q.get_num() * (l / q.get_den());
    }
    *scale *= l;
  }
  return out;
}

std::uint64_t det_mod_p(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p) {
  std::uint64_t d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
      d = d == 0 ? 0 : p - d;
    }
    const std::uint64_t pv = a[k * n + k];
    d = d * pv % p;
    const std::uint64_t inv = mod_inverse(pv, p);
    for (std::size_t r = k + 1; r < n; ++r) {
      const std::uint64_t f = a[r * n + k] * inv % p;
      if (f == 0) continue;
      for (std::size_t c = k; c < n; ++c) {
        a[r * n + c] = (a[r * n + c] + (p - f) * a[k * n + c]) % p;
      }
    }
  }
  return d;
}

// Bareiss fraction-free elimination; exact integer determinant.
mpz_class det_bareiss(std::vector<mpz_class> a, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), a[i * n + j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * n + k];
  }
  mpz_class d = a[n * n - 1];
  return sign < 0 ? mpz_class(-d) : d;
}

// Fraction-free row echelon rank over the integers.
std::size_t rank_bareiss(std::vector<mpz_class> a, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[piv * cols + j]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i * cols + j] = a[i * cols + j] * a[r * cols + c] - a[i * cols + c] * a[r * cols + j];
        mpz_divexact(a[i * cols + j].get_mpz_t(), a[i * cols + j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i * cols + c] = 0;
    }
    prev = a[r * cols + c];
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols, std::uint64_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[piv * cols + j]);
    const std::uint64_t inv = mod_inverse(a[r * cols + c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = a[i * cols + c] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = (a[i * cols + j] + (p - f) * a[r * cols + j]) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

Scalar det(const MatrixK& m) {
  if (!m.is_square()) {
    throw ShapeError("determinant of non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  const Field& f = m.field();
  if (n == 0) return f.one();
  if (!f.is_rational()) {
    const std::uint64_t p = f.characteristic();
    return f.from_int(static_cast<long long>(det_mod_p(residues(m), n, p)));
  }
  mpz_class scale;
  auto ints = integer_rows(m, &scale);
  mpq_class d(det_bareiss(std::move(ints), n), scale);
  return Scalar(std::move(d));
}

Scalar minor(const MatrixK& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw ShapeError("minor needs as many rows as columns");
  if (rows.size() > std::min(m.rows(), m.cols())) throw ShapeError("minor larger than the matrix");
  if (static_cast<std::size_t>(rows.ground()) > m.rows() || static_cast<std::size_t>(cols.ground()) > m.cols()) {
    throw ShapeError("minor index set exceeds matrix shape");
  }
  return det(m.select_rows(rows.zero_based()).select_columns(cols.zero_based()));
}

Scalar maximal_minor(const MatrixK& m, const IndexSet& cols) {
  if (cols.size() != m.rows()) throw ShapeError("maximal minor needs exactly rows() columns");
  return det(m.select_columns(cols));
}

std::size_t rank(const MatrixK& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (!m.field().is_rational()) return rank_mod_p(residues(m), m.rows(), m.cols(), m.field().characteristic());
  mpz_class scale;
  return rank_bareiss(integer_rows(m, &scale), m.rows(), m.cols());
}

MatrixK rref(const MatrixK& m, std::vector<std::size_t>* pivots) {
  MatrixK a = m;
  std::vector<std::size_t> piv_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    piv_cols.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv_cols);
  return a;
}

MatrixK kernel_basis(const MatrixK& m) {
  std::vector<std::size_t> pivots;
  MatrixK r = rref(m, &pivots);
  if (pivots.size() != m.rows()) {
    throw RankDeficiencyError("kernel_basis needs full row rank; rank " + std::to_string(pivots.size()) + " < " +
                              std::to_string(m.rows()));
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0, p = 0; c < m.cols(); ++c) {
    if (p < pivots.size() && pivots[p] == c) {
      ++p;
    } else {
      free_cols.push_back(c);
    }
  }
  const Field& f = m.field();
  MatrixK b(f, free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    b(k, free_cols[k]) = -f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) b(k, pivots[i]) = r(i, free_cols[k]);
  }
  return b;
}

MatrixK inverse(const MatrixK& m) {
  if (!m.is_square()) throw ShapeError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> pivots;
  MatrixK r = rref(m.hconcat(MatrixK::identity(m.field(), n)), &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw RankDeficiencyError("matrix is singular");
  std::vector<std::size_t> right(n);
  std::iota(right.begin(), right.end(), n);
  return r.select_columns(right);
}

}  // namespace veronese
