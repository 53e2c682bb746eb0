#pragma once

// Point configurations in (ℙ^d)^n, random samplers, and the Jacobian-rank
// dimension estimate.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "veronese/field.hpp"
#include "veronese/matrix.hpp"

namespace veronese {

class DegeneratePointError : public Error {
 public:
  using Error::Error;
};

class DuplicatePointError : public Error {
 public:
  using Error::Error;
};

class SpanFailureError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Samplers give up after this many resampling attempts.
inline constexpr int kMaxSampleRetries = 32;

/// n points of ℙ^d stored as the columns of a (d+1)×n matrix. Equality is
/// projective: columns are compared after scaling the first nonzero entry to 1.
class PointConfiguration {
 public:
  /// Throws DegeneratePointError on a zero column, ShapeError on an empty matrix.
  explicit PointConfiguration(MatrixK coords);

  int d() const { return static_cast<int>(coords_.rows()) - 1; }
  int n() const { return static_cast<int>(coords_.cols()); }
  const MatrixK& coords() const { return coords_; }
  const Field& field() const { return coords_.field(); }

  /// Zero-based point access.
  std::vector<Scalar> point(std::size_t i) const { return coords_.column(i); }

  PointConfiguration subconfiguration(const IndexSet& indices) const;
  /// Columns g·p_i.
  PointConfiguration transformed(const MatrixK& g) const;
  /// Column i multiplied by factors[i] (all nonzero).
  PointConfiguration rescaled(const std::vector<Scalar>& factors) const;
  /// Representative with the first nonzero entry of every column equal to 1.
  PointConfiguration normalized() const;

  friend bool operator==(const PointConfiguration& a, const PointConfiguration& b);

 private:
  MatrixK coords_;
};

/// Validating constructor from coordinate vectors. Throws ShapeError when a
/// column does not have d+1 entries or n ≠ columns.size().
PointConfiguration make_config(int d, int n, const std::vector<std::vector<Scalar>>& columns);

/// rank(coords) ≤ d, i.e. the configuration lies in a hyperplane.
bool is_degenerate(const PointConfiguration& p);

/// 1-based index i whose removal leaves a configuration of rank < d+1, if any.
/// A fully degenerate configuration reports index 1.
std::optional<int> strong_nondegeneracy_violation(const PointConfiguration& p);

/// No hyperplane contains n−1 or more of the points.
bool is_strongly_nondegenerate(const PointConfiguration& p);

/// Homogeneous parameter [t0 : t1] on ℙ¹.
struct ParameterPair {
  Scalar t0;
  Scalar t1;
};

/// (t0^d, t0^{d−1} t1, ..., t1^d). Throws PreconditionError for (0, 0).
std::vector<Scalar> rnc_point(int d, const ParameterPair& t);

/// Columns g·rnc_point(d, t_i). Throws DuplicatePointError for proportional
/// parameters and RankDeficiencyError for singular g.
PointConfiguration sample_on_rnc(int d, const std::vector<ParameterPair>& params, const MatrixK& g);

/// Seeded recipe for random coordinates: integers in [−height, height] over ℚ,
/// uniform residues over 𝔽_p.
struct SampleRecipe {
  std::uint64_t seed = 0;
  Field field = Field::default_prime();
  long long height = 100;
};

/// Deterministic random source. Uses its own bounded-integer reduction so the
/// stream is identical across standard libraries.
class RandomSource {
 public:
  explicit RandomSource(const SampleRecipe& recipe) : recipe_(recipe), engine_(recipe.seed) {}

  const Field& field() const { return recipe_.field; }
  const SampleRecipe& recipe() const { return recipe_; }

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long long integer(long long lo, long long hi);
  Scalar scalar();
  Scalar nonzero_scalar();
  std::vector<Scalar> vector(std::size_t len);
  MatrixK matrix(std::size_t rows, std::size_t cols);
  MatrixK invertible_matrix(std::size_t n);
  /// n pairwise non-proportional parameter pairs with t0 = 1.
  std::vector<ParameterPair> distinct_parameters(std::size_t n);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(integer(0, static_cast<long long>(i) - 1))]);
    }
  }

 private:
  SampleRecipe recipe_;
  std::mt19937_64 engine_;
};

/// n points on a random rational normal curve g·ν(ℙ¹).
PointConfiguration sample_random_rnc(int d, int n, RandomSource& rng);
/// Entries drawn independently.
PointConfiguration sample_generic(int d, int n, RandomSource& rng);
/// Columns are random combinations of d random vectors, so rank ≤ d.
PointConfiguration sample_degenerate(int d, int n, RandomSource& rng);
/// d=2: `on_first` points on one random line, the rest on a second line.
PointConfiguration sample_two_lines(int n, int on_first, RandomSource& rng);

enum class ChainTopology {
  Chain,  ///< component j attaches to component j−1
  Star,   ///< every component attaches to component 0 at one common point
};

/// One irreducible component: a degree-δ moment curve through `attachment`
/// (component 0 has none) in the span of `attachment` and the coordinate
/// vectors in `coordinate_span` (pre-embedding coordinates, 1-based).
struct QuasiVeroneseComponent {
  int degree = 0;
  IndexSet coordinate_span;
  std::optional<int> parent;              ///< zero-based component index
  std::optional<Scalar> parent_parameter; ///< gluing point's parameter on the parent
};

/// A connected nodal union of rational normal curves of total degree d,
/// moved into general position by `embedding`.
struct QuasiVeroneseDescriptor {
  int d = 0;
  ChainTopology topology = ChainTopology::Chain;
  std::vector<QuasiVeroneseComponent> components;
  /// Gluing points (pre-embedding coordinates), one per non-root component.
  std::vector<std::vector<Scalar>> attachments;
  MatrixK embedding;

  /// Pre-embedding point of component c at affine parameter t.
  std::vector<Scalar> local_point(std::size_t c, const Scalar& t) const;
  /// embedding · local_point(c, t).
  std::vector<Scalar> point(std::size_t c, const Scalar& t) const;
};

struct QuasiVeroneseSample {
  QuasiVeroneseDescriptor curve;
  PointConfiguration config;
  std::vector<int> component_of_point;  ///< zero-based component per column
  int retries = 0;
};

/// Samples points_per_component[c] points on component c of a quasi-Veronese
/// curve with the given component degrees, resampling until the points span
/// ℙ^d. Throws SpanFailureError after kMaxSampleRetries attempts.
QuasiVeroneseSample sample_quasi_veronese_chain(int d, const std::vector<int>& degrees,
                                                const std::vector<int>& points_per_component,
                                                const SampleRecipe& recipe,
                                                ChainTopology topology = ChainTopology::Chain);

/// Rank of the Jacobian of (g, t_1..t_n) ↦ affine coordinates of (g·ν(t_i))_i
/// at a random point. Generically d²+2d+n−3. Requires n ≥ d+3; resamples when
/// the point leaves the chart x_0 ≠ 0.
int dimension_estimate(int d, int n, const SampleRecipe& recipe);

}  // namespace veronese
