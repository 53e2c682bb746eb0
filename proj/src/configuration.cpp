#include "veronese/configuration.hpp"

#include <algorithm>

#include "veronese/jet.hpp"

namespace veronese {

// ------------------------------------------------------ PointConfiguration

PointConfiguration::PointConfiguration(MatrixK coords) : coords_(std::move(coords)) {
  if (coords_.rows() == 0) throw ShapeError("point configuration needs at least one coordinate row");
  for (std::size_t c = 0; c < coords_.cols(); ++c) {
    if (coords_.column_is_zero(c)) throw DegeneratePointError("point " + std::to_string(c + 1) + " is the zero vector");
  }
}

PointConfiguration PointConfiguration::subconfiguration(const IndexSet& indices) const {
  if (indices.ground() > n()) throw ShapeError("subconfiguration index set exceeds n");
  return PointConfiguration(coords_.select_columns(indices));
}

PointConfiguration PointConfiguration::transformed(const MatrixK& g) const {
  if (g.rows() != g.cols() || g.rows() != coords_.rows()) throw ShapeError("transformation must be (d+1)x(d+1)");
  return PointConfiguration(g * coords_);
}

PointConfiguration PointConfiguration::rescaled(const std::vector<Scalar>& factors) const {
  if (factors.size() != coords_.cols()) throw ShapeError("one scale factor per point required");
  MatrixK m = coords_;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (factors[c].is_zero()) throw DegeneratePointError("zero rescaling factor");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) *= factors[c];
  }
  return PointConfiguration(std::move(m));
}

PointConfiguration PointConfiguration::normalized() const {
  MatrixK m = coords_;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t lead = 0;
    while (m(lead, c).is_zero()) ++lead;
    const Scalar inv = m(lead, c).inverse();
    for (std::size_t r = lead; r < m.rows(); ++r) m(r, c) *= inv;
  }
  return PointConfiguration(std::move(m));
}

bool operator==(const PointConfiguration& a, const PointConfiguration& b) {
  if (a.field() != b.field() || a.coords_.rows() != b.coords_.rows() || a.n() != b.n()) return false;
  return a.normalized().coords_ == b.normalized().coords_;
}

PointConfiguration make_config(int d, int n, const std::vector<std::vector<Scalar>>& columns) {
  if (d < 0 || n < 0) throw ShapeError("negative dimension or point count");
  if (columns.size() != static_cast<std::size_t>(n)) {
    throw ShapeError("expected " + std::to_string(n) + " columns, got " + std::to_string(columns.size()));
  }
  if (n == 0) throw ShapeError("empty configuration");
  const Field field = columns.front().empty() ? Field{} : columns.front().front().field();
  MatrixK m(field, static_cast<std::size_t>(d + 1), static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != static_cast<std::size_t>(d + 1)) {
      throw ShapeError("point " + std::to_string(c + 1) + " has " + std::to_string(columns[c].size()) +
                       " coordinates, expected " + std::to_string(d + 1));
    }
    m.set_column(c, columns[c]);
  }
  return PointConfiguration(std::move(m));
}

bool is_degenerate(const PointConfiguration& p) {
  return rank(p.coords()) <= static_cast<std::size_t>(p.d());
}

std::optional<int> strong_nondegeneracy_violation(const PointConfiguration& p) {
  const auto full = static_cast<std::size_t>(p.d() + 1);
  if (rank(p.coords()) < full) return 1;
  for (int i = 0; i < p.n(); ++i) {
    if (rank(p.coords().drop_column(static_cast<std::size_t>(i))) < full) return i + 1;
  }
  return std::nullopt;
}

bool is_strongly_nondegenerate(const PointConfiguration& p) { return !strong_nondegeneracy_violation(p).has_value(); }

// --------------------------------------------------------------- samplers

std::vector<Scalar> rnc_point(int d, const ParameterPair& t) {
  if (d < 0) throw ShapeError("negative dimension");
  if (t.t0.is_zero() && t.t1.is_zero()) throw PreconditionError("parameter pair (0, 0) is not a point of P^1");
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) out.push_back(t.t0.pow(static_cast<unsigned>(d - k)) * t.t1.pow(static_cast<unsigned>(k)));
  return out;
}

PointConfiguration sample_on_rnc(int d, const std::vector<ParameterPair>& params, const MatrixK& g) {
  if (params.empty()) throw ShapeError("no parameters given");
  if (g.rows() != static_cast<std::size_t>(d + 1) || !g.is_square()) throw ShapeError("g must be (d+1)x(d+1)");
  if (rank(g) != g.rows()) throw RankDeficiencyError("g is singular");
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (params[i].t0 * params[j].t1 == params[i].t1 * params[j].t0) {
        throw DuplicatePointError("parameters " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                  " define the same point of P^1");
      }
    }
  }
  MatrixK m(g.field(), static_cast<std::size_t>(d + 1), params.size());
  for (std::size_t i = 0; i < params.size(); ++i) m.set_column(i, rnc_point(d, params[i]));
  return PointConfiguration(g * m);
}

long long RandomSource::integer(long long lo, long long hi) {
  if (hi < lo) throw PreconditionError("empty random range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long long>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<long long>(x % span);
}

Scalar RandomSource::scalar() {
  const Field& f = recipe_.field;
  if (f.is_rational()) return f.from_int(integer(-recipe_.height, recipe_.height));
  return f.from_int(integer(0, static_cast<long long>(f.characteristic()) - 1));
}

Scalar RandomSource::nonzero_scalar() {
  while (true) {
    Scalar s = scalar();
    if (!s.is_zero()) return s;
  }
}

std::vector<Scalar> RandomSource::vector(std::size_t len) {
  std::vector<Scalar> v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) v.push_back(scalar());
  return v;
}

MatrixK RandomSource::matrix(std::size_t rows, std::size_t cols) {
  MatrixK m(recipe_.field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar();
  return m;
}

MatrixK RandomSource::invertible_matrix(std::size_t n) {
  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    MatrixK g = matrix(n, n);
    if (rank(g) == n) return g;
  }
  throw SpanFailureError("no invertible matrix found within the retry budget");
}

std::vector<ParameterPair> RandomSource::distinct_parameters(std::size_t n) {
  std::vector<ParameterPair> out;
  std::vector<Scalar> used;
  int misses = 0;
  while (out.size() < n) {
    Scalar t = scalar();
    if (std::find(used.begin(), used.end(), t) != used.end()) {
      if (++misses > 1000) throw SpanFailureError("cannot draw enough distinct parameters; raise the height");
      continue;
    }
    used.push_back(t);
    out.push_back({field().one(), t});
  }
  return out;
}

PointConfiguration sample_random_rnc(int d, int n, RandomSource& rng) {
  auto params = rng.distinct_parameters(static_cast<std::size_t>(n));
  MatrixK g = rng.invertible_matrix(static_cast<std::size_t>(d + 1));
  return sample_on_rnc(d, params, g);
}

PointConfiguration sample_generic(int d, int n, RandomSource& rng) {
  MatrixK m(rng.field(), static_cast<std::size_t>(d + 1), static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Scalar> v;
    do {
      v = rng.vector(m.rows());
    } while (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); }));
    m.set_column(c, v);
  }
  return PointConfiguration(std::move(m));
}

PointConfiguration sample_degenerate(int d, int n, RandomSource& rng) {
  const auto rows = static_cast<std::size_t>(d + 1);
  MatrixK basis = rng.matrix(rows, static_cast<std::size_t>(d));
  MatrixK m(rng.field(), rows, static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Scalar> col;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= kMaxSampleRetries) throw SpanFailureError("could not draw a nonzero degenerate point");
      MatrixK coeff = rng.matrix(static_cast<std::size_t>(d), 1);
      col = (basis * coeff).column(0);
      if (std::any_of(col.begin(), col.end(), [](const Scalar& s) { return !s.is_zero(); })) break;
    }
    m.set_column(c, col);
  }
  return PointConfiguration(std::move(m));
}

PointConfiguration sample_two_lines(int n, int on_first, RandomSource& rng) {
  if (on_first < 0 || on_first > n) throw PreconditionError("on_first must lie in [0, n]");
  // Lines through a common node and two further random points.
  MatrixK frame = rng.invertible_matrix(3);
  const auto node = frame.column(0);
  MatrixK m(rng.field(), 3, static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::size_t dir = i < on_first ? 1 : 2;
    const Scalar a = rng.scalar();
    std::vector<Scalar> col(3);
    for (std::size_t r = 0; r < 3; ++r) col[r] = a * node[r] + frame(r, dir);
    m.set_column(static_cast<std::size_t>(i), col);
  }
  return PointConfiguration(std::move(m));
}

// ------------------------------------------------------ quasi-Veronese

std::vector<Scalar> QuasiVeroneseDescriptor::local_point(std::size_t c, const Scalar& t) const {
  const Field f = embedding.field();
  const auto& comp = components.at(c);
  std::vector<Scalar> v(static_cast<std::size_t>(d + 1), f.zero());
  if (!comp.parent) {
    // Moment curve (1, t, ..., t^δ) on the first δ+1 coordinates.
    for (int k = 0; k <= comp.degree; ++k) v[static_cast<std::size_t>(comp.coordinate_span[k] - 1)] = t.pow(static_cast<unsigned>(k));
    return v;
  }
  // Moment curve in the basis (gluing point, e_{s_1}, ..., e_{s_δ}); t = 0 is the node.
  v = attachments.at(c - 1);
  for (int k = 1; k <= comp.degree; ++k) {
    v[static_cast<std::size_t>(comp.coordinate_span[k - 1] - 1)] += t.pow(static_cast<unsigned>(k));
  }
  return v;
}

std::vector<Scalar> QuasiVeroneseDescriptor::point(std::size_t c, const Scalar& t) const {
  const auto local = local_point(c, t);
  MatrixK col(embedding.field(), local.size(), 1);
  col.set_column(0, local);
  return (embedding * col).column(0);
}

QuasiVeroneseSample sample_quasi_veronese_chain(int d, const std::vector<int>& degrees,
                                                const std::vector<int>& points_per_component,
                                                const SampleRecipe& recipe, ChainTopology topology) {
  if (degrees.empty()) throw PreconditionError("at least one component degree required");
  if (points_per_component.size() != degrees.size()) throw PreconditionError("one point count per component required");
  int total = 0;
  for (int deg : degrees) {
    if (deg < 1) throw PreconditionError("component degrees must be positive");
    total += deg;
  }
  if (total != d) throw PreconditionError("component degrees must sum to d");
  for (int m : points_per_component) {
    if (m < 0) throw PreconditionError("negative point count");
  }

  RandomSource rng(recipe);
  const Field f = recipe.field;
  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    QuasiVeroneseDescriptor curve;
    curve.d = d;
    curve.topology = topology;
    curve.embedding = rng.invertible_matrix(static_cast<std::size_t>(d + 1));

    // Coordinates 1..δ_0+1 host the root; every later component takes δ_j fresh ones.
    int next_coord = 1;
    const Scalar star_param = rng.nonzero_scalar();
    for (std::size_t c = 0; c < degrees.size(); ++c) {
      QuasiVeroneseComponent comp;
      comp.degree = degrees[c];
      const int width = c == 0 ? degrees[c] + 1 : degrees[c];
      comp.coordinate_span = IndexSet::interval(d + 1, next_coord, next_coord + width - 1);
      next_coord += width;
      if (c > 0) {
        const std::size_t parent = topology == ChainTopology::Star ? 0 : c - 1;
        comp.parent = static_cast<int>(parent);
        comp.parent_parameter = topology == ChainTopology::Star ? star_param : rng.nonzero_scalar();
        curve.components.push_back(comp);
        curve.attachments.push_back(curve.local_point(parent, *comp.parent_parameter));
        continue;
      }
      curve.components.push_back(comp);
    }

    std::vector<std::pair<int, std::vector<Scalar>>> pts;
    for (std::size_t c = 0; c < degrees.size(); ++c) {
      std::vector<Scalar> used;
      while (used.size() < static_cast<std::size_t>(points_per_component[c])) {
        Scalar t = rng.nonzero_scalar();
        if (std::find(used.begin(), used.end(), t) != used.end()) continue;
        used.push_back(t);
        pts.emplace_back(static_cast<int>(c), curve.point(c, t));
      }
    }
    rng.shuffle(pts);

    if (pts.empty()) break;
    MatrixK m(f, static_cast<std::size_t>(d + 1), pts.size());
    std::vector<int> owner;
    bool zero_column = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      m.set_column(i, pts[i].second);
      owner.push_back(pts[i].first);
      zero_column = zero_column || m.column_is_zero(i);
    }
    if (zero_column || rank(m) != static_cast<std::size_t>(d + 1)) continue;
    return QuasiVeroneseSample{std::move(curve), PointConfiguration(std::move(m)), std::move(owner), attempt};
  }
  throw SpanFailureError("quasi-Veronese sample failed to span P^" + std::to_string(d) + " within " +
                         std::to_string(kMaxSampleRetries) + " attempts");
}

// --------------------------------------------------- dimension estimate

int dimension_estimate(int d, int n, const SampleRecipe& recipe) {
  if (d < 1) throw PreconditionError("dimension_estimate needs d >= 1");
  if (n < d + 3) throw PreconditionError("dimension_estimate needs n >= d+3");
  RandomSource rng(recipe);
  const Field f = recipe.field;
  const auto dim = static_cast<std::size_t>(d + 1);
  const std::size_t num_g = dim * dim;
  const std::size_t num_vars = num_g + static_cast<std::size_t>(n);

  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    MatrixK g = rng.matrix(dim, dim);
    auto params = rng.distinct_parameters(static_cast<std::size_t>(n));
    std::vector<JetScalar> gj;
    gj.reserve(num_g);
    for (std::size_t k = 0; k < num_g; ++k) gj.push_back(JetScalar::variable(g(k / dim, k % dim), k, num_vars));

    MatrixK jac(f, static_cast<std::size_t>(n * d), num_vars);
    bool in_chart = true;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n) && in_chart; ++i) {
      const JetScalar t = JetScalar::variable(params[i].t1, num_g + i, num_vars);
      std::vector<JetScalar> nu;
      nu.push_back(JetScalar::constant(f.one(), num_vars));
      for (std::size_t k = 1; k < dim; ++k) nu.push_back(nu.back() * t);
      std::vector<JetScalar> x;
      for (std::size_t r = 0; r < dim; ++r) {
        JetScalar acc = JetScalar::constant(f.zero(), num_vars);
        for (std::size_t c = 0; c < dim; ++c) acc += gj[r * dim + c] * nu[c];
        x.push_back(std::move(acc));
      }
      if (x[0].value().is_zero()) {
        in_chart = false;
        break;
      }
      for (std::size_t r = 1; r < dim; ++r) {
        const JetScalar affine = x[r] / x[0];
        for (std::size_t v = 0; v < num_vars; ++v) jac(i * static_cast<std::size_t>(d) + r - 1, v) = affine.partials()[v];
      }
    }
    if (!in_chart) continue;
    return static_cast<int>(rank(jac));
  }
  throw SpanFailureError("dimension_estimate: random points kept leaving the affine chart");
}

}  // namespace veronese
