#include "veronese/conic.hpp"

#include <algorithm>

#include "veronese/bracket.hpp"

namespace veronese {

namespace {

void require_plane(const PointConfiguration& p) {
  if (p.d() != 2) throw ShapeError("conic equations need points of P^2, got d = " + std::to_string(p.d()));
}

void require_six(const PointConfiguration& p) {
  require_plane(p);
  if (p.n() != 6) throw ShapeError("phi needs exactly 6 points, got " + std::to_string(p.n()));
}

ConicEquationReport evaluate(const MinorTable& lifted, const std::vector<IndexSet>& subsets,
                             const ConicEvalOptions& options) {
  ConicEquationReport report;
  if (options.keep_values) report.values.emplace();
  for (const auto& s : subsets) {
    const Scalar& v = lifted.get(s);
    ++report.evaluated;
    if (report.values) report.values->emplace(s, v);
    if (!v.is_zero()) {
      report.all_vanish = false;
      report.nonvanishing_sets.push_back(s);
      if (options.first_witness_only) break;
    }
  }
  return report;
}

}  // namespace

std::vector<Scalar> veronese_lift(const std::vector<Scalar>& z) {
  if (z.size() != 3) throw ShapeError("veronese_lift needs a point of P^2");
  if (std::all_of(z.begin(), z.end(), [](const Scalar& s) { return s.is_zero(); })) {
    throw DegeneratePointError("veronese_lift of the zero vector");
  }
  return {z[0] * z[0], z[1] * z[1], z[2] * z[2], z[0] * z[1], z[0] * z[2], z[1] * z[2]};
}

MatrixK veronese_lift_matrix(const PointConfiguration& p) {
  require_plane(p);
  MatrixK m(p.field(), 6, static_cast<std::size_t>(p.n()));
  for (std::size_t c = 0; c < m.cols(); ++c) m.set_column(c, veronese_lift(p.point(c)));
  return m;
}

Scalar phi_det(const PointConfiguration& p) {
  require_six(p);
  return det(veronese_lift_matrix(p));
}

Scalar phi_bracket(const PointConfiguration& p) {
  require_six(p);
  const MatrixK& a = p.coords();
  auto br = [&](int i, int j, int k) { return maximal_minor(a, IndexSet(6, {i, j, k})); };
  const Scalar form = br(1, 2, 3) * br(1, 4, 5) * br(2, 4, 6) * br(3, 5, 6) -
                      br(1, 2, 4) * br(1, 3, 5) * br(2, 3, 6) * br(4, 5, 6);
  return kPhiBracketSign < 0 ? -form : form;
}

Scalar phi_pullback_eval(const PointConfiguration& p, const IndexSet& subset) {
  require_plane(p);
  if (subset.size() != 6) throw ShapeError("phi_I needs |I| = 6, got " + std::to_string(subset.size()));
  if (subset.ground() != p.n()) throw ShapeError("index set ground does not match n");
  return phi_det(p.subconfiguration(subset));
}

ConicEquationReport w2n_membership(const PointConfiguration& p, const ConicEvalOptions& options) {
  require_plane(p);
  if (p.n() < 6) return ConicEquationReport{};
  return evaluate(MinorTable(veronese_lift_matrix(p)), combinations(p.n(), 6), options);
}

ConicEquationReport v2n_subset_membership(const PointConfiguration& p, const Hypergraph& edges,
                                          const ConicEvalOptions& options) {
  require_plane(p);
  if (edges.k() != 6) throw ShapeError("generator hypergraph must be 6-uniform");
  if (edges.n() != p.n()) throw ShapeError("generator hypergraph ground does not match n");
  if (p.n() < 6) return ConicEquationReport{};
  return evaluate(MinorTable(veronese_lift_matrix(p)), edges.edges(), options);
}

}  // namespace veronese
