#include "veronese/gale.hpp"

#include <numeric>

#include "veronese/bracket.hpp"

namespace veronese {

MatrixK affine_gale(const MatrixK& a) {
  if (a.rows() >= a.cols()) throw RankDeficiencyError("affine Gale transform needs d+1 < n");
  return kernel_basis(a);
}

StandardGalePair standard_gale_pair(const MatrixK& a) {
  const std::size_t k = a.rows();
  if (k >= a.cols()) throw ShapeError("standard Gale pair needs d+1 < n");
  std::vector<std::size_t> lead(k);
  std::iota(lead.begin(), lead.end(), 0);
  MatrixK block = a.select_columns(lead);
  if (rank(block) < k) {
    std::vector<std::size_t> pivots;
    rref(a, &pivots);
    std::string witness = "{";
    for (std::size_t i = 0; i < pivots.size(); ++i) witness += (i ? "," : "") + std::to_string(pivots[i] + 1);
    throw RankDeficiencyError("leading " + std::to_string(k) + " columns are dependent; independent columns: " +
                              witness + "}");
  }
  MatrixK std_a = inverse(block) * a;
  const std::size_t rest = a.cols() - k;
  MatrixK b(a.field(), rest, a.cols());
  for (std::size_t i = 0; i < rest; ++i) {
    for (std::size_t r = 0; r < k; ++r) b(i, r) = std_a(r, k + i);
    b(i, k + i) = -a.field().one();
  }
  return {std::move(std_a), std::move(b)};
}

GaleDualityCertificate duality_certificate(const MatrixK& a, const MatrixK& b) {
  const int n = static_cast<int>(a.cols());
  const int k = static_cast<int>(a.rows());
  if (b.cols() != a.cols() || static_cast<int>(b.rows()) != n - k) {
    throw NotGalePairError("B must be (n-d-1) x n");
  }
  if (!(a * b.transpose()).is_zero()) throw NotGalePairError("A * B^t is not zero");

  const MinorTable ma(a);
  const MinorTable mb(b);
  const auto sets = combinations(n, k);
  const long long shift = n - k;
  auto signed_dual = [&](const IndexSet& s) {
    Scalar v = mb.get(s.complement());
    return (s_index(s) + shift) % 2 == 0 ? v : -v;
  };

  GaleDualityCertificate cert;
  bool found = false;
  for (const auto& s : sets) {
    if (ma.get(s).is_zero()) continue;
    const Scalar denom = signed_dual(s);
    if (denom.is_zero()) break;  // identity cannot hold; every set is checked below
    cert.lambda = ma.get(s) / denom;
    found = true;
    break;
  }
  if (!found) {
    bool any = false;
    for (const auto& s : sets) any = any || !ma.get(s).is_zero();
    if (!any) throw Error("every maximal minor of A vanishes; A is not full rank");
    cert.lambda = a.field().zero();
  }
  for (const auto& s : sets) {
    ++cert.checked_sets;
    if (!found || !(ma.get(s) == cert.lambda * signed_dual(s))) cert.failures.push_back(s);
  }
  return cert;
}

PointConfiguration gale_of_config(const PointConfiguration& p) {
  if (is_degenerate(p)) throw PreconditionError("configuration is degenerate (contained in a hyperplane)");
  if (auto bad = strong_nondegeneracy_violation(p)) {
    throw PreconditionError("configuration is not strongly non-degenerate: a hyperplane contains every point except " +
                            std::to_string(*bad));
  }
  return PointConfiguration(affine_gale(p.coords()));
}

std::vector<Scalar> maximal_minor_vector(const MatrixK& m) {
  const MinorTable t(m);
  std::vector<Scalar> out;
  for (const auto& s : combinations(static_cast<int>(m.cols()), static_cast<int>(m.rows()))) out.push_back(t.get(s));
  return out;
}

bool proportional(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  if (u.size() != v.size()) return false;
  std::optional<Scalar> ratio;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() != v[i].is_zero()) return false;
    if (u[i].is_zero()) continue;
    if (!ratio) {
      ratio = v[i] / u[i];
    } else if (!(v[i] == *ratio * u[i])) {
      return false;
    }
  }
  return ratio.has_value();
}

}  // namespace veronese
