#include "veronese/transversality.hpp"

#include <algorithm>
#include <cstdint>

#include "veronese/conic.hpp"

namespace veronese {

BlockPartition::BlockPartition(int n, std::vector<IndexSet> blocks)
    : n_(n), blocks_(std::move(blocks)), labels_(static_cast<std::size_t>(n), -1) {
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const auto& b = blocks_[j];
    if (b.ground() != n) throw ShapeError("block " + b.to_string() + " not on [" + std::to_string(n) + "]");
    if (b.empty()) throw ShapeError("empty block");
    for (int i : b) {
      if (labels_[static_cast<std::size_t>(i - 1)] != -1) throw ShapeError("blocks overlap at " + std::to_string(i));
      labels_[static_cast<std::size_t>(i - 1)] = static_cast<int>(j);
    }
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 0) throw ShapeError("element " + std::to_string(i + 1) + " is in no block");
  }
}

BlockPartition BlockPartition::from_labels(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  int k = 0;
  for (int l : labels) k = std::max(k, l + 1);
  std::vector<std::vector<int>> members(static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) {
    if (labels[i] < 0) throw ShapeError("negative block label");
    members[static_cast<std::size_t>(labels[i])].push_back(i + 1);
  }
  std::vector<IndexSet> blocks;
  for (auto& m : members) blocks.emplace_back(n, std::move(m));
  return BlockPartition(n, std::move(blocks));
}

bool BlockPartition::met_transversally_by(const IndexSet& edge) const {
  if (static_cast<int>(edge.size()) != k()) return false;
  std::uint64_t seen = 0;
  for (int i : edge) {
    const std::uint64_t bit = 1ull << block_of(i);
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

std::string BlockPartition::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < blocks_.size(); ++j) s += (j ? " | " : "") + blocks_[j].to_string();
  return s;
}

namespace {

// Restricted growth strings with exactly k distinct labels, lexicographic.
template <class Visit>
bool for_each_rgs(int n, int k, Visit&& visit) {
  if (k < 1 || k > n) return true;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  // Recursive generation with pruning: remaining slots must still reach k labels.
  auto rec = [&](auto&& self, int pos, int used) -> bool {
    if (pos == n) return used == k ? visit(a) : true;
    const int remaining = n - pos;
    for (int label = 0; label <= std::min(used, k - 1); ++label) {
      const int next_used = label == used ? used + 1 : used;
      if (k - next_used > remaining - 1) continue;
      a[static_cast<std::size_t>(pos)] = label;
      if (!self(self, pos + 1, next_used)) return false;
    }
    return true;
  };
  a[0] = 0;
  return rec(rec, 1, 1);
}

bool meets(const std::vector<int>& labels, const IndexSet& edge) {
  std::uint64_t seen = 0;
  for (int i : edge) {
    const std::uint64_t bit = 1ull << labels[static_cast<std::size_t>(i - 1)];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

void check_sizes(const Hypergraph& h) {
  if (h.k() > h.n()) throw PreconditionError("transversality needs k <= n");
  if (h.k() > 63) throw PreconditionError("k above 63 unsupported");
}

}  // namespace

std::vector<BlockPartition> set_partitions(int n, int k) {
  std::vector<BlockPartition> out;
  for_each_rgs(n, k, [&](const std::vector<int>& labels) {
    out.push_back(BlockPartition::from_labels(labels));
    return true;
  });
  return out;
}

std::optional<BlockPartition> failing_partition(const Hypergraph& h) {
  check_sizes(h);
  std::optional<BlockPartition> found;
  for_each_rgs(h.n(), h.k(), [&](const std::vector<int>& labels) {
    for (const auto& e : h.edges()) {
      if (meets(labels, e)) return true;
    }
    found = BlockPartition::from_labels(labels);
    return false;
  });
  return found;
}

bool is_transversal(const Hypergraph& h) { return !failing_partition(h).has_value(); }

PointConfiguration ydn_witness(const BlockPartition& partition, const std::vector<std::vector<Scalar>>& basis) {
  const auto k = static_cast<std::size_t>(partition.k());
  if (basis.size() != k) throw ShapeError("ydn_witness needs one basis vector per block");
  std::vector<std::vector<Scalar>> cols;
  for (const auto& v : basis) {
    if (v.size() != k) throw ShapeError("basis vectors must have length k");
  }
  MatrixK b(basis.front().front().field(), k, k);
  for (std::size_t j = 0; j < k; ++j) b.set_column(j, basis[j]);
  if (rank(b) != k) throw RankDeficiencyError("ydn_witness basis is linearly dependent");
  for (int i = 1; i <= partition.n(); ++i) cols.push_back(basis[static_cast<std::size_t>(partition.block_of(i))]);
  return make_config(static_cast<int>(k) - 1, partition.n(), cols);
}

PointConfiguration v2n_witness(const BlockPartition& partition, const PointConfiguration& q) {
  if (partition.k() != 6) throw ShapeError("v2n_witness needs a partition into 6 blocks");
  if (q.d() != 2 || q.n() != 6) throw ShapeError("v2n_witness needs 6 points of P^2");
  if (phi_det(q).is_zero()) throw PreconditionError("v2n_witness base points lie on a conic (phi = 0)");
  std::vector<std::vector<Scalar>> cols;
  for (int i = 1; i <= partition.n(); ++i) cols.push_back(q.point(static_cast<std::size_t>(partition.block_of(i))));
  return make_config(2, partition.n(), cols);
}

TransversalSearchResult min_transversal(int n, int k, SearchMode mode) {
  if (k < 1 || k > n) throw PreconditionError("min_transversal needs 1 <= k <= n");
  const auto candidates = combinations(n, k);
  if (mode == SearchMode::Exact && static_cast<long long>(candidates.size()) > kExactCandidateLimit) {
    throw BudgetExceededError("exact search over C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                              std::to_string(candidates.size()) + " candidate edges exceeds the limit of " +
                              std::to_string(kExactCandidateLimit));
  }

  // coverage[e] = bitset of partitions met transversally by edge e.
  std::vector<std::vector<int>> partitions;
  for_each_rgs(n, k, [&](const std::vector<int>& labels) {
    partitions.push_back(labels);
    return true;
  });
  const std::size_t words = (partitions.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> coverage(candidates.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t e = 0; e < candidates.size(); ++e)
    for (std::size_t p = 0; p < partitions.size(); ++p)
      if (meets(partitions[p], candidates[e])) coverage[e][p / 64] |= 1ull << (p % 64);

  std::vector<std::uint64_t> full(words, ~0ull);
  if (partitions.size() % 64) full.back() = (1ull << (partitions.size() % 64)) - 1;

  auto build = [&](const std::vector<std::size_t>& chosen) {
    std::vector<IndexSet> edges;
    for (auto e : chosen) edges.push_back(candidates[e]);
    return Hypergraph(n, k, std::move(edges));
  };

  if (mode == SearchMode::Greedy) {
    std::vector<std::uint64_t> covered(words, 0);
    std::vector<std::size_t> chosen;
    while (covered != full) {
      std::size_t best = 0;
      int best_gain = -1;
      for (std::size_t e = 0; e < candidates.size(); ++e) {
        int gain = 0;
        for (std::size_t w = 0; w < words; ++w) gain += __builtin_popcountll(coverage[e][w] & ~covered[w]);
        if (gain > best_gain) {
          best_gain = gain;
          best = e;
        }
      }
      chosen.push_back(best);
      for (std::size_t w = 0; w < words; ++w) covered[w] |= coverage[best][w];
    }
    return {chosen.size(), build(chosen), SearchMode::Greedy};
  }

  const int m = static_cast<int>(candidates.size());
  for (int size = 1; size <= m; ++size) {
    for (const auto& pick : combinations(m, size)) {
      std::vector<std::uint64_t> covered(words, 0);
      for (int idx : pick)
        for (std::size_t w = 0; w < words; ++w) covered[w] |= coverage[static_cast<std::size_t>(idx - 1)][w];
      if (covered == full) {
        std::vector<std::size_t> chosen;
        for (int idx : pick) chosen.push_back(static_cast<std::size_t>(idx - 1));
        return {chosen.size(), build(chosen), SearchMode::Exact};
      }
    }
  }
  throw Error("no transversal hypergraph found");  // unreachable: the complete hypergraph is transversal
}

TransversalBounds bounds(int n, int k) {
  if (k < 1 || k > n) throw PreconditionError("bounds need 1 <= k <= n");
  auto ceil_div = [](long long a, long long b) { return (a + b - 1) / b; };
  return {ceil_div(binomial(n, k - 1), k), ceil_div(2 * binomial(n, k), n - k + 2)};
}

}  // namespace veronese
