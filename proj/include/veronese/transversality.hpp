#pragma once

// Transversality of k-uniform hypergraphs: for every partition of [n] into k
// nonempty blocks some edge meets each block exactly once.

#include <optional>
#include <vector>

#include "veronese/configuration.hpp"
#include "veronese/hypergraph.hpp"

namespace veronese {

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// k pairwise disjoint nonempty blocks covering [n].
class BlockPartition {
 public:
  /// Throws ShapeError unless the blocks partition [n].
  BlockPartition(int n, std::vector<IndexSet> blocks);
  /// From a restricted growth string (labels 0..k−1, first occurrences increasing).
  static BlockPartition from_labels(const std::vector<int>& labels);

  int n() const { return n_; }
  int k() const { return static_cast<int>(blocks_.size()); }
  const std::vector<IndexSet>& blocks() const { return blocks_; }
  /// Zero-based block of 1-based element i.
  int block_of(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }

  /// |edge ∩ block| = 1 for every block.
  bool met_transversally_by(const IndexSet& edge) const;

  std::string to_string() const;
  friend bool operator==(const BlockPartition& a, const BlockPartition& b) { return a.labels_ == b.labels_; }

 private:
  int n_;
  std::vector<IndexSet> blocks_;
  std::vector<int> labels_;
};

/// Every partition of [n] into exactly k blocks, in lexicographic order of
/// restricted growth strings (S(n, k) of them).
std::vector<BlockPartition> set_partitions(int n, int k);

/// Throws PreconditionError if k > n.
bool is_transversal(const Hypergraph& h);

/// Lexicographically first partition that no edge meets transversally.
std::optional<BlockPartition> failing_partition(const Hypergraph& h);

/// Column i = basis[j] for i in block j. Full rank, yet every maximal minor on
/// a set that is not transversal to the partition vanishes. Throws
/// RankDeficiencyError for a dependent basis.
PointConfiguration ydn_witness(const BlockPartition& partition, const std::vector<std::vector<Scalar>>& basis);

/// d = 2 configuration with p_i = q_j for i in block j. Requires 6 blocks and
/// phi_det(q) ≠ 0 (PreconditionError otherwise).
PointConfiguration v2n_witness(const BlockPartition& partition, const PointConfiguration& q);

enum class SearchMode { Exact, Greedy };

struct TransversalSearchResult {
  std::size_t size = 0;
  Hypergraph example;
  SearchMode mode = SearchMode::Exact;
};

/// Exact: smallest transversal k-uniform hypergraph on [n] by increasing-size
/// subset search; only when C(n, k) ≤ kExactCandidateLimit (BudgetExceededError
/// otherwise). Greedy: greedy partition cover, an upper bound.
TransversalSearchResult min_transversal(int n, int k, SearchMode mode);

inline constexpr long long kExactCandidateLimit = 14;

struct TransversalBounds {
  long long incidence = 0;  ///< ⌈C(n, k−1) / k⌉
  long long sterboul = 0;   ///< ⌈2·C(n, k) / (n − k + 2)⌉
};

TransversalBounds bounds(int n, int k);

}  // namespace veronese
