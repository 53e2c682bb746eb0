#pragma once

#include <string>
#include <vector>

#include "veronese/matrix.hpp"

namespace veronese {

/// A k-uniform hypergraph on [n]: distinct k-subsets, kept sorted.
class Hypergraph {
 public:
  Hypergraph(int n, int k) : n_(n), k_(k) {}
  /// Throws ShapeError for edges of the wrong size/ground and Error for repeats.
  Hypergraph(int n, int k, std::vector<IndexSet> edges);
  /// Edges given as lists of 1-based vertices (any order).
  static Hypergraph from_lists(int n, int k, const std::vector<std::vector<int>>& edges);
  /// Every k-subset of [n].
  static Hypergraph complete(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<IndexSet>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool contains(const IndexSet& e) const;

  Hypergraph without(const IndexSet& e) const;
  Hypergraph with(const IndexSet& e) const;

  std::string to_string() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_;
  int k_;
  std::vector<IndexSet> edges_;
};

}  // namespace veronese
