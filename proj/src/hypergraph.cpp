#include "veronese/hypergraph.hpp"

#include <algorithm>

namespace veronese {

Hypergraph::Hypergraph(int n, int k, std::vector<IndexSet> edges) : n_(n), k_(k), edges_(std::move(edges)) {
  if (k < 1 || n < 0) throw ShapeError("hypergraph needs k >= 1 and n >= 0");
  for (const auto& e : edges_) {
    if (e.ground() != n) throw ShapeError("edge " + e.to_string() + " not on ground set [" + std::to_string(n) + "]");
    if (static_cast<int>(e.size()) != k) throw ShapeError("edge " + e.to_string() + " is not of size " + std::to_string(k));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw Error("repeated hypergraph edge");
}

Hypergraph Hypergraph::from_lists(int n, int k, const std::vector<std::vector<int>>& edges) {
  std::vector<IndexSet> sets;
  for (auto e : edges) {
    std::sort(e.begin(), e.end());
    sets.emplace_back(n, std::move(e));
  }
  return Hypergraph(n, k, std::move(sets));
}

Hypergraph Hypergraph::complete(int n, int k) { return Hypergraph(n, k, combinations(n, k)); }

bool Hypergraph::contains(const IndexSet& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

Hypergraph Hypergraph::without(const IndexSet& e) const {
  auto edges = edges_;
  edges.erase(std::remove(edges.begin(), edges.end(), e), edges.end());
  return Hypergraph(n_, k_, std::move(edges));
}

Hypergraph Hypergraph::with(const IndexSet& e) const {
  if (contains(e)) return *this;
  auto edges = edges_;
  edges.push_back(e);
  return Hypergraph(n_, k_, std::move(edges));
}

std::string Hypergraph::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += ", ";
    s += edges_[i].to_string();
  }
  return s + "]";
}

}  // namespace veronese
