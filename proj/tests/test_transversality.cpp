#include <gtest/gtest.h>

#include "oracles.hpp"
#include "veronese/conic.hpp"
#include "veronese/transversality.hpp"

using namespace veronese;

namespace {

const Field kFp = Field::default_prime();
const Field kQ = Field::rationals();

Hypergraph pentagon() { return Hypergraph::from_lists(5, 3, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 1}, {5, 1, 2}}); }

std::vector<std::vector<Scalar>> standard_basis(const Field& f, int k) {
  const MatrixK id = MatrixK::identity(f, static_cast<std::size_t>(k));
  std::vector<std::vector<Scalar>> out;
  for (int j = 0; j < k; ++j) out.push_back(id.column(static_cast<std::size_t>(j)));
  return out;
}

Hypergraph random_hypergraph(RandomSource& rng, int n, int k) {
  auto all = combinations(n, k);
  rng.shuffle(all);
  all.resize(static_cast<std::size_t>(rng.integer(0, static_cast<long long>(all.size()))));
  return Hypergraph(n, k, all);
}

}  // namespace

TEST(HypergraphTest, Validation) {
  EXPECT_THROW(Hypergraph::from_lists(5, 3, {{1, 2}}), ShapeError);
  EXPECT_THROW(Hypergraph::from_lists(5, 3, {{1, 2, 6}}), ShapeError);
  EXPECT_THROW(Hypergraph::from_lists(5, 3, {{1, 2, 3}, {3, 2, 1}}), Error);
  EXPECT_EQ(Hypergraph::complete(7, 6).size(), 7u);
}

TEST(Partitions, StirlingCountsAndOrder) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto parts = set_partitions(n, k);
      EXPECT_EQ(static_cast<long long>(parts.size()), oracle::stirling2(n, k));
      for (const auto& p : parts) EXPECT_EQ(p.k(), k);
    }
  }
  const auto first = set_partitions(4, 2).front();
  EXPECT_EQ(first.blocks()[0], IndexSet(4, {1, 2, 3}));
  EXPECT_EQ(first.blocks()[1], IndexSet(4, {4}));
}

TEST(Partitions, Validation) {
  EXPECT_THROW(BlockPartition(4, {IndexSet(4, {1, 2}), IndexSet(4, {2, 3, 4})}), ShapeError);
  EXPECT_THROW(BlockPartition(4, {IndexSet(4, {1, 2}), IndexSet(4, {3})}), ShapeError);
  EXPECT_THROW(BlockPartition(4, {IndexSet(4, {1, 2, 3, 4}), IndexSet(4, std::vector<int>{})}), ShapeError);
}

TEST(Transversal, Examples) {
  EXPECT_TRUE(is_transversal(pentagon()));
  EXPECT_FALSE(is_transversal(Hypergraph::from_lists(3, 2, {{1, 2}})));
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_TRUE(is_transversal(Hypergraph::complete(n, k)));
  EXPECT_THROW(is_transversal(Hypergraph(3, 4)), PreconditionError);
}

TEST(Transversal, GraphsNeedConnectivity) {
  EXPECT_TRUE(is_transversal(Hypergraph::from_lists(4, 2, {{1, 2}, {2, 3}, {3, 4}})));
  EXPECT_FALSE(is_transversal(Hypergraph::from_lists(4, 2, {{1, 2}, {3, 4}})));
}

TEST(Transversal, FailingPartition) {
  EXPECT_FALSE(failing_partition(pentagon()).has_value());
  const auto h = pentagon().without(IndexSet(5, {1, 2, 3}));
  const auto p = failing_partition(h);
  ASSERT_TRUE(p.has_value());
  for (const auto& e : h.edges()) EXPECT_FALSE(p->met_transversally_by(e));
  const auto empty = failing_partition(Hypergraph(5, 3));
  ASSERT_TRUE(empty.has_value());
  EXPECT_EQ(*empty, set_partitions(5, 3).front());
}

TEST(Transversal, AgreesWithSurjectionOracle) {
  RandomSource rng(SampleRecipe{1, kFp, 100});
  for (int n = 2; n <= 7; ++n) {
    for (int k = 2; k <= std::min(n, 5); ++k) {
      for (int rep = 0; rep < 6; ++rep) {
        const auto h = random_hypergraph(rng, n, k);
        EXPECT_EQ(is_transversal(h), oracle::transversal_by_surjections(h)) << h.to_string();
      }
    }
  }
}

TEST(Transversal, Monotone) {
  RandomSource rng(SampleRecipe{2, kFp, 100});
  for (int rep = 0; rep < 40; ++rep) {
    auto h = random_hypergraph(rng, 6, 3);
    if (!is_transversal(h)) continue;
    for (const auto& e : combinations(6, 3)) EXPECT_TRUE(is_transversal(h.with(e)));
  }
}

TEST(YdnWitness, FullRankAndSeparating) {
  for (const auto& f : {kFp, kQ}) {
    const auto p = set_partitions(6, 3)[7];
    const auto w = ydn_witness(p, standard_basis(f, 3));
    EXPECT_EQ(rank(w.coords()), 3u);
    for (const auto& e : combinations(6, 3)) {
      EXPECT_EQ(maximal_minor(w.coords(), e).is_zero(), !p.met_transversally_by(e)) << e.to_string();
    }
  }
  auto basis = standard_basis(kQ, 3);
  basis[2] = basis[1];
  EXPECT_THROW(ydn_witness(set_partitions(6, 3)[0], basis), RankDeficiencyError);
}

TEST(YdnWitness, NonTransversalSeparatesFromY) {
  RandomSource rng(SampleRecipe{3, kFp, 100});
  int separated = 0;
  for (int rep = 0; rep < 30; ++rep) {
    const auto t = random_hypergraph(rng, 7, 4);
    const auto p = failing_partition(t);
    if (!p) continue;
    const auto w = ydn_witness(*p, standard_basis(kFp, 4));
    for (const auto& e : t.edges()) EXPECT_TRUE(maximal_minor(w.coords(), e).is_zero());
    EXPECT_FALSE(is_degenerate(w));
    ++separated;
  }
  EXPECT_GT(separated, 0);
}

TEST(V2nWitness, ReferenceBase) {
  const Field f = kQ;
  auto v = [&](std::initializer_list<long long> x) {
    std::vector<Scalar> out;
    for (auto e : x) out.push_back(f.from_int(e));
    return out;
  };
  const auto q = make_config(2, 6, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({1, 1, 1}), v({1, 2, 4}), v({1, 3, 9})});
  const auto all = combinations(7, 6);
  // Five of the seven 6-subsets of [7]: not transversal.
  const Hypergraph t(7, 6, {all[0], all[1], all[2], all[3], all[4]});
  const auto p = failing_partition(t);
  ASSERT_TRUE(p.has_value());
  const auto w = v2n_witness(*p, q);
  EXPECT_TRUE(v2n_subset_membership(w, t).all_vanish);
  EXPECT_FALSE(w2n_membership(w).all_vanish);

  const auto conic = make_config(2, 6, {v({1, 0, 0}), v({0, 0, 1}), v({1, 1, 1}), v({1, 2, 4}), v({1, 3, 9}),
                                        v({1, 4, 16})});
  EXPECT_THROW(v2n_witness(*p, conic), PreconditionError);
  EXPECT_THROW(v2n_witness(set_partitions(7, 5)[0], q), ShapeError);
}

TEST(MinTransversal, ExactValues) {
  const auto r53 = min_transversal(5, 3, SearchMode::Exact);
  EXPECT_EQ(r53.size, 5u);
  EXPECT_TRUE(is_transversal(r53.example));
  // Up to relabeling the minimum is a pentagon: every vertex has degree 3.
  for (int v = 1; v <= 5; ++v) {
    int deg = 0;
    for (const auto& e : r53.example.edges()) deg += e.contains(v);
    EXPECT_EQ(deg, 3);
  }
  EXPECT_EQ(min_transversal(7, 6, SearchMode::Exact).size, 6u);
  const auto r66 = min_transversal(6, 6, SearchMode::Exact);
  EXPECT_EQ(r66.size, 1u);
  EXPECT_EQ(r66.example.edges().front(), IndexSet::full(6));
}

TEST(MinTransversal, BudgetAndGreedy) {
  EXPECT_THROW(min_transversal(8, 4, SearchMode::Exact), BudgetExceededError);
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{5, 3}, {7, 6}, {6, 6}, {6, 5}}) {
    const auto greedy = min_transversal(n, k, SearchMode::Greedy);
    const auto exact = min_transversal(n, k, SearchMode::Exact);
    const auto b = bounds(n, k);
    EXPECT_TRUE(is_transversal(greedy.example));
    EXPECT_GE(greedy.size, exact.size);
    EXPECT_GE(static_cast<long long>(exact.size), b.incidence);
    EXPECT_GE(static_cast<long long>(exact.size), b.sterboul);
  }
  const auto big = min_transversal(8, 4, SearchMode::Greedy);
  EXPECT_TRUE(is_transversal(big.example));
}

TEST(Bounds, Values) {
  EXPECT_EQ(bounds(7, 6).incidence, 4);
  EXPECT_EQ(bounds(7, 6).sterboul, 5);
  EXPECT_EQ(bounds(5, 3).incidence, 4);
  EXPECT_THROW(bounds(3, 4), PreconditionError);
}
