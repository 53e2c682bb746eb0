#include <gtest/gtest.h>

#include "veronese/configuration.hpp"
#include "veronese/conic.hpp"
#include "veronese/higher.hpp"
#include "veronese/io.hpp"

using namespace veronese;

namespace {

const Field kFp = Field::default_prime();
const Field kQ = Field::rationals();

std::vector<Scalar> ints(const Field& f, std::initializer_list<long long> v) {
  std::vector<Scalar> out;
  for (auto x : v) out.push_back(f.from_int(x));
  return out;
}

ParameterPair affine(const Field& f, long long t) { return {f.one(), f.from_int(t)}; }

}  // namespace

TEST(MakeConfig, Validation) {
  const auto p = make_config(2, 3, {ints(kQ, {1, 0, 0}), ints(kQ, {0, 1, 0}), ints(kQ, {0, 0, 1})});
  EXPECT_EQ(p.d(), 2);
  EXPECT_EQ(p.n(), 3);
  EXPECT_THROW(make_config(2, 1, {ints(kQ, {0, 0, 0})}), DegeneratePointError);
  EXPECT_THROW(make_config(2, 1, {ints(kQ, {1, 0})}), ShapeError);
  EXPECT_THROW(make_config(2, 2, {ints(kQ, {1, 0, 0})}), ShapeError);
}

TEST(MakeConfig, ProjectiveEquality) {
  const auto a = make_config(1, 2, {ints(kQ, {1, 2}), ints(kQ, {0, 3})});
  const auto b = make_config(1, 2, {ints(kQ, {-2, -4}), ints(kQ, {0, 1})});
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == make_config(1, 2, {ints(kQ, {1, 3}), ints(kQ, {0, 1})}));
}

TEST(MakeConfig, JsonRoundTrip) {
  for (const auto& f : {kFp, kQ}) {
    RandomSource rng(SampleRecipe{4, f, 100});
    std::vector<Scalar> scale;
    for (int i = 0; i < 7; ++i) scale.push_back(rng.nonzero_scalar());
    const auto p = sample_generic(3, 7, rng).rescaled(scale);
    const auto back = config_from_json(parse_json_text(config_to_json(p).dump()));
    EXPECT_EQ(back, p);
    EXPECT_EQ(back.coords(), p.coords());
  }
  const auto q = make_config(1, 1, {{kQ.parse_scalar("1/3"), kQ.parse_scalar("-7/2")}});
  EXPECT_EQ(config_to_json(q)["columns"][0][0], "1/3");
}

TEST(Degeneracy, Examples) {
  const auto basis = make_config(3, 4, {ints(kQ, {1, 0, 0, 0}), ints(kQ, {0, 1, 0, 0}), ints(kQ, {0, 0, 1, 0}),
                                        ints(kQ, {0, 0, 0, 1})});
  EXPECT_FALSE(is_degenerate(basis));
  const auto same = make_config(2, 4, std::vector<std::vector<Scalar>>(4, ints(kQ, {1, 2, 3})));
  EXPECT_TRUE(is_degenerate(same));
  RandomSource rng(SampleRecipe{8, kQ, 100});
  std::vector<std::vector<Scalar>> planar;
  for (int i = 0; i < 8; ++i) {
    auto v = rng.vector(4);
    v[3] = kQ.zero();
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) v[0] = kQ.one();
    planar.push_back(v);
  }
  EXPECT_TRUE(is_degenerate(make_config(3, 8, planar)));
  EXPECT_TRUE(is_degenerate(sample_degenerate(3, 8, rng)));
}

TEST(StrongNondegeneracy, SkewLines) {
  // Three points on each of the lines x2 = x3 = 0 and x0 = x1 = 0 in P^3.
  const auto p = make_config(3, 6, {ints(kQ, {1, 0, 0, 0}), ints(kQ, {0, 1, 0, 0}), ints(kQ, {1, 1, 0, 0}),
                                    ints(kQ, {0, 0, 1, 0}), ints(kQ, {0, 0, 0, 1}), ints(kQ, {0, 0, 1, 1})});
  EXPECT_TRUE(is_strongly_nondegenerate(p));
}

TEST(StrongNondegeneracy, HyperplanePlusOne) {
  // d+1 points on x3 = 0 plus one point off it (n = d+2).
  const auto p = make_config(3, 5, {ints(kQ, {1, 0, 0, 0}), ints(kQ, {0, 1, 0, 0}), ints(kQ, {0, 0, 1, 0}),
                                    ints(kQ, {1, 1, 1, 0}), ints(kQ, {0, 0, 0, 1})});
  EXPECT_FALSE(is_degenerate(p));
  EXPECT_FALSE(is_strongly_nondegenerate(p));
  EXPECT_EQ(strong_nondegeneracy_violation(p), 5);
}

TEST(StrongNondegeneracy, GenericIsStrong) {
  RandomSource rng(SampleRecipe{12, kFp, 100});
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 2; n <= d + 5; ++n) EXPECT_TRUE(is_strongly_nondegenerate(sample_generic(d, n, rng)));
}

TEST(Rnc, Points) {
  EXPECT_EQ(rnc_point(2, {kQ.one(), kQ.zero()}), ints(kQ, {1, 0, 0}));
  EXPECT_EQ(rnc_point(3, affine(kQ, 1)), ints(kQ, {1, 1, 1, 1}));
  EXPECT_EQ(rnc_point(2, affine(kQ, 2)), ints(kQ, {1, 2, 4}));
  EXPECT_THROW(rnc_point(2, {kQ.zero(), kQ.zero()}), PreconditionError);
}

TEST(Rnc, SampleOnStandardConic) {
  std::vector<ParameterPair> params;
  for (int t = 0; t < 6; ++t) params.push_back(affine(kQ, t));
  const auto p = sample_on_rnc(2, params, MatrixK::identity(kQ, 3));
  for (int i = 0; i < 6; ++i) {
    const auto pt = p.point(static_cast<std::size_t>(i));
    EXPECT_EQ(pt[0] * pt[2], pt[1] * pt[1]);
  }
  EXPECT_TRUE(phi_det(p).is_zero());
}

TEST(Rnc, Errors) {
  EXPECT_THROW(sample_on_rnc(2, {affine(kQ, 1), {kQ.from_int(2), kQ.from_int(2)}}, MatrixK::identity(kQ, 3)),
               DuplicatePointError);
  MatrixK singular = MatrixK::identity(kQ, 3);
  singular(2, 2) = kQ.zero();
  EXPECT_THROW(sample_on_rnc(2, {affine(kQ, 1), affine(kQ, 2)}, singular), RankDeficiencyError);
}

TEST(Rnc, LinearGeneralPosition) {
  for (const auto& f : {kFp, kQ}) {
    RandomSource rng(SampleRecipe{14, f, 100});
    for (int d = 1; d <= 4; ++d) {
      for (int n = d + 2; n <= d + 5; ++n) {
        const auto p = sample_random_rnc(d, n, rng);
        EXPECT_TRUE(is_strongly_nondegenerate(p));
        for (const auto& s : combinations(n, d + 1)) EXPECT_FALSE(maximal_minor(p.coords(), s).is_zero());
      }
    }
  }
}

TEST(Rnc, TwoEmbeddingsSatisfyGenerators) {
  RandomSource rng(SampleRecipe{15, kFp, 100});
  const auto params = rng.distinct_parameters(8);
  for (int rep = 0; rep < 2; ++rep) {
    const auto p = sample_on_rnc(3, params, rng.invertible_matrix(4));
    EXPECT_TRUE(wdn_membership(p).all_vanish);
  }
}

TEST(Sampling, Deterministic) {
  RandomSource a(SampleRecipe{99, kQ, 100}), b(SampleRecipe{99, kQ, 100});
  EXPECT_EQ(sample_random_rnc(3, 7, a).coords(), sample_random_rnc(3, 7, b).coords());
  const auto qa = sample_quasi_veronese_chain(3, {2, 1}, {4, 3}, SampleRecipe{5, kFp, 100});
  const auto qb = sample_quasi_veronese_chain(3, {2, 1}, {4, 3}, SampleRecipe{5, kFp, 100});
  EXPECT_EQ(qa.config.coords(), qb.config.coords());
}

TEST(Sampling, RandomIntegersStayInRange) {
  RandomSource rng(SampleRecipe{1, kQ, 3});
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.integer(-3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
    ++seen[static_cast<std::size_t>(v + 3)];
  }
  for (int c : seen) EXPECT_GT(c, 200);
}

TEST(QuasiVeronese, FigureTypesSpanAndSatisfyGenerators) {
  struct Case {
    std::vector<int> degrees;
    std::vector<int> counts;
    ChainTopology topology;
  };
  const std::vector<Case> cases{{{3}, {7}, ChainTopology::Chain},
                                {{2, 1}, {5, 4}, ChainTopology::Chain},
                                {{1, 1, 1}, {3, 3, 3}, ChainTopology::Chain},
                                {{1, 1, 1}, {3, 3, 3}, ChainTopology::Star}};
  for (const auto& f : {kFp, kQ}) {
    for (std::size_t c = 0; c < cases.size(); ++c) {
      const auto& cs = cases[c];
      const auto s = sample_quasi_veronese_chain(3, cs.degrees, cs.counts, SampleRecipe{c + 1, f, 50}, cs.topology);
      EXPECT_FALSE(is_degenerate(s.config));
      EXPECT_EQ(s.curve.components.size(), cs.degrees.size());
      const auto rep = wdn_membership(s.config);
      EXPECT_TRUE(rep.all_vanish) << "case " << c;
      EXPECT_EQ(rep.classification, Classification::InW_NotY);
    }
  }
}

TEST(QuasiVeronese, StarComponentsShareOnePoint) {
  const auto s = sample_quasi_veronese_chain(3, {1, 1, 1}, {3, 3, 3}, SampleRecipe{3, kQ, 50}, ChainTopology::Star);
  ASSERT_EQ(s.curve.attachments.size(), 2u);
  EXPECT_EQ(s.curve.attachments[0], s.curve.attachments[1]);
}

TEST(QuasiVeronese, Errors) {
  EXPECT_THROW(sample_quasi_veronese_chain(3, {2, 2}, {3, 3}, SampleRecipe{}), PreconditionError);
  EXPECT_THROW(sample_quasi_veronese_chain(3, {1, 1, 1}, {1, 1, 1}, SampleRecipe{}), SpanFailureError);
}

TEST(Dimension, FormulaValues) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    EXPECT_EQ(dimension_estimate(2, 6, SampleRecipe{seed, kFp, 100}), 11);
    EXPECT_EQ(dimension_estimate(3, 7, SampleRecipe{seed, kFp, 100}), 19);
  }
  EXPECT_EQ(dimension_estimate(2, 6, SampleRecipe{1, kQ, 20}), 11);
}

TEST(Dimension, LineCaseIsDominant) {
  for (int n = 4; n <= 7; ++n) EXPECT_EQ(dimension_estimate(1, n, SampleRecipe{2, kFp, 100}), n);
  EXPECT_THROW(dimension_estimate(3, 5, SampleRecipe{}), PreconditionError);
}

TEST(Invariance, RescalingPreservesBooleans) {
  RandomSource rng(SampleRecipe{16, kFp, 100});
  for (int rep = 0; rep < 20; ++rep) {
    const auto p = rep % 2 ? sample_random_rnc(3, 8, rng) : sample_generic(3, 8, rng);
    std::vector<Scalar> s;
    for (int i = 0; i < 8; ++i) s.push_back(rng.nonzero_scalar());
    const auto q = p.rescaled(s);
    EXPECT_EQ(is_degenerate(p), is_degenerate(q));
    EXPECT_EQ(is_strongly_nondegenerate(p), is_strongly_nondegenerate(q));
    EXPECT_EQ(wdn_membership(p).all_vanish, wdn_membership(q).all_vanish);
    EXPECT_EQ(p, q);
  }
}
