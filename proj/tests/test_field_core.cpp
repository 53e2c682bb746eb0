#include <gtest/gtest.h>

#include "oracles.hpp"
#include "veronese/configuration.hpp"
#include "veronese/conic.hpp"
#include "veronese/jet.hpp"
#include "veronese/matrix.hpp"

using namespace veronese;

namespace {

const Field kFp = Field::default_prime();
const Field kQ = Field::rationals();

std::vector<Field> both_fields() { return {kFp, kQ}; }

}  // namespace

TEST(Field, PrimeFieldArithmetic) {
  const Field f = Field::prime(7);
  EXPECT_EQ(f.from_int(5) + f.from_int(4), f.from_int(2));
  EXPECT_EQ(f.from_int(3) * f.from_int(5), f.one());
  EXPECT_EQ(f.from_int(3).inverse(), f.from_int(5));
  EXPECT_EQ(f.from_int(-1), f.from_int(6));
  EXPECT_EQ(f.from_int(2).pow(3), f.one());
  EXPECT_TRUE((f.from_int(7)).is_zero());
}

TEST(Field, RationalsStayCanonical) {
  const Scalar a = kQ.parse_scalar("6/-4");
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(a.rational().get_den(), 2);
  EXPECT_EQ((a * kQ.parse_scalar("2/3")).to_string(), "-1");
  EXPECT_EQ(kQ.parse_scalar("0/5"), kQ.zero());
}

TEST(Field, RejectsBadInput) {
  EXPECT_THROW(Field::prime(65520), Error);
  EXPECT_THROW(Field::prime(1ull << 33), Error);
  EXPECT_THROW(kQ.parse_scalar("1/0"), Error);
  EXPECT_THROW(kQ.parse_scalar("abc"), Error);
  EXPECT_THROW(kFp.zero().inverse(), DivisionByZeroError);
  EXPECT_THROW(kQ.one() / kQ.zero(), DivisionByZeroError);
  EXPECT_THROW((void)(kQ.one() + kFp.one()), FieldMismatchError);
  EXPECT_THROW((void)(kQ.one() == kFp.one()), FieldMismatchError);
}

TEST(Field, ParseNames) {
  EXPECT_EQ(Field::parse("Q"), kQ);
  EXPECT_EQ(Field::parse("Fp"), kFp);
  EXPECT_EQ(Field::parse("Fp:101").characteristic(), 101u);
  EXPECT_EQ(Field::parse("Fp:101").to_string(), "Fp:101");
  EXPECT_THROW(Field::parse("R"), Error);
}

TEST(Field, FieldAxiomsOnRandomElements) {
  for (const auto& f : both_fields()) {
    RandomSource rng(SampleRecipe{17, f, 1000});
    for (int i = 0; i < 200; ++i) {
      const Scalar a = rng.scalar(), b = rng.scalar(), c = rng.nonzero_scalar();
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a / c * c, a);
      EXPECT_EQ(c * c.inverse(), f.one());
      EXPECT_EQ(a - a, f.zero());
    }
  }
}

TEST(Det, IdentityAndRepeatedColumns) {
  for (const auto& f : both_fields()) {
    EXPECT_EQ(det(MatrixK::identity(f, 6)), f.one());
    auto m = MatrixK::from_rows(f, {{1, 2, 1}, {3, 4, 3}, {5, 9, 5}});
    EXPECT_TRUE(det(m).is_zero());
  }
  EXPECT_THROW(det(MatrixK(kQ, 2, 3)), ShapeError);
}

TEST(Det, MatchesCofactorOracle) {
  for (const auto& f : both_fields()) {
    RandomSource rng(SampleRecipe{5, f, 50});
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int rep = 0; rep < 5; ++rep) {
        const MatrixK m = rng.matrix(n, n);
        EXPECT_EQ(det(m), oracle::cofactor_det(m)) << f.to_string() << " n=" << n;
      }
    }
  }
}

TEST(Det, RationalEntriesWithDenominators) {
  const MatrixK m = MatrixK::from_rows({{kQ.parse_scalar("1/2"), kQ.parse_scalar("1/3")},
                                        {kQ.parse_scalar("1/4"), kQ.parse_scalar("1/5")}});
  EXPECT_EQ(det(m), kQ.parse_scalar("1/60"));
  EXPECT_EQ(det(m), oracle::cofactor_det(m));
}

TEST(Det, AlternatingAndMultilinear) {
  for (const auto& f : both_fields()) {
    RandomSource rng(SampleRecipe{9, f, 30});
    for (std::size_t n = 4; n <= 6; ++n) {
      MatrixK m = rng.matrix(n, n);
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      std::swap(order[0], order[n - 1]);
      EXPECT_EQ(det(m.select_columns(order)), -det(m));

      const Scalar c = rng.nonzero_scalar();
      MatrixK scaled = m;
      for (std::size_t r = 0; r < n; ++r) scaled(r, 2) = scaled(r, 2) * c;
      EXPECT_EQ(det(scaled), c * det(m));
    }
  }
}

TEST(Minor, SmallExamples) {
  const MatrixK id = MatrixK::identity(kQ, 4);
  EXPECT_EQ(minor(id, IndexSet(4, {1, 2}), IndexSet(4, {1, 2})), kQ.one());
  EXPECT_TRUE(minor(id, IndexSet(4, {1, 2}), IndexSet(4, {3, 4})).is_zero());
  EXPECT_THROW(minor(id, IndexSet(4, {1}), IndexSet(4, {3, 4})), ShapeError);
}

TEST(Minor, MaximalMinorMatchesOracle) {
  RandomSource rng(SampleRecipe{3, kFp, 100});
  const MatrixK m = rng.matrix(3, 7);
  const IndexSet cols(7, {2, 5, 7});
  EXPECT_EQ(maximal_minor(m, cols), oracle::cofactor_det(m.select_columns(cols)));
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(MatrixK(kQ, 3, 4)), 0u);
  EXPECT_EQ(rank(MatrixK::identity(kQ, 3).hconcat(MatrixK::identity(kQ, 3))), 3u);
  for (const auto& f : both_fields()) {
    RandomSource rng(SampleRecipe{21, f, 100});
    const auto p = sample_random_rnc(2, 6, rng);
    EXPECT_EQ(rank(veronese_lift_matrix(p)), 5u);
  }
}

TEST(Rank, TransposeInvariant) {
  for (const auto& f : both_fields()) {
    RandomSource rng(SampleRecipe{22, f, 5});
    for (int rep = 0; rep < 20; ++rep) {
      const auto r = static_cast<std::size_t>(rng.integer(1, 5));
      const auto c = static_cast<std::size_t>(rng.integer(1, 6));
      // Low-rank products to exercise deficient cases.
      const auto inner = static_cast<std::size_t>(rng.integer(1, 4));
      const MatrixK m = rng.matrix(r, inner) * rng.matrix(inner, c);
      EXPECT_EQ(rank(m), rank(m.transpose()));
      EXPECT_LE(rank(m), inner);
    }
  }
}

TEST(Kernel, StandardFormGivesTransposeBlock) {
  for (const auto& f : both_fields()) {
    RandomSource rng(SampleRecipe{31, f, 20});
    const MatrixK under = rng.matrix(3, 4);
    const MatrixK a = MatrixK::identity(f, 3).hconcat(under);
    MatrixK expected = under.transpose().hconcat(MatrixK::identity(f, 4));
    for (std::size_t i = 0; i < 4; ++i) expected(i, 3 + i) = -f.one();
    EXPECT_EQ(kernel_basis(a), expected);
  }
}

TEST(Kernel, OneByTwo) {
  const MatrixK k = kernel_basis(MatrixK::from_rows(kQ, {{1, 1}}));
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_EQ(k(0, 0), -k(0, 1));
  EXPECT_FALSE(k(0, 0).is_zero());
}

TEST(Kernel, AnnihilatesRows) {
  for (const auto& f : both_fields()) {
    RandomSource rng(SampleRecipe{32, f, 100});
    for (int rep = 0; rep < 10; ++rep) {
      const MatrixK m = rng.matrix(4, 7);
      const MatrixK b = kernel_basis(m);
      EXPECT_EQ(b.rows(), 3u);
      EXPECT_EQ(rank(b), 3u);
      EXPECT_TRUE((m * b.transpose()).is_zero());
    }
  }
  EXPECT_THROW(kernel_basis(MatrixK::from_rows(kQ, {{1, 2, 3}, {2, 4, 6}})), RankDeficiencyError);
}

TEST(Inverse, RoundTrip) {
  for (const auto& f : both_fields()) {
    RandomSource rng(SampleRecipe{33, f, 100});
    const MatrixK g = rng.invertible_matrix(5);
    EXPECT_EQ(g * inverse(g), MatrixK::identity(f, 5));
  }
  EXPECT_THROW(inverse(MatrixK(kQ, 2, 2)), RankDeficiencyError);
}

TEST(Rref, PivotsAndShape) {
  const MatrixK m = MatrixK::from_rows(kQ, {{0, 2, 4, 1}, {0, 1, 2, 0}});
  std::vector<std::size_t> pivots;
  const MatrixK r = rref(m, &pivots);
  EXPECT_EQ(pivots, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(r, MatrixK::from_rows(kQ, {{0, 1, 2, 0}, {0, 0, 0, 1}}));
}

TEST(IndexSetTest, SIndexExamples) {
  EXPECT_EQ(s_index(IndexSet(3, {1, 2, 3})), 0);
  EXPECT_EQ(s_index(IndexSet(6, {1, 4, 5})), 4);
  EXPECT_EQ(s_index(IndexSet(6, {4, 5, 6})), 9);
}

TEST(IndexSetTest, SIndexShiftedBlocks) {
  for (int k = 0; k <= 8; ++k)
    for (int m = 1; m <= 8; ++m) EXPECT_EQ(s_index(IndexSet::interval(k + m, k + 1, k + m)), k * m);
}

TEST(IndexSetTest, Validation) {
  EXPECT_THROW(IndexSet(5, {2, 2}), ShapeError);
  EXPECT_THROW(IndexSet(5, {3, 1}), ShapeError);
  EXPECT_THROW(IndexSet(5, {0, 1}), ShapeError);
  EXPECT_THROW(IndexSet(5, {1, 6}), ShapeError);
  EXPECT_EQ(IndexSet(6, {1, 4, 5}).complement(), IndexSet(6, {2, 3, 6}));
  EXPECT_EQ(IndexSet(6, {1, 4, 5}).to_string(), "{1,4,5}");
}

TEST(IndexSetTest, CombinationsAreLexicographic) {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto all = combinations(n, k);
      ASSERT_EQ(static_cast<long long>(all.size()), binomial(n, k));
      for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(combination_rank(all[i]), i);
        if (i > 0) EXPECT_LT(all[i - 1], all[i]);
      }
    }
  }
  EXPECT_EQ(binomial(7, 6), 7);
  EXPECT_EQ(binomial(3, 5), 0);
}

// f(x, y) = (x²y + 3x − y⁴) / (x + 2y + 7), gradient expanded by hand.
TEST(Jet, MatchesHandDerivedGradient) {
  for (const auto& f : both_fields()) {
    RandomSource rng(SampleRecipe{41, f, 50});
    int checked = 0;
    while (checked < 50) {
      const Scalar x = rng.scalar(), y = rng.scalar();
      const Scalar den = x + f.from_int(2) * y + f.from_int(7);
      if (den.is_zero()) continue;
      const JetScalar jx = JetScalar::variable(x, 0, 2), jy = JetScalar::variable(y, 1, 2);
      const JetScalar c3 = JetScalar::constant(f.from_int(3), 2), c2 = JetScalar::constant(f.from_int(2), 2),
                      c7 = JetScalar::constant(f.from_int(7), 2);
      const JetScalar num = jx * jx * jy + c3 * jx - jy * jy * jy * jy;
      const JetScalar val = num / (jx + c2 * jy + c7);

      const Scalar n = x * x * y + f.from_int(3) * x - y.pow(4);
      const Scalar nx = f.from_int(2) * x * y + f.from_int(3);
      const Scalar ny = x * x - f.from_int(4) * y.pow(3);
      const Scalar dx = (nx * den - n) / (den * den);
      const Scalar dy = (ny * den - f.from_int(2) * n) / (den * den);
      EXPECT_EQ(val.value(), n / den);
      EXPECT_EQ(val.partials()[0], dx);
      EXPECT_EQ(val.partials()[1], dy);
      ++checked;
    }
  }
}

TEST(Jet, ProductRuleAndErrors) {
  const JetScalar a = JetScalar::variable(kQ.from_int(3), 0, 3);
  const JetScalar b = JetScalar::variable(kQ.from_int(5), 2, 3);
  const JetScalar p = a * b;
  EXPECT_EQ(p.partials()[0], kQ.from_int(5));
  EXPECT_TRUE(p.partials()[1].is_zero());
  EXPECT_EQ(p.partials()[2], kQ.from_int(3));
  EXPECT_THROW(a / JetScalar::constant(kQ.zero(), 3), DivisionByZeroError);
  EXPECT_THROW(a + JetScalar::constant(kQ.one(), 2), Error);
}
