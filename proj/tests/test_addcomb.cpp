#include <gtest/gtest.h>

#include "boolspec/addcomb.hpp"
#include "boolspec/prng.hpp"
#include "oracles.hpp"

using namespace boolspec;

namespace {

PointSet b_ce() {
  std::vector<Mask> pts;
  for (int i = 0; i < 6; ++i) pts.push_back(Mask{1} << i);
  pts.push_back(63);
  return PointSet(6, pts);
}

PointSet subspace_set(int n, std::vector<Mask> gens) {
  return PointSet(n, linear_span(n, gens).elements());
}

}  // namespace

TEST(PointSet, TranslateMatchesPointwise) {
  Xorshift64Star rng(4);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.between(0, 10);
    const PointSet s = oracle::random_set(n, rng, 30);
    const Mask a = static_cast<Mask>(rng.next()) & full_mask(n);
    PointSet want(n);
    for (Mask x : s.members()) want.insert(x ^ a);
    EXPECT_EQ(s.translate(a), want);
  }
}

TEST(Sumset, Examples) {
  Xorshift64Star rng(1);
  const PointSet a = oracle::random_set(6, rng, 20);
  EXPECT_EQ(sumset(PointSet(6, std::vector<Mask>{0}), a), a);
  const PointSet h = subspace_set(6, {3, 12, 33});
  EXPECT_EQ(sumset(h, h), h);
  EXPECT_EQ(sumset(b_ce(), b_ce()).size(), 22U);
  EXPECT_TRUE(sumset(PointSet(6), a).empty());
  EXPECT_THROW(sumset(PointSet(3), PointSet(4)), DimensionMismatch);
}

TEST(Sumset, MatchesBruteForce) {
  Xorshift64Star rng(2);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.between(1, 9);
    const PointSet a = oracle::random_set(n, rng, rng.between(1, 30));
    const PointSet b = oracle::random_set(n, rng, rng.between(1, 30));
    const auto want = oracle::naive_sumset(a.members(), b.members());
    const auto got = sumset(a, b).members();
    EXPECT_EQ(std::vector<Mask>(want.begin(), want.end()), got);
    EXPECT_EQ(sumset(a, b), sumset(b, a));
    const PointSet c = oracle::random_set(n, rng, 10);
    EXPECT_EQ(sumset(sumset(a, b), c), sumset(a, sumset(b, c)));
  }
}

TEST(IteratedSumset, Examples) {
  const PointSet b = b_ce();
  EXPECT_EQ(iterated_sumset(b, 1), b);
  EXPECT_EQ(iterated_sumset(b, 2), sumset(b, b));
  EXPECT_EQ(iterated_sumset(b, 2).size(), 22U);
  EXPECT_EQ((iterated_sumset(b, 3) - b).size(), 35U);
  EXPECT_THROW(iterated_sumset(b, 0), std::invalid_argument);
}

TEST(Fraction, ReducesAndOrders) {
  EXPECT_EQ(Fraction(44, 14), Fraction(22, 7));
  EXPECT_EQ(Fraction(22, 7).to_string(), "22/7");
  EXPECT_EQ(Fraction(6, 3).to_string(), "2");
  EXPECT_LT(Fraction(22, 7), Fraction(29, 8));
  EXPECT_THROW(Fraction(1, 0), std::invalid_argument);
  EXPECT_THROW(Fraction(-1, 2), std::invalid_argument);
  EXPECT_EQ(Fraction(2, 3) * Fraction(3, 4), Fraction(1, 2));
}

TEST(DoublingConstant, Examples) {
  EXPECT_EQ(doubling_constant(subspace_set(5, {1, 6, 24})), Fraction(1));
  EXPECT_EQ(doubling_constant(b_ce()), Fraction(22, 7));
  EXPECT_EQ(doubling_constant(PointSet(4, std::vector<Mask>{9})), Fraction(1));
  EXPECT_THROW(doubling_constant(PointSet(4)), std::invalid_argument);
}

TEST(IsSumFree, Examples) {
  EXPECT_TRUE(is_sum_free(b_ce()));
  EXPECT_FALSE(is_sum_free(PointSet(4, std::vector<Mask>{0, 7})));
  EXPECT_FALSE(is_sum_free(PointSet(3, std::vector<Mask>{1, 2, 3})));
}

TEST(IsSumFree, MatchesPairEnumeration) {
  Xorshift64Star rng(6);
  for (int i = 0; i < 300; ++i) {
    const int n = rng.between(1, 8);
    const PointSet a = oracle::random_set(n, rng, rng.between(1, 12));
    bool free = true;
    for (Mask x : a.members()) {
      for (Mask y : a.members()) {
        if (a.contains(x ^ y)) free = false;
      }
    }
    EXPECT_EQ(is_sum_free(a), free);
  }
}

TEST(EvenZohar, Anchors) {
  EXPECT_EQ(even_zohar_s(Fraction(46, 15)), 5);
  EXPECT_EQ(even_zohar_F(Fraction(46, 15)), Fraction(92, 15));
  EXPECT_LT(even_zohar_F(Fraction(46, 15)), Fraction(7));
  EXPECT_EQ(even_zohar_s(Fraction(1)), 1);
  EXPECT_EQ(even_zohar_F(Fraction(1)), Fraction(1));
  EXPECT_EQ(even_zohar_s(Fraction(22, 7)), 6);
  EXPECT_EQ(even_zohar_F(Fraction(22, 7)), Fraction(64, 7));
  EXPECT_EQ(even_zohar_F(Fraction(22, 7)) * Fraction(7), Fraction(64));
  EXPECT_THROW(even_zohar_s(Fraction(1, 2)), std::invalid_argument);
}

TEST(EvenZohar, BracketsAreContiguous) {
  // The lower end of bracket s + 1 belongs to s + 1, anything just below to s.
  for (std::int64_t s = 1; s < 40; ++s) {
    const std::int64_t c2 = (s + 1) * s / 2;
    const Fraction next_low(c2 + s + 2, s + 2);
    EXPECT_EQ(even_zohar_s(next_low), s + 1);
    EXPECT_EQ(even_zohar_s(Fraction(next_low.num() * 1000 - 1, next_low.den() * 1000)), s);
  }
}

TEST(EvenZohar, BoundsAffineSpanOfRandomSets) {
  Xorshift64Star rng(77);
  for (int i = 0; i < 10000; ++i) {
    const int n = rng.between(1, 10);
    PointSet a(n);
    const int size = rng.between(1, std::min(40, 1 << n));
    for (int j = 0; j < size; ++j) a.insert(static_cast<Mask>(rng.next()) & full_mask(n));
    const auto span = affine_span(n, a.members());
    const Fraction ratio(static_cast<std::int64_t>(span.size()), static_cast<std::int64_t>(a.size()));
    const Fraction k = doubling_constant(a);
    if (even_zohar_s(k) + 1 >= 63) continue;
    EXPECT_LE(ratio, even_zohar_F(k)) << "n=" << n << " |A|=" << a.size();
  }
}

TEST(LabaCheck, Examples) {
  EXPECT_EQ(laba_check(subspace_set(5, {1, 2, 4})), LabaVerdict::Subgroup);
  PointSet h = subspace_set(5, {1, 2, 4});
  h.erase(0);
  EXPECT_EQ(sumset(h, h).size(), 8U);
  EXPECT_EQ(laba_check(h), LabaVerdict::Subgroup);
  EXPECT_EQ(laba_check(PointSet(4, std::vector<Mask>{1, 2, 4, 8})), LabaVerdict::NotApplicable);
  EXPECT_THROW(laba_check(PointSet(4)), std::invalid_argument);
  EXPECT_EQ(to_string(LabaVerdict::Violation), "Violation");
}

TEST(LabaCheck, NeverViolatedOnRandomSets) {
  Xorshift64Star rng(13);
  for (int i = 0; i < 3000; ++i) {
    const int n = rng.between(1, 10);
    PointSet a(n);
    // Mostly dense subsets of small subspaces, where the lemma actually applies.
    const Subspace v = linear_span(n, std::vector<Mask>{static_cast<Mask>(rng.next()) & full_mask(n),
                                                        static_cast<Mask>(rng.next()) & full_mask(n),
                                                        static_cast<Mask>(rng.next()) & full_mask(n)});
    const Mask shift = static_cast<Mask>(rng.next()) & full_mask(n);
    for (Mask e : v.elements()) {
      if (rng.below(10) < 8) a.insert(e ^ shift);
    }
    if (a.empty()) a.insert(shift);
    EXPECT_NE(laba_check(a), LabaVerdict::Violation);
  }
}
