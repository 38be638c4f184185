#include <gtest/gtest.h>

#include "qkflag/verify.hpp"

using namespace qkflag;

namespace {

// copy of the n table with one structure constant replaced
MultiplicationTable corrupted(int n, SchubertIndex u, SchubertIndex v, SchubertIndex w, NovikovPolynomial p) {
  const auto t = build_table(n);
  std::vector<PolyMatrix> ms;
  for (int a = 0; a < t.size(); ++a) ms.push_back(t.matrix_at(a));
  ms[linear_index(u, n)].at(linear_index(w, n), linear_index(v, n)) = std::move(p);
  return MultiplicationTable(n, std::move(ms));
}

}  // namespace

TEST(PositivitySign, HandEvaluations) {
  for (int n = 4; n <= 6; ++n) {
    for (int p = 2; p < n; ++p) {
      EXPECT_EQ(positivity_sign({n - 1, 1}, {p + 1, p}, {p - 1, p + 1}, kDegreeZero, n), -1);
      EXPECT_EQ(positivity_sign({n - 1, 1}, {1, p}, {n, p}, kDegreeL1, n), 1);
    }
  }
}

TEST(Verify, AllChecksPassN3To6) {
  VerifyOptions opts;
  opts.assoc_max = 5;
  for (int n = 3; n <= 6; ++n) {
    const auto t = build_table(n);
    for (const auto& r : {positivity_check(t, opts), ring_axiom_checks(t, opts), classical_consistency_check(t, opts),
                          degree_check(t), chevalley_check(t, opts)}) {
      EXPECT_TRUE(r.pass) << r.check << " n=" << n;
      EXPECT_TRUE(r.counterexamples.empty());
      EXPECT_GT(r.examined, 0u);
    }
  }
}

TEST(Verify, PositivityDetectsWrongSign) {
  // O_{h1} * O_{3,2} at n=4 has coefficient -1 on O_{1,3}
  const auto t = corrupted(4, {3, 1}, {3, 2}, {1, 3}, NovikovPolynomial(Integer(1)));
  const auto r = positivity_check(t);
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.counterexamples.size(), 1u);
  EXPECT_EQ(r.counterexamples[0].w, (SchubertIndex{1, 3}));
}

TEST(Verify, RingAxiomsDetectAsymmetry) {
  const auto t = corrupted(4, {2, 3}, {1, 4}, {1, 2}, NovikovPolynomial::q1());
  const auto r = ring_axiom_checks(t);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(count_commutativity_mismatches(t), 0u);
}

TEST(Verify, ClassicalDetectsChange) {
  const auto t = corrupted(3, {2, 3}, {2, 1}, {1, 2}, NovikovPolynomial(Integer(5)));
  const auto r = classical_consistency_check(t);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.counterexamples.empty());
}

TEST(Verify, DegreeDetectsHighDegree) {
  const auto t = corrupted(4, {3, 1}, {2, 3}, {1, 2}, NovikovPolynomial::monomial({2, 0}));
  EXPECT_FALSE(degree_check(t).pass);
}

TEST(Verify, ClassicalSpotEntry) {
  const int n = 5;
  const auto t = build_table(n);
  KClass expected;
  expected.add({1, 2}, 1);
  expected.add({2, 3}, 1);
  expected.add({1, 3}, -1);
  EXPECT_EQ(classical_limit(t.product({n, 2}, {2, 1})), expected);
}

TEST(Verify, ReportsAreDeterministic) {
  const auto t = corrupted(4, {3, 1}, {3, 2}, {1, 3}, NovikovPolynomial(Integer(1)));
  VerifyOptions par;
  par.jobs = 4;
  const auto a = positivity_check(t);
  const auto b = positivity_check(t, par);
  ASSERT_EQ(a.counterexamples.size(), b.counterexamples.size());
  for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
    EXPECT_EQ(a.counterexamples[i].u, b.counterexamples[i].u);
    EXPECT_EQ(a.counterexamples[i].w, b.counterexamples[i].w);
  }
}

TEST(Arbitration, EveryVariantChangesTheTableFromN4) {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& c : arbitrate_chevalley(n).candidates) {
      if (!c.adopted) EXPECT_FALSE(c.same_as_default) << c.name << " n=" << n;
    }
  }
}

TEST(Arbitration, OnlyClassicalPlusCorrectionSurvives) {
  for (int n = 3; n <= 6; ++n) {
    const auto r = arbitrate_chevalley(n);
    EXPECT_TRUE(r.default_confirmed) << "n=" << n;
    ASSERT_EQ(r.candidates.size(), 4u);
    EXPECT_TRUE(r.candidates[0].adopted);
    EXPECT_EQ(r.candidates[0].classical_mismatches, 0u);
    EXPECT_EQ(r.candidates[0].commutativity_mismatches, 0u);
    for (std::size_t i = 1; i < r.candidates.size(); ++i) {
      EXPECT_FALSE(r.candidates[i].adopted);
      if (r.candidates[i].same_as_default) continue;
      EXPECT_GT(r.candidates[i].classical_mismatches + r.candidates[i].commutativity_mismatches, 0u)
          << r.candidates[i].name << " n=" << n;
    }
  }
}
