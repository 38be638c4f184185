#include <gtest/gtest.h>

#include "qkflag/errors.hpp"
#include "qkflag/kring.hpp"
#include "qkflag/render.hpp"
#include "test_support.hpp"

using namespace qkflag;

namespace {

KClass combo(std::initializer_list<std::pair<SchubertIndex, int>> terms) {
  KClass c;
  for (const auto& [w, x] : terms) c.add(w, x);
  return c;
}

}  // namespace

TEST(KProduct, Unit) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& v : enumerate_basis(RankData(n))) {
      EXPECT_EQ(k_product({n, 1}, v, n), KClass::single(v));
      EXPECT_EQ(k_product(v, {n, 1}, n), KClass::single(v));
    }
  }
}

TEST(KProduct, Examples) {
  EXPECT_EQ(k_product({4, 1}, {3, 5}, 5), KClass::single({2, 5}));
  for (int n = 4; n <= 6; ++n) {
    EXPECT_EQ(k_product({n, 2}, {2, 1}, n), combo({{{1, 2}, 1}, {{2, 3}, 1}, {{1, 3}, -1}}));
  }
  EXPECT_THROW(k_product({2, 2}, {1, 2}, 4), InvalidIndex);
}

TEST(KProduct, MatchesReferenceClassicalLimit) {
  for (int n : {3, 4, 5}) {
    const auto golden = test_support::golden_table(n);
    for (const auto& u : enumerate_basis(RankData(n))) {
      for (const auto& v : enumerate_basis(RankData(n))) {
        EXPECT_EQ(k_product(u, v, n), classical_limit(golden.product(u, v)))
            << to_string(u) << " * " << to_string(v) << " n=" << n;
      }
    }
  }
}

TEST(KProduct, CommutativeAndDualityEquivariant) {
  for (int n = 3; n <= 6; ++n) {
    const auto basis = enumerate_basis(RankData(n));
    for (const auto& u : basis) {
      for (const auto& v : basis) {
        const auto uv = k_product(u, v, n);
        EXPECT_EQ(uv, k_product(v, u, n));
        KClass dualized;
        for (const auto& [w, c] : uv.terms()) dualized.add(dual_index(w, n), c);
        EXPECT_EQ(dualized, k_product(dual_index(u, n), dual_index(v, n), n));
      }
    }
  }
}

TEST(KClassProduct, Bilinear) {
  const int n = 5;
  const KClass a = combo({{{3, 1}, 1}, {{2, 4}, -2}});
  const KClass b = KClass::single({4, 2});
  EXPECT_TRUE(k_class_product(a, KClass(), n).is_zero());
  EXPECT_EQ(k_class_product(KClass::single({n, 1}), b, n), b);
  EXPECT_EQ(k_class_product(a, b, n), k_product({3, 1}, {4, 2}, n) - k_product({2, 4}, {4, 2}, n).scaled(2));
}

TEST(ChowProduct, Examples) {
  EXPECT_TRUE(chow_product({1, 3}, {2, 4}, 5).is_zero());
  EXPECT_EQ(chow_product({4, 2}, {4, 3}, 5), combo({{{2, 4}, 1}, {{3, 5}, 1}}));
  EXPECT_EQ(chow_product({4, 1}, {3, 5}, 5), KClass::single({2, 5}));
}

TEST(ChowProduct, IsLeadingCodimensionPartOfKProduct) {
  for (int n = 3; n <= 7; ++n) {
    const auto basis = enumerate_basis(RankData(n));
    for (const auto& u : basis) {
      for (const auto& v : basis) {
        const int c = codim(u, n) + codim(v, n);
        KClass leading;
        const auto product = k_product(u, v, n);
        for (const auto& [w, x] : product.terms()) {
          EXPECT_GE(codim(w, n), c);
          if (codim(w, n) == c) leading.add(w, x);
        }
        EXPECT_EQ(leading, chow_product(u, v, n)) << to_string(u) << " * " << to_string(v) << " n=" << n;
      }
    }
  }
}
