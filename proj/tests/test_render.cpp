#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "qkflag/errors.hpp"
#include "qkflag/render.hpp"
#include "test_support.hpp"

using namespace qkflag;

TEST(Render, Monomials) {
  EXPECT_EQ(render_monomial(kDegreeZero), "");
  EXPECT_EQ(render_monomial(kDegreeL1), "Q1");
  EXPECT_EQ(render_monomial(kDegreeL1L2), "Q1Q2");
  EXPECT_EQ(render_monomial({2, 1}), "Q1^2Q2");
  EXPECT_EQ(render_poly(NovikovPolynomial(Integer(1)) - NovikovPolynomial::monomial({2, 0}, 3)), "1 - 3*Q1^2");
}

TEST(Render, Classes) {
  EXPECT_EQ(render_class(QKClass(), 4), "0");
  QKClass c;
  c.add({2, 1}, NovikovPolynomial::monomial(kDegreeL1L2, -1));
  c.add({3, 1}, NovikovPolynomial::monomial(kDegreeL1L2));
  c.add({2, 3}, NovikovPolynomial::q1());
  EXPECT_EQ(render_product({2, 1}, {1, 3}, c, 3), "O_2,1 * O_1,3 = Q1*O_2,3 + Q1Q2*O_3,1 - Q1Q2*O_2,1");
  KClass k;
  k.add({1, 3}, -1);
  k.add({1, 2}, 2);
  EXPECT_EQ(render_class(k, 5), "2*O_1,2 - O_1,3");
}

TEST(Render, ClassJsonRoundTrip) {
  const auto t = build_table(4);
  for (const auto& u : enumerate_basis(RankData(4))) {
    for (const auto& v : enumerate_basis(RankData(4))) {
      const auto c = t.product(u, v);
      const auto j = class_to_json(c, 4);
      EXPECT_EQ(class_from_json(nlohmann::json::parse(j.dump())), c);
    }
  }
  EXPECT_TRUE(class_to_json(QKClass(), 3)["terms"].empty());
}

TEST(Render, TableJsonRoundTrip) {
  for (int n = 3; n <= 5; ++n) {
    const auto t = build_table(n);
    const auto text = render_table(t, OutputFormat::json);
    EXPECT_EQ(table_from_json(nlohmann::json::parse(text)), t);
    std::ifstream golden(test_support::data_path("table_n" + std::to_string(n) + ".json"));
    EXPECT_EQ(nlohmann::json::parse(text), nlohmann::json::parse(golden));
  }
}

TEST(Render, CsvRowCountIsNumberOfStructureConstants) {
  for (int n = 3; n <= 4; ++n) {
    std::ifstream in(test_support::data_path("table_n" + std::to_string(n) + ".json"));
    const auto golden = nlohmann::json::parse(in);
    std::size_t constants = 0;
    for (const auto& e : golden["entries"]) constants += e["poly"].size();
    const auto csv = render_table(build_table(n), OutputFormat::csv);
    const auto lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
    EXPECT_EQ(lines, constants + 1);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "u_i,u_j,v_i,v_j,w_i,w_j,d1,d2,coeff");
  }
}

TEST(Render, Deterministic) {
  const auto t = build_table(4);
  EXPECT_EQ(render_table(t, OutputFormat::text), render_table(build_table(4), OutputFormat::text));
  EXPECT_EQ(render_report(compare_with_table(t), OutputFormat::json),
            render_report(compare_with_table(t, ConjectureGate::literal, 3), OutputFormat::json));
}

TEST(Render, MalformedInput) {
  EXPECT_THROW(table_from_json(nlohmann::json::parse(R"({"n": 3})")), ParseError);
  EXPECT_THROW(table_from_json(nlohmann::json::parse(R"({"n": 3, "entries": [{"u": [1,1], "v": [1,2], "w": [1,2], "poly": []}]})")),
               InvalidIndex);
  EXPECT_THROW(load_table("/nonexistent/table.json"), ParseError);
  EXPECT_THROW(parse_format("xml"), ParseError);
}
