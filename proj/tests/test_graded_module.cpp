#include <gtest/gtest.h>

#include "chernlab/errors.hpp"
#include "chernlab/graded_module.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace chernlab;
using fixture::ideal;
using fixture::poly;

namespace {

std::vector<Ideal> make_ideals(const Ring& R, const std::vector<std::vector<std::string>>& sets) {
  std::vector<Ideal> out;
  for (const auto& s : sets) out.push_back(ideal(R, s));
  return out;
}

std::vector<std::vector<Polynomial>> make_gens(const Ring& R, const std::vector<std::vector<std::string>>& sets) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& s : sets) out.push_back(fixture::polys(R, s));
  return out;
}

void expect_matches_oracle(const Ring& R, const std::vector<std::vector<std::string>>& sets) {
  const auto model = build_L(make_ideals(R, sets));
  const auto gens = make_gens(R, sets);
  long total = 0;
  const int top = model.top_degree().value_or(-1);
  for (int s = 0; s <= top + 2; ++s) {
    const long dim = oracle::cokernel_dimension(gens, R->num_variables(), R->characteristic(), s);
    EXPECT_EQ(model.dimension(s), dim) << "degree " << s;
    EXPECT_EQ(model.series().coefficient(s), dim) << "degree " << s;
    total += dim;
  }
  EXPECT_EQ(model.lambda(), total);
  EXPECT_EQ(model.series().numerator_at_one(), model.lambda());
  EXPECT_TRUE(model.actions_commute());
}

}  // namespace

TEST(BuildL, SingleComponentIsZero) {
  auto R = fixture::xyzw();
  const auto model = build_L(make_ideals(R, {{"x", "y"}}));
  EXPECT_EQ(lambda_L(model), 0);
  EXPECT_FALSE(model.top_degree().has_value());
  EXPECT_EQ(model.dimension(0), 0);
}

TEST(BuildL, TwoPlanes) {
  auto R = fixture::xyzw();
  const auto model = build_L(make_ideals(R, {{"x", "y"}, {"z", "w"}}));
  EXPECT_EQ(lambda_L(model), 1);
  ASSERT_TRUE(model.top_degree().has_value());
  EXPECT_EQ(*model.top_degree(), 0);
  EXPECT_EQ(model.dimension(0), 1);
  EXPECT_EQ(model.dimension(1), 0);
  expect_matches_oracle(R, {{"x", "y"}, {"z", "w"}});
}

TEST(BuildL, TwoThreePlanes) {
  auto R = fixture::six();
  const auto model = build_L(make_ideals(R, {{"x1", "x2", "x3"}, {"x4", "x5", "x6"}}));
  EXPECT_EQ(lambda_L(model), 1);
  expect_matches_oracle(R, {{"x1", "x2", "x3"}, {"x4", "x5", "x6"}});
}

TEST(BuildL, ThreePlanesMatchesOracle) {
  auto R = fixture::xyzw();
  const std::vector<std::vector<std::string>> sets = {{"x", "y"}, {"z", "w"}, {"x + z", "y + w"}};
  expect_matches_oracle(R, sets);
  EXPECT_EQ(lambda_L(build_L(make_ideals(R, sets))), 4);
}

TEST(BuildL, TwoComponentsMatchSumColength) {
  // For g = 2, L is S/(I_1 + I_2).
  auto R = fixture::xyzw();
  const std::vector<std::vector<std::vector<std::string>>> cases = {
      {{"x", "y^2"}, {"z", "w"}},
      {{"x^2", "y"}, {"z^2", "w^3"}},
      {{"x - y", "z"}, {"x + y", "w"}},
  };
  for (const auto& sets : cases) {
    std::vector<Polynomial> sum = fixture::polys(R, sets[0]);
    for (const auto& f : fixture::polys(R, sets[1])) sum.push_back(f);
    EXPECT_EQ(lambda_L(build_L(make_ideals(R, sets))), oracle::length(sum, 4, R->characteristic()));
    expect_matches_oracle(R, sets);
  }
}

TEST(BuildL, InfiniteLengthRejected) {
  auto R = fixture::xyzw();
  EXPECT_THROW(build_L(make_ideals(R, {{"x", "y"}, {"x", "z"}})), NotFiniteLength);
}

TEST(Annihilates, Examples) {
  auto R = fixture::xyzw();
  const auto two_planes = build_L(make_ideals(R, {{"x", "y"}, {"z", "w"}}));
  EXPECT_TRUE(annihilates(ideal(R, {"x + z", "y + w"}), two_planes));
  const auto trivial = build_L(make_ideals(R, {{"x", "y"}}));
  EXPECT_TRUE(annihilates(ideal(R, {"z", "w"}), trivial));
}

TEST(Annihilates, ModelWithPositiveTopDegree) {
  // L = S/(x, y^2, z, w) has basis {1, y}; only y acts nontrivially.
  auto R = fixture::xyzw();
  const auto model = build_L(make_ideals(R, {{"x", "y^2"}, {"z", "w"}}));
  ASSERT_EQ(model.top_degree(), 1);
  EXPECT_EQ(model.dimension(0), 1);
  EXPECT_EQ(model.dimension(1), 1);
  const Matrix& by_y = model.multiplication(1, 0);
  ASSERT_EQ(by_y.rows, 1);
  ASSERT_EQ(by_y.cols, 1);
  EXPECT_NE(by_y.at(0, 0), 0u);
  for (int v : {0, 2, 3}) EXPECT_TRUE(model.multiplication(v, 0).is_zero());
  EXPECT_TRUE(model.action(poly(R, "x + z"), 0).is_zero());
  EXPECT_FALSE(model.action(poly(R, "y + w"), 0).is_zero());
  EXPECT_TRUE(model.action(poly(R, "y^2 + w^2"), 0).is_zero());
  EXPECT_FALSE(annihilates(ideal(R, {"x + z", "y + w"}), model));
  EXPECT_TRUE(annihilates(ideal(R, {"x + z", "y^2 + w^2"}), model));
}

TEST(Coset, DiagonalElementsVanish) {
  auto R = fixture::xyzw();
  const auto model = build_L(make_ideals(R, {{"x", "y^2"}, {"z", "w"}}));
  const Polynomial y = poly(R, "y");
  const std::vector<Polynomial> diagonal = {y, y};
  const Vec v = model.coset(diagonal, 1);
  for (auto c : v) EXPECT_EQ(c, 0u);
  const std::vector<Polynomial> one_sided = {y, Polynomial(R)};
  const Vec u = model.coset(one_sided, 1);
  ASSERT_EQ(u.size(), 1u);
  EXPECT_NE(u[0], 0u);
}

TEST(JnColength, Examples) {
  auto R = fixture::xyzw();
  const Ideal J = ideal(R, {"x + z", "y + w"});
  const auto model = build_L(make_ideals(R, {{"x", "y"}, {"z", "w"}}));
  EXPECT_EQ(jn_colength(model, J, 0), 0);
  EXPECT_EQ(jn_colength(model, J, 1), 1);
  EXPECT_EQ(jn_colength(model, J, 5), lambda_L(model));
}

TEST(JnColength, MonotoneAndStabilizes) {
  auto R = fixture::xyzw();
  const auto model = build_L(make_ideals(R, {{"x", "y^3"}, {"z", "w"}}));
  ASSERT_EQ(model.top_degree(), 2);
  const Ideal J = ideal(R, {"x + z", "y + w"});
  // L = k[y]/(y^3) with J acting through y: colengths 1, 2, 3.
  BigInt prev = 0;
  for (int n = 0; n <= 6; ++n) {
    const BigInt c = jn_colength(model, J, n);
    EXPECT_GE(c, prev);
    prev = c;
    if (n > *model.top_degree() + 1) EXPECT_EQ(c, lambda_L(model));
  }
  EXPECT_EQ(jn_colength(model, J, 1), 1);
  EXPECT_EQ(jn_colength(model, J, 2), 2);
  EXPECT_EQ(jn_colength(model, J, 3), 3);
}
