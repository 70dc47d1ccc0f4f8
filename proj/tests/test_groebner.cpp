#include <gtest/gtest.h>

#include <random>

#include "chernlab/groebner.hpp"
#include "support/fixtures.hpp"

using namespace chernlab;
using fixture::poly;
using fixture::polys;

namespace {

GroebnerBasis gb(const Ring& R, const std::vector<std::string>& texts) {
  const auto gens = polys(R, texts);
  return buchberger(gens, R);
}

// Random homogeneous polynomial of the given degree.
Polynomial random_form(const Ring& R, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Coeff> coeff(0, 6);
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(*R, degree)) terms.push_back({m, coeff(rng)});
  return Polynomial(R, std::move(terms));
}

}  // namespace

TEST(Buchberger, AlreadyReduced) {
  auto R = fixture::xyzw();
  EXPECT_EQ(gb(R, {"x", "y"}).elements().size(), 2u);
  EXPECT_EQ(gb(R, {"y", "x"}), gb(R, {"x", "y"}));
  const auto mono = gb(R, {"x*z", "x*w", "y*z", "y*w"});
  ASSERT_EQ(mono.size(), 4u);
  for (const auto& g : mono.elements()) EXPECT_EQ(g.size(), 1u);
}

TEST(Buchberger, SinglePairReduction) {
  auto R = fixture::xyzw();
  const auto basis = gb(R, {"x^2 - y", "x"});
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis.elements()[0], poly(R, "y"));
  EXPECT_EQ(basis.elements()[1], poly(R, "x"));
}

TEST(Buchberger, EmptyInputIsZeroIdeal) {
  auto R = fixture::xyzw();
  EXPECT_TRUE(buchberger(std::vector<Polynomial>{}, R).is_zero_ideal());
  EXPECT_TRUE(gb(R, {"0"}).is_zero_ideal());
  EXPECT_TRUE(gb(R, {"x", "1 + x - x"}).is_unit());
}

TEST(Buchberger, ReducedMonicSorted) {
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    auto R = fixture::xyzw(order);
    for (const auto& texts : fixture::test_ideals()) {
      const auto basis = gb(R, texts);
      const auto lead = basis.leading_monomials();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        EXPECT_EQ(basis.elements()[i].leading_coeff(), 1u);
        if (i + 1 < basis.size()) EXPECT_LT(R->compare(lead[i], lead[i + 1]), 0);
        for (std::size_t j = 0; j < basis.size(); ++j) {
          if (i == j) continue;
          for (const auto& t : basis.elements()[j].terms()) EXPECT_FALSE(lead[i].divides(t.monomial));
        }
      }
    }
  }
}

TEST(Buchberger, SPolynomialsReduceToZero) {
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    auto R = fixture::xyzw(order);
    for (const auto& texts : fixture::test_ideals()) {
      const auto basis = gb(R, texts);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
          EXPECT_TRUE(normal_form(s_polynomial(basis.elements()[i], basis.elements()[j]), basis).is_zero());
      for (const auto& g : polys(R, texts)) EXPECT_TRUE(normal_form(g, basis).is_zero());
    }
  }
}

TEST(Buchberger, Deterministic) {
  auto R = fixture::xyzw();
  for (const auto& texts : fixture::test_ideals()) EXPECT_EQ(gb(R, texts), gb(R, texts));
}

TEST(Buchberger, DegreeBoundTruncates) {
  auto R = fixture::xyzw();
  const auto gens = polys(R, {"x^2 - y*z", "x*y - z*w", "y^2 - x*w"});
  const auto full = buchberger(gens, R);
  GroebnerOptions opts;
  opts.degree_bound = 2;
  const auto cut = buchberger(gens, R, opts);
  EXPECT_TRUE(cut.truncated());
  EXPECT_FALSE(full.truncated());
  // Agreement with the full basis in degrees up to the bound.
  const auto a = standard_monomials_up_to(full, 2);
  const auto b = standard_monomials_up_to(cut, 2);
  EXPECT_EQ(a, b);
}

TEST(NormalForm, Examples) {
  auto R = fixture::xyzw();
  const auto xy = gb(R, {"x", "y"});
  EXPECT_TRUE(normal_form(poly(R, "x"), xy).is_zero());
  EXPECT_EQ(normal_form(poly(R, "z"), xy), poly(R, "z"));
  const auto big = gb(R, {"x + z", "y + w", "x*z", "x*w", "y*z", "y*w"});
  EXPECT_TRUE(normal_form(poly(R, "x*z"), big).is_zero());
}

TEST(NormalForm, IdempotentAndLinear) {
  std::mt19937_64 rng(5);
  auto R = fixture::xyzw();
  for (const auto& texts : fixture::test_ideals()) {
    const auto basis = gb(R, texts);
    const auto gens = polys(R, texts);
    for (int trial = 0; trial < 4; ++trial) {
      const Polynomial f = random_form(R, 3, rng);
      const Polynomial nf = normal_form(f, basis);
      EXPECT_EQ(normal_form(nf, basis), nf);
      // Members: combinations of generators with random coefficients.
      Polynomial a(R), b(R);
      for (const auto& g : gens) {
        a = a + random_form(R, 1, rng) * g;
        b = b + random_form(R, 2, rng) * g;
      }
      EXPECT_TRUE(normal_form(a, basis).is_zero());
      EXPECT_TRUE(normal_form(a + b, basis).is_zero());
      EXPECT_EQ(normal_form(f + a, basis), nf);
    }
  }
}

TEST(NormalForm, MembershipIndependentOfOrder) {
  std::mt19937_64 rng(9);
  auto G = fixture::xyzw();
  auto L = fixture::xyzw(MonomialOrder::lex());
  for (const auto& texts : fixture::test_ideals()) {
    const auto bg = gb(G, texts);
    const auto bl = gb(L, texts);
    const auto gens = polys(G, texts);
    for (int trial = 0; trial < 6; ++trial) {
      Polynomial f = random_form(G, 2, rng);
      if (trial % 2 == 0) f = random_form(G, 1, rng) * gens[static_cast<std::size_t>(trial) % gens.size()];
      const bool in_g = normal_form(f, bg).is_zero();
      const bool in_l = normal_form(f.reordered(L), bl).is_zero();
      EXPECT_EQ(in_g, in_l) << f.to_string();
    }
  }
}

TEST(StandardMonomials, Examples) {
  auto R = fixture::xyzw();
  const auto xy = standard_monomials_up_to(gb(R, {"x", "y"}), 1);
  ASSERT_EQ(xy.size(), 2u);
  EXPECT_EQ(xy[0].size(), 1u);
  EXPECT_TRUE(xy[0][0].is_one());
  ASSERT_EQ(xy[1].size(), 2u);
  EXPECT_EQ(xy[1][0], poly(R, "z").leading_monomial());
  EXPECT_EQ(xy[1][1], poly(R, "w").leading_monomial());

  const auto core = standard_monomials_up_to(gb(R, {"x*z", "x*w", "y*z", "y*w"}), 2);
  std::vector<Monomial> expected;
  for (const char* m : {"x^2", "x*y", "y^2", "z^2", "z*w", "w^2"}) expected.push_back(poly(R, m).leading_monomial());
  auto got = core[2];
  auto cmp = [&](const Monomial& a, const Monomial& b) { return R->compare(a, b) > 0; };
  std::sort(expected.begin(), expected.end(), cmp);
  EXPECT_EQ(got, expected);

  const auto unit = standard_monomials_up_to(gb(R, {"1"}), 3);
  for (const auto& layer : unit) EXPECT_TRUE(layer.empty());
}
