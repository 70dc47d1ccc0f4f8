#include <gtest/gtest.h>

#include <random>

#include "chernlab/errors.hpp"
#include "chernlab/ideal.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace chernlab;
using fixture::ideal;
using fixture::poly;

namespace {

Polynomial random_form(const Ring& R, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Coeff> coeff(0, 4);
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(*R, degree)) terms.push_back({m, coeff(rng)});
  return Polynomial(R, std::move(terms));
}

}  // namespace

TEST(IdealSum, Examples) {
  auto R = fixture::xyzw();
  const Ideal m = Ideal::maximal(R);
  EXPECT_EQ(ideal_sum(ideal(R, {"x", "y"}), ideal(R, {"z", "w"})), m);
  const Ideal a = ideal(R, {"x^2 - y*z", "x*w"});
  EXPECT_EQ(ideal_sum(a, a), a);
  EXPECT_EQ(ideal_sum(ideal(R, {"x", "y"}), ideal(R, {"x + z", "y + w"})), m);
}

TEST(IdealSum, ContextMismatch) {
  auto R = fixture::xyzw();
  auto other = fixture::six();
  EXPECT_THROW(ideal_sum(ideal(R, {"x"}), ideal(other, {"x1"})), ContextMismatch);
}

TEST(Ideal, RejectsInhomogeneous) {
  auto R = fixture::xyzw();
  EXPECT_THROW(ideal(R, {"x^2 - y"}), NotHomogeneous);
  EXPECT_NO_THROW(ideal(R, {"x^2 - y*z", "0"}));
}

TEST(IdealPower, Examples) {
  auto R = fixture::xyzw();
  EXPECT_EQ(ideal_power(ideal(R, {"x", "y"}), 2), ideal(R, {"x^2", "x*y", "y^2"}));
  const Ideal a = ideal(R, {"x^2 - y*z", "x*w"});
  EXPECT_EQ(ideal_power(a, 1), a);
  const Ideal j2 = ideal_power(ideal(R, {"x + z", "y + w"}), 2);
  EXPECT_EQ(j2.generators().size(), 3u);
  EXPECT_EQ(j2, ideal(R, {"(x+z)^2", "(x+z)*(y+w)", "(y+w)^2"}));
  EXPECT_THROW(ideal_power(a, 0), DomainError);
}

TEST(IdealPower, MatchesProduct) {
  auto R = fixture::xyzw();
  for (const auto& texts : fixture::test_ideals()) {
    const Ideal a = ideal(R, texts);
    EXPECT_EQ(ideal_power(a, 2), ideal_product(a, a));
  }
}

TEST(IdealIntersect, Examples) {
  auto R = fixture::xyzw();
  EXPECT_EQ(ideal_intersect(ideal(R, {"x", "y"}), ideal(R, {"z", "w"})), ideal(R, {"x*z", "x*w", "y*z", "y*w"}));
  const Ideal a = ideal(R, {"x^2 - y*z", "x*w"});
  EXPECT_EQ(ideal_intersect(a, a), a);
  auto K = make_ring({"x"});
  EXPECT_EQ(ideal_intersect(ideal(K, {"x"}), ideal(K, {"x"})), ideal(K, {"x"}));
}

TEST(IdealIntersect, AuxiliaryNameDoesNotClash) {
  auto R = make_ring({"_t", "x", "y"});
  EXPECT_EQ(ideal_intersect(ideal(R, {"x"}), ideal(R, {"y"})), ideal(R, {"x*y"}));
  EXPECT_EQ(ideal_intersect(ideal(R, {"_t"}), ideal(R, {"x"})), ideal(R, {"_t*x"}));
}

TEST(IdealIntersect, MembershipOracle) {
  std::mt19937_64 rng(21);
  auto R = fixture::xyzw();
  const auto sets = fixture::test_ideals();
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    const Ideal a = ideal(R, sets[i]), b = ideal(R, sets[i + 1]);
    const Ideal both = ideal_intersect(a, b);
    EXPECT_TRUE(a.contains(both));
    EXPECT_TRUE(b.contains(both));
    for (int trial = 0; trial < 8; ++trial) {
      Polynomial f = random_form(R, 2 + trial % 2, rng);
      if (trial % 3 == 0) {
        // Force membership through a product element.
        f = a.generators()[0] * b.generators()[0];
      }
      EXPECT_EQ(both.contains(f), a.contains(f) && b.contains(f)) << f.to_string();
    }
  }
}

TEST(KrullDimension, Examples) {
  auto R = fixture::xyzw();
  EXPECT_EQ(krull_dimension(ideal(R, {"x", "y"})), 2);
  EXPECT_EQ(krull_dimension(ideal(R, {"x*z", "x*w", "y*z", "y*w"})), 2);
  EXPECT_EQ(krull_dimension(Ideal::unit(R)), -1);
  EXPECT_EQ(krull_dimension(Ideal::zero(R)), 4);
  EXPECT_EQ(krull_dimension(ideal(R, {"x^2 - y*z", "x*y - z*w", "y^2 - x*w"})), 2);
}

TEST(HilbertSeries, Examples) {
  std::vector<Monomial> none;
  const auto free4 = hilbert_series_monomial(none, 4);
  EXPECT_EQ(free4.numerator(), std::vector<BigInt>{1});
  EXPECT_EQ(free4.denominator_exponent(), 4);

  auto R = fixture::xyzw();
  const auto xy = hilbert_series(ideal(R, {"x", "y"}));
  EXPECT_EQ(xy.numerator(), std::vector<BigInt>{1});
  EXPECT_EQ(xy.denominator_exponent(), 2);

  std::vector<Monomial> quad;
  for (const char* m : {"x*z", "x*w", "y*z", "y*w"}) quad.push_back(poly(R, m).leading_monomial());
  EXPECT_EQ(hilbert_numerator(quad, 4), (std::vector<BigInt>{1, 0, -4, 4, -1}));
  const auto hs = hilbert_series_monomial(quad, 4);
  EXPECT_EQ(hs.coefficient(0), 1);
  for (int s = 1; s <= 12; ++s) EXPECT_EQ(hs.coefficient(s), 2 * (s + 1));
  EXPECT_EQ(hs.denominator_exponent(), 2);
}

TEST(HilbertSeries, Arithmetic) {
  const HilbertSeries a({1}, 2), b({1, 1}, 1);
  const HilbertSeries sum = a + b;
  for (int s = 0; s <= 8; ++s) EXPECT_EQ(sum.coefficient(s), a.coefficient(s) + b.coefficient(s));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(HilbertSeries({1, -1}, 1), HilbertSeries({1}, 0));
}

TEST(HilbertSeries, AgreesWithStandardMonomials) {
  auto R = fixture::xyzw();
  auto S6 = fixture::six();
  std::vector<Ideal> ideals;
  for (const auto& texts : fixture::test_ideals()) ideals.push_back(ideal(R, texts));
  ideals.push_back(ideal_power(ideal(R, {"x + z", "y + w"}), 3));
  ideals.push_back(ideal_sum(ideal_intersect(ideal(R, {"x", "y"}), ideal(R, {"z", "w"})),
                             ideal_power(ideal(R, {"x + z", "y + w"}), 2)));
  ideals.push_back(ideal(S6, {"x1*x4", "x2*x5", "x3^2 - x6^2", "x1*x2*x3"}));
  for (const auto& I : ideals) {
    const auto hs = hilbert_series(I);
    const auto layers = standard_monomials_up_to(I.groebner_basis(), 10);
    for (int s = 0; s <= 10; ++s)
      EXPECT_EQ(hs.coefficient(s), static_cast<long>(layers[static_cast<std::size_t>(s)].size()))
          << I.to_string() << " degree " << s;
  }
}

TEST(HilbertSeries, AgreesWithLinearAlgebraOracle) {
  auto R = fixture::xyzw();
  for (const auto& texts : fixture::test_ideals()) {
    const Ideal I = ideal(R, texts);
    const auto hs = hilbert_series(I);
    const auto gens = fixture::polys(R, texts);
    for (int s = 0; s <= 5; ++s) EXPECT_EQ(hs.coefficient(s), oracle::hilbert_function(gens, 4, 32003, s));
  }
}

TEST(LengthQuotient, Examples) {
  auto R = fixture::xyzw();
  EXPECT_EQ(length_quotient(Ideal::maximal(R)), 1);
  const Ideal core = ideal_intersect(ideal(R, {"x", "y"}), ideal(R, {"z", "w"}));
  EXPECT_EQ(length_quotient(ideal_sum(core, ideal(R, {"x + z", "y + w"}))), 3);
  EXPECT_EQ(length_quotient(ideal(R, {"x^2", "x*y", "y^2", "z", "w"})), 3);
  EXPECT_EQ(length_quotient(Ideal::unit(R)), 0);
  EXPECT_THROW(length_quotient(ideal(R, {"x", "y"})), NotFiniteLength);
}

TEST(LengthQuotient, ConsistentWithSeriesAndOracle) {
  auto R = fixture::xyzw();
  const std::vector<std::vector<std::string>> finite = {
      {"x^2", "x*y", "y^2", "z", "w"},
      {"x^2 - y*z", "x*y - z*w", "y^2 - x*w", "z^2", "w^2"},
      {"x + z", "y + w", "x*z", "x*w", "y*z", "y*w"},
      {"x^3", "y^3", "z^2 - x*w", "w^2"},
  };
  for (const auto& texts : finite) {
    const Ideal I = ideal(R, texts);
    const BigInt len = length_quotient(I);
    const auto hs = hilbert_series(I);
    ASSERT_TRUE(hs.is_polynomial());
    EXPECT_EQ(hs.numerator_at_one(), len);
    BigInt counted = 0;
    for (const auto& layer : standard_monomials_up_to(I.groebner_basis(), 20)) counted += static_cast<long>(layer.size());
    EXPECT_EQ(counted, len);
    EXPECT_EQ(oracle::length(fixture::polys(R, texts), 4, 32003), len.get_si());
  }
}

TEST(IsMPrimary, Examples) {
  auto R = fixture::xyzw();
  EXPECT_TRUE(is_mprimary(Ideal::maximal(R)));
  EXPECT_FALSE(is_mprimary(ideal(R, {"x", "y"})));
  EXPECT_TRUE(is_mprimary(ideal_sum(ideal(R, {"x", "y"}), ideal(R, {"z", "w"}))));
}

TEST(KrullDimension, ParameterBound) {
  // dim S/core + dim S/J <= r for a system of parameters J.
  auto R = fixture::xyzw();
  const Ideal core = ideal_intersect(ideal(R, {"x", "y"}), ideal(R, {"z", "w"}));
  for (const auto& params : std::vector<std::vector<std::string>>{{"x + z", "y + w"}, {"x + 2*z", "y + 3*w"}}) {
    const Ideal J = ideal(R, params);
    EXPECT_LE(krull_dimension(core) + krull_dimension(J), 4);
  }
}
