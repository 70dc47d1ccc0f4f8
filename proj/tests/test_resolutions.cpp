#include <gtest/gtest.h>

#include "chernlab/errors.hpp"
#include "chernlab/resolutions.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace chernlab;
using fixture::ideal;
using fixture::poly;

TEST(EnMatrix, BandedLayout) {
  auto R = fixture::xyzw();
  const auto a = fixture::polys(R, {"x", "y"});
  const auto data = en_matrix(a, 2);
  ASSERT_EQ(data.matrix.size(), 2u);
  ASSERT_EQ(data.matrix[0].size(), 3u);
  EXPECT_EQ(data.matrix[0][0], a[0]);
  EXPECT_EQ(data.matrix[0][1], a[1]);
  EXPECT_TRUE(data.matrix[0][2].is_zero());
  EXPECT_TRUE(data.matrix[1][0].is_zero());
  EXPECT_EQ(data.matrix[1][1], a[0]);
  EXPECT_EQ(data.matrix[1][2], a[1]);
  const auto minors = en_power_generators(data);
  EXPECT_EQ(Ideal(R, minors), ideal(R, {"x^2", "x*y", "y^2"}));
}

TEST(EnMatrix, DegenerateCases) {
  auto R = fixture::xyzw();
  const auto one = fixture::polys(R, {"x + z"});
  EXPECT_EQ(en_power_generators(en_matrix(one, 4)), std::vector<Polynomial>{pow(one[0], 4)});
  const auto three = fixture::polys(R, {"x", "y", "z"});
  const auto data = en_matrix(three, 1);
  EXPECT_EQ(en_power_generators(data), three);
  EXPECT_THROW(en_matrix(three, 0), DomainError);
}

TEST(EnMatrix, MinorsGeneratePowers) {
  auto R = fixture::xyzw();
  for (const auto& params : std::vector<std::vector<std::string>>{{"x", "y"}, {"x", "y", "z"}, {"x + z", "y - w"}}) {
    const auto a = fixture::polys(R, params);
    const Ideal J(R, a);
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(Ideal(R, en_power_generators(en_matrix(a, n))), ideal_power(J, n));
  }
}

TEST(EnBetti, Examples) {
  EXPECT_EQ(en_betti(2, 3, 1), 6);
  EXPECT_EQ(en_betti(2, 3, 3), 3);
  for (int d = 1; d <= 6; ++d)
    for (int i = 1; i <= d; ++i) EXPECT_EQ(en_betti(1, d, i), binomial(d, i));
  EXPECT_THROW(en_betti(2, 3, 0), DomainError);
  EXPECT_THROW(en_betti(2, 3, 4), DomainError);
}

TEST(EnBetti, EulerCharacteristicVanishes) {
  for (int d = 1; d <= 8; ++d)
    for (int n = 1; n <= 8; ++n) {
      const auto b = en_betti_vector(n, d);
      BigInt chi = 0;
      for (std::size_t i = 0; i < b.size(); ++i) chi += i % 2 ? BigInt(-b[i]) : b[i];
      EXPECT_EQ(chi, 0) << "d=" << d << " n=" << n;
    }
}

TEST(EnBetti, FirstBettiIsGeneratorCount) {
  auto R = make_ring({"a", "b", "c", "e", "f"});
  const std::vector<std::string> vars = {"a", "b", "c", "e", "f"};
  for (int d = 1; d <= 4; ++d) {
    const Ideal J = ideal(R, std::vector<std::string>(vars.begin(), vars.begin() + d));
    for (int n = 1; n <= 4; ++n) {
      EXPECT_EQ(en_betti(n, d, 1), binomial(n + d - 1, d - 1));
      EXPECT_EQ(BigInt(static_cast<unsigned long>(ideal_power(J, n).generators().size())), en_betti(n, d, 1));
    }
  }
}

TEST(Tor1ClosedForm, Examples) {
  EXPECT_EQ(tor1_closed_form(3, 2, 1), 4);
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(tor1_closed_form(1, d, 7), 7 * d);
  EXPECT_EQ(tor1_closed_form(4, 3, 0), 0);
}

TEST(Tor1ViaLengths, TwoPlanes) {
  auto R = fixture::xyzw();
  const std::vector<Ideal> ideals = {ideal(R, {"x", "y"}), ideal(R, {"z", "w"})};
  const Ideal J = ideal(R, {"x + z", "y + w"});
  const auto model = build_L(ideals);
  EXPECT_EQ(tor1_via_lengths(ideals, J, model, 1), 2);
  EXPECT_EQ(tor1_via_lengths(ideals, J, model, 3), 4);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(tor1_via_lengths(ideals, J, model, n), tor1_closed_form(n, 2, 1));
}

TEST(Tor1ViaLengths, SingleComponentVanishes) {
  auto R = fixture::xyzw();
  const std::vector<Ideal> ideals = {ideal(R, {"x", "y"})};
  const Ideal J = ideal(R, {"z", "w"});
  const auto model = build_L(ideals);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(tor1_via_lengths(ideals, J, model, n), 0);
}

TEST(Koszul, SmallCases) {
  auto R = fixture::xyzw();
  const auto one = koszul_complex(fixture::polys(R, {"x"}));
  ASSERT_EQ(one.differentials.size(), 1u);
  EXPECT_EQ(one.differentials[0][0][0], poly(R, "x"));

  const auto two = koszul_complex(fixture::polys(R, {"x", "y"}));
  // d_1 = [a1 a2], d_2 = [[-a2], [a1]].
  EXPECT_EQ(two.differentials[0][0][0], poly(R, "x"));
  EXPECT_EQ(two.differentials[0][0][1], poly(R, "y"));
  EXPECT_EQ(two.differentials[1][0][0], poly(R, "-y"));
  EXPECT_EQ(two.differentials[1][1][0], poly(R, "x"));
  EXPECT_TRUE(is_zero(multiply(two.differentials[0], two.differentials[1])));

  const auto three = koszul_complex(fixture::polys(R, {"x", "y", "z"}));
  EXPECT_EQ(three.ranks, (std::vector<BigInt>{1, 3, 3, 1}));
  EXPECT_TRUE(is_zero(multiply(three.differentials[0], three.differentials[1])));
  EXPECT_TRUE(is_zero(multiply(three.differentials[1], three.differentials[2])));
}

TEST(Koszul, SquareIsZero) {
  auto R = make_ring({"a", "b", "c", "e", "f"});
  const std::vector<std::string> params = {"a + b", "b*c - e^2", "c", "e + 3*f", "a*f"};
  for (int d = 1; d <= 5; ++d) {
    const auto k = koszul_complex(fixture::polys(R, std::vector<std::string>(params.begin(), params.begin() + d)));
    BigInt alt = 0;
    for (std::size_t i = 0; i < k.ranks.size(); ++i) alt += i % 2 ? BigInt(-k.ranks[i]) : k.ranks[i];
    EXPECT_EQ(alt, 0);
    for (std::size_t i = 0; i + 1 < k.differentials.size(); ++i)
      EXPECT_TRUE(is_zero(multiply(k.differentials[i], k.differentials[i + 1]))) << "d=" << d;
  }
}

TEST(Determinant, Laplace) {
  auto R = fixture::xyzw();
  const PolyMatrix m = {{poly(R, "x"), poly(R, "y")}, {poly(R, "z"), poly(R, "w")}};
  EXPECT_EQ(determinant(m), poly(R, "x*w - y*z"));
}
