#pragma once

#include <string>
#include <vector>

#include "chernlab/ideal.hpp"
#include "chernlab/parse.hpp"

namespace fixture {

inline chernlab::Ring xyzw(chernlab::MonomialOrder order = chernlab::MonomialOrder::grevlex()) {
  return chernlab::make_ring({"x", "y", "z", "w"}, chernlab::RingContext::kDefaultCharacteristic, order);
}

inline chernlab::Ring six() { return chernlab::make_ring({"x1", "x2", "x3", "x4", "x5", "x6"}); }

inline chernlab::Polynomial poly(const chernlab::Ring& ring, const std::string& text) {
  return chernlab::parse_polynomial(text, ring);
}

inline std::vector<chernlab::Polynomial> polys(const chernlab::Ring& ring, const std::vector<std::string>& texts) {
  std::vector<chernlab::Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(ring, t));
  return out;
}

inline chernlab::Ideal ideal(const chernlab::Ring& ring, const std::vector<std::string>& texts) {
  return chernlab::Ideal(ring, polys(ring, texts));
}

}  // namespace fixture

namespace fixture {

// Homogeneous generator sets in x, y, z, w used by property tests.
inline std::vector<std::vector<std::string>> test_ideals() {
  return {
      {"x", "y"},
      {"x*z", "x*w", "y*z", "y*w"},
      {"x + z", "y + w", "x*z", "x*w", "y*z", "y*w"},
      {"x^2 - y*z", "x*y - z*w", "y^2 - x*w"},
      {"x^3 - y*z*w", "x*y^2 + z^3", "w^3 - x^2*y"},
      {"x^2", "x*y", "y^2", "z", "w"},
      {"x*y - z^2", "y*w - x^2", "x*w - y*z"},
      {"x^2 + y^2 + z^2 + w^2", "x*y + z*w", "x^3 - w^3"},
      {"x", "y^2"},
      {"x + 2*z", "y + 3*w"},
  };
}

}  // namespace fixture
