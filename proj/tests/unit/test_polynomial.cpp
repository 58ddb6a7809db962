#include <random>

#include "chow/error.hpp"
#include "chow/polynomial.hpp"
#include "doctest.h"

using namespace chow;

namespace {

Polynomial h(GenId g) { return Polynomial::generator(g); }

Polynomial parse(std::string_view s) { return parse_polynomial(s, index_resolver(16)); }

Polynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gen(0, 5), exp(0, 3), coeff(-4, 4), count(0, 5);
  Polynomial p;
  for (int t = count(rng); t > 0; --t) {
    std::vector<Factor> fs;
    for (int k = 0; k < 3; ++k) fs.push_back({static_cast<GenId>(gen(rng)), static_cast<std::uint32_t>(exp(rng))});
    p.add_term(Monomial::from_factors(fs), coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("free products") {
  CHECK(h(2) * h(2) == Polynomial(Monomial::generator(2, 2)));
  CHECK((h(1) + h(2)) * Polynomial::constant(1) == h(1) + h(2));
  CHECK((h(1) - h(2)) * (h(1) + h(2)) ==
        Polynomial(Monomial::generator(1, 2)) - Polynomial(Monomial::generator(2, 2)));
  CHECK((h(1) - h(1)).is_zero());
  CHECK((h(3) * Integer(0)).is_zero());
}

TEST_CASE("monomial bookkeeping") {
  auto m = Monomial::from_factors({{5, 1}, {2, 2}, {5, 2}, {7, 0}});
  CHECK(m.size() == 2);
  CHECK(m.degree() == 5);
  CHECK(m.exponent(5) == 3);
  CHECK(m.exponent(7) == 0);
  CHECK(m.divided(5, 3) == Monomial::generator(2, 2));
  CHECK(m.times(1) == Monomial::from_factors({{1, 1}, {2, 2}, {5, 3}}));
  CHECK(Monomial{}.degree() == 0);
  CHECK_THROWS_AS(m.divided(2, 3), Error);
}

TEST_CASE("homogeneity") {
  CHECK(Polynomial{}.is_homogeneous());
  CHECK_FALSE(Polynomial{}.degree().has_value());
  CHECK(parse("h[1]*h[2] - 3*h[4]^2").degree() == 2u);
  CHECK_FALSE((h(1) + h(1) * h(2)).is_homogeneous());
}

TEST_CASE("text form") {
  CHECK(to_string(Polynomial{}) == "0");
  CHECK(to_string(Polynomial::constant(1)) == "1");
  CHECK(to_string(Polynomial::constant(-7)) == "-7");
  CHECK(to_string(parse("3*h[2]^2*h[5] - h[7]")) == "3*h[2]^2*h[5] - h[7]");
  CHECK(to_string(parse("h[5]*h[2]*h[2]*3 - h[7]")) == "3*h[2]^2*h[5] - h[7]");
  CHECK(to_string(parse("  - h[ 3 ] ^ 2 +2")) == "2 - h[3]^2");
  CHECK(to_string(parse("0")) == "0");
  CHECK(to_string(parse("h[1] - h[1]")) == "0");
}

TEST_CASE("parse errors carry positions") {
  auto kind_and_message = [](std::string_view s) {
    try {
      parse(s);
    } catch (const Error& e) {
      return std::pair{e.kind(), std::string(e.what())};
    }
    return std::pair{ErrorKind::Internal, std::string()};
  };
  auto [k1, m1] = kind_and_message("h[1] + ");
  CHECK(k1 == ErrorKind::ParseError);
  CHECK(m1.find("position 7") != std::string::npos);
  auto [k2, m2] = kind_and_message("h[1] h[2]");
  CHECK(k2 == ErrorKind::ParseError);
  CHECK(m2.find("position 5") != std::string::npos);
  CHECK(kind_and_message("").first == ErrorKind::ParseError);
  CHECK(kind_and_message("h[x]").first == ErrorKind::ParseError);
  CHECK(kind_and_message("h[1]^0").first == ErrorKind::ParseError);
  CHECK(kind_and_message("h[1").first == ErrorKind::ParseError);
  auto [k3, m3] = kind_and_message("h[1] + h[16]");
  CHECK(k3 == ErrorKind::UnknownFlat);
  CHECK(m3.find("position 9") != std::string::npos);
}

TEST_CASE("property: ring axioms and text round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q - q == p);
    CHECK(parse(to_string(p)) == p);
    CHECK(to_string(parse(to_string(p))) == to_string(p));
  }
}
