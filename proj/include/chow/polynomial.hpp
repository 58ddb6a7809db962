#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chow/integer.hpp"

namespace chow {

/// Generator identifier: a flat index (matroid rings) or a semilattice element.
using GenId = std::uint32_t;

struct Factor {
  GenId gen;
  std::uint32_t exp;
  auto operator<=>(const Factor&) const = default;
};

/// Product of generator powers, kept sorted by generator with positive
/// exponents. Ordered lexicographically by the factor list.
class Monomial {
 public:
  Monomial() = default;

  static Monomial generator(GenId g, std::uint32_t exp = 1);
  /// Sorts, merges repeated generators and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t exponent(GenId g) const noexcept;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other) { return *this = *this * other; }
  /// Lowers the exponent of `g` by `exp`; the caller guarantees divisibility.
  Monomial divided(GenId g, std::uint32_t exp = 1) const;
  Monomial times(GenId g, std::uint32_t exp = 1) const;

  bool operator==(const Monomial& other) const noexcept { return factors_ == other.factors_; }
  std::strong_ordering operator<=>(const Monomial& other) const noexcept {
    return factors_ <=> other.factors_;
  }

  std::size_t hash() const noexcept;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Integer combination of monomials with no zero coefficients stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer>;

  Polynomial() = default;
  Polynomial(const Monomial& m, Integer c = 1);  // NOLINT(google-explicit-constructor)
  static Polynomial constant(Integer c) { return Polynomial(Monomial{}, std::move(c)); }
  static Polynomial generator(GenId g) { return Polynomial(Monomial::generator(g)); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Integer& c);
  /// Adds c * m * p.
  void add_scaled(const Polynomial& p, const Integer& c, const Monomial& m = {});

  Polynomial& operator+=(const Polynomial& p);
  Polynomial& operator-=(const Polynomial& p);
  Polynomial& operator*=(const Integer& c);
  Polynomial operator-() const;

  /// Common degree of all terms; zero counts as homogeneous of any degree.
  bool is_homogeneous() const noexcept;
  std::optional<std::uint32_t> degree() const noexcept;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

 private:
  Terms terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Integer& c);

/// Free-ring product, no reduction.
inline Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }

/// "h[2]^2*h[5]", "1" for the empty monomial.
std::string to_string(const Monomial& m);
/// "3*h[2]^2*h[5] - h[7]", "0" for zero. Terms in monomial order.
std::string to_string(const Polynomial& p);

/// Maps the text between "h[" and "]" to a generator; throws UnknownFlat.
using GeneratorResolver = std::function<GenId(std::string_view name, std::size_t position)>;

/// Grammar: sums of products of integers and h[name]^k factors.
/// Whitespace-insensitive. ParseError carries the offending position.
Polynomial parse_polynomial(std::string_view text, const GeneratorResolver& resolve);

/// Resolver accepting decimal generator indices below `count`.
GeneratorResolver index_resolver(std::size_t count);

}  // namespace chow
