#include "chow/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "chow/error.hpp"

namespace chow {

Monomial Monomial::generator(GenId g, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.factors_.push_back({g, exp});
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().gen == f.gen) {
      m.factors_.back().exp += f.exp;
    } else {
      m.factors_.push_back(f);
    }
    m.degree_ += f.exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(GenId g) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), g,
                             [](const Factor& f, GenId x) { return f.gen < x; });
  return it != factors_.end() && it->gen == g ? it->exp : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->gen < b->gen)) {
      m.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->gen < a->gen) {
      m.factors_.push_back(*b++);
    } else {
      m.factors_.push_back({a->gen, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  m.degree_ = degree_ + other.degree_;
  return m;
}

Monomial Monomial::divided(GenId g, std::uint32_t exp) const {
  Monomial m = *this;
  auto it = std::lower_bound(m.factors_.begin(), m.factors_.end(), g,
                             [](const Factor& f, GenId x) { return f.gen < x; });
  if (it == m.factors_.end() || it->gen != g || it->exp < exp) {
    throw Error(ErrorKind::Internal, "monomial is not divisible by the requested power");
  }
  it->exp -= exp;
  if (it->exp == 0) m.factors_.erase(it);
  m.degree_ -= exp;
  return m;
}

Monomial Monomial::times(GenId g, std::uint32_t exp) const {
  return *this * generator(g, exp);
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& f : factors_) {
    h ^= (static_cast<std::size_t>(f.gen) << 20 ^ f.exp) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

Polynomial::Polynomial(const Monomial& m, Integer c) {
  if (c != 0) terms_.emplace(m, std::move(c));
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::add_scaled(const Polynomial& p, const Integer& c, const Monomial& m) {
  if (c == 0) return;
  for (const auto& [mono, coeff] : p.terms_) {
    add_term(m.empty() ? mono : mono * m, coeff * c);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& p) {
  for (const auto& [m, c] : p.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& p) {
  for (const auto& [m, c] : p.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::optional<std::uint32_t> Polynomial::degree() const noexcept {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree();
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [m, c] : b.terms()) out.add_scaled(a, c, m);
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += "h[" + std::to_string(f.gen) + "]";
    if (f.exp != 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    Integer magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += to_string(m);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const GeneratorResolver& resolve)
      : text_(text), resolve_(resolve) {}

  Polynomial parse() {
    skip();
    if (at_end()) fail("empty expression");
    Polynomial out;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [coeff, mono] = term();
      if (sign < 0) coeff = -coeff;
      out.add_term(mono, coeff);
      first = false;
      skip();
    }
    return out;
  }

 private:
  std::pair<Integer, Monomial> term() {
    Integer coeff = 1;
    Monomial mono;
    while (true) {
      skip();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= integer();
      } else if (peek() == 'h') {
        mono *= generator();
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {coeff, mono};
  }

  Monomial generator() {
    ++pos_;
    skip();
    expect('[');
    skip();
    const std::size_t start = pos_;
    while (!at_end() && peek() != ']' && !std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (name.empty()) fail("empty generator name");
    skip();
    expect(']');
    GenId g = resolve_(name, start);
    skip();
    std::uint32_t exp = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      Integer e = integer();
      if (e < 1 || e > 1000000) fail_at(at, "exponent out of range");
      exp = static_cast<std::uint32_t>(e.get_ui());
    }
    return Monomial::generator(g, exp);
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    throw Error(ErrorKind::ParseError, "position " + std::to_string(at) + ": " + what);
  }

  std::string_view text_;
  const GeneratorResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const GeneratorResolver& resolve) {
  return Parser(text, resolve).parse();
}

GeneratorResolver index_resolver(std::size_t count) {
  return [count](std::string_view name, std::size_t position) -> GenId {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
    if (ec != std::errc{} || ptr != name.data() + name.size()) {
      throw Error(ErrorKind::ParseError, "position " + std::to_string(position) +
                                             ": generator index must be a number");
    }
    if (value >= count) {
      throw Error(ErrorKind::UnknownFlat, "position " + std::to_string(position) + ": h[" +
                                              std::string(name) + "] is not a generator");
    }
    return static_cast<GenId>(value);
  };
}

}  // namespace chow
