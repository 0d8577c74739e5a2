#include "logder/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "logder/error.hpp"
#include "logder/matrix.hpp"

namespace logder {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exponents_.at(index) = 1;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exponents_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Rational Monomial::evaluate(std::span<const Rational> point) const {
  Rational value = 1;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    for (std::uint32_t e = 0; e < exponents_[i]; ++e) value *= point[i];
  }
  return value;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents_.size(); ++i) out.exponents_[i] += b.exponents_[i];
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents_.size(); ++i) out.exponents_[i] -= b.exponents_[i];
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (nvars == 0) return out;
  Monomial current(nvars);
  // Recursively assign the largest exponents to the earliest variables first,
  // which enumerates in descending graded-lex order.
  std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t var, std::uint32_t left) {
    if (var + 1 == nvars) {
      current[var] = left;
      out.push_back(current);
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      current[var] = e;
      fill(var + 1, left - e);
    }
    current[var] = 0;
  };
  fill(0, degree);
  return out;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::linear(std::span<const Rational> coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::variable(coeffs.size(), i), coeffs[i]);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Polynomial::TermMap::value_type& Polynomial::leading_term() const {
  if (terms_.empty()) throw InputError("leading term of the zero polynomial");
  return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw InputError("monomial variable count does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (other.nvars_ != nvars_) {
    throw InputError("polynomials in " + std::to_string(nvars_) + " and " + std::to_string(other.nvars_) +
                     " variables cannot be combined");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw InputError("derivative index out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial reduced = m;
    reduced[var] -= 1;
    out.add_term(reduced, c * m[var]);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) {
    throw InputError("point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                     std::to_string(nvars_) + " variables");
  }
  Rational value = 0;
  for (const auto& [m, c] : terms_) value += c * m.evaluate(point);
  return value;
}

Rational eval_poly(const Polynomial& p, std::span<const Rational> point) { return p.evaluate(point); }

// -------------------------------------------------------------- LinearForm

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<std::size_t> LinearForm::leading_index() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return std::nullopt;
}

Rational LinearForm::evaluate(std::span<const Rational> point) const {
  if (point.size() != coeffs_.size()) throw InputError("point dimension does not match linear form");
  Rational value = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) value += coeffs_[i] * point[i];
  return value;
}

bool LinearForm::is_proportional_to(const LinearForm& other) const {
  if (other.nvars() != nvars()) return false;
  const auto lead = leading_index();
  const auto other_lead = other.leading_index();
  if (!lead || !other_lead || *lead != *other_lead) return false;
  const Rational ratio = other.coeffs_[*lead] / coeffs_[*lead];
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (other.coeffs_[i] != ratio * coeffs_[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------- division

LinearDivision divide_by_linear(const Polynomial& p, const LinearForm& form,
                                std::optional<std::size_t> pivot) {
  if (form.nvars() != p.nvars()) throw InputError("linear form and polynomial differ in variable count");
  const std::size_t s = pivot ? *pivot : form.leading_index().value_or(0);
  if (s >= form.nvars() || form[s] == 0) {
    throw InputError("pivot variable x" + std::to_string(s + 1) + " has zero coefficient in the linear form");
  }
  const Rational inv_pivot = 1 / form[s];
  const std::size_t n = p.nvars();

  // Peel off x_s one power at a time, starting from the highest power.
  std::map<std::uint32_t, std::vector<std::pair<Monomial, Rational>>, std::greater<>> by_power;
  for (const auto& [m, c] : p.terms()) by_power[m[s]].emplace_back(m, c);

  Polynomial quotient(n);
  Polynomial remainder(n);
  while (!by_power.empty()) {
    auto node = by_power.extract(by_power.begin());
    const std::uint32_t e = node.key();
    // Combine coefficients of identical monomials in this layer.
    Polynomial layer(n);
    for (const auto& [m, c] : node.mapped()) layer.add_term(m, c);
    if (e == 0) {
      remainder += layer;
      continue;
    }
    for (const auto& [m, c] : layer.terms()) {
      Monomial lowered = m;
      lowered[s] -= 1;
      const Rational q = c * inv_pivot;
      quotient.add_term(lowered, q);
      // Subtract q * lowered * (form - a_s x_s); these terms have x_s power e - 1.
      for (std::size_t t = 0; t < n; ++t) {
        if (t == s || form[t] == 0) continue;
        Monomial shifted = lowered;
        shifted[t] += 1;
        by_power[e - 1].emplace_back(shifted, -q * form[t]);
      }
    }
  }
  return {std::move(quotient), std::move(remainder)};
}

Polynomial reduce_mod_linear(const Polynomial& p, const LinearForm& form, std::optional<std::size_t> pivot) {
  return divide_by_linear(p, form, pivot).remainder;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const LinearForm& form) {
  auto [quotient, remainder] = divide_by_linear(p, form);
  if (!remainder.is_zero()) return std::nullopt;
  return std::move(quotient);
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& divisor) {
  if (divisor.is_zero()) throw InputError("division by the zero polynomial");
  if (divisor.nvars() != p.nvars()) throw InputError("polynomials differ in variable count");
  const auto& [lead_m, lead_c] = divisor.leading_term();
  Polynomial rest = p;
  Polynomial quotient(p.nvars());
  while (!rest.is_zero()) {
    const auto [m, c] = rest.leading_term();
    if (!lead_m.divides(m)) return std::nullopt;
    Polynomial step = Polynomial::monomial(m / lead_m, c / lead_c);
    rest -= step * divisor;
    quotient += step;
  }
  return quotient;
}

Polynomial compose_linear(const Polynomial& p, const RationalMatrix& m) {
  if (m.rows() != p.nvars()) throw InputError("substitution matrix row count must equal variable count");
  const std::size_t target = m.cols();
  std::vector<std::vector<Polynomial>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    std::vector<Rational> row(target);
    for (std::size_t j = 0; j < target; ++j) row[j] = m(i, j);
    powers[i].push_back(Polynomial::constant(target, 1));
    powers[i].push_back(Polynomial::linear(row));
  }
  Polynomial out(target);
  for (const auto& [mono, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      const std::uint32_t e = mono[i];
      while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
      if (e) term = term * powers[i][e];
    }
    out += term;
  }
  return out;
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in polynomial '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expression() {
    skip_space();
    Polynomial sum(nvars_);
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    Polynomial first = product();
    sum += negative ? -first : first;
    while (true) {
      if (accept('+')) {
        sum += product();
      } else if (accept('-')) {
        sum -= product();
      } else {
        break;
      }
    }
    return sum;
  }

  Polynomial product() {
    Polynomial p = power();
    while (accept('*')) p = p * power();
    return p;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 6) fail("exponent too large");
      const unsigned long exponent = std::stoul(e);
      Polynomial out = Polynomial::constant(nvars_, 1);
      for (unsigned long i = 0; i < exponent; ++i) out = out * base;
      return out;
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      const std::string idx = digits();
      const unsigned long var = idx.size() > 6 ? 0 : std::stoul(idx);
      if (var < 1 || var > nvars_) fail("variable x" + idx + " outside x1..x" + std::to_string(nvars_));
      return Polynomial::variable(nvars_, var - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = digits();
      skip_space();
      // "p/q" is a coefficient literal only when a digit follows the slash.
      if (pos_ + 1 < text_.size() && text_[pos_] == '/') {
        ++pos_;
        literal += "/" + digits();
      }
      return Polynomial::constant(nvars_, parse_rational(literal));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  if (nvars == 0) throw InputError("polynomials need at least one variable");
  return Parser(text, nvars).parse();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace logder
