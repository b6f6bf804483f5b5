#include "prolong/polynomial.hpp"

#include <cctype>

namespace prolong {

Polynomial::Polynomial(VarSet vars, Terms terms) : vars_(std::move(vars)) {
  for (auto& [m, c] : terms) {
    if (m.size() != vars_.size()) throw std::invalid_argument("monomial length does not match varset");
    if (c != 0) terms_.emplace(m, c);
  }
}

Polynomial Polynomial::from_monomial(VarSet vars, Monomial m, Rational coeff) {
  Polynomial p(std::move(vars));
  p.add_term(m, coeff);
  return p;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous(unsigned degree) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != degree) return false;
  return true;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || is_homogeneous(total_degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.size() != vars_.size()) throw std::invalid_argument("monomial length does not match varset");
  if (c.get_den() == 1) return add_term_canonical(m, c);
  Rational v = c;
  v.canonicalize();
  add_term_canonical(m, v);
}

void Polynomial::add_term_canonical(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_vars(const Polynomial& other) const {
  if (!(vars_ == other.vars_)) throw std::invalid_argument("polynomials over different varsets");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& [m, v] : terms_) v *= k;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_vars(b);
  Polynomial out(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial operator*(const Polynomial& a, const Monomial& m) {
  Polynomial out(a.vars_);
  for (const auto& [ma, ca] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), ma * m, ca);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool constant = m.degree() == 0;
    if (constant) {
      out += prolong::to_string(mag);
    } else {
      if (mag != 1) out += prolong::to_string(mag) + "*";
      out += format_monomial(m, vars_);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarSet& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial out(vars_);
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    parse_term(out, negative);
    for (;;) {
      skip();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("expected '+' or '-', found '") + c + "'", pos_);
      ++pos_;
      parse_term(out, c == '-');
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string read_digits() {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_term(Polynomial& out, bool negative) {
    skip();
    if (at_end()) throw ParseError("expected term", pos_);
    Rational coeff = 1;
    Monomial mono(vars_.size());
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(read_digits());
      Integer den = 1;
      skip();
      if (!at_end() && peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = Integer(read_digits());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;  // bare constant term
      }
    }
    if (need_factor) {
      mono = mono * parse_factor();
      for (;;) {
        skip();
        if (at_end() || peek() != '*') break;
        ++pos_;
        mono = mono * parse_factor();
      }
    }
    out.add_term(mono, negative ? Rational(-coeff) : coeff);
  }

  Monomial parse_factor() {
    skip();
    std::size_t start = pos_;
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("expected variable name", pos_);
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    auto idx = vars_.index_of(name);
    if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", start);
    unsigned long power = 1;
    skip();
    if (!at_end() && peek() == '^') {
      ++pos_;
      std::size_t at = pos_;
      std::string digits = read_digits();
      if (digits.size() > 9) throw ParseError("exponent too large", at);
      power = std::stoul(digits);
    }
    return Monomial::variable(vars_.size(), *idx, static_cast<Monomial::Exponent>(power));
  }

  std::string_view text_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarSet& vars) {
  return Parser(text, vars).parse();
}

Polynomial differentiate(const Polynomial& f, const Monomial& beta) {
  if (beta.size() != f.vars().size()) throw std::invalid_argument("differentiation varset mismatch");
  Polynomial out(f.vars());
  for (const auto& [m, c] : f.terms()) {
    if (!beta.divides(m)) continue;
    out.add_term(m / beta, c * Rational(falling_factorial(m, beta)));
  }
  return out;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  if (point.size() != f.vars().size()) throw std::invalid_argument("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational v = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      Rational p;
      mpz_pow_ui(mpq_numref(p.get_mpq_t()), point[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(mpq_denref(p.get_mpq_t()), point[i].get_den_mpz_t(), m[i]);
      v *= p;
    }
    total += v;
  }
  return total;
}

Polynomial normalized(const Polynomial& f) {
  if (f.is_zero()) return f;
  Rational inv = 1 / f.leading_coefficient();
  return f * inv;
}

bool proportional(const Polynomial& f, const Polynomial& g) {
  return normalized(f) == normalized(g);
}

std::vector<Monomial> support(const Polynomial& f) {
  std::vector<Monomial> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) out.push_back(m);
  return out;
}

}  // namespace prolong
