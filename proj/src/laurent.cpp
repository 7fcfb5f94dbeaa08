#include "deodhar/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace deodhar {

std::string monomial_to_string(const Monomial& m) {
  std::string s;
  for (const auto& [var, e] : m) {
    if (!s.empty()) s += '*';
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [var, e] : b) {
    const int sum = (r[var] += e);
    if (sum == 0) r.erase(var);
  }
  return r;
}

Rational rational_pow(const Rational& x, int k) {
  Rational b = x;
  b.canonicalize();
  if (k < 0) {
    if (b == 0) throw std::domain_error("zero raised to a negative power");
    return rational_pow(Rational(1) / b, -k);
  }
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

LaurentPoly::LaurentPoly(const Rational& c) {
  Rational v = c;
  v.canonicalize();
  if (v != 0) terms_.emplace(Monomial{}, std::move(v));
}

LaurentPoly LaurentPoly::variable(const std::string& name, int exponent) {
  if (exponent == 0) return LaurentPoly(1);
  return term(Monomial{{name, exponent}}, 1);
}

LaurentPoly LaurentPoly::term(Monomial m, const Rational& c) {
  LaurentPoly p;
  for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  Rational v = c;
  v.canonicalize();
  if (v != 0) p.terms_.emplace(std::move(m), std::move(v));
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r += term(monomial_product(ma, mb), ca * cb);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r(1);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

bool LaurentPoly::depends_on(const std::string& var) const {
  for (const auto& [m, c] : terms_)
    if (m.count(var)) return true;
  return false;
}

int LaurentPoly::max_degree(const std::string& var) const {
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    const int e = it == m.end() ? 0 : it->second;
    if (first || e > best) best = e;
    first = false;
  }
  return best;
}

int LaurentPoly::min_degree(const std::string& var) const {
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    const int e = it == m.end() ? 0 : it->second;
    if (first || e < best) best = e;
    first = false;
  }
  return best;
}

std::optional<std::pair<Monomial, Rational>> LaurentPoly::single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

Rational LaurentPoly::evaluate(const Assignment& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [var, e] : m) {
      auto it = values.find(var);
      if (it == values.end()) throw std::invalid_argument("no value for variable " + var);
      v *= rational_pow(it->second, e);
    }
    total += v;
  }
  return total;
}

LaurentPoly LaurentPoly::substitute(const Assignment& values) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    Monomial rest;
    for (const auto& [var, e] : m) {
      if (auto it = values.find(var); it != values.end())
        v *= rational_pow(it->second, e);
      else
        rest.emplace(var, e);
    }
    r += term(std::move(rest), v);
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational a = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    if (m.empty())
      os << a.get_str();
    else if (a == 1)
      os << monomial_to_string(m);
    else
      os << a.get_str() << '*' << monomial_to_string(m);
    first = false;
  }
  return os.str();
}

}  // namespace deodhar
