#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace deodhar {

using Rational = mpq_class;

/// Product of named variables with nonzero integer exponents, e.g. z1^2 t^-1.
using Monomial = std::map<std::string, int>;
/// Values for named variables.
using Assignment = std::map<std::string, Rational>;

std::string monomial_to_string(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);

/// Exact Laurent polynomial with rational coefficients.  Zero coefficients
/// are never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static LaurentPoly variable(const std::string& name, int exponent = 1);
  static LaurentPoly term(Monomial m, const Rational& c);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly pow(unsigned k) const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  bool depends_on(const std::string& var) const;
  /// Largest / smallest exponent of var over all terms (0 if absent).
  int max_degree(const std::string& var) const;
  int min_degree(const std::string& var) const;

  /// The (monomial, coefficient) pair when exactly one term is present.
  std::optional<std::pair<Monomial, Rational>> single_term() const;

  /// Full evaluation; throws if a variable is missing or a zero value is
  /// raised to a negative power.
  Rational evaluate(const Assignment& values) const;
  /// Substitutes the assigned variables and keeps the others symbolic.
  LaurentPoly substitute(const Assignment& values) const;

  std::string to_string() const;

private:
  std::map<Monomial, Rational> terms_;
};

Rational rational_pow(const Rational& x, int k);

}  // namespace deodhar
