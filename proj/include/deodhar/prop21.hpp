#pragma once

#include <string>
#include <vector>

#include "deodhar/adjoint.hpp"
#include "deodhar/search.hpp"
#include "deodhar/unipotent.hpp"

namespace deodhar {

/*
  Symbolic data for the II2 pair (gamma, delta) in B_n, n >= 3.

  u_y runs along Phi(delta) with values
    (y1, y2, ..., y(n-1), yn, -y(n-1), ..., -y2, 0, ..., 0),
  u_z runs along Phi(gamma) with values
    (zn, z1 t, z2 t^2, ..., z(n-1) t^2, t^-2, -z1 t, -z2 t^2, ..., -z(n-1) t^2).
  Psi = { -(2b1 + ... + 2b(n-1) + bn), -(b2 + ... + bn), ..., -(b(n-1) + bn), -bn }.
*/
struct Prop21Words {
  CatalogEntry entry;
  UnipotentWord u_y;
  UnipotentWord u_z;
  std::vector<Root> psi;
};

Prop21Words build_prop21_words(std::size_t n);

struct Prop21Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Observed coefficient of one factor of a collected word.
struct Prop21Term {
  Root root;
  std::string monomial;
  Rational coefficient;
};

struct Prop21Report {
  std::size_t n = 0;
  std::vector<Prop21Check> checks;
  UnipotentWord collected_y;
  UnipotentWord collected_z;
  UnipotentWord limit_z;
  std::vector<Prop21Term> terms_y;
  std::vector<Prop21Term> terms_z;

  bool passed() const;
  std::string to_string() const;
};

/// Runs every check; never throws on a failed check, only on bad input.
/// seed drives the random rational point of the adjoint cross-checks.
Prop21Report verify_prop21(std::size_t n, unsigned seed = 1);

/// True when a + b is not a root for all a, b in roots.
bool pairwise_sums_not_roots(const RootSystem& rs, const std::vector<Root>& roots);

}  // namespace deodhar
