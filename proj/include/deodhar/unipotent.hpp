#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "deodhar/laurent.hpp"
#include "deodhar/root_system.hpp"

namespace deodhar {

/// u_root(coeff), root a negative root.
struct Factor {
  Root root;
  LaurentPoly coeff;

  bool operator==(const Factor& o) const { return root == o.root && coeff == o.coeff; }
};

/// Ordered product of root subgroup elements in U*, the unipotent radical
/// of the opposite Borel.  Factors with zero coefficient are dropped.
class UnipotentWord {
public:
  UnipotentWord() = default;
  explicit UnipotentWord(std::vector<Factor> factors);

  void push_back(Root root, LaurentPoly coeff);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  /// Concatenation, merging equal roots that meet at the seam.
  UnipotentWord operator*(const UnipotentWord& o) const;
  UnipotentWord inverse() const;

  bool operator==(const UnipotentWord& o) const { return factors_ == o.factors_; }

  std::string to_string() const;

private:
  std::vector<Factor> factors_;
};

/// A total order on the negative roots of a root system.
class RootOrder {
public:
  /// By height of -a, then lexicographic on -a.
  static RootOrder canonical(const RootSystem& rs);
  /// By height of -a, then reverse lexicographic on -a.
  static RootOrder reverse_lex(const RootSystem& rs);
  /// Explicit listing; must enumerate every negative root exactly once.
  RootOrder(const RootSystem& rs, std::vector<Root> sequence);

  std::size_t rank_of(const Root& r) const;
  const std::vector<Root>& sequence() const { return sequence_; }

private:
  std::vector<Root> sequence_;
  std::map<Root, std::size_t> rank_;
};

/// Thrown when a limit at infinity does not exist.
class LimitError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/*
  Collects a word into canonical form with respect to order: one factor per
  root, sorted.  Adjacent out-of-order factors are exchanged with

    u_b(y) u_a(x) = u_a(x) u_b(y) prod u_{i a + j b}(C_{ij,a,b} (-x)^i y^j),

  the commutator terms being inserted right after u_b(y).  Equal neighbours
  are merged.
*/
UnipotentWord collect(const RootSystem& rs, const UnipotentWord& w, const RootOrder& order);
UnipotentWord collect(const RootSystem& rs, const UnipotentWord& w);

/// Drops every monomial of strictly negative degree in var.  Throws
/// LimitError when some coefficient has a positive power of var.
UnipotentWord limit_at_infinity(const UnipotentWord& w, const std::string& var);

}  // namespace deodhar
