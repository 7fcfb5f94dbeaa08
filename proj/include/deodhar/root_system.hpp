#pragma once

#include <map>
#include <utility>
#include <vector>

#include "deodhar/coxeter.hpp"

namespace deodhar {

/// One factor of the Chevalley commutator formula: the root i*beta + j*alpha
/// with its integer constant C_{ij,beta,alpha}.
struct CommutatorTerm {
  int i = 0;
  int j = 0;
  Root root;
  int constant = 0;
};

/*
  Root system of type A_n or B_n together with a Chevalley basis sign
  convention.

  Positive roots are totally ordered by height, then lexicographically on
  their coefficient vectors.  The structure constants N(a, b) are defined by
  [e_a, e_b] = N(a, b) e_{a+b}.  For every extraspecial pair (a, b) the sign
  of N(a, b) is taken positive; all other constants follow from the
  identities satisfied by a Chevalley basis (antisymmetry, N(-a,-b) = -N(a,b),
  the three-term and four-term relations).
*/
class RootSystem {
public:
  explicit RootSystem(CoxeterGroup group);

  const CoxeterGroup& group() const { return group_; }
  std::size_t rank() const { return group_.rank(); }

  const std::vector<Root>& positive_roots() const { return positive_; }
  /// Negative roots in the canonical collection order: by height of -a,
  /// then lexicographic on -a.
  std::vector<Root> negative_roots() const;
  /// All roots: positive ones followed by their negatives.
  std::vector<Root> roots() const;

  bool is_root(std::span<const int> v) const;
  bool is_root(const Root& r) const { return is_root(r.coeffs()); }

  /// Index of a positive root in the fixed total order.
  std::size_t positive_index(const Root& r) const;

  /// Squared length in the ambient Euclidean metric (1 or 2 in type B).
  int norm(const Root& r) const;
  int inner(const Root& a, const Root& b) const;
  /// <a, b^vee> = 2 (a, b) / (b, b).
  int cartan_pairing(const Root& a, const Root& b) const;

  /// (p, q) with p = max{k : b - k a in Phi}, q = max{k : b + k a in Phi}.
  std::pair<int, int> root_string(const Root& a, const Root& b) const;

  /// N(a, b); throws if a + b is not a root.
  int structure_constant(const Root& a, const Root& b) const;
  /// N(a, b), or 0 when a + b is not a root.
  int structure_constant_or_zero(const Root& a, const Root& b) const;

  /// The extraspecial pair of every non-simple positive root.
  std::vector<std::pair<Root, Root>> extraspecial_pairs() const;

  /*
    Terms of the commutator formula for linearly independent roots
    (alpha, beta), with u_r(x) = exp(x e_r):

      u_alpha(x) u_beta(y) u_alpha(-x) u_beta(-y)
          = prod u_{i beta + j alpha}(C_{ij,beta,alpha} y^i (-x)^j)

    taken over increasing i + j.
  */
  std::vector<CommutatorTerm> commutator_terms(const Root& alpha, const Root& beta) const;

private:
  void check_root(const Root& r) const;
  void build_structure_constants();
  int lookup_positive(const Root& a, const Root& b) const;

  CoxeterGroup group_;
  std::vector<Root> positive_;
  std::map<Root, std::size_t> positive_index_;
  // N(a, b) for positive a < b (in the total order) with a + b a root.
  std::map<std::pair<std::size_t, std::size_t>, int> special_;
  std::vector<std::pair<Root, Root>> extraspecial_;
};

}  // namespace deodhar
