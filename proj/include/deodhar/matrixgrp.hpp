#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "deodhar/coxeter.hpp"

namespace deodhar {

/// 3x3 matrix over F_q, q prime.
class MatrixFq {
public:
  using Entries = std::array<std::array<std::uint32_t, 3>, 3>;

  MatrixFq(std::uint32_t q, const Entries& e);

  static MatrixFq identity(std::uint32_t q);
  /// P with P(w(j), j) = 1, so that P_u P_v = P_{uv}.
  static MatrixFq permutation(const WeylElement& w, std::uint32_t q);
  /// Rows (1 0 0), (a 1 0), (c b 1).
  static MatrixFq lower_unitriangular(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t q);

  std::uint32_t modulus() const { return q_; }
  /// 1-based entry.
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return e_[i - 1][j - 1]; }

  MatrixFq operator*(const MatrixFq& o) const;
  bool operator==(const MatrixFq&) const = default;

  std::uint32_t determinant() const;
  /// Rank of the lower-left block: rows i..3, columns 1..j (0 when empty).
  std::size_t lower_left_rank(std::size_t i, std::size_t j) const;
  bool is_lower_unitriangular() const;

  std::string to_string() const;

private:
  std::uint32_t q_;
  Entries e_;
};

bool is_prime(std::uint32_t q);

/// The permutation w with g in BwB, B the upper triangular Borel, read off
/// the rank matrix r(i,j) = rank g[i..3, 1..j]:  w(j) = i exactly when
/// r(i,j) - r(i+1,j) - r(i,j-1) + r(i+1,j-1) = 1.  Throws on singular g.
WeylElement bruhat_word(const MatrixFq& g);

/// The v with g in B* v B, where B* = w0 B w0:  v = w0 * bruhat_word(w0 g).
WeylElement opposite_coset(const MatrixFq& g);

/// For u with rows (1 0 0), (a 1 0), (c b 1): c != 0 and ab - c != 0.
/// Throws unless u is lower unitriangular.
bool minors_criterion(const MatrixFq& u);

using CellCounts = std::map<std::pair<WeylElement, WeylElement>, std::uint64_t>;

/*
  Number of F_q-points of Bw.B cap B*v.B in G/B for every pair (w, v) in
  S_3 x S_3.  The opposite cell B*v.B is parametrized by u v B with
  u in U* cap v U* v^-1, so the count for (w, v) is the number of such u
  with u v in BwB.  For v = e this is the count of u in U* with u in BwB.
  Requires q prime, q <= 64.
*/
CellCounts count_cells(std::uint32_t q);

/// Rows "q,w,v,count" with windows quoted, header first, ordered by (w, v).
std::string cell_counts_csv(std::uint32_t q, const CellCounts& counts);

}  // namespace deodhar
