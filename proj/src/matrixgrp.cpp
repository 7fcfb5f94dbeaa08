#include "deodhar/matrixgrp.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "deodhar/parallel.hpp"

namespace deodhar {

namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t q) {
  std::uint32_t r = 1, b = a;
  for (std::uint32_t e = q - 2; e; e >>= 1, b = mul_mod(b, b, q))
    if (e & 1u) r = mul_mod(r, b, q);
  return r;
}

std::size_t rank_mod(std::vector<std::vector<std::uint32_t>> m, std::uint32_t q) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const std::uint32_t inv = inverse_mod(m[rank][c], q);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint32_t f = mul_mod(m[r][c], inv, q);
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + q - mul_mod(f, m[rank][k], q)) % q;
    }
    ++rank;
  }
  return rank;
}

const CoxeterGroup& a2() {
  static const CoxeterGroup g(Family::A, 2);
  return g;
}

}  // namespace

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

MatrixFq::MatrixFq(std::uint32_t q, const Entries& e) : q_(q), e_(e) {
  if (!is_prime(q)) throw std::invalid_argument("modulus must be prime: " + std::to_string(q));
  for (auto& row : e_)
    for (auto& x : row) x %= q_;
}

MatrixFq MatrixFq::identity(std::uint32_t q) { return MatrixFq(q, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}); }

MatrixFq MatrixFq::permutation(const WeylElement& w, std::uint32_t q) {
  if (w.degree() != 3) throw std::invalid_argument("expected a permutation of 1..3");
  Entries e{};
  for (int j = 1; j <= 3; ++j) {
    const int i = w(j);
    if (i < 1) throw std::invalid_argument("expected an unsigned permutation");
    e[i - 1][j - 1] = 1;
  }
  return MatrixFq(q, e);
}

MatrixFq MatrixFq::lower_unitriangular(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t q) {
  return MatrixFq(q, {{{1, 0, 0}, {a, 1, 0}, {c, b, 1}}});
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
  if (q_ != o.q_) throw std::invalid_argument("matrices over different fields");
  Entries r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += static_cast<std::uint64_t>(e_[i][k]) * o.e_[k][j];
      r[i][j] = static_cast<std::uint32_t>(s % q_);
    }
  return MatrixFq(q_, r);
}

std::uint32_t MatrixFq::determinant() const {
  const auto& m = e_;
  const std::uint64_t q = q_;
  auto t = [&](std::size_t a, std::size_t b, std::size_t c) {
    return static_cast<std::uint64_t>(m[0][a]) * m[1][b] % q * m[2][c] % q;
  };
  const std::uint64_t pos = (t(0, 1, 2) + t(1, 2, 0) + t(2, 0, 1)) % q;
  const std::uint64_t neg = (t(2, 1, 0) + t(0, 2, 1) + t(1, 0, 2)) % q;
  return static_cast<std::uint32_t>((pos + q - neg) % q);
}

std::size_t MatrixFq::lower_left_rank(std::size_t i, std::size_t j) const {
  if (i > 3 || j == 0) return 0;
  std::vector<std::vector<std::uint32_t>> block;
  for (std::size_t r = i; r <= 3; ++r) block.emplace_back(e_[r - 1].begin(), e_[r - 1].begin() + j);
  return rank_mod(std::move(block), q_);
}

bool MatrixFq::is_lower_unitriangular() const {
  return e_[0][0] == 1 && e_[1][1] == 1 && e_[2][2] == 1 && e_[0][1] == 0 && e_[0][2] == 0 &&
         e_[1][2] == 0;
}

std::string MatrixFq::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) os << "; ";
    os << e_[i][0] << " " << e_[i][1] << " " << e_[i][2];
  }
  return os.str();
}

WeylElement bruhat_word(const MatrixFq& g) {
  if (g.determinant() == 0) throw std::invalid_argument("singular matrix: " + g.to_string());
  std::array<std::array<long, 5>, 5> r{};  // r[i][j], i in 1..4, j in 0..3
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 0; j <= 3; ++j) r[i][j] = static_cast<long>(g.lower_left_rank(i, j));
  std::vector<int> window(3, 0);
  for (std::size_t j = 1; j <= 3; ++j)
    for (std::size_t i = 1; i <= 3; ++i)
      if (r[i][j] - r[i + 1][j] - r[i][j - 1] + r[i + 1][j - 1] == 1) window[j - 1] = static_cast<int>(i);
  return WeylElement(std::move(window));
}

WeylElement opposite_coset(const MatrixFq& g) {
  const WeylElement w0 = a2().longest_element();
  return w0 * bruhat_word(MatrixFq::permutation(w0, g.modulus()) * g);
}

bool minors_criterion(const MatrixFq& u) {
  if (!u.is_lower_unitriangular())
    throw std::invalid_argument("expected a lower unitriangular matrix: " + u.to_string());
  const std::uint32_t q = u.modulus();
  const std::uint32_t a = u(2, 1), b = u(3, 2), c = u(3, 1);
  return c != 0 && (mul_mod(a, b, q) + q - c) % q != 0;
}

CellCounts count_cells(std::uint32_t q) {
  if (!is_prime(q) || q > 64) throw std::invalid_argument("count_cells needs a prime q <= 64");
  const std::vector<WeylElement> elems = a2().elements();
  CellCounts counts;
  for (const auto& w : elems)
    for (const auto& v : elems) counts[{w, v}] = 0;

  for (const auto& v : elems) {
    const MatrixFq pv = MatrixFq::permutation(v, q);
    const MatrixFq pv_inv = MatrixFq::permutation(v.inverse(), q);
    std::vector<std::map<WeylElement, std::uint64_t>> per_a(q);
    parallel_for(q, [&](std::size_t a) {
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          const MatrixFq u = MatrixFq::lower_unitriangular(static_cast<std::uint32_t>(a), b, c, q);
          if (!(pv_inv * u * pv).is_lower_unitriangular()) continue;
          ++per_a[a][bruhat_word(u * pv)];
        }
    });
    for (const auto& m : per_a)
      for (const auto& [w, k] : m) counts[{w, v}] += k;
  }
  return counts;
}

std::string cell_counts_csv(std::uint32_t q, const CellCounts& counts) {
  std::ostringstream os;
  os << "q,w,v,count\n";
  for (const auto& [wv, k] : counts)
    os << q << ",\"" << wv.first.to_string() << "\",\"" << wv.second.to_string() << "\"," << k << "\n";
  return os.str();
}

}  // namespace deodhar
