#include "deodhar/adjoint.hpp"

#include <algorithm>

namespace deodhar {

namespace {

IntMatrix zero_matrix(std::size_t n) { return IntMatrix(n, std::vector<long long>(n, 0)); }

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix r = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

bool is_zero(const IntMatrix& m) {
  for (const auto& row : m)
    for (long long x : row)
      if (x) return false;
  return true;
}

}  // namespace

AdjointRep::AdjointRep(const RootSystem& rs)
    : rs_(rs), dim_(2 * rs.positive_roots().size() + rs.rank()), roots_(rs.roots()) {
  const std::size_t n = rs_.rank();
  const std::size_t h0 = roots_.size();
  ad_.assign(dim_, zero_matrix(dim_));

  for (std::size_t a = 0; a < roots_.size(); ++a) {
    const Root& alpha = roots_[a];
    IntMatrix& m = ad_[a];
    for (std::size_t y = 0; y < roots_.size(); ++y) {
      const Root& beta = roots_[y];
      if (beta == -alpha) {
        // h_alpha = sum_i c_i (beta_i, beta_i) / (alpha, alpha) h_i
        for (std::size_t i = 1; i <= n; ++i) {
          const long long num = 1LL * alpha[i - 1] * rs_.norm(Root::simple(n, i));
          if (num % rs_.norm(alpha) != 0) throw std::logic_error("coroot is not integral");
          m[h0 + i - 1][y] = num / rs_.norm(alpha);
        }
      } else if (rs_.is_root(alpha + beta)) {
        m[index_of(alpha + beta)][y] = rs_.structure_constant(alpha, beta);
      }
    }
    for (std::size_t i = 1; i <= n; ++i)
      m[a][h0 + i - 1] = -rs_.cartan_pairing(alpha, Root::simple(n, i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    IntMatrix& m = ad_[h0 + i - 1];
    for (std::size_t y = 0; y < roots_.size(); ++y)
      m[y][y] = rs_.cartan_pairing(roots_[y], Root::simple(n, i));
  }

  exp_.resize(roots_.size());
  for (std::size_t a = 0; a < roots_.size(); ++a) {
    IntMatrix term = zero_matrix(dim_);
    for (std::size_t i = 0; i < dim_; ++i) term[i][i] = 1;
    for (long long k = 1; !is_zero(term); ++k) {
      exp_[a].push_back(term);
      term = multiply(term, ad_[a]);
      for (auto& row : term)
        for (long long& x : row) {
          if (x % k != 0) throw std::logic_error("exponential term is not integral");
          x /= k;
        }
    }
  }
}

std::size_t AdjointRep::index_of(const Root& r) const {
  auto it = std::find(roots_.begin(), roots_.end(), r);
  if (it == roots_.end()) throw std::invalid_argument("not a root: " + r.to_string());
  return static_cast<std::size_t>(it - roots_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> AdjointRep::jacobi_failures() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < dim_; ++x)
    for (std::size_t y = x + 1; y < dim_; ++y) {
      IntMatrix lhs = zero_matrix(dim_);
      for (std::size_t k = 0; k < dim_; ++k) {
        const long long c = ad_[x][k][y];
        if (!c) continue;
        for (std::size_t i = 0; i < dim_; ++i)
          for (std::size_t j = 0; j < dim_; ++j) lhs[i][j] += c * ad_[k][i][j];
      }
      const IntMatrix xy = multiply(ad_[x], ad_[y]);
      const IntMatrix yx = multiply(ad_[y], ad_[x]);
      bool ok = true;
      for (std::size_t i = 0; i < dim_ && ok; ++i)
        for (std::size_t j = 0; j < dim_ && ok; ++j) ok = lhs[i][j] == xy[i][j] - yx[i][j];
      if (!ok) out.emplace_back(x, y);
    }
  return out;
}

Matrix<Rational> evaluate_adjoint(const AdjointRep& rep, const UnipotentWord& w,
                                  const Assignment& values) {
  return rep.evaluate<Rational>(w, [&](const LaurentPoly& c) { return c.evaluate(values); });
}

Matrix<LaurentPoly> evaluate_adjoint_symbolic(const AdjointRep& rep, const UnipotentWord& w,
                                              const Assignment& values) {
  return rep.evaluate<LaurentPoly>(w, [&](const LaurentPoly& c) { return c.substitute(values); });
}

}  // namespace deodhar
