#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "deodhar/laurent.hpp"
#include "deodhar/root_system.hpp"
#include "deodhar/unipotent.hpp"

namespace deodhar {

/// Integers modulo a prime P.
template <std::uint32_t P>
class Zp {
public:
  Zp() = default;
  Zp(long long v) : v_(static_cast<std::uint32_t>(((v % P) + P) % P)) {}  // NOLINT
  explicit Zp(const Rational& q) {
    const Zp num(mpz_fdiv_ui(q.get_num_mpz_t(), P));
    const Zp den(mpz_fdiv_ui(q.get_den_mpz_t(), P));
    if (den.v_ == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(P));
    *this = num * den.inverse();
  }

  std::uint32_t value() const { return v_; }
  Zp operator+(Zp o) const { return Zp(static_cast<long long>(v_) + o.v_); }
  Zp operator-(Zp o) const { return Zp(static_cast<long long>(v_) - o.v_); }
  Zp operator*(Zp o) const { return Zp(static_cast<long long>(v_) * o.v_); }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp inverse() const {
    if (v_ == 0) throw std::domain_error("zero has no inverse");
    Zp r(1), b = *this;
    for (std::uint32_t e = P - 2; e; e >>= 1, b = b * b)
      if (e & 1u) r = r * b;
    return r;
  }
  bool operator==(const Zp&) const = default;

private:
  std::uint32_t v_ = 0;
};

inline bool is_zero_value(const Rational& x) { return x == 0; }
inline bool is_zero_value(const LaurentPoly& x) { return x.is_zero(); }
template <std::uint32_t P>
bool is_zero_value(const Zp<P>& x) {
  return x.value() == 0;
}

/// Dense square matrix over a commutative ring.
template <class T>
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Skips zero entries of the right factor, which is usually sparse here.
  Matrix operator*(const Matrix& o) const {
    Matrix r(n_);
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t j = 0; j < n_; ++j) {
        const T& b = o(k, j);
        if (is_zero_value(b)) continue;
        for (std::size_t i = 0; i < n_; ++i) {
          const T& a = (*this)(i, k);
          if (!is_zero_value(a)) r(i, j) += a * b;
        }
      }
    return r;
  }

  bool operator==(const Matrix& o) const { return n_ == o.n_ && data_ == o.data_; }

private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = std::vector<std::vector<long long>>;

/*
  The adjoint representation on a Chevalley basis

    e_a (a in Phi, in RootSystem::roots() order), then h_1, ..., h_n,

  with [e_a, e_b] = N(a,b) e_{a+b}, [e_a, e_{-a}] = h_a (the coroot written
  over the simple coroots), [h_i, e_a] = <a, beta_i^vee> e_a.

  Every ad e_a is nilpotent, so exp(x ad e_a) = sum_k x^k ad(e_a)^k / k! is
  a finite sum with integer matrices ad(e_a)^k / k!.
*/
class AdjointRep {
public:
  explicit AdjointRep(const RootSystem& rs);

  std::size_t dimension() const { return dim_; }
  const RootSystem& root_system() const { return rs_; }

  std::size_t index_of(const Root& r) const;
  const IntMatrix& ad_root(const Root& r) const { return ad_[index_of(r)]; }
  const IntMatrix& ad_basis(std::size_t b) const { return ad_[b]; }
  /// ad(e_a)^k / k! for k = 0, 1, ... until the power vanishes.
  const std::vector<IntMatrix>& exp_terms(const Root& r) const { return exp_[index_of(r)]; }
  std::size_t nilpotency_index(const Root& r) const { return exp_terms(r).size(); }

  /// Pairs of basis elements (x, y) with ad[x, y] != [ad x, ad y]; empty
  /// exactly when the bracket table satisfies the Jacobi identity.
  std::vector<std::pair<std::size_t, std::size_t>> jacobi_failures() const;

  /// exp(c ad e_a) with c converted by coeff.
  template <class T, class Conv>
  Matrix<T> evaluate(const UnipotentWord& w, Conv&& coeff) const {
    Matrix<T> m = Matrix<T>::identity(dim_);
    for (const Factor& f : w.factors()) {
      const T c = coeff(f.coeff);
      const auto& terms = exp_terms(f.root);
      Matrix<T> e(dim_);
      T power(1);
      for (std::size_t k = 0; k < terms.size(); ++k) {
        for (std::size_t i = 0; i < dim_; ++i)
          for (std::size_t j = 0; j < dim_; ++j)
            if (terms[k][i][j] != 0) e(i, j) += power * T(static_cast<long>(terms[k][i][j]));
        power = power * c;
      }
      m = m * e;
    }
    return m;
  }

private:
  RootSystem rs_;
  std::size_t dim_;
  std::vector<Root> roots_;
  std::vector<IntMatrix> ad_;  // indexed by basis element
  std::vector<std::vector<IntMatrix>> exp_;
};

/// Exact adjoint matrix of a word under a full assignment of its variables.
Matrix<Rational> evaluate_adjoint(const AdjointRep& rep, const UnipotentWord& w,
                                  const Assignment& values);

template <std::uint32_t P>
Matrix<Zp<P>> evaluate_adjoint_mod(const AdjointRep& rep, const UnipotentWord& w,
                                   const Assignment& values) {
  return rep.evaluate<Zp<P>>(w, [&](const LaurentPoly& c) { return Zp<P>(c.evaluate(values)); });
}

/// Keeps the unassigned variables symbolic: entries are Laurent polynomials.
Matrix<LaurentPoly> evaluate_adjoint_symbolic(const AdjointRep& rep, const UnipotentWord& w,
                                              const Assignment& values);

}  // namespace deodhar
