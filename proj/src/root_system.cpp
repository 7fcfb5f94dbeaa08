#include "deodhar/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace deodhar {

namespace {

bool root_order_less(const Root& a, const Root& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a < b;
}

int exact_div(long long num, long long den) {
  if (den == 0 || num % den != 0)
    throw std::logic_error("structure constant is not integral: " + std::to_string(num) + "/" +
                           std::to_string(den));
  return static_cast<int>(num / den);
}

}  // namespace

RootSystem::RootSystem(CoxeterGroup group) : group_(group) {
  const int m = static_cast<int>(group_.degree());
  auto add = [&](std::vector<int> x) { positive_.push_back(group_.from_ambient(x)); };
  for (int j = 0; j < m; ++j) {
    if (group_.family() == Family::B) {
      std::vector<int> x(m, 0);
      x[j] = 1;
      add(x);
    }
    for (int i = 0; i < j; ++i) {
      std::vector<int> x(m, 0);
      if (group_.family() == Family::B) {
        x[j] = 1;
        x[i] = -1;
        add(x);
        x[i] = 1;
        add(x);
      } else {
        x[i] = 1;
        x[j] = -1;
        add(x);
      }
    }
  }
  std::sort(positive_.begin(), positive_.end(), root_order_less);
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    if (!positive_[k].is_positive()) throw std::logic_error("generated root is not positive");
    positive_index_.emplace(positive_[k], k);
  }
  build_structure_constants();
}

std::vector<Root> RootSystem::negative_roots() const {
  std::vector<Root> out;
  out.reserve(positive_.size());
  for (const Root& r : positive_) out.push_back(-r);
  return out;
}

std::vector<Root> RootSystem::roots() const {
  std::vector<Root> out(positive_);
  for (const Root& r : positive_) out.push_back(-r);
  return out;
}

bool RootSystem::is_root(std::span<const int> v) const {
  if (v.size() != rank()) return false;
  Root r(std::vector<int>(v.begin(), v.end()));
  if (r.is_positive()) return positive_index_.count(r) != 0;
  if (r.is_negative()) return positive_index_.count(-r) != 0;
  return false;
}

std::size_t RootSystem::positive_index(const Root& r) const {
  auto it = positive_index_.find(r);
  if (it == positive_index_.end()) throw std::invalid_argument("not a positive root: " + r.to_string());
  return it->second;
}

void RootSystem::check_root(const Root& r) const {
  if (!is_root(r)) throw std::invalid_argument("not a root of " + group_.name() + ": " + r.to_string());
}

int RootSystem::inner(const Root& a, const Root& b) const {
  const auto x = group_.to_ambient(a), y = group_.to_ambient(b);
  int s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s;
}

int RootSystem::norm(const Root& r) const { return inner(r, r); }

int RootSystem::cartan_pairing(const Root& a, const Root& b) const {
  return exact_div(2LL * inner(a, b), norm(b));
}

std::pair<int, int> RootSystem::root_string(const Root& a, const Root& b) const {
  check_root(a);
  check_root(b);
  if (a == b || a == -b) throw std::invalid_argument("root_string: proportional roots");
  int p = 0, q = 0;
  while (is_root(b - a * (p + 1))) ++p;
  while (is_root(b + a * (q + 1))) ++q;
  return {p, q};
}

int RootSystem::lookup_positive(const Root& a, const Root& b) const {
  const std::size_t ia = positive_index(a), ib = positive_index(b);
  const bool swapped = ib < ia;
  auto it = special_.find(swapped ? std::make_pair(ib, ia) : std::make_pair(ia, ib));
  if (it == special_.end())
    throw std::logic_error("structure constant requested before it was determined");
  return swapped ? -it->second : it->second;
}

int RootSystem::structure_constant_or_zero(const Root& a, const Root& b) const {
  check_root(a);
  check_root(b);
  const Root s = a + b;
  if (s.is_zero() || !is_root(s)) return 0;
  if (a.is_positive() && b.is_positive()) return lookup_positive(a, b);
  if (a.is_negative() && b.is_negative()) return -lookup_positive(-a, -b);
  // Mixed signs: with c = -(a + b), N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b).
  const Root c = -s;
  const bool bc_same_sign = b.is_positive() == c.is_positive();
  if (bc_same_sign) return exact_div(1LL * norm(c) * structure_constant_or_zero(b, c), norm(a));
  return exact_div(1LL * norm(c) * structure_constant_or_zero(c, a), norm(b));
}

int RootSystem::structure_constant(const Root& a, const Root& b) const {
  check_root(a);
  check_root(b);
  if (!is_root(a + b))
    throw std::invalid_argument("structure_constant: " + a.to_string() + " + " + b.to_string() +
                                " is not a root");
  return structure_constant_or_zero(a, b);
}

void RootSystem::build_structure_constants() {
  for (const Root& xi : positive_) {
    std::vector<std::pair<Root, Root>> pairs;
    for (const Root& a : positive_) {
      const Root b = xi - a;
      if (!b.is_positive() || !is_root(b)) continue;
      if (positive_index(a) < positive_index(b)) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) continue;
    std::sort(pairs.begin(), pairs.end(), [&](const auto& l, const auto& r) {
      return positive_index(l.first) < positive_index(r.first);
    });
    const auto& [a0, b0] = pairs.front();
    const int n0 = root_string(a0, b0).first + 1;
    special_[{positive_index(a0), positive_index(b0)}] = n0;
    extraspecial_.emplace_back(a0, b0);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& [a, b] = pairs[k];
      // Four-term relation applied to (a0, b0, -a, -b), using N(-a,-b) = -N(a,b).
      long long num = 0, den = 1;
      const Root d1 = b0 - a, d2 = a0 - a;
      const long long t1 = is_root(d1) ? 1LL * structure_constant_or_zero(b0, -a) *
                                              structure_constant_or_zero(a0, -b)
                                        : 0;
      const long long t2 = is_root(d2) ? 1LL * structure_constant_or_zero(-a, a0) *
                                              structure_constant_or_zero(b0, -b)
                                        : 0;
      const long long n1 = t1 ? norm(d1) : 1, n2 = t2 ? norm(d2) : 1;
      num = 1LL * norm(xi) * (t1 * n2 + t2 * n1);
      den = 1LL * n0 * n1 * n2;
      special_[{positive_index(a), positive_index(b)}] = exact_div(num, den);
    }
  }
}

std::vector<std::pair<Root, Root>> RootSystem::extraspecial_pairs() const { return extraspecial_; }

std::vector<CommutatorTerm> RootSystem::commutator_terms(const Root& alpha, const Root& beta) const {
  check_root(alpha);
  check_root(beta);
  if (alpha == beta || alpha == -beta)
    throw std::invalid_argument("commutator_terms: proportional roots");
  // Carter's constants with r = beta, s = alpha:
  //   C_{i1} = M_{beta,alpha,i},  C_{1j} = (-1)^j M_{alpha,beta,j},
  //   M_{r,s,i} = (1/i!) N(r,s) N(r,r+s) ... N(r,(i-1)r+s).
  auto m_const = [&](const Root& r, const Root& s, int i) {
    long long prod = 1, fact = 1;
    for (int k = 0; k < i; ++k) {
      prod *= structure_constant(r, r * k + s);
      fact *= (k + 1);
    }
    return exact_div(prod, fact);
  };
  std::vector<CommutatorTerm> out;
  for (int total = 2; total <= 5; ++total) {
    for (int i = 1; i < total; ++i) {
      const int j = total - i;
      const Root r = beta * i + alpha * j;
      if (!is_root(r)) continue;
      int c = 0;
      if (j == 1)
        c = m_const(beta, alpha, i);
      else if (i == 1)
        c = (j % 2 ? -1 : 1) * m_const(alpha, beta, j);
      else
        throw std::logic_error("commutator term with i, j >= 2 cannot occur in types A and B");
      out.push_back({i, j, r, c});
    }
  }
  return out;
}

}  // namespace deodhar
