#include "deodhar/prop21.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>

namespace deodhar {

namespace {

std::string var(char name, std::size_t i) { return std::string(1, name) + std::to_string(i); }

Root sum_of_simple(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<int> c(n, 0);
  for (std::size_t i = from; i <= to; ++i) c[i - 1] = 1;
  return Root(std::move(c));
}

/// -(2b1 + ... + 2b(n-1) + bn)
Root long_psi_root(std::size_t n) {
  std::vector<int> c(n, -2);
  c[n - 1] = -1;
  return Root(std::move(c));
}

/// Expected monomials of the collected u_y and of the limit of u_z, keyed by root.
std::map<Root, Monomial> expected_y(std::size_t n) {
  std::map<Root, Monomial> m;
  m[-Root::simple(n, n)] = {{var('y', 1), 1}};
  Monomial prod;
  for (std::size_t i = 2; i <= n; ++i) prod[var('y', i)] = 1;
  m[long_psi_root(n)] = prod;
  for (std::size_t k = 2; k <= n - 1; ++k) {
    Monomial mk;
    for (std::size_t i = k + 1; i <= n; ++i) mk[var('y', i)] = 1;
    m[-sum_of_simple(n, k, n)] = mk;
  }
  return m;
}

std::map<Root, Monomial> expected_z(std::size_t n) {
  std::map<Root, Monomial> m;
  m[-Root::simple(n, n)] = {{var('z', n), 1}};
  m[long_psi_root(n)] = {{var('z', 1), 2}};
  for (std::size_t k = 2; k <= n - 1; ++k) m[-sum_of_simple(n, k, n)] = {{var('z', k), 1}};
  return m;
}

/// Compares a word factor by factor with the expected support and
/// monomials, accepting coefficients +-1.
Prop21Check support_check(const std::string& name, const UnipotentWord& w,
                          const std::map<Root, Monomial>& expected, std::vector<Prop21Term>& terms) {
  Prop21Check c{name, true, ""};
  std::ostringstream os;
  std::set<Root> seen;
  for (const Factor& f : w.factors()) {
    const auto st = f.coeff.single_term();
    Prop21Term t{f.root, st ? monomial_to_string(st->first) : f.coeff.to_string(),
                 st ? st->second : Rational(0)};
    terms.push_back(t);
    auto it = expected.find(f.root);
    if (it == expected.end()) {
      c.passed = false;
      os << "unexpected root " << f.root.to_string() << "; ";
      continue;
    }
    seen.insert(f.root);
    if (!st || st->first != it->second) {
      c.passed = false;
      os << "root " << f.root.to_string() << " has coefficient " << f.coeff.to_string()
         << ", expected +-" << monomial_to_string(it->second) << "; ";
    } else if (abs(st->second) != 1) {
      c.passed = false;
      os << "root " << f.root.to_string() << " has magnitude " << Rational(abs(st->second)).get_str() << "; ";
    }
  }
  for (const auto& [r, m] : expected)
    if (!seen.count(r)) {
      c.passed = false;
      os << "missing root " << r.to_string() << "; ";
    }
  if (seen.size() != w.size()) {
    c.passed = false;
    os << "repeated roots; ";
  }
  c.detail = c.passed ? "support and monomials as expected" : os.str();
  return c;
}

Rational random_nonzero(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  int a = 0;
  while (a == 0) a = num(rng);
  Rational r(a, den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

bool pairwise_sums_not_roots(const RootSystem& rs, const std::vector<Root>& roots) {
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (rs.is_root(roots[a] + roots[b])) return false;
  return true;
}

Prop21Words build_prop21_words(std::size_t n) {
  if (n < 3) throw std::invalid_argument("Proposition words require n >= 3");
  Prop21Words out{catalog("II2", n), {}, {}, {}};
  const auto phi_d = phi_sequence(out.entry.get("delta"));
  const auto phi_g = phi_sequence(out.entry.get("gamma"));
  if (phi_d.size() != 3 * n - 3 || phi_g.size() != 2 * n)
    throw std::logic_error("unexpected Phi lengths for the II2 pair");

  std::vector<LaurentPoly> ys;
  for (std::size_t i = 1; i <= n; ++i) ys.push_back(LaurentPoly::variable(var('y', i)));
  for (std::size_t i = n - 1; i >= 2; --i) ys.push_back(-LaurentPoly::variable(var('y', i)));
  while (ys.size() < phi_d.size()) ys.push_back(LaurentPoly());
  for (std::size_t k = 0; k < phi_d.size(); ++k) out.u_y.push_back(phi_d[k].root, ys[k]);

  const LaurentPoly t = LaurentPoly::variable("t");
  std::vector<LaurentPoly> zs;
  zs.push_back(LaurentPoly::variable(var('z', n)));
  for (int sign : {1, -1}) {
    if (sign < 0) zs.push_back(LaurentPoly::variable("t", -2));
    zs.push_back(LaurentPoly(sign) * LaurentPoly::variable(var('z', 1)) * t);
    for (std::size_t i = 2; i <= n - 1; ++i)
      zs.push_back(LaurentPoly(sign) * LaurentPoly::variable(var('z', i)) * t.pow(2));
  }
  for (std::size_t k = 0; k < phi_g.size(); ++k) out.u_z.push_back(phi_g[k].root, zs[k]);

  out.psi.push_back(long_psi_root(n));
  for (std::size_t k = 2; k <= n - 1; ++k) out.psi.push_back(-sum_of_simple(n, k, n));
  out.psi.push_back(-Root::simple(n, n));
  return out;
}

bool Prop21Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::string Prop21Report::to_string() const {
  std::ostringstream os;
  os << "n = " << n << "\n";
  for (const auto& c : checks) os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  os << "collect(u_y) = " << collected_y.to_string() << "\n";
  os << "collect(u_z) = " << collected_z.to_string() << "\n";
  os << "lim u_z     = " << limit_z.to_string() << "\n";
  for (const auto& [label, terms] : {std::pair{"u_y", &terms_y}, std::pair{"lim u_z", &terms_z}})
    for (const auto& t : *terms)
      os << "sign " << label << " [" << t.root.to_string() << "] " << t.coefficient.get_str() << " * "
         << t.monomial << "\n";
  os << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Prop21Report verify_prop21(std::size_t n, unsigned seed) {
  const Prop21Words words = build_prop21_words(n);
  const CoxeterGroup grp(Family::B, n);
  const RootSystem rs(grp);
  Prop21Report rep;
  rep.n = n;

  const Subexpression& gamma = words.entry.get("gamma");
  const Subexpression& delta = words.entry.get("delta");
  const CellDescriptor cg = cell(gamma), cd = cell(delta);
  rep.checks.push_back({"gamma and delta distinguished", cg.distinguished && cd.distinguished,
                        "gamma " + cg.mask + ", delta " + cd.mask});
  rep.checks.push_back({"dimensions (2n, 3n-3)", cg.dimension == 2 * n && cd.dimension == 3 * n - 3,
                        "dim gamma " + std::to_string(cg.dimension) + ", dim delta " +
                            std::to_string(cd.dimension)});
  rep.checks.push_back({"delta preceq gamma", preceq(delta, gamma), ""});
  bool free_split = true;
  for (std::size_t k = 0; k < cd.phi.size(); ++k) free_split = free_split && (cd.phi[k].free == (k < 2 * n - 2));
  rep.checks.push_back({"Phi(delta): first 2n-2 free, last n-1 affine", free_split, ""});

  rep.checks.push_back({"(c) pairwise sums of Psi are not roots", pairwise_sums_not_roots(rs, words.psi),
                        std::to_string(words.psi.size()) + " roots"});

  rep.collected_y = collect(rs, words.u_y);
  rep.checks.push_back(support_check("(a) collect(u_y) on Psi", rep.collected_y, expected_y(n), rep.terms_y));

  rep.collected_z = collect(rs, words.u_z);
  bool has_limit = false;
  try {
    rep.limit_z = limit_at_infinity(rep.collected_z, "t");
    has_limit = true;
    rep.checks.push_back(support_check("(b) lim collect(u_z) on Psi", rep.limit_z, expected_z(n), rep.terms_z));
  } catch (const LimitError& e) {
    rep.checks.push_back({"(b) lim collect(u_z) on Psi", false, e.what()});
  }

  // Adjoint cross-checks at a random rational point.
  const AdjointRep adj(rs);
  std::mt19937 rng(seed);
  Assignment point;
  for (std::size_t i = 1; i <= n; ++i) {
    point[var('y', i)] = random_nonzero(rng);
    point[var('z', i)] = random_nonzero(rng);
  }
  Assignment with_t = point;
  with_t["t"] = random_nonzero(rng);
  rep.checks.push_back({"oracle: collect(u_y) = u_y",
                        evaluate_adjoint(adj, rep.collected_y, point) == evaluate_adjoint(adj, words.u_y, point),
                        "adjoint representation, exact rationals"});
  rep.checks.push_back({"oracle: collect(u_z) = u_z",
                        evaluate_adjoint(adj, rep.collected_z, with_t) == evaluate_adjoint(adj, words.u_z, with_t),
                        "adjoint representation, exact rationals"});

  // Entrywise limit of the adjoint matrix of the uncollected u_z, t symbolic.
  const Matrix<LaurentPoly> sym = evaluate_adjoint_symbolic(adj, words.u_z, point);
  bool bounded = true, matches = true;
  if (has_limit) {
    const Matrix<Rational> lim = evaluate_adjoint(adj, rep.limit_z, point);
    for (std::size_t i = 0; i < sym.size(); ++i)
      for (std::size_t j = 0; j < sym.size(); ++j) {
        const LaurentPoly& e = sym(i, j);
        if (e.max_degree("t") > 0) bounded = false;
        Rational constant = 0;
        for (const auto& [m, c] : e.terms())
          if (!m.count("t")) constant = c;
        if (constant != lim(i, j)) matches = false;
      }
  } else {
    matches = false;
  }
  rep.checks.push_back({"oracle: entrywise limit of u_z equals lim u_z", bounded && matches,
                        bounded ? (matches ? "t kept symbolic" : "limit differs") : "entries grow with t"});
  return rep;
}

}  // namespace deodhar
