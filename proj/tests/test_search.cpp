#include <doctest.h>

#include "deodhar/search.hpp"
#include "oracles.hpp"

using namespace deodhar;

namespace {

/// Negative of sum c_i beta_i, given as a list of (i, c_i).
Root neg(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> terms) {
  std::vector<int> c(n, 0);
  for (const auto& [i, k] : terms) c[i - 1] = -k;
  return Root(c);
}

/// -(b_from + ... + b_to)
Root neg_range(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<int> c(n, 0);
  for (std::size_t i = from; i <= to; ++i) c[i - 1] = -1;
  return Root(c);
}

/// -(2 b_1 + b_2 + ... + b_(n-1))
Root neg_long(std::size_t n) {
  Root r = neg_range(n, 1, n - 1);
  return r - Root::simple(n, 1);
}

std::vector<Root> roots_of(const Subexpression& g) {
  std::vector<Root> out;
  for (const auto& e : phi_sequence(g)) out.push_back(e.root);
  return out;
}

std::vector<Root> printed_phi_delta(std::size_t n) {
  std::vector<Root> r{-Root::simple(n, n), neg_long(n)};
  for (std::size_t i = 2; i <= n - 2; ++i) r.push_back(-Root::simple(n, i));
  r.push_back(neg_range(n, n - 1, n));
  for (std::size_t i = n - 2; i >= 2; --i) r.push_back(-Root::simple(n, i));
  r.push_back(neg_long(n));
  for (std::size_t i = 1; i <= n - 1; ++i) r.push_back(neg_range(n, i, n - 1));
  return r;
}

std::vector<Root> printed_phi_gamma(std::size_t n) {
  std::vector<Root> r;
  for (int rep = 0; rep < 2; ++rep) {
    r.push_back(-Root::simple(n, n));
    for (std::size_t i = 1; i <= n - 1; ++i) r.push_back(neg_range(n, i, n - 1));
  }
  return r;
}

std::vector<bool> takes_of(const Subexpression& g) {
  std::vector<bool> t;
  for (std::size_t i = 1; i <= g.length(); ++i) t.push_back(g.takes(i));
  return t;
}

std::vector<int> letters_of(const ReducedWord& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace

TEST_CASE("catalog errors") {
  CHECK_THROWS_AS(catalog("II2", 2), std::invalid_argument);
  CHECK_THROWS_AS(catalog("II3", 4), std::invalid_argument);
  CHECK_THROWS_AS(catalog("II3-extended", 3), std::invalid_argument);
  CHECK_THROWS_AS(catalog("nope", 3), std::invalid_argument);
  CHECK_THROWS_AS(catalog("II3", 3).get("gamma"), std::out_of_range);
}

TEST_CASE("II2 catalog entries") {
  for (std::size_t n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const CatalogEntry e = catalog("II2", n);
    CHECK(e.word.length() == 4 * n - 4);
    const Subexpression& gamma = e.get("gamma");
    const Subexpression& delta = e.get("delta");
    const CellDescriptor cg = cell(gamma), cd = cell(delta);
    CHECK(cg.distinguished);
    CHECK(cd.distinguished);
    CHECK(cg.dimension == 2 * n);
    CHECK(cd.dimension == 3 * n - 3);
    CHECK(gamma.end().is_identity());
    CHECK(delta.end().is_identity());
    CHECK(preceq(delta, gamma));
    CHECK_FALSE(preceq(gamma, delta));
    CHECK(roots_of(gamma) == printed_phi_gamma(n));
    CHECK(roots_of(delta) == printed_phi_delta(n));
    const auto phi_d = phi_sequence(delta);
    for (std::size_t k = 0; k < phi_d.size(); ++k) CHECK(phi_d[k].free == (k < 2 * n - 2));
  }
}

TEST_CASE("II3 catalog entry") {
  const CatalogEntry e = catalog("II3", 3);
  const Subexpression& sigma = e.get("sigma");
  const Subexpression& tau = e.get("tau");
  CHECK(e.word.product() == e.word.group().longest_element());
  CHECK(sigma.mask_string() == "010101101");
  CHECK(tau.mask_string() == "011001011");
  CHECK(is_distinguished(sigma));
  CHECK(is_distinguished(tau));
  CHECK(sigma.end() == e.word.group().generator(2));
  CHECK(tau.end() == e.word.group().generator(2));
  CHECK(cell(sigma).dimension == 6);
  CHECK(cell(tau).dimension == 6);
  CHECK(preceq(tau, sigma));
  const std::size_t n = 3;
  CHECK(roots_of(sigma) == std::vector<Root>{neg(n, {{3, 1}}), neg(n, {{1, 1}, {2, 1}}), neg(n, {{2, 1}}),
                                             neg(n, {{3, 1}}), neg(n, {{1, 2}, {2, 1}}), neg(n, {{1, 1}, {2, 1}})});
  CHECK(roots_of(tau) == std::vector<Root>{neg(n, {{3, 1}}), neg(n, {{1, 2}, {2, 1}}), neg(n, {{2, 1}, {3, 1}}),
                                           neg(n, {{1, 1}}), neg(n, {{1, 2}, {2, 1}}), neg(n, {{1, 1}, {2, 1}})});
}

TEST_CASE("disjointness certificates") {
  const CatalogEntry e = catalog("II3", 3);
  const Subexpression& sigma = e.get("sigma");
  const Subexpression& tau = e.get("tau");
  const auto cert = disjointness_certificate(sigma, tau);
  REQUIRE(cert);
  CHECK(cert->root == -Root::simple(3, 1));
  CHECK(cert->simple_index == 1);
  CHECK(cert->witness_index == 7);
  CHECK(certificate_holds(sigma, tau, *cert));
  CHECK(e.word.group().length(tau.partial(7)) == 3);
  CHECK_FALSE(tau.takes(7));
  CHECK_FALSE(certificate_holds(sigma, tau, {-Root::simple(3, 1), 1, 6}));
  CHECK_FALSE(certificate_holds(sigma, tau, {-Root::simple(3, 2), 2, 7}));
  CHECK_FALSE(certificate_holds(tau, sigma, *cert));
  CHECK_FALSE(disjointness_certificate(sigma, sigma));

  // preconditions
  const Subexpression other = Subexpression::parse(e.word, "000000000");
  CHECK_THROWS_AS(disjointness_certificate(sigma, other), std::invalid_argument);
  const Subexpression nondist = Subexpression::parse(e.word, "100000000");
  CHECK_THROWS_AS(disjointness_certificate(nondist, tau), std::invalid_argument);
  const CatalogEntry ii2 = catalog("II2", 3);
  CHECK_THROWS_AS(disjointness_certificate(sigma, ii2.get("gamma")), std::invalid_argument);
}

TEST_CASE("extended disjointness pairs") {
  for (std::size_t n : {4, 5}) {
    CAPTURE(n);
    const CatalogEntry e = catalog("II3-extended", n);
    const Subexpression& sigma = e.get("sigma");
    const Subexpression& tau = e.get("tau");
    CHECK(e.word.length() == 2 * n - 1 + 9);
    CHECK(is_distinguished(sigma));
    CHECK(is_distinguished(tau));
    CHECK(sigma.end() == tau.end());
    CHECK(preceq(tau, sigma));

    const oracle::Group g(Family::B, n);
    const auto os = oracle::cell(g, letters_of(e.word), takes_of(sigma));
    const auto ot = oracle::cell(g, letters_of(e.word), takes_of(tau));
    CHECK(os.distinguished);
    CHECK(ot.distinguished);
    CHECK(cell(sigma).dimension == e.word.length() - os.J.size());
    CHECK(cell(tau).dimension == e.word.length() - ot.J.size());
    CHECK(cell(sigma).dimension == cell(tau).dimension);

    const auto cert = disjointness_certificate(sigma, tau);
    REQUIRE(cert);
    CHECK(cert->root == -Root::simple(n, 1));
    CHECK(certificate_holds(sigma, tau, *cert));
  }
}

TEST_CASE("obstruction search") {
  const CoxeterGroup b3(Family::B, 3);
  CHECK(find_obstructions(ReducedWord(b3, {1})).empty());

  for (std::size_t n : {3, 4}) {
    const CatalogEntry e = catalog("II2", n);
    const auto reports = find_obstructions(e.word);
    bool found = false;
    for (const auto& r : reports) {
      CHECK(r.strictly_preceq);
      CHECK(r.dim_violation);
      CHECK(r.dim_delta >= r.dim_gamma);
      CHECK(preceq(r.delta, r.gamma));
      CHECK_FALSE(r.delta == r.gamma);
      if (r.gamma == e.get("gamma") && r.delta == e.get("delta")) {
        found = true;
        CHECK(r.dim_gamma == 2 * n);
        CHECK(r.dim_delta == 3 * n - 3);
      }
    }
    CHECK(found);
  }
  CHECK_THROWS_AS(find_obstructions(catalog("II2", 6).word, 10), std::length_error);
}

TEST_CASE("disjointness scan") {
  const CatalogEntry e = catalog("II3", 3);
  const auto pairs = scan_disjointness(e.word, e.word.group().generator(2));
  bool found = false;
  for (const auto& p : pairs) {
    CHECK(certificate_holds(p.sigma, p.tau, p.certificate));
    CHECK(preceq(p.tau, p.sigma));
    if (p.sigma == e.get("sigma") && p.tau == e.get("tau")) {
      found = true;
      CHECK(p.certificate.witness_index == 7);
    }
  }
  CHECK(found);
  const CoxeterGroup b3(Family::B, 3);
  CHECK(scan_disjointness(ReducedWord(b3, {1}), b3.identity()).empty());
  CHECK_THROWS_AS(scan_disjointness(e.word, b3.identity(), 5), std::length_error);
}
