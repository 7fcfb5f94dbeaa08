#include <doctest.h>

#include <algorithm>

#include "deodhar/cells.hpp"
#include "oracles.hpp"

using namespace deodhar;

namespace {

const CoxeterGroup kA2(Family::A, 2);
const ReducedWord kSts(kA2, {1, 2, 1});

std::vector<std::string> masks(const std::vector<Subexpression>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.mask_string());
  return out;
}

}  // namespace

TEST_CASE("subexpressions of sts") {
  const auto all = enumerate_subexpressions(kSts);
  CHECK(all.size() == 8);
  CHECK(masks(all) == std::vector<std::string>{"000", "001", "010", "011", "100", "101", "110", "111"});
  const auto dist = distinguished_subexpressions(kSts);
  CHECK(dist.size() == 7);
  const auto dist_masks = masks(dist);
  CHECK(std::find(dist_masks.begin(), dist_masks.end(), "100") == dist_masks.end());
  CHECK_FALSE(is_distinguished(Subexpression::parse(kSts, "100")));
  CHECK(is_distinguished(Subexpression::parse(kSts, "101")));
}

TEST_CASE("subexpression parsing") {
  CHECK_THROWS_AS(Subexpression::parse(kSts, "10"), ParseError);
  try {
    Subexpression::parse(kSts, "1x1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
  const Subexpression g = Subexpression::parse(kSts, "011");
  CHECK(g.bits() == 3);
  CHECK(Subexpression::from_bits(kSts, 3) == g);
  CHECK(g.takes(2));
  CHECK_FALSE(g.takes(1));
  CHECK(g.partial(0) == kA2.identity());
  CHECK(g.end() == kA2.from_word(std::vector<int>{2, 1}));
  const ReducedWord empty(kA2, {});
  CHECK(enumerate_subexpressions(empty).size() == 1);
}

TEST_CASE("cells of sts ending at e") {
  const auto cells = gamma_v_cells(kSts, kA2.identity());
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].mask == "000");
  CHECK(cells[0].affine_rank == 0);
  CHECK(cells[0].torus_rank == 3);
  CHECK(cells[1].mask == "101");
  CHECK(cells[1].affine_rank == 1);
  CHECK(cells[1].torus_rank == 1);
  CHECK(cells[1].I == std::vector<std::size_t>{1, 3});
  CHECK(cells[1].J == std::vector<std::size_t>{1});
  CHECK(cells[1].dimension == 2);
}

TEST_CASE("cells agree with the length oracle on every reduced word of B3 and A3") {
  for (auto [f, n] : {std::pair{Family::B, 3}, {Family::A, 3}}) {
    const CoxeterGroup g(f, n);
    const oracle::Group og(f, n);
    std::size_t compared = 0, mismatches = 0;
    for (const auto& e : og.elements) {
      if (e.word.size() > 9) continue;
      for (const auto& word : g.all_reduced_words(g.from_word(e.word))) {
        const ReducedWord rw(g, word);
        for_each_subexpression(rw, [&](const Subexpression& s) {
          std::vector<bool> takes;
          for (std::size_t i = 1; i <= s.length(); ++i) takes.push_back(s.takes(i));
          const oracle::CellData d = oracle::cell(og, word, takes);
          ++compared;
          bool ok = is_distinguished(s) == d.distinguished && I_set(s) == d.I && J_set(s) == d.J &&
                    s.end() == g.from_word(og.elements[d.end].word);
          if (ok && d.distinguished) {
            const auto phi = phi_sequence(s);
            ok = phi.size() == d.phi.size();
            for (std::size_t k = 0; ok && k < phi.size(); ++k)
              ok = phi[k].index == d.phi[k].first && phi[k].root == Root(d.phi[k].second) &&
                   phi[k].free == !s.takes(phi[k].index);
          }
          if (!ok) ++mismatches;
        });
      }
    }
    CHECK(compared > 1000);
    CHECK(mismatches == 0);
  }
}

TEST_CASE("cell descriptors") {
  const CoxeterGroup b3(Family::B, 3);
  const ReducedWord w0(b3, {3, 2, 1, 2, 3, 2, 1, 2, 1});
  for (const auto& s : distinguished_subexpressions(w0)) {
    const CellDescriptor c = cell(s);
    CHECK(c.distinguished);
    CHECK(c.nonempty);
    CHECK(c.dimension == w0.length() - c.J.size());
    CHECK(c.affine_rank + c.torus_rank == c.dimension);
    CHECK(c.phi.size() == c.dimension);
    for (const auto& e : c.phi) CHECK(e.root.is_negative());
  }
  const CellDescriptor bad = cell(Subexpression::parse(kSts, "100"));
  CHECK_FALSE(bad.distinguished);
  CHECK_FALSE(bad.nonempty);
  CHECK_THROWS_AS(phi_sequence(Subexpression::parse(kSts, "100")), std::invalid_argument);
}

TEST_CASE("point count polynomials") {
  CHECK(IntPolynomial::monomial_power(1, 3).to_string() == "q^3 - 3q^2 + 3q - 1");
  CHECK(IntPolynomial().to_string() == "0");
  const IntPolynomial pe = point_count_polynomial(kSts, kA2.identity());
  // (q-1)^3 + q(q-1)
  CHECK(pe == IntPolynomial({-1, 2, -2, 1}));
  for (long long q : {2, 3, 5, 7}) CHECK(pe.evaluate(q) == (q - 1) * (q - 1) * (q - 1) + q * (q - 1));
  CHECK(point_count_polynomial(kSts, kA2.longest_element()) == IntPolynomial({1}));

  // Summed over all endpoints the cells cover BwB/B, which has q^l points.
  const CoxeterGroup b3(Family::B, 3);
  const ReducedWord w(b3, {3, 2, 1, 2, 3, 2, 1});
  IntPolynomial total;
  for (const auto& v : b3.elements()) total += point_count_polynomial(w, v);
  std::vector<long long> ql(w.length() + 1, 0);
  ql.back() = 1;
  CHECK(total == IntPolynomial(ql));
}

TEST_CASE("preceq and closure bounds") {
  const Subexpression e = Subexpression::parse(kSts, "000");
  const Subexpression full = Subexpression::parse(kSts, "111");
  CHECK(preceq(full, e));
  CHECK_FALSE(preceq(e, full));
  CHECK(preceq(e, e));
  CHECK(closure_upper_bound(e).size() == 7);
  const auto top = closure_upper_bound(full);
  REQUIRE(top.size() == 1);
  CHECK(top[0].mask == "111");
  const ReducedWord other(kA2, {2, 1, 2});
  CHECK_THROWS_AS(preceq(Subexpression::parse(other, "000"), e), std::invalid_argument);
  CHECK_THROWS_AS(closure_upper_bound(Subexpression::parse(kSts, "100")), std::invalid_argument);

  // preceq read off its definition: gamma^i <= delta^i for every i
  const CoxeterGroup b3(Family::B, 3);
  const ReducedWord w(b3, {1, 2, 1, 3, 2});
  BruhatCache cache(b3);
  for (const auto& d : distinguished_subexpressions(w))
    for (const auto& g : distinguished_subexpressions(w)) {
      bool expected = true;
      for (std::size_t i = 1; i <= w.length(); ++i) expected = expected && b3.bruhat_leq(g.partial(i), d.partial(i));
      CHECK(preceq(d, g, &cache) == expected);
      CHECK(preceq(d, g) == expected);
    }
}

TEST_CASE("Hasse diagram") {
  const HasseDiagram h = hasse_diagram(kSts);
  CHECK(h.nodes.size() == 7);
  // covers are exactly the non-transitive strict relations
  auto lt = [&](std::size_t a, std::size_t b) { return a != b && preceq(h.nodes[a], h.nodes[b]); };
  std::set<std::pair<std::size_t, std::size_t>> expected;
  for (std::size_t u = 0; u < h.nodes.size(); ++u)
    for (std::size_t d = 0; d < h.nodes.size(); ++d) {
      if (!lt(d, u)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < h.nodes.size(); ++m)
        if (lt(d, m) && lt(m, u)) cover = false;
      if (cover) expected.insert({u, d});
    }
  CHECK(std::set<std::pair<std::size_t, std::size_t>>(h.covers.begin(), h.covers.end()) == expected);
  const std::string dot = hasse_dot(kSts);
  CHECK(dot.rfind("digraph deodhar {", 0) == 0);
  CHECK(dot.find("000\\ndim 3") != std::string::npos);
  CHECK_THROWS_AS(hasse_diagram(kSts, 2), std::length_error);
}

TEST_CASE("enumeration bound") {
  const CoxeterGroup b5(Family::B, 5);
  std::vector<int> w0;  // (t1 t2 t3 t4 t5)^5
  for (int k = 0; k < 5; ++k)
    for (int i = 1; i <= 5; ++i) w0.push_back(i);
  CHECK(b5.from_word(w0) == b5.longest_element());
  CHECK_THROWS_AS(enumerate_subexpressions(ReducedWord(b5, w0)), std::length_error);
}
