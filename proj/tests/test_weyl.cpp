#include <doctest.h>

#include "deodhar/coxeter.hpp"
#include "oracles.hpp"

using namespace deodhar;

namespace {

Root vec_root(const oracle::Vec& v) { return Root(v); }

}  // namespace

TEST_CASE("from_word") {
  const CoxeterGroup b3(Family::B, 3);
  CHECK(b3.from_word(std::vector<int>{}) == WeylElement({1, 2, 3}));
  CHECK(b3.from_word(std::vector<int>{1}) == WeylElement({-1, 2, 3}));
  const WeylElement w0 = b3.from_word(std::vector<int>{3, 2, 1, 2, 3, 2, 1, 2, 1});
  CHECK(w0 == WeylElement({-1, -2, -3}));
  CHECK(w0 == b3.longest_element());
  CHECK_THROWS_AS(b3.from_word(std::vector<int>{4}), std::out_of_range);
  CHECK_THROWS_AS(b3.from_word(std::vector<int>{0}), std::out_of_range);
}

TEST_CASE("w0 of B3 is the unique element of maximal length") {
  const CoxeterGroup b3(Family::B, 3);
  const oracle::Group og(Family::B, 3);
  const std::size_t top = *std::max_element(og.length.begin(), og.length.end());
  std::size_t count = 0;
  for (std::size_t k = 0; k < og.elements.size(); ++k)
    if (og.length[k] == top) {
      ++count;
      CHECK(b3.from_word(og.elements[k].word) == WeylElement({-1, -2, -3}));
    }
  CHECK(count == 1);
  CHECK(top == 9);
}

TEST_CASE("window validation and parsing") {
  CHECK_THROWS_AS(WeylElement({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(WeylElement({1, 4, 2}), std::invalid_argument);
  const CoxeterGroup b3(Family::B, 3), a2(Family::A, 2);
  CHECK(b3.parse_element("e") == b3.identity());
  CHECK(b3.parse_element("-1,2,3") == b3.generator(1));
  CHECK_THROWS_AS(b3.parse_element("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(a2.parse_element("-1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(b3.parse_element("1,,2"), ParseError);
  try {
    parse_int_list("3,2,x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("length, multiply, inverse") {
  const CoxeterGroup b3(Family::B, 3), b4(Family::B, 4);
  CHECK(b3.length(b3.identity()) == 0);
  CHECK(b3.length(b3.longest_element()) == 9);
  const std::vector<int> ii2 = {4, 3, 2, 1, 2, 3, 4, 3, 2, 1, 2, 3};
  CHECK(b4.length(b4.from_word(ii2)) == 12);
  const WeylElement t1 = b3.generator(1), t2 = b3.generator(2);
  CHECK(t1 * t1 == b3.identity());
  CHECK(t2 * b3.identity() == t2);
  const WeylElement x = t2 * t1 * t2;
  CHECK(x.inverse() == x);
  CHECK(x * x.inverse() == b3.identity());
}

TEST_CASE("length and action agree with the reflection-matrix oracle") {
  for (auto [f, n] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3}, {Family::B, 4}}) {
    CAPTURE(n);
    const CoxeterGroup g(f, n);
    const oracle::Group og(f, n);
    CHECK(og.elements.size() == g.elements().size());
    for (std::size_t k = 0; k < og.elements.size(); ++k) {
      const WeylElement w = g.from_word(og.elements[k].word);
      CHECK(g.length(w) == og.length[k]);
      for (const auto& r : og.roots) CHECK(g.act_on_root(w, vec_root(r)) == vec_root(oracle::apply(og.elements[k].matrix, r)));
    }
  }
}

TEST_CASE("action on roots") {
  const CoxeterGroup b3(Family::B, 3);
  const Root b1 = Root::simple(3, 1), b2 = Root::simple(3, 2);
  CHECK(b3.act_on_root(b3.generator(1), b1) == -b1);
  CHECK(b3.act_on_root(b3.generator(1), b2) == b1 * 2 + b2);
  CHECK(b3.act_on_root(b3.generator(2), b1) == b1 + b2);
  const WeylElement x = b3.from_word(std::vector<int>{2, 1, 2});
  CHECK(b3.act_on_root(x, -b1) == -b1);
  CHECK_THROWS_AS(b3.act_on_root(x, Root({0, 2, 0})), std::invalid_argument);
  CHECK_THROWS_AS(b3.act_on_root(x, Root({0, 0, 0})), std::invalid_argument);
  // w0 sends the positive roots onto the negative roots.
  const oracle::Group og(Family::B, 3);
  std::set<Root> images, negatives;
  for (const auto& r : og.positive_roots) {
    images.insert(b3.act_on_root(b3.longest_element(), vec_root(r)));
    negatives.insert(-vec_root(r));
  }
  CHECK(images == negatives);
}

TEST_CASE("right descents agree with length comparison") {
  for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 3}}) {
    const CoxeterGroup g(f, n);
    for (const WeylElement& w : g.elements())
      for (std::size_t i = 1; i <= g.rank(); ++i) {
        const bool by_length = g.length(w * g.generator(i)) < g.length(w);
        CHECK(g.has_right_descent(w, i) == by_length);
        CHECK(g.right_multiply(w, i) == w * g.generator(i));
        CHECK(g.has_left_descent(w, i) == (g.length(g.generator(i) * w) < g.length(w)));
      }
    CHECK_FALSE(g.has_right_descent(g.identity(), 1));
  }
  const CoxeterGroup b3(Family::B, 3);
  CHECK(b3.has_right_descent(b3.generator(1), 1));
}

TEST_CASE("length properties") {
  const CoxeterGroup g(Family::B, 3);
  const auto elems = g.elements();
  for (const auto& u : elems) {
    for (std::size_t i = 1; i <= 3; ++i) {
      const long d = static_cast<long>(g.length(u * g.generator(i))) - static_cast<long>(g.length(u));
      CHECK((d == 1 || d == -1));
    }
    for (std::size_t k = 0; k < elems.size(); k += 7) CHECK(g.length(u * elems[k]) <= g.length(u) + g.length(elems[k]));
  }
}

TEST_CASE("Bruhat order agrees with the subword property") {
  for (auto [f, n] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3}}) {
    CAPTURE(n);
    const CoxeterGroup g(f, n);
    const oracle::Group og(f, n);
    std::vector<WeylElement> lib;
    for (const auto& e : og.elements) lib.push_back(g.from_word(e.word));
    std::size_t mismatches = 0;
    for (std::size_t v = 0; v < og.elements.size(); ++v) {
      const auto below = og.below(v);
      for (std::size_t u = 0; u < og.elements.size(); ++u)
        if (g.bruhat_leq(lib[u], lib[v]) != (below.count(u) > 0)) ++mismatches;
    }
    CHECK(mismatches == 0);
  }
  const CoxeterGroup b3(Family::B, 3);
  CHECK(b3.bruhat_leq(b3.generator(1), b3.from_word(std::vector<int>{1, 2, 1})));
  for (const auto& w : b3.elements()) CHECK(b3.bruhat_leq(b3.identity(), w));
}

TEST_CASE("reduced words") {
  const CoxeterGroup a2(Family::A, 2), b2(Family::B, 2), b3(Family::B, 3);
  CHECK(a2.all_reduced_words(a2.identity()) == std::vector<std::vector<int>>{{}});
  CHECK(a2.all_reduced_words(a2.longest_element()) == std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
  CHECK(b2.all_reduced_words(b2.longest_element()).size() == 2);
  CHECK_THROWS_AS(b3.all_reduced_words(b3.longest_element(), 8), std::length_error);

  const oracle::Group og(Family::B, 3);
  const auto counts = og.reduced_word_counts();
  for (std::size_t k = 0; k < og.elements.size(); ++k) {
    const WeylElement w = b3.from_word(og.elements[k].word);
    const auto words = b3.all_reduced_words(w);
    CHECK(words.size() == counts.at(k));
    CHECK(std::is_sorted(words.begin(), words.end()));
    for (const auto& word : words) CHECK(b3.from_word(word) == w);
  }
}

TEST_CASE("ReducedWord rejects non-reduced words") {
  const CoxeterGroup b3(Family::B, 3);
  CHECK_NOTHROW(ReducedWord(b3, {3, 2, 1, 2, 3, 2, 1, 2, 1}));
  CHECK_THROWS_AS(ReducedWord(b3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ReducedWord(b3, {1, 2, 1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ReducedWord(b3, {5}), std::out_of_range);
  const ReducedWord w(b3, {2, 3});
  CHECK(w.letter(1) == 2);
  CHECK(w.to_string() == "2,3");
}

TEST_CASE("self check") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK_NOTHROW(CoxeterGroup(Family::A, n).self_check());
    CHECK_NOTHROW(CoxeterGroup(Family::B, n).self_check());
  }
}
