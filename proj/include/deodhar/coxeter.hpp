#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deodhar {

/*
  Weyl groups of types A_n and B_n, realized as (signed) permutations.

  Type B_n uses the labeling where t_1 is attached to t_2 by the double
  bond, so beta_1 is the short simple root:

      beta_1 = e_1,   beta_i = e_i - e_{i-1}  (i >= 2)

  t_1 changes the sign of coordinate 1 and t_i swaps coordinates i-1, i.
  Type A_n lives in R^{n+1} with alpha_i = e_i - e_{i+1} and s_i swapping
  coordinates i, i+1.

  An element w is stored by its window (w(1), ..., w(m)), m the ambient
  dimension, meaning w(e_i) = sign(w(i)) e_{|w(i)|}.  Products compose as
  functions: (u*v)(i) = u(v(i)).
*/

enum class Family { A, B };

char family_letter(Family f);
Family parse_family(std::string_view s);

/// Error raised for malformed textual input.  The message carries the
/// character offset of the offending token.
class ParseError : public std::invalid_argument {
public:
  ParseError(std::string_view what, std::string_view input, std::size_t pos);
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

/// Parses "3,2,1" style comma separated integers.
std::vector<int> parse_int_list(std::string_view text);
std::string format_int_list(std::span<const int> values);

/// Root as an integer coefficient vector over the simple roots.
class Root {
public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  static Root simple(std::size_t rank, std::size_t i);

  std::span<const int> coeffs() const { return coeffs_; }
  std::size_t rank() const { return coeffs_.size(); }
  int operator[](std::size_t i) const { return coeffs_[i]; }

  int height() const;
  bool is_positive() const;
  bool is_negative() const;
  bool is_zero() const;

  Root operator-() const;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root operator*(int k) const;

  auto operator<=>(const Root&) const = default;

  std::string to_string() const { return format_int_list(coeffs_); }
  static Root parse(std::string_view text) { return Root(parse_int_list(text)); }

private:
  std::vector<int> coeffs_;
};

class WeylElement {
public:
  WeylElement() = default;
  /// Validates that |w(1)|, ..., |w(m)| is a permutation of 1..m.
  explicit WeylElement(std::vector<int> window);

  static WeylElement identity(std::size_t degree);

  std::span<const int> window() const { return window_; }
  std::size_t degree() const { return window_.size(); }

  /// Image of a signed index (1-based, nonzero).
  int operator()(int i) const { return i > 0 ? window_[i - 1] : -window_[-i - 1]; }

  WeylElement operator*(const WeylElement& v) const;
  WeylElement inverse() const;
  bool is_identity() const;

  auto operator<=>(const WeylElement&) const = default;

  std::string to_string() const { return format_int_list(window_); }

private:
  std::vector<int> window_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

class ReducedWord;

/// The Coxeter system (W, S) of a given family and rank.  Small value type.
class CoxeterGroup {
public:
  CoxeterGroup(Family family, std::size_t rank);

  Family family() const { return family_; }
  std::size_t rank() const { return rank_; }
  /// Dimension of the ambient space the roots live in.
  std::size_t degree() const { return family_ == Family::A ? rank_ + 1 : rank_; }
  std::string name() const;

  WeylElement identity() const { return WeylElement::identity(degree()); }
  WeylElement generator(std::size_t i) const;
  WeylElement longest_element() const;
  WeylElement from_word(std::span<const int> letters) const;
  /// Accepts "e" or a window such as "-1,2,3".
  WeylElement parse_element(std::string_view text) const;

  std::size_t length(const WeylElement& w) const;
  bool has_right_descent(const WeylElement& w, std::size_t i) const;
  bool has_left_descent(const WeylElement& w, std::size_t i) const;
  /// w * t_i, computed directly on the window.
  WeylElement right_multiply(const WeylElement& w, std::size_t i) const;

  bool bruhat_leq(const WeylElement& u, const WeylElement& v) const;

  Root act_on_root(const WeylElement& w, const Root& alpha) const;
  bool is_root_vector(std::span<const int> coeffs) const;

  std::vector<int> to_ambient(const Root& alpha) const;
  Root from_ambient(std::span<const int> x) const;

  /// Every element of W, ordered by (length, window).
  std::vector<WeylElement> elements() const;

  /// All reduced words of w in lexicographic order.
  std::vector<std::vector<int>> all_reduced_words(const WeylElement& w,
                                                  std::size_t max_length = 12) const;

  /// Consistency of the Cartan convention; throws std::logic_error.
  void self_check() const;

  bool operator==(const CoxeterGroup&) const = default;

private:
  void check_element(const WeylElement& w) const;
  void check_index(std::size_t i) const;

  Family family_;
  std::size_t rank_;
};

/// A reduced expression s_1 ... s_l; reducedness is checked on construction.
class ReducedWord {
public:
  ReducedWord(CoxeterGroup group, std::vector<int> letters);

  const CoxeterGroup& group() const { return group_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  /// 1-based access to the generator index at a position.
  int letter(std::size_t pos) const { return letters_[pos - 1]; }
  const WeylElement& product() const { return product_; }

  std::string to_string() const { return format_int_list(letters_); }

  bool operator==(const ReducedWord& o) const {
    return group_ == o.group_ && letters_ == o.letters_;
  }

private:
  CoxeterGroup group_;
  std::vector<int> letters_;
  WeylElement product_;
};

}  // namespace deodhar
