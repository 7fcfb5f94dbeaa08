#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "deodhar/coxeter.hpp"

namespace deodhar {

/// Largest word length accepted by exhaustive subexpression enumeration.
inline constexpr std::size_t kMaxEnumerationLength = 24;

/*
  A subexpression gamma of a reduced word s_1 ... s_l: a choice
  gamma_i in {1, s_i} for every position, with cached partial products
  gamma^0 = e, gamma^i = gamma^{i-1} gamma_i.

  The mask string has one character per position, leftmost = position 1,
  '1' meaning gamma_i = s_i.  As an integer the mask puts position 1 in the
  most significant bit, so ascending integers and lexicographic mask
  strings give the same order.
*/
class Subexpression {
public:
  Subexpression(ReducedWord word, std::vector<bool> takes);
  static Subexpression parse(ReducedWord word, std::string_view mask);
  static Subexpression from_bits(ReducedWord word, std::uint64_t bits);

  const ReducedWord& word() const { return *word_; }
  std::size_t length() const { return takes_.size(); }
  /// True when gamma_i = s_i (1-based position).
  bool takes(std::size_t i) const { return takes_[i - 1]; }
  /// gamma^i for i = 0..l.
  const WeylElement& partial(std::size_t i) const { return partials_[i]; }
  const WeylElement& end() const { return partials_.back(); }

  std::string mask_string() const;
  std::uint64_t bits() const;

  bool operator==(const Subexpression& o) const {
    return takes_ == o.takes_ && *word_ == *o.word_;
  }

private:
  Subexpression(std::shared_ptr<const ReducedWord> word, std::vector<bool> takes,
                std::vector<WeylElement> partials)
      : word_(std::move(word)), takes_(std::move(takes)), partials_(std::move(partials)) {}

  std::shared_ptr<const ReducedWord> word_;
  std::vector<bool> takes_;
  std::vector<WeylElement> partials_;

  friend void for_each_subexpression(const ReducedWord&,
                                     const std::function<void(const Subexpression&)>&);
  friend std::vector<Subexpression> distinguished_subexpressions(const ReducedWord&);
};

struct PhiEntry {
  std::size_t index = 0;  ///< position i in the word
  Root root;              ///< gamma^i(-alpha_i), always negative
  bool free = false;      ///< i not in I(gamma): the coordinate lives in k^x
};

struct CellDescriptor {
  std::string mask;
  std::vector<std::size_t> I;  ///< positions with gamma_i = s_i
  std::vector<std::size_t> J;  ///< positions with gamma^i s_i < gamma^i
  bool distinguished = false;
  bool nonempty = false;
  std::size_t affine_rank = 0;  ///< |I| - |J| (nonempty cells only)
  std::size_t torus_rank = 0;   ///< l - |I|
  std::size_t dimension = 0;    ///< l - |J|
  WeylElement endpoint;
  std::vector<PhiEntry> phi;
};

/// Integer polynomial in one variable q, dense coefficients (index = degree).
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coeffs);
  static IntPolynomial monomial_power(long long root, std::size_t exponent);  // (q - root)^e

  const std::vector<long long>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
  bool operator==(const IntPolynomial&) const = default;

  long long evaluate(long long q) const;
  std::string to_string() const;

private:
  void trim();
  std::vector<long long> coeffs_;
};

/// Memoized Bruhat comparisons; not thread safe, use one per thread.
class BruhatCache {
public:
  explicit BruhatCache(CoxeterGroup group) : group_(group) {}
  bool leq(const WeylElement& u, const WeylElement& v);

private:
  struct PairHash {
    std::size_t operator()(const std::pair<WeylElement, WeylElement>& p) const noexcept {
      return WeylElementHash{}(p.first) * 31 + WeylElementHash{}(p.second);
    }
  };
  CoxeterGroup group_;
  std::unordered_map<std::pair<WeylElement, WeylElement>, bool, PairHash> memo_;
};

/// Visits all 2^l subexpressions in ascending mask order.
void for_each_subexpression(const ReducedWord& word,
                            const std::function<void(const Subexpression&)>& visit);
std::vector<Subexpression> enumerate_subexpressions(const ReducedWord& word);
/// Distinguished subexpressions only, in ascending mask order (pruned search).
std::vector<Subexpression> distinguished_subexpressions(const ReducedWord& word);

bool is_distinguished(const Subexpression& g);
std::vector<std::size_t> I_set(const Subexpression& g);
std::vector<std::size_t> J_set(const Subexpression& g);
CellDescriptor cell(const Subexpression& g);

/// Distinguished subexpressions with endpoint v, ascending mask order.
std::vector<Subexpression> gamma_v(const ReducedWord& word, const WeylElement& v);
std::vector<CellDescriptor> gamma_v_cells(const ReducedWord& word, const WeylElement& v);

/// delta <= gamma  iff  gamma^i <= delta^i in Bruhat order for every i = 1..l.
bool preceq(const Subexpression& delta, const Subexpression& gamma, BruhatCache* cache = nullptr);

std::vector<PhiEntry> phi_sequence(const Subexpression& g);

/// All distinguished delta with delta <= gamma.
std::vector<CellDescriptor> closure_upper_bound(const Subexpression& g);

/// Sum of q^{affine} (q-1)^{torus} over the cells with endpoint v.
IntPolynomial point_count_polynomial(const ReducedWord& word, const WeylElement& v);

struct HasseDiagram {
  std::vector<Subexpression> nodes;
  /// (upper, lower) node indices: lower is covered by upper.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

HasseDiagram hasse_diagram(const ReducedWord& word, std::size_t max_length = 16);
std::string hasse_dot(const ReducedWord& word, std::size_t max_length = 16);

}  // namespace deodhar
