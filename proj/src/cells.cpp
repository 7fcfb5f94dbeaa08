#include "deodhar/cells.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "deodhar/parallel.hpp"

namespace deodhar {

// ---------------------------------------------------------------- Subexpression

namespace {

std::vector<WeylElement> partial_products(const ReducedWord& word, const std::vector<bool>& takes) {
  const CoxeterGroup& g = word.group();
  std::vector<WeylElement> partials;
  partials.reserve(takes.size() + 1);
  partials.push_back(g.identity());
  for (std::size_t i = 1; i <= takes.size(); ++i) {
    const WeylElement& prev = partials.back();
    partials.push_back(takes[i - 1] ? g.right_multiply(prev, word.letter(i)) : prev);
  }
  return partials;
}

}  // namespace

Subexpression::Subexpression(ReducedWord word, std::vector<bool> takes)
    : word_(std::make_shared<const ReducedWord>(std::move(word))), takes_(std::move(takes)) {
  if (takes_.size() != word_->length())
    throw std::invalid_argument("mask length " + std::to_string(takes_.size()) +
                                " does not match word length " + std::to_string(word_->length()));
  partials_ = partial_products(*word_, takes_);
}

Subexpression Subexpression::parse(ReducedWord word, std::string_view mask) {
  std::vector<bool> takes;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] != '0' && mask[i] != '1') throw ParseError("mask characters must be 0 or 1", mask, i);
    takes.push_back(mask[i] == '1');
  }
  if (takes.size() != word.length())
    throw ParseError("mask length does not match word length " + std::to_string(word.length()),
                     mask, mask.size());
  return Subexpression(std::move(word), std::move(takes));
}

Subexpression Subexpression::from_bits(ReducedWord word, std::uint64_t bits) {
  const std::size_t l = word.length();
  if (l > 64) throw std::length_error("word too long for a 64-bit mask");
  std::vector<bool> takes(l);
  for (std::size_t i = 1; i <= l; ++i) takes[i - 1] = (bits >> (l - i)) & 1u;
  return Subexpression(std::move(word), std::move(takes));
}

std::string Subexpression::mask_string() const {
  std::string s;
  for (bool b : takes_) s += b ? '1' : '0';
  return s;
}

std::uint64_t Subexpression::bits() const {
  std::uint64_t v = 0;
  for (bool b : takes_) v = (v << 1) | (b ? 1u : 0u);
  return v;
}

// ---------------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial_power(long long root, std::size_t exponent) {
  IntPolynomial r({1});
  const IntPolynomial factor({-root, 1});
  for (std::size_t k = 0; k < exponent; ++k) r = r * factor;
  return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<long long> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<long long> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(c));
}

long long IntPolynomial::evaluate(long long q) const {
  long long v = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * q + coeffs_[i];
  return v;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    const long long c = coeffs_[d];
    if (c == 0) continue;
    const long long a = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (a != 1 || d == 0) os << a;
    if (d >= 1) os << "q";
    if (d >= 2) os << "^" << d;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- Bruhat cache

bool BruhatCache::leq(const WeylElement& u, const WeylElement& v) {
  auto key = std::make_pair(u, v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const bool r = group_.bruhat_leq(u, v);
  memo_.emplace(std::move(key), r);
  return r;
}

// ---------------------------------------------------------------- enumeration

void for_each_subexpression(const ReducedWord& word,
                            const std::function<void(const Subexpression&)>& visit) {
  const std::size_t l = word.length();
  if (l > kMaxEnumerationLength)
    throw std::length_error("word length " + std::to_string(l) + " exceeds enumeration bound " +
                            std::to_string(kMaxEnumerationLength));
  auto shared = std::make_shared<const ReducedWord>(word);
  const CoxeterGroup& g = word.group();
  std::vector<bool> takes(l);
  std::vector<WeylElement> partials(l + 1);
  partials[0] = g.identity();
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i > l) {
      visit(Subexpression(shared, takes, partials));
      return;
    }
    takes[i - 1] = false;
    partials[i] = partials[i - 1];
    dfs(i + 1);
    takes[i - 1] = true;
    partials[i] = g.right_multiply(partials[i - 1], word.letter(i));
    dfs(i + 1);
  };
  dfs(1);
}

std::vector<Subexpression> enumerate_subexpressions(const ReducedWord& word) {
  std::vector<Subexpression> out;
  for_each_subexpression(word, [&](const Subexpression& s) { out.push_back(s); });
  return out;
}

std::vector<Subexpression> distinguished_subexpressions(const ReducedWord& word) {
  const std::size_t l = word.length();
  if (l > kMaxEnumerationLength)
    throw std::length_error("word length " + std::to_string(l) + " exceeds enumeration bound " +
                            std::to_string(kMaxEnumerationLength));
  auto shared = std::make_shared<const ReducedWord>(word);
  const CoxeterGroup& g = word.group();
  std::vector<bool> takes(l);
  std::vector<WeylElement> partials(l + 1);
  partials[0] = g.identity();
  std::vector<Subexpression> out;
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i > l) {
      out.push_back(Subexpression(shared, takes, partials));
      return;
    }
    const auto s = static_cast<std::size_t>(word.letter(i));
    // A descent of gamma^{i-1} at s_i forces gamma_i = s_i.
    if (!g.has_right_descent(partials[i - 1], s)) {
      takes[i - 1] = false;
      partials[i] = partials[i - 1];
      dfs(i + 1);
    }
    takes[i - 1] = true;
    partials[i] = g.right_multiply(partials[i - 1], s);
    dfs(i + 1);
  };
  dfs(1);
  return out;
}

// ---------------------------------------------------------------- cell data

bool is_distinguished(const Subexpression& g) {
  const CoxeterGroup& grp = g.word().group();
  for (std::size_t i = 1; i <= g.length(); ++i)
    if (!g.takes(i) && grp.has_right_descent(g.partial(i - 1), g.word().letter(i))) return false;
  return true;
}

std::vector<std::size_t> I_set(const Subexpression& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= g.length(); ++i)
    if (g.takes(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> J_set(const Subexpression& g) {
  const CoxeterGroup& grp = g.word().group();
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= g.length(); ++i)
    if (grp.has_right_descent(g.partial(i), g.word().letter(i))) out.push_back(i);
  return out;
}

namespace {

std::vector<PhiEntry> phi_unchecked(const Subexpression& g) {
  const CoxeterGroup& grp = g.word().group();
  std::vector<PhiEntry> out;
  for (std::size_t i = 1; i <= g.length(); ++i) {
    const auto s = static_cast<std::size_t>(g.word().letter(i));
    // gamma^i(alpha_i) > 0 exactly when gamma^i has no descent at s_i.
    if (grp.has_right_descent(g.partial(i), s)) continue;
    const Root neg_simple = -Root::simple(grp.rank(), s);
    out.push_back({i, grp.act_on_root(g.partial(i), neg_simple), !g.takes(i)});
  }
  return out;
}

}  // namespace

CellDescriptor cell(const Subexpression& g) {
  CellDescriptor c;
  c.mask = g.mask_string();
  c.I = I_set(g);
  c.J = J_set(g);
  c.distinguished = is_distinguished(g);
  c.nonempty = std::includes(c.I.begin(), c.I.end(), c.J.begin(), c.J.end());
  const std::size_t l = g.length();
  c.torus_rank = l - c.I.size();
  c.dimension = l - c.J.size();
  c.affine_rank = c.nonempty ? c.I.size() - c.J.size() : 0;
  c.endpoint = g.end();
  c.phi = phi_unchecked(g);
  return c;
}

std::vector<Subexpression> gamma_v(const ReducedWord& word, const WeylElement& v) {
  std::vector<Subexpression> out;
  for (auto& s : distinguished_subexpressions(word))
    if (s.end() == v) out.push_back(std::move(s));
  return out;
}

std::vector<CellDescriptor> gamma_v_cells(const ReducedWord& word, const WeylElement& v) {
  std::vector<CellDescriptor> out;
  for (const auto& s : gamma_v(word, v)) out.push_back(cell(s));
  return out;
}

bool preceq(const Subexpression& delta, const Subexpression& gamma, BruhatCache* cache) {
  if (!(delta.word() == gamma.word()))
    throw std::invalid_argument("preceq: subexpressions of different words");
  const CoxeterGroup& grp = gamma.word().group();
  for (std::size_t i = 1; i <= gamma.length(); ++i) {
    const bool ok = cache ? cache->leq(gamma.partial(i), delta.partial(i))
                          : grp.bruhat_leq(gamma.partial(i), delta.partial(i));
    if (!ok) return false;
  }
  return true;
}

std::vector<PhiEntry> phi_sequence(const Subexpression& g) {
  if (!is_distinguished(g))
    throw std::invalid_argument("phi_sequence: subexpression " + g.mask_string() +
                                " is not distinguished");
  return phi_unchecked(g);
}

std::vector<CellDescriptor> closure_upper_bound(const Subexpression& g) {
  if (!is_distinguished(g))
    throw std::invalid_argument("closure_upper_bound: subexpression " + g.mask_string() +
                                " is not distinguished");
  BruhatCache cache(g.word().group());
  std::vector<CellDescriptor> out;
  for (const auto& d : distinguished_subexpressions(g.word()))
    if (preceq(d, g, &cache)) out.push_back(cell(d));
  return out;
}

IntPolynomial point_count_polynomial(const ReducedWord& word, const WeylElement& v) {
  IntPolynomial total;
  for (const auto& s : gamma_v(word, v)) {
    const CellDescriptor c = cell(s);
    total += IntPolynomial::monomial_power(0, c.affine_rank) *
             IntPolynomial::monomial_power(1, c.torus_rank);
  }
  return total;
}

// ---------------------------------------------------------------- Hasse diagram

HasseDiagram hasse_diagram(const ReducedWord& word, std::size_t max_length) {
  if (word.length() > max_length)
    throw std::length_error("hasse: word length " + std::to_string(word.length()) +
                            " exceeds bound " + std::to_string(max_length));
  HasseDiagram h;
  h.nodes = distinguished_subexpressions(word);
  const std::size_t n = h.nodes.size();
  const std::size_t blocks = (n + 63) / 64;
  // below[g] = { d : d strictly precedes g }
  std::vector<std::vector<std::uint64_t>> below(n, std::vector<std::uint64_t>(blocks, 0));
  parallel_for(n, [&](std::size_t gi) {
    BruhatCache cache(word.group());
    for (std::size_t di = 0; di < n; ++di)
      if (di != gi && preceq(h.nodes[di], h.nodes[gi], &cache)) below[gi][di / 64] |= 1ull << (di % 64);
  });
  for (std::size_t gi = 0; gi < n; ++gi) {
    std::vector<std::uint64_t> covered = below[gi];
    for (std::size_t ei = 0; ei < n; ++ei) {
      if (!(below[gi][ei / 64] >> (ei % 64) & 1u)) continue;
      for (std::size_t b = 0; b < blocks; ++b) covered[b] &= ~below[ei][b];
    }
    for (std::size_t di = 0; di < n; ++di)
      if (covered[di / 64] >> (di % 64) & 1u) h.covers.emplace_back(gi, di);
  }
  return h;
}

std::string hasse_dot(const ReducedWord& word, std::size_t max_length) {
  const HasseDiagram h = hasse_diagram(word, max_length);
  std::ostringstream os;
  os << "digraph deodhar {\n";
  os << "  // word " << word.to_string() << " in " << word.group().name()
     << "; edge u -> d means d is covered by u\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << h.nodes[i].mask_string() << "\\ndim "
       << cell(h.nodes[i]).dimension << "\"];\n";
  for (const auto& [u, d] : h.covers) os << "  n" << u << " -> n" << d << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace deodhar
