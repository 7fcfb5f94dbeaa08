#include "deodhar/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace deodhar {

char family_letter(Family f) { return f == Family::A ? 'A' : 'B'; }

Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  throw ParseError("unknown family", s, 0);
}

namespace {

std::string parse_message(std::string_view what, std::string_view input, std::size_t pos) {
  std::ostringstream os;
  os << what << " at position " << pos << " in \"" << input << "\"";
  return os.str();
}

}  // namespace

ParseError::ParseError(std::string_view what, std::string_view input, std::size_t pos)
    : std::invalid_argument(parse_message(what, input, pos)), pos_(pos) {}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) throw ParseError("expected integer", text, pos);
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", text, pos);
    ++pos;
  }
  return out;
}

std::string format_int_list(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// ---------------------------------------------------------------- Root

Root Root::simple(std::size_t rank, std::size_t i) {
  std::vector<int> c(rank, 0);
  c.at(i - 1) = 1;
  return Root(std::move(c));
}

int Root::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c <= 0; });
}

bool Root::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const { return *this * -1; }

Root Root::operator+(const Root& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("root rank mismatch");
  std::vector<int> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return Root(std::move(c));
}

Root Root::operator-(const Root& o) const { return *this + (-o); }

Root Root::operator*(int k) const {
  std::vector<int> c(coeffs_);
  for (int& x : c) x *= k;
  return Root(std::move(c));
}

// ---------------------------------------------------------------- WeylElement

WeylElement::WeylElement(std::vector<int> window) : window_(std::move(window)) {
  const int m = static_cast<int>(window_.size());
  std::vector<bool> seen(window_.size(), false);
  for (int x : window_) {
    const int a = std::abs(x);
    if (a < 1 || a > m || seen[a - 1])
      throw std::invalid_argument("window is not a signed permutation: " + to_string());
    seen[a - 1] = true;
  }
}

WeylElement WeylElement::identity(std::size_t degree) {
  std::vector<int> w(degree);
  std::iota(w.begin(), w.end(), 1);
  return WeylElement(std::move(w));
}

WeylElement WeylElement::operator*(const WeylElement& v) const {
  if (v.degree() != degree()) throw std::invalid_argument("degree mismatch in product");
  WeylElement r = v;
  for (int& x : r.window_) x = (*this)(x);
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r = *this;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    const int x = window_[i];
    const int image = static_cast<int>(i) + 1;
    r.window_[std::abs(x) - 1] = x > 0 ? image : -image;
  }
  return r;
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < window_.size(); ++i)
    if (window_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : w.window()) h = (h ^ static_cast<std::size_t>(x + 64)) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- CoxeterGroup

CoxeterGroup::CoxeterGroup(Family family, std::size_t rank) : family_(family), rank_(rank) {
  if (rank == 0) throw std::invalid_argument("rank must be positive");
  if (rank > 32) throw std::invalid_argument("rank too large");
}

std::string CoxeterGroup::name() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

void CoxeterGroup::check_index(std::size_t i) const {
  if (i < 1 || i > rank_)
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range for " +
                            name());
}

void CoxeterGroup::check_element(const WeylElement& w) const {
  if (w.degree() != degree())
    throw std::invalid_argument("element " + w.to_string() + " does not belong to " + name());
  if (family_ == Family::A)
    for (int x : w.window())
      if (x < 0) throw std::invalid_argument("negative entry in type A window " + w.to_string());
}

WeylElement CoxeterGroup::right_multiply(const WeylElement& w, std::size_t i) const {
  check_index(i);
  std::vector<int> win(w.window().begin(), w.window().end());
  if (family_ == Family::B) {
    if (i == 1)
      win[0] = -win[0];
    else
      std::swap(win[i - 2], win[i - 1]);
  } else {
    std::swap(win[i - 1], win[i]);
  }
  return WeylElement(std::move(win));
}

WeylElement CoxeterGroup::generator(std::size_t i) const { return right_multiply(identity(), i); }

WeylElement CoxeterGroup::longest_element() const {
  std::vector<int> w(degree());
  if (family_ == Family::B) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = -static_cast<int>(i + 1);
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<int>(w.size() - i);
  }
  return WeylElement(std::move(w));
}

WeylElement CoxeterGroup::from_word(std::span<const int> letters) const {
  WeylElement w = identity();
  for (int s : letters) {
    if (s < 1) throw std::out_of_range("generator index " + std::to_string(s) + " out of range");
    w = right_multiply(w, static_cast<std::size_t>(s));
  }
  return w;
}

WeylElement CoxeterGroup::parse_element(std::string_view text) const {
  if (text == "e") return identity();
  WeylElement w(parse_int_list(text));
  check_element(w);
  return w;
}

std::size_t CoxeterGroup::length(const WeylElement& w) const {
  check_element(w);
  auto win = w.window();
  std::size_t len = 0;
  for (std::size_t i = 0; i < win.size(); ++i) {
    if (family_ == Family::B && win[i] < 0) ++len;
    for (std::size_t j = i + 1; j < win.size(); ++j) {
      if (win[i] > win[j]) ++len;
      if (family_ == Family::B && win[i] + win[j] < 0) ++len;
    }
  }
  return len;
}

bool CoxeterGroup::has_right_descent(const WeylElement& w, std::size_t i) const {
  check_index(i);
  auto win = w.window();
  if (family_ == Family::B) return i == 1 ? win[0] < 0 : win[i - 2] > win[i - 1];
  return win[i - 1] > win[i];
}

bool CoxeterGroup::has_left_descent(const WeylElement& w, std::size_t i) const {
  return has_right_descent(w.inverse(), i);
}

bool CoxeterGroup::bruhat_leq(const WeylElement& u0, const WeylElement& v0) const {
  WeylElement u = u0, v = v0;
  std::size_t lu = length(u), lv = length(v);
  // Lifting property: for a right descent s of v, u <= v iff min(u, us) <= vs.
  while (true) {
    if (lu > lv) return false;
    if (lu == lv) return u == v;
    std::size_t s = 1;
    while (!has_right_descent(v, s)) ++s;
    if (has_right_descent(u, s)) {
      u = right_multiply(u, s);
      --lu;
    }
    v = right_multiply(v, s);
    --lv;
  }
}

std::vector<int> CoxeterGroup::to_ambient(const Root& alpha) const {
  if (alpha.rank() != rank_) throw std::invalid_argument("root rank mismatch for " + name());
  const auto c = alpha.coeffs();
  std::vector<int> x(degree(), 0);
  if (family_ == Family::B) {
    for (std::size_t k = 0; k < rank_; ++k) x[k] = c[k] - (k + 1 < rank_ ? c[k + 1] : 0);
  } else {
    for (std::size_t k = 0; k <= rank_; ++k)
      x[k] = (k < rank_ ? c[k] : 0) - (k > 0 ? c[k - 1] : 0);
  }
  return x;
}

Root CoxeterGroup::from_ambient(std::span<const int> x) const {
  if (x.size() != degree()) throw std::invalid_argument("ambient vector size mismatch");
  std::vector<int> c(rank_, 0);
  if (family_ == Family::B) {
    int acc = 0;
    for (std::size_t k = rank_; k-- > 0;) {
      acc += x[k];
      c[k] = acc;
    }
  } else {
    if (std::accumulate(x.begin(), x.end(), 0) != 0)
      throw std::invalid_argument("type A ambient vector must sum to zero");
    int acc = 0;
    for (std::size_t k = 0; k < rank_; ++k) {
      acc += x[k];
      c[k] = acc;
    }
  }
  return Root(std::move(c));
}

bool CoxeterGroup::is_root_vector(std::span<const int> coeffs) const {
  if (coeffs.size() != rank_) return false;
  const auto x = to_ambient(Root(std::vector<int>(coeffs.begin(), coeffs.end())));
  int nonzero = 0, plus = 0, minus = 0;
  for (int v : x) {
    if (v == 0) continue;
    if (std::abs(v) != 1) return false;
    ++nonzero;
    (v > 0 ? plus : minus)++;
  }
  if (family_ == Family::A) return nonzero == 2 && plus == 1 && minus == 1;
  return nonzero == 1 || nonzero == 2;
}

Root CoxeterGroup::act_on_root(const WeylElement& w, const Root& alpha) const {
  check_element(w);
  if (!is_root_vector(alpha.coeffs()))
    throw std::invalid_argument("not a root of " + name() + ": " + alpha.to_string());
  const auto x = to_ambient(alpha);
  std::vector<int> y(x.size(), 0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const int image = w.window()[k];
    y[std::abs(image) - 1] += image > 0 ? x[k] : -x[k];
  }
  return from_ambient(y);
}

std::vector<WeylElement> CoxeterGroup::elements() const {
  std::vector<int> perm(degree());
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<WeylElement> out;
  do {
    if (family_ == Family::A) {
      out.emplace_back(perm);
      continue;
    }
    for (std::uint32_t signs = 0; signs < (1u << perm.size()); ++signs) {
      std::vector<int> win(perm);
      for (std::size_t i = 0; i < win.size(); ++i)
        if (signs >> i & 1u) win[i] = -win[i];
      out.emplace_back(std::move(win));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::pair<std::size_t, WeylElement>> keyed;
  keyed.reserve(out.size());
  for (auto& w : out) keyed.emplace_back(length(w), std::move(w));
  std::sort(keyed.begin(), keyed.end());
  out.clear();
  for (auto& [len, w] : keyed) out.push_back(std::move(w));
  return out;
}

std::vector<std::vector<int>> CoxeterGroup::all_reduced_words(const WeylElement& w,
                                                              std::size_t max_length) const {
  const std::size_t len = length(w);
  if (len > max_length)
    throw std::length_error("element length " + std::to_string(len) + " exceeds bound " +
                            std::to_string(max_length));
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  // A reduced word of w ends in s exactly when s is a right descent of w.
  std::function<void(const WeylElement&)> dfs = [&](const WeylElement& x) {
    if (x.is_identity()) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (std::size_t s = 1; s <= rank_; ++s) {
      if (!has_right_descent(x, s)) continue;
      suffix.push_back(static_cast<int>(s));
      dfs(right_multiply(x, s));
      suffix.pop_back();
    }
  };
  dfs(w);
  std::sort(out.begin(), out.end());
  return out;
}

void CoxeterGroup::self_check() const {
  auto fail = [&](const std::string& what) {
    throw std::logic_error(name() + " convention self-check failed: " + what);
  };
  for (std::size_t i = 1; i <= rank_; ++i) {
    const Root b = Root::simple(rank_, i);
    if (act_on_root(generator(i), b) != -b) fail("t_i(beta_i) != -beta_i");
    if (!has_right_descent(generator(i), i) || length(generator(i)) != 1)
      fail("generator is not a simple reflection");
  }
  for (std::size_t i = 1; i < rank_; ++i) {
    const WeylElement st = generator(i) * generator(i + 1);
    const int m = (family_ == Family::B && i == 1) ? 4 : 3;
    WeylElement p = identity();
    for (int k = 1; k <= m; ++k) {
      p = p * st;
      if (p.is_identity() != (k == m)) fail("braid relation order");
    }
  }
  if (family_ == Family::B && rank_ >= 2) {
    const Root b1 = Root::simple(rank_, 1), b2 = Root::simple(rank_, 2);
    if (act_on_root(generator(1), b2) != b1 * 2 + b2) fail("t_1(beta_2) != 2 beta_1 + beta_2");
    if (act_on_root(generator(2), b1) != b1 + b2) fail("t_2(beta_1) != beta_1 + beta_2");
  }
  const std::size_t expected = family_ == Family::B ? rank_ * rank_ : rank_ * (rank_ + 1) / 2;
  if (length(longest_element()) != expected) fail("length of w_0");
}

// ---------------------------------------------------------------- ReducedWord

ReducedWord::ReducedWord(CoxeterGroup group, std::vector<int> letters)
    : group_(group), letters_(std::move(letters)) {
  for (int s : letters_)
    if (s < 1 || static_cast<std::size_t>(s) > group_.rank())
      throw std::out_of_range("generator index " + std::to_string(s) + " out of range for " +
                              group_.name());
  product_ = group_.from_word(letters_);
  if (group_.length(product_) != letters_.size())
    throw std::invalid_argument("word " + format_int_list(letters_) + " is not reduced in " +
                                group_.name());
}

}  // namespace deodhar
