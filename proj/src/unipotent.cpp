#include "deodhar/unipotent.hpp"

#include <algorithm>
#include <sstream>

namespace deodhar {

UnipotentWord::UnipotentWord(std::vector<Factor> factors) {
  for (auto& f : factors) push_back(std::move(f.root), std::move(f.coeff));
}

void UnipotentWord::push_back(Root root, LaurentPoly coeff) {
  if (!root.is_negative())
    throw std::invalid_argument("unipotent factor root must be negative: " + root.to_string());
  if (coeff.is_zero()) return;
  factors_.push_back({std::move(root), std::move(coeff)});
}

UnipotentWord UnipotentWord::operator*(const UnipotentWord& o) const {
  UnipotentWord r = *this;
  for (const Factor& f : o.factors_) {
    if (!r.factors_.empty() && r.factors_.back().root == f.root) {
      r.factors_.back().coeff += f.coeff;
      if (r.factors_.back().coeff.is_zero()) r.factors_.pop_back();
    } else {
      r.factors_.push_back(f);
    }
  }
  return r;
}

UnipotentWord UnipotentWord::inverse() const {
  UnipotentWord r;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) r.push_back(it->root, -it->coeff);
  return r;
}

std::string UnipotentWord::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) os << " ";
    os << "u[" << factors_[k].root.to_string() << "](" << factors_[k].coeff.to_string() << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------- RootOrder

RootOrder::RootOrder(const RootSystem& rs, std::vector<Root> sequence)
    : sequence_(std::move(sequence)) {
  for (std::size_t k = 0; k < sequence_.size(); ++k) {
    const Root& r = sequence_[k];
    if (!r.is_negative() || !rs.is_root(r))
      throw std::invalid_argument("root order entry is not a negative root: " + r.to_string());
    if (!rank_.emplace(r, k).second)
      throw std::invalid_argument("root order lists a root twice: " + r.to_string());
  }
  if (sequence_.size() != rs.positive_roots().size())
    throw std::invalid_argument("root order must list every negative root");
}

RootOrder RootOrder::canonical(const RootSystem& rs) { return RootOrder(rs, rs.negative_roots()); }

RootOrder RootOrder::reverse_lex(const RootSystem& rs) {
  std::vector<Root> seq = rs.negative_roots();
  std::stable_sort(seq.begin(), seq.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() > b.height();  // -a has the smaller height
    return (-a) > (-b);
  });
  return RootOrder(rs, std::move(seq));
}

std::size_t RootOrder::rank_of(const Root& r) const {
  auto it = rank_.find(r);
  if (it == rank_.end()) throw std::invalid_argument("root not in order: " + r.to_string());
  return it->second;
}

// ---------------------------------------------------------------- collection

UnipotentWord collect(const RootSystem& rs, const UnipotentWord& w, const RootOrder& order) {
  std::vector<Factor> f = w.factors();
  for (const Factor& x : f)
    if (!rs.is_root(x.root))
      throw std::invalid_argument("not a root of " + rs.group().name() + ": " + x.root.to_string());

  // The group is nilpotent, so the rewriting terminates; the cap only guards
  // against a broken order or constant table.
  const std::size_t cap = 1'000'000;
  std::size_t steps = 0;
  std::size_t k = 0;
  while (k + 1 < f.size()) {
    if (++steps > cap) throw std::logic_error("collection did not terminate");
    const std::size_t rb = order.rank_of(f[k].root), ra = order.rank_of(f[k + 1].root);
    if (rb < ra) {
      ++k;
      continue;
    }
    if (rb == ra) {
      f[k].coeff += f[k + 1].coeff;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      if (f[k].coeff.is_zero()) f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
      k = k ? k - 1 : 0;
      continue;
    }
    // f[k] = u_b(y), f[k+1] = u_a(x) with a before b.
    Factor fb = std::move(f[k]);
    Factor fa = std::move(f[k + 1]);
    std::vector<Factor> replacement;
    const LaurentPoly minus_x = -fa.coeff;
    for (const CommutatorTerm& t : rs.commutator_terms(fb.root, fa.root)) {
      // terms of [u_b(y)^-1 ... ] with root i*a + j*b and coefficient C (-x)^i y^j
      LaurentPoly c = LaurentPoly(t.constant) * minus_x.pow(t.i) * fb.coeff.pow(t.j);
      if (!c.is_zero()) replacement.push_back({t.root, std::move(c)});
    }
    f[k] = std::move(fa);
    f[k + 1] = std::move(fb);
    f.insert(f.begin() + static_cast<std::ptrdiff_t>(k) + 2, replacement.begin(), replacement.end());
    k = k ? k - 1 : 0;
  }
  return UnipotentWord(std::move(f));
}

UnipotentWord collect(const RootSystem& rs, const UnipotentWord& w) {
  return collect(rs, w, RootOrder::canonical(rs));
}

UnipotentWord limit_at_infinity(const UnipotentWord& w, const std::string& var) {
  UnipotentWord out;
  for (const Factor& f : w.factors()) {
    LaurentPoly kept;
    for (const auto& [m, c] : f.coeff.terms()) {
      auto it = m.find(var);
      const int e = it == m.end() ? 0 : it->second;
      if (e > 0)
        throw LimitError("limit does not exist: coefficient " + f.coeff.to_string() + " of root " +
                         f.root.to_string() + " grows with " + var);
      if (e == 0) kept += LaurentPoly::term(m, c);
    }
    out.push_back(f.root, std::move(kept));
  }
  return out;
}

}  // namespace deodhar
