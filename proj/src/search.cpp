#include "deodhar/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "deodhar/parallel.hpp"

namespace deodhar {

const Subexpression& CatalogEntry::get(const std::string& key) const {
  for (const auto& [k, s] : subexpressions)
    if (k == key) return s;
  throw std::out_of_range("catalog entry " + name + " has no subexpression " + key);
}

namespace {

std::string repeat(char c, std::size_t k) { return std::string(k, c); }

std::vector<int> descending(int from, int to) {
  std::vector<int> v;
  for (int i = from; i >= to; --i) v.push_back(i);
  return v;
}

std::vector<int> ascending(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

void append(std::vector<int>& a, const std::vector<int>& b) { a.insert(a.end(), b.begin(), b.end()); }

const std::vector<int> kW0B3 = {3, 2, 1, 2, 3, 2, 1, 2, 1};
const char* const kSigma = "010101101";
const char* const kTau = "011001011";

}  // namespace

CatalogEntry catalog(const std::string& name, std::size_t n) {
  const int m = static_cast<int>(n);
  if (name == "II2") {
    if (n < 3) throw std::invalid_argument("catalog II2 requires n >= 3");
    const CoxeterGroup grp(Family::B, n);
    std::vector<int> letters = descending(m, 1);
    append(letters, ascending(2, m));
    append(letters, descending(m - 1, 1));
    append(letters, ascending(2, m - 1));
    ReducedWord word(grp, std::move(letters));
    const std::string ones = repeat('1', n - 2);
    const std::string gamma = "0" + ones + "0" + ones + "0" + ones + "0" + ones;
    const std::string delta = "0" + repeat('1', n - 1) + repeat('0', 2 * n - 3) + repeat('1', n - 1);
    CatalogEntry e{name, n, word, {}};
    e.subexpressions.emplace_back("gamma", Subexpression::parse(word, gamma));
    e.subexpressions.emplace_back("delta", Subexpression::parse(word, delta));
    return e;
  }
  if (name == "II3") {
    if (n != 3) throw std::invalid_argument("catalog II3 requires n = 3");
    ReducedWord word(CoxeterGroup(Family::B, 3), kW0B3);
    CatalogEntry e{name, n, word, {}};
    e.subexpressions.emplace_back("sigma", Subexpression::parse(word, kSigma));
    e.subexpressions.emplace_back("tau", Subexpression::parse(word, kTau));
    return e;
  }
  if (name == "II3-extended") {
    // For n = 3 the prefix t_3 t_2 t_1 t_2 t_3 followed by w_0 is not reduced.
    if (n < 4) throw std::invalid_argument("catalog II3-extended requires n >= 4");
    std::vector<int> letters = descending(m, 1);
    append(letters, ascending(2, m));
    append(letters, kW0B3);
    ReducedWord word(CoxeterGroup(Family::B, n), std::move(letters));
    const std::string eta = repeat('0', n - 2) + "101" + repeat('0', n - 2);
    CatalogEntry e{name, n, word, {}};
    e.subexpressions.emplace_back("sigma", Subexpression::parse(word, eta + kSigma));
    e.subexpressions.emplace_back("tau", Subexpression::parse(word, eta + kTau));
    return e;
  }
  throw std::invalid_argument("unknown catalog entry " + name);
}

std::vector<ObstructionReport> find_obstructions(const ReducedWord& word, std::size_t max_length) {
  if (word.length() > max_length)
    throw std::length_error("find_obstructions: word length " + std::to_string(word.length()) +
                            " exceeds bound " + std::to_string(max_length));
  const std::vector<Subexpression> cells = distinguished_subexpressions(word);
  std::vector<std::size_t> dims;
  dims.reserve(cells.size());
  for (const auto& s : cells) dims.push_back(word.length() - J_set(s).size());

  std::vector<std::vector<ObstructionReport>> per_gamma(cells.size());
  parallel_for(cells.size(), [&](std::size_t gi) {
    BruhatCache cache(word.group());
    for (std::size_t di = 0; di < cells.size(); ++di) {
      if (di == gi || dims[di] < dims[gi]) continue;
      if (!preceq(cells[di], cells[gi], &cache)) continue;
      per_gamma[gi].push_back({cells[gi], cells[di], true, true, dims[gi], dims[di]});
    }
  });
  std::vector<ObstructionReport> out;
  for (auto& v : per_gamma)
    for (auto& r : v) out.push_back(std::move(r));
  return out;
}

namespace {

void check_pair(const Subexpression& sigma, const Subexpression& tau) {
  if (!(sigma.word() == tau.word()))
    throw std::invalid_argument("disjointness: subexpressions of different words");
  if (!is_distinguished(sigma) || !is_distinguished(tau))
    throw std::invalid_argument("disjointness: subexpressions must be distinguished");
  if (sigma.end() != tau.end())
    throw std::invalid_argument("disjointness: subexpressions must share their endpoint");
}

}  // namespace

bool certificate_holds(const Subexpression& sigma, const Subexpression& tau,
                       const DisjointnessCertificate& cert) {
  const auto phi_s = phi_sequence(sigma), phi_t = phi_sequence(tau);
  const std::size_t n = sigma.word().group().rank();
  if (cert.simple_index < 1 || cert.simple_index > n) return false;
  if (cert.root != -Root::simple(n, cert.simple_index)) return false;
  for (const auto& e : phi_s)
    if (e.root == cert.root) return false;
  std::size_t hits = 0;
  bool witness_ok = false;
  for (const auto& e : phi_t) {
    if (e.root != cert.root) continue;
    ++hits;
    witness_ok = e.index == cert.witness_index && e.free;
  }
  return hits == 1 && witness_ok;
}

std::optional<DisjointnessCertificate> disjointness_certificate(const Subexpression& sigma,
                                                                const Subexpression& tau) {
  check_pair(sigma, tau);
  const auto phi_s = phi_sequence(sigma), phi_t = phi_sequence(tau);
  const std::size_t n = sigma.word().group().rank();
  for (std::size_t k = 1; k <= n; ++k) {
    const Root r = -Root::simple(n, k);
    if (std::any_of(phi_s.begin(), phi_s.end(), [&](const PhiEntry& e) { return e.root == r; }))
      continue;
    std::vector<const PhiEntry*> hits;
    for (const auto& e : phi_t)
      if (e.root == r) hits.push_back(&e);
    if (hits.size() == 1 && hits.front()->free) return DisjointnessCertificate{r, k, hits.front()->index};
  }
  return std::nullopt;
}

std::vector<CertifiedPair> scan_disjointness(const ReducedWord& word, const WeylElement& v,
                                             std::size_t max_length) {
  if (word.length() > max_length)
    throw std::length_error("scan_disjointness: word length " + std::to_string(word.length()) +
                            " exceeds bound " + std::to_string(max_length));
  const std::vector<Subexpression> cells = gamma_v(word, v);
  std::vector<std::vector<CertifiedPair>> per_sigma(cells.size());
  parallel_for(cells.size(), [&](std::size_t si) {
    BruhatCache cache(word.group());
    for (std::size_t ti = 0; ti < cells.size(); ++ti) {
      if (ti == si || !preceq(cells[ti], cells[si], &cache)) continue;
      auto cert = disjointness_certificate(cells[si], cells[ti]);
      if (!cert) continue;
      if (!certificate_holds(cells[si], cells[ti], *cert))
        throw std::logic_error("emitted disjointness certificate failed its recheck");
      per_sigma[si].push_back({cells[si], cells[ti], *cert});
    }
  });
  std::vector<CertifiedPair> out;
  for (auto& v2 : per_sigma)
    for (auto& p : v2) out.push_back(std::move(p));
  return out;
}

}  // namespace deodhar
