#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "deodhar/cells.hpp"
#include "deodhar/json_io.hpp"
#include "deodhar/matrixgrp.hpp"
#include "deodhar/prop21.hpp"
#include "deodhar/search.hpp"

using namespace deodhar;

namespace {

constexpr int kOk = 0;
constexpr int kAssertionFailed = 1;
constexpr int kUsage = 2;

/// Flags shared by the subcommands that take a word.
struct Context {
  std::string family = "B";
  std::size_t rank = 0;  // 0: inferred
  std::string word;
  std::string end;

  void add_to(CLI::App* cmd, bool with_end) {
    cmd->add_option("--family", family, "A or B")->capture_default_str();
    cmd->add_option("--rank", rank, "rank n (default: largest letter, at least 2)");
    cmd->add_option("--word", word, "reduced word, e.g. 3,2,1,2,3,2,1,2,1")->required();
    if (with_end) cmd->add_option("--end", end, "endpoint: e or a window such as -1,2,3");
  }

  CoxeterGroup group(const std::vector<int>& letters) const {
    const Family f = parse_family(family);
    std::size_t n = rank;
    if (n == 0) {
      int top = 2;
      for (int s : letters) top = std::max(top, s);
      n = static_cast<std::size_t>(top);
      if (!end.empty() && end != "e") {
        const std::size_t degree = parse_int_list(end).size();
        n = std::max(n, f == Family::A ? degree - 1 : degree);
      }
    }
    CoxeterGroup g(f, n);
    g.self_check();
    return g;
  }

  ReducedWord reduced_word() const {
    std::vector<int> letters = parse_int_list(word);
    const CoxeterGroup g = group(letters);
    return ReducedWord(g, std::move(letters));
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string phi_text(const std::vector<PhiEntry>& phi) {
  std::ostringstream os;
  for (const auto& e : phi) os << e.index << " " << e.root.to_string() << (e.free ? " free" : " affine") << "\n";
  return os.str();
}

void print_cell(const CellDescriptor& c) {
  std::cout << c.mask << " end=" << c.endpoint.to_string() << " dim=" << c.dimension
            << " affine=" << c.affine_rank << " torus=" << c.torus_rank << " I={" << join(c.I) << "} J={"
            << join(c.J) << "}\n";
}

int run_cells(const Context& ctx, bool json) {
  const ReducedWord w = ctx.reduced_word();
  std::vector<CellDescriptor> cells;
  if (ctx.end.empty()) {
    for (const auto& s : distinguished_subexpressions(w)) cells.push_back(cell(s));
  } else {
    cells = gamma_v_cells(w, w.group().parse_element(ctx.end));
  }
  if (json) {
    Json out = Json::array();
    for (const auto& c : cells) out.push_back(to_json(c));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : cells) print_cell(c);
    std::cout << cells.size() << " cells\n";
  }
  return kOk;
}

int run_count(const std::string& family, std::size_t rank, std::uint32_t q, bool check) {
  if (parse_family(family) != Family::A || rank != 2)
    throw std::invalid_argument("count is implemented for --family A --rank 2 only");
  const CellCounts counts = count_cells(q);
  std::cout << cell_counts_csv(q, counts);
  if (!check) return kOk;
  const CoxeterGroup g(Family::A, 2);
  int mismatches = 0;
  for (const auto& [wv, k] : counts) {
    const ReducedWord rw(g, g.all_reduced_words(wv.first).front());
    const long long expected = point_count_polynomial(rw, wv.second).evaluate(q);
    if (static_cast<long long>(k) != expected) {
      std::cerr << "mismatch w=" << wv.first.to_string() << " v=" << wv.second.to_string() << ": " << k
                << " points, polynomial gives " << expected << "\n";
      ++mismatches;
    }
  }
  std::cerr << (mismatches ? "FAIL" : "PASS") << " point counts agree with cell polynomials\n";
  return mismatches ? kAssertionFailed : kOk;
}

int run_collect(const std::string& path, const std::string& family, std::size_t rank, const std::string& order,
                const std::string& limit_var) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  const UnipotentWord w = unipotent_word_from_json(j);
  std::size_t n = rank;
  if (n == 0) {
    if (w.empty()) throw std::invalid_argument("empty word: pass --rank");
    n = w.factors().front().root.rank();
  }
  for (const Factor& f : w.factors())
    if (f.root.rank() != n) throw std::invalid_argument("root " + f.root.to_string() + " has the wrong rank");
  const RootSystem rs(CoxeterGroup(parse_family(family), n));
  UnipotentWord out;
  if (order == "canonical")
    out = collect(rs, w);
  else if (order == "reverse-lex")
    out = collect(rs, w, RootOrder::reverse_lex(rs));
  else
    throw std::invalid_argument("unknown order " + order);
  if (!limit_var.empty()) {
    try {
      out = limit_at_infinity(out, limit_var);
    } catch (const LimitError& e) {
      std::cerr << e.what() << "\n";
      return kAssertionFailed;
    }
  }
  std::cout << to_json(out).dump(2) << "\n";
  return kOk;
}

int run_prop_closure(std::size_t n, bool json) {
  const Prop21Report r = verify_prop21(n);
  if (json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << r.to_string();
  return r.passed() ? kOk : kAssertionFailed;
}

int run_prop_disjoint(std::size_t n, bool json) {
  const CatalogEntry e = n == 3 ? catalog("II3", 3) : catalog("II3-extended", n);
  const Subexpression& sigma = e.get("sigma");
  const Subexpression& tau = e.get("tau");
  const CellDescriptor cs = cell(sigma), ct = cell(tau);
  const auto cert = disjointness_certificate(sigma, tau);
  const bool ok = cs.distinguished && ct.distinguished && cert && certificate_holds(sigma, tau, *cert) &&
                  preceq(tau, sigma);
  if (json) {
    Json j;
    j["n"] = n;
    j["word"] = e.word.to_string();
    j["sigma"] = to_json(cs);
    j["tau"] = to_json(ct);
    j["tau_preceq_sigma"] = preceq(tau, sigma);
    if (cert) j["certificate"] = to_json(CertifiedPair{sigma, tau, *cert});
    j["passed"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "word " << e.word.to_string() << " in " << e.word.group().name() << "\n";
    std::cout << "sigma " << cs.mask << " dim " << cs.dimension << " end " << cs.endpoint.to_string() << "\n"
              << phi_text(cs.phi);
    std::cout << "tau   " << ct.mask << " dim " << ct.dimension << " end " << ct.endpoint.to_string() << "\n"
              << phi_text(ct.phi);
    std::cout << "tau preceq sigma: " << (preceq(tau, sigma) ? "true" : "false") << "\n";
    if (cert)
      std::cout << "certificate root " << cert->root.to_string() << " (simple index " << cert->simple_index
                << ") witness position " << cert->witness_index << "\n";
    else
      std::cout << "no certificate\n";
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kAssertionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deodhar decompositions of double Schubert cells in types A and B"};
  app.require_subcommand(1);

  Context cells_ctx;
  bool cells_json = false;
  auto* cells_cmd = app.add_subcommand("cells", "distinguished subexpressions and their cells");
  cells_ctx.add_to(cells_cmd, true);
  cells_cmd->add_flag("--json", cells_json, "JSON output");

  Context dist_ctx;
  std::string dist_mask;
  auto* dist_cmd = app.add_subcommand("distinguished", "is the subexpression distinguished");
  dist_ctx.add_to(dist_cmd, false);
  dist_cmd->add_option("--mask", dist_mask, "one character per letter, 1 = take s_i")->required();

  Context phi_ctx;
  std::string phi_mask;
  bool phi_json = false;
  auto* phi_cmd = app.add_subcommand("phi", "the root sequence Phi(gamma)");
  phi_ctx.add_to(phi_cmd, false);
  phi_cmd->add_option("--mask", phi_mask, "subexpression mask")->required();
  phi_cmd->add_flag("--json", phi_json, "JSON output");

  Context order_ctx;
  std::string mask1, mask2;
  auto* order_cmd = app.add_subcommand("order", "compare two subexpressions under preceq");
  order_ctx.add_to(order_cmd, false);
  order_cmd->add_option("--mask", mask1, "first mask")->required();
  order_cmd->add_option("--mask2", mask2, "second mask")->required();

  Context hasse_ctx;
  std::string dot_path;
  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of preceq on distinguished subexpressions");
  hasse_ctx.add_to(hasse_cmd, false);
  hasse_cmd->add_option("--dot", dot_path, "output path, - for stdout")->required();

  std::string count_family = "A";
  std::size_t count_rank = 2;
  std::uint32_t count_q = 0;
  bool count_check = false;
  auto* count_cmd = app.add_subcommand("count", "F_q point counts of SL_3 double cells, CSV");
  count_cmd->add_option("--family", count_family)->capture_default_str();
  count_cmd->add_option("--rank", count_rank)->capture_default_str();
  count_cmd->add_option("--q", count_q, "prime <= 64")->required();
  count_cmd->add_flag("--check", count_check, "compare with the cell polynomials");

  std::string collect_input, collect_family = "B", collect_order = "canonical", collect_limit;
  std::size_t collect_rank = 0;
  auto* collect_cmd = app.add_subcommand("collect", "collect a unipotent word given as JSON");
  collect_cmd->add_option("--input", collect_input, "JSON file")->required();
  collect_cmd->add_option("--family", collect_family)->capture_default_str();
  collect_cmd->add_option("--rank", collect_rank, "default: length of the root vectors");
  collect_cmd->add_option("--order", collect_order, "canonical or reverse-lex")->capture_default_str();
  collect_cmd->add_option("--limit", collect_limit, "take the limit as this variable tends to infinity");

  auto* verify_cmd = app.add_subcommand("verify", "machine checks of the type B counterexamples");
  verify_cmd->require_subcommand(1);
  std::size_t closure_n = 0;
  bool closure_json = false;
  auto* closure_cmd = verify_cmd->add_subcommand("prop-closure", "closure of D_gamma meets D_delta");
  closure_cmd->add_option("--n", closure_n, "rank, at least 3")->required();
  closure_cmd->add_flag("--json", closure_json);
  std::size_t disjoint_n = 3;
  bool disjoint_json = false;
  auto* disjoint_cmd = verify_cmd->add_subcommand("prop-disjoint", "closure of D_sigma misses D_tau");
  disjoint_cmd->add_option("--n", disjoint_n, "3, or at least 4 for the extended pair")->capture_default_str();
  disjoint_cmd->add_flag("--json", disjoint_json);
  Context obs_ctx;
  bool obs_json = false;
  auto* obs_cmd = verify_cmd->add_subcommand("obstructions", "pairs delta preceq gamma with dim delta >= dim gamma");
  obs_ctx.add_to(obs_cmd, false);
  obs_cmd->add_flag("--json", obs_json);
  Context scan_ctx;
  bool scan_json = false;
  auto* scan_cmd = verify_cmd->add_subcommand("scan", "certified disjoint pairs among the cells with endpoint v");
  scan_ctx.add_to(scan_cmd, true);
  scan_cmd->get_option("--end")->required();
  scan_cmd->add_flag("--json", scan_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    CoxeterGroup(Family::B, 3).self_check();
    if (*cells_cmd) return run_cells(cells_ctx, cells_json);
    if (*dist_cmd) {
      const Subexpression g = Subexpression::parse(dist_ctx.reduced_word(), dist_mask);
      std::cout << (is_distinguished(g) ? "true" : "false") << "\n";
      return kOk;
    }
    if (*phi_cmd) {
      const Subexpression g = Subexpression::parse(phi_ctx.reduced_word(), phi_mask);
      if (!is_distinguished(g)) throw std::invalid_argument("subexpression " + phi_mask + " is not distinguished");
      const CellDescriptor c = cell(g);
      if (phi_json)
        std::cout << to_json(c)["phi"].dump(2) << "\n";
      else
        std::cout << phi_text(c.phi);
      return kOk;
    }
    if (*order_cmd) {
      const ReducedWord w = order_ctx.reduced_word();
      const Subexpression a = Subexpression::parse(w, mask1), b = Subexpression::parse(w, mask2);
      std::cout << mask2 << " preceq " << mask1 << ": " << (preceq(b, a) ? "true" : "false") << "\n";
      std::cout << mask1 << " preceq " << mask2 << ": " << (preceq(a, b) ? "true" : "false") << "\n";
      return kOk;
    }
    if (*hasse_cmd) {
      const std::string dot = hasse_dot(hasse_ctx.reduced_word());
      if (dot_path == "-") {
        std::cout << dot;
      } else {
        std::ofstream out(dot_path);
        if (!out) throw std::invalid_argument("cannot write " + dot_path);
        out << dot;
      }
      return kOk;
    }
    if (*count_cmd) return run_count(count_family, count_rank, count_q, count_check);
    if (*collect_cmd) return run_collect(collect_input, collect_family, collect_rank, collect_order, collect_limit);
    if (*closure_cmd) return run_prop_closure(closure_n, closure_json);
    if (*disjoint_cmd) return run_prop_disjoint(disjoint_n, disjoint_json);
    if (*obs_cmd) {
      const auto reports = find_obstructions(obs_ctx.reduced_word());
      if (obs_json) {
        Json out = Json::array();
        for (const auto& r : reports) out.push_back(to_json(r));
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& r : reports)
          std::cout << "gamma " << r.gamma.mask_string() << " (dim " << r.dim_gamma << ")  delta "
                    << r.delta.mask_string() << " (dim " << r.dim_delta << ")\n";
        std::cout << reports.size() << " pairs\n";
      }
      return kOk;
    }
    if (*scan_cmd) {
      const ReducedWord w = scan_ctx.reduced_word();
      const auto pairs = scan_disjointness(w, w.group().parse_element(scan_ctx.end));
      if (scan_json) {
        Json out = Json::array();
        for (const auto& p : pairs) out.push_back(to_json(p));
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& p : pairs)
          std::cout << "sigma " << p.sigma.mask_string() << "  tau " << p.tau.mask_string() << "  root "
                    << p.certificate.root.to_string() << "  position " << p.certificate.witness_index << "\n";
        std::cout << pairs.size() << " pairs\n";
      }
      return kOk;
    }
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range, length_error and domain_error are input
    // problems; a bare logic_error is an internal consistency failure.
    const bool input = dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e) ||
                       dynamic_cast<const std::length_error*>(&e) || dynamic_cast<const std::domain_error*>(&e);
    std::cerr << "error: " << e.what() << "\n";
    return input ? kUsage : kAssertionFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAssertionFailed;
  }
  return kUsage;
}
