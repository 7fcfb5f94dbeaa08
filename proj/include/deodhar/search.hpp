#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deodhar/cells.hpp"

namespace deodhar {

/// A named reduced word in type B_n with its named subexpressions.
struct CatalogEntry {
  std::string name;
  std::size_t rank = 0;
  ReducedWord word;
  std::vector<std::pair<std::string, Subexpression>> subexpressions;

  const Subexpression& get(const std::string& key) const;
};

/*
  Known examples, transliterated position by position:

    "II2"           w = t_n ... t_2 t_1 t_2 ... t_n t_{n-1} ... t_1 t_2 ... t_{n-1}
                    (4n-4 letters) with "gamma" and "delta", both ending at e;
    "II3"           w_0 = t_3 t_2 t_1 t_2 t_3 t_2 t_1 t_2 t_1 in B_3 with
                    "sigma" and "tau", both ending at t_2;
    "II3-extended"  t_n ... t_1 ... t_n followed by the II3 word, with the
                    prefix mask eta (t_2 on both sides of t_1) prepended to
                    sigma and tau.
*/
CatalogEntry catalog(const std::string& name, std::size_t n);

struct ObstructionReport {
  Subexpression gamma;
  Subexpression delta;
  bool strictly_preceq = false;  ///< delta <= gamma and delta != gamma
  bool dim_violation = false;    ///< dim D_delta >= dim D_gamma
  std::size_t dim_gamma = 0;
  std::size_t dim_delta = 0;
};

/// Pairs of distinguished subexpressions with delta strictly below gamma
/// although dim D_delta >= dim D_gamma, ordered by (gamma mask, delta mask).
std::vector<ObstructionReport> find_obstructions(const ReducedWord& word,
                                                 std::size_t max_length = 20);

struct DisjointnessCertificate {
  Root root;                   ///< the negative simple root -beta
  std::size_t simple_index = 0;
  std::size_t witness_index = 0;  ///< position i of the word carrying -beta in Phi(tau)
};

/// A negative simple root missing from Phi(sigma) and occurring exactly
/// once in Phi(tau), at a free position.  Such a root forces the closure of
/// D_sigma to miss D_tau.
std::optional<DisjointnessCertificate> disjointness_certificate(const Subexpression& sigma,
                                                                const Subexpression& tau);

/// Recomputes the certificate conditions from scratch.
bool certificate_holds(const Subexpression& sigma, const Subexpression& tau,
                       const DisjointnessCertificate& cert);

struct CertifiedPair {
  Subexpression sigma;
  Subexpression tau;
  DisjointnessCertificate certificate;
};

/// All pairs (sigma, tau) of distinct cells with endpoint v, tau <= sigma,
/// carrying a disjointness certificate.
std::vector<CertifiedPair> scan_disjointness(const ReducedWord& word, const WeylElement& v,
                                             std::size_t max_length = 20);

}  // namespace deodhar
