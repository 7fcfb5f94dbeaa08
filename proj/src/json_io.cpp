#include "deodhar/json_io.hpp"

#include <stdexcept>

namespace deodhar {

namespace {

Json big_integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class parse_integer(const Json& j, const char* field) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw std::invalid_argument(std::string("expected an integer for \"") + field + "\"");
}

Json phi_json(const std::vector<PhiEntry>& phi) {
  Json a = Json::array();
  for (const auto& e : phi)
    a.push_back({{"i", e.index}, {"root", std::vector<int>(e.root.coeffs().begin(), e.root.coeffs().end())},
                 {"free", e.free}});
  return a;
}

Json root_json(const Root& r) { return std::vector<int>(r.coeffs().begin(), r.coeffs().end()); }

}  // namespace

Json to_json(const CellDescriptor& c) {
  Json j;
  j["mask"] = c.mask;
  j["end"] = c.endpoint.to_string();
  j["I"] = c.I;
  j["J"] = c.J;
  j["distinguished"] = c.distinguished;
  j["dim"] = c.dimension;
  j["affine"] = c.affine_rank;
  j["torus"] = c.torus_rank;
  j["phi"] = phi_json(c.phi);
  return j;
}

Json to_json(const UnipotentWord& w) {
  Json out = Json::array();
  for (const Factor& f : w.factors()) {
    Json coeff = Json::array();
    for (const auto& [m, c] : f.coeff.terms()) {
      Json mono = Json::object();
      for (const auto& [v, e] : m) mono[v] = e;
      coeff.push_back({{"mono", mono}, {"num", big_integer(c.get_num())}, {"den", big_integer(c.get_den())}});
    }
    out.push_back({{"root", root_json(f.root)}, {"coeff", coeff}});
  }
  return out;
}

UnipotentWord unipotent_word_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("unipotent word JSON must be an array");
  UnipotentWord w;
  std::size_t k = 0;
  for (const Json& f : j) {
    const std::string where = "factor " + std::to_string(k++) + ": ";
    if (!f.is_object() || !f.contains("root") || !f.contains("coeff"))
      throw std::invalid_argument(where + "expected {\"root\", \"coeff\"}");
    if (!f["root"].is_array() || !f["coeff"].is_array())
      throw std::invalid_argument(where + "\"root\" and \"coeff\" must be arrays");
    std::vector<int> coeffs;
    for (const Json& x : f["root"]) {
      if (!x.is_number_integer()) throw std::invalid_argument(where + "root entries must be integers");
      coeffs.push_back(x.get<int>());
    }
    LaurentPoly c;
    for (const Json& t : f["coeff"]) {
      if (!t.is_object() || !t.contains("num")) throw std::invalid_argument(where + "coefficient term needs \"num\"");
      Monomial m;
      if (t.contains("mono")) {
        if (!t["mono"].is_object()) throw std::invalid_argument(where + "\"mono\" must be an object");
        for (const auto& [v, e] : t["mono"].items()) {
          if (!e.is_number_integer()) throw std::invalid_argument(where + "exponents must be integers");
          m[v] = e.get<int>();
        }
      }
      const mpz_class num = parse_integer(t["num"], "num");
      const mpz_class den = t.contains("den") ? parse_integer(t["den"], "den") : mpz_class(1);
      if (den == 0) throw std::invalid_argument(where + "zero denominator");
      c += LaurentPoly::term(std::move(m), Rational(num, den));
    }
    try {
      w.push_back(Root(std::move(coeffs)), std::move(c));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
  return w;
}

Json to_json(const ObstructionReport& r) {
  Json j;
  j["gamma"] = r.gamma.mask_string();
  j["delta"] = r.delta.mask_string();
  j["strictly_preceq"] = r.strictly_preceq;
  j["dim_violation"] = r.dim_violation;
  j["dim_gamma"] = r.dim_gamma;
  j["dim_delta"] = r.dim_delta;
  return j;
}

Json to_json(const CertifiedPair& p) {
  Json j;
  j["sigma"] = p.sigma.mask_string();
  j["tau"] = p.tau.mask_string();
  j["root"] = root_json(p.certificate.root);
  j["simple_index"] = p.certificate.simple_index;
  j["witness_index"] = p.certificate.witness_index;
  return j;
}

Json to_json(const Prop21Report& r) {
  Json j;
  j["n"] = r.n;
  j["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  j["collected_y"] = to_json(r.collected_y);
  j["collected_z"] = to_json(r.collected_z);
  j["limit_z"] = to_json(r.limit_z);
  return j;
}

}  // namespace deodhar
