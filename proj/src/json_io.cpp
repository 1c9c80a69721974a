#include "socenter/json_io.hpp"

#include <stdexcept>

namespace socenter {

json to_json(const UPoly& p) {
  json out = json::array();
  for (const auto& [power, c] : p.sparse()) {
    auto s = c.to_strings();
    out.push_back({power, s[0], s[1], s[2], s[3]});
  }
  return out;
}

UPoly upoly_from_json(const json& j) {
  UPoly out;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 5) throw std::invalid_argument("coefficient entries need 5 fields");
    const int power = entry[0].get<int>();
    if (power < 0) throw std::invalid_argument("negative power of u");
    std::array<std::string, 4> parts;
    for (int k = 0; k < 4; ++k)
      parts[k] = entry[k + 1].is_string() ? entry[k + 1].get<std::string>() : std::to_string(entry[k + 1].get<long>());
    out += UPoly::monomial(power, GaussianRational::from_strings(parts));
  }
  return out;
}

json to_json(const Element& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms()) {
    json mono = json::array();
    for (int l : m.letters()) {
      Generator g = Generator::from_letter(l);
      mono.push_back({g.j, g.i});
    }
    terms.push_back({{"mono", mono}, {"coeff", to_json(c)}});
  }
  return {{"rank", x.rank()}, {"terms", terms}};
}

Element element_from_json(const json& j) {
  const int n = j.at("rank").get<int>();
  std::vector<Word> words;
  for (const auto& t : j.at("terms")) {
    Word w;
    for (const auto& g : t.at("mono")) {
      const int a = g.at(0).get<int>(), b = g.at(1).get<int>();
      if (a <= b || b < 1 || a > n) throw std::invalid_argument("monomial letter outside so_" + std::to_string(n));
      w.letters.emplace_back(a, b);
    }
    w.coeff = upoly_from_json(t.at("coeff"));
    words.push_back(std::move(w));
  }
  return normal_form(n, words);
}

json to_json(const HPoly& p) {
  json terms = json::array();
  for (const auto& [exps, c] : p.terms()) terms.push_back({{"exps", exps}, {"coeff", to_json(c)}});
  return {{"vars", p.var_names()}, {"terms", terms}};
}

HPoly hpoly_from_json(const json& j) {
  const int r = static_cast<int>(j.at("vars").size()) - 1;
  if (r < 0) throw std::invalid_argument("HPoly needs at least the variable H");
  HPoly out(r);
  for (const auto& t : j.at("terms")) {
    auto exps = t.at("exps").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != r + 1) throw std::invalid_argument("exponent vector has the wrong length");
    out.add_term(exps, upoly_from_json(t.at("coeff")));
  }
  return out;
}

json to_json(const gt::Report& r) {
  return {{"lemma", r.lemma},         {"n", r.n},
          {"lambda", r.lambda},       {"ell", r.ell},
          {"max_residual", r.max_residual}, {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

gt::Report report_from_json(const json& j) {
  gt::Report r;
  r.lemma = j.at("lemma").get<std::string>();
  r.n = j.at("n").get<int>();
  r.lambda = j.at("lambda").get<gt::Weight>();
  r.ell = j.at("ell").get<int>();
  r.max_residual = j.at("max_residual").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.pass = j.at("pass").get<bool>();
  return r;
}

json to_json(const CentralityReport& r) {
  json out = {{"ok", r.central}, {"witness", nullptr}, {"residual_terms", r.residual.size()}};
  if (r.witness) out["witness"] = {r.witness->j, r.witness->i};
  return out;
}

json to_json(const IdentityReport& r) {
  return {{"ok", r.ok}, {"witness", nullptr}, {"residual_terms", r.residual.size()}};
}

}  // namespace socenter
