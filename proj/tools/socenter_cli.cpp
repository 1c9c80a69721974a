#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "socenter/json_io.hpp"

using namespace socenter;

namespace {

struct RunConfig {
  std::string command;
  std::string kind;
  int n = -1;
  int m = -1;
  std::string lambda;
  std::optional<int> ell;
  std::string u;
  std::string format = "json";
  std::optional<double> tolerance;
  int threads = 0;
  std::string out;
  bool check = false;
  bool hc = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void progress(const std::string& msg) { std::cerr << "[socenter] " << msg << std::endl; }

gt::Weight parse_weight(const std::string& s) {
  gt::Weight w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      w.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --lambda entry '" + item + "'");
    }
  }
  return w;
}

GaussianRational parse_rational(const std::string& s) {
  try {
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument(s);
    q.canonicalize();
    return GaussianRational(q);
  } catch (const std::exception&) {
    throw UsageError("bad --u value '" + s + "'");
  }
}

// (u^2 - H^2) prod_i (u^2 - T_i^2)
HPoly center_image_formula(int n) {
  const int r = (n - 2) / 2;
  const UPoly u2 = UPoly::monomial(2);
  HPoly out = HPoly::constant(r, u2) - HPoly::variable(r, 0) * HPoly::variable(r, 0);
  for (int i = 1; i <= r; ++i) out = out * (HPoly::constant(r, u2) - HPoly::variable(r, i) * HPoly::variable(r, i));
  return out;
}

// (-i)^m H T_1 ... T_{m-1}
HPoly pfaffian_image_formula(int m) {
  const int r = m - 1;
  GaussianRational c = 1;
  for (int k = 0; k < m; ++k) c *= GaussianRational(0, -1);
  HPoly out = HPoly::constant(r, c) * HPoly::variable(r, 0);
  for (int i = 1; i <= r; ++i) out = out * HPoly::variable(r, i);
  return out;
}

class Output {
 public:
  explicit Output(const RunConfig& cfg) : cfg_(cfg) {}
  bool json_mode() const { return cfg_.format == "json"; }
  std::ostream& text() { return buf_; }
  void set(json j) { doc_ = std::move(j); }
  void flush() {
    std::string payload = json_mode() ? doc_.dump(2) + "\n" : buf_.str();
    if (cfg_.out.empty()) {
      std::cout << payload;
    } else {
      std::ofstream f(cfg_.out);
      if (!f) throw std::runtime_error("cannot open " + cfg_.out);
      f << payload;
    }
  }

 private:
  const RunConfig& cfg_;
  std::ostringstream buf_;
  json doc_;
};

int require_n(const RunConfig& cfg, int lo) {
  if (cfg.n < lo || cfg.n > kMaxRank) throw UsageError("--n must lie in [" + std::to_string(lo) + ", " + std::to_string(kMaxRank) + "]");
  return cfg.n;
}

int require_m(const RunConfig& cfg, int lo) {
  if (cfg.m < lo || 2 * cfg.m > kMaxRank) throw UsageError("--m must lie in [" + std::to_string(lo) + ", " + std::to_string(kMaxRank / 2) + "]");
  return cfg.m;
}

int cmd_build_center(const RunConfig& cfg, Output& out) {
  const int n = require_n(cfg, 0);
  progress("building C_" + std::to_string(n));
  Element c = build_C(n);
  if (!cfg.u.empty()) c = specialize(c, parse_rational(cfg.u));
  if (out.json_mode()) out.set(to_json(c));
  else out.text() << c.str() << "\n";
  return 0;
}

int verify_central(const RunConfig& cfg, Output& out) {
  const int n = require_n(cfg, 0);
  progress("building C_" + std::to_string(n));
  const Element c = build_C(n);
  progress("checking centrality");
  const auto rep = is_central(c, cfg.threads);
  const bool monic = monic_degree_check(c, n);
  if (out.json_mode()) {
    json j = to_json(rep);
    j["n"] = n;
    j["monic"] = monic;
    j["ok"] = rep.central && monic;
    out.set(j);
  } else {
    out.text() << "central n=" << n << ": " << (rep.central ? "pass" : "FAIL");
    if (rep.witness) out.text() << " witness " << rep.witness->str() << " residual_terms " << rep.residual.size();
    out.text() << "\nmonic even in u: " << (monic ? "pass" : "FAIL") << "\n";
  }
  return rep.central && monic ? 0 : 1;
}

int verify_hc(const RunConfig& cfg, Output& out) {
  const int n = require_n(cfg, 2);
  progress("building C_" + std::to_string(n));
  const Element c = build_C(n);
  progress("projecting");
  const HPoly image = gamma(c);
  const HPoly expect = center_image_formula(n);
  const bool ok = image == expect;
  if (out.json_mode()) {
    out.set({{"ok", ok}, {"n", n}, {"image", to_json(image)}, {"expected", to_json(expect)}});
  } else {
    out.text() << "gamma(C_" << n << ") = " << image.str() << "\n";
    out.text() << "expected (u^2-H^2) prod (u^2-T_i^2): " << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

struct PfaffianResult {
  Element pf;
  std::optional<CentralityReport> central;
  std::optional<IdentityReport> identity;
  std::optional<HPoly> image;
  bool image_ok = true;
};

PfaffianResult run_pfaffian(int m, bool check, bool hc, int threads) {
  PfaffianResult r;
  progress("building PF_" + std::to_string(2 * m));
  r.pf = build_PF(m);
  if (check) {
    progress("checking centrality and the Iwasawa identity");
    r.central = is_central(r.pf, threads);
    r.identity = iwasawa_pf_check(m);
  }
  if (hc) {
    progress("projecting");
    r.image = gamma(r.pf);
    r.image_ok = *r.image == pfaffian_image_formula(m);
  }
  return r;
}

int report_pfaffian(int m, const PfaffianResult& r, Output& out) {
  bool ok = r.image_ok;
  if (r.central) ok = ok && r.central->central;
  if (r.identity) ok = ok && r.identity->ok;
  if (out.json_mode()) {
    json j = {{"m", m}, {"pfaffian", to_json(r.pf)}};
    if (r.central) j["central"] = to_json(*r.central);
    if (r.identity) j["iwasawa"] = to_json(*r.identity);
    if (r.image) j["image"] = to_json(*r.image), j["image_ok"] = r.image_ok;
    j["ok"] = ok;
    out.set(j);
  } else {
    out.text() << "PF_" << 2 * m << " = " << r.pf.str() << "\n";
    if (r.central) out.text() << "central: " << (r.central->central ? "pass" : "FAIL") << "\n";
    if (r.identity)
      out.text() << "Iwasawa identity: " << (r.identity->ok ? "pass" : "FAIL") << " residual_terms "
                 << r.identity->residual.size() << "\n";
    if (r.image) out.text() << "gamma(PF_" << 2 * m << ") = " << r.image->str() << " " << (r.image_ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_pfaffian(const RunConfig& cfg, Output& out) {
  const int m = require_m(cfg, 0);
  if (cfg.hc && m < 1) throw UsageError("--hc needs --m >= 1");
  if (cfg.check && m < 1) throw UsageError("--check needs --m >= 1");
  return report_pfaffian(m, run_pfaffian(m, cfg.check, cfg.hc, cfg.threads), out);
}

int verify_pfaffian(const RunConfig& cfg, Output& out) {
  const int m = require_m(cfg, 1);
  return report_pfaffian(m, run_pfaffian(m, true, true, cfg.threads), out);
}

int verify_gt(const RunConfig& cfg, Output& out) {
  const int n = require_n(cfg, 4);
  if (n > 7) throw UsageError("gt-lemmas supports n <= 7");
  if (cfg.lambda.empty()) throw UsageError("gt-lemmas needs --lambda");
  const gt::Weight lambda = parse_weight(cfg.lambda);
  if (!gt::is_dominant(n - 1, lambda)) throw UsageError("--lambda is not a dominant SO(" + std::to_string(n - 1) + ") weight");
  std::vector<int> ells;
  if (cfg.ell) {
    auto all = gt::shift_indices(n);
    if (std::find(all.begin(), all.end(), *cfg.ell) == all.end()) throw UsageError("--ell out of range for this n");
    ells.push_back(*cfg.ell);
  } else {
    ells = gt::shift_indices(n);
  }
  auto tol = [&](double d) { return cfg.tolerance.value_or(d); };
  std::vector<gt::Report> reports;
  reports.push_back(gt::verify_brackets(n - 1, lambda, tol(1e-9)));
  reports.push_back(gt::verify_casimir(n - 1, lambda, tol(1e-10)));
  for (int ell : ells) {
    progress("shift ell=" + std::to_string(ell));
    reports.push_back(gt::verify_pipi(n, lambda, ell, tol(1e-9)));
    reports.push_back(gt::verify_noX(n, lambda, ell, tol(1e-9)));
    reports.push_back(gt::verify_X2(n, lambda, ell, tol(1e-8)));
    reports.push_back(gt::verify_X1(n, lambda, ell, tol(1e-8)));
  }
  if (n % 2 == 0 && (!cfg.ell || *cfg.ell == 0)) reports.push_back(gt::verify_pf_shift(n / 2, lambda, tol(1e-10)));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass;
  if (out.json_mode()) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out.set({{"ok", ok}, {"reports", arr}});
  } else {
    for (const auto& r : reports)
      out.text() << r.lemma << " ell=" << r.ell << " residual " << r.max_residual << " tol " << r.tolerance << " "
                 << (r.pass ? "pass" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central elements of U(so_n)"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", cfg.out, "write the result here instead of stdout");
  app.add_option("--threads", cfg.threads, "worker cap (default SOCENTER_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.fallthrough();

  auto* build = app.add_subcommand("build-center", "print C_n(u)");
  build->add_option("--n", cfg.n, "rank")->required();
  build->add_option("--u", cfg.u, "specialize u to a rational p/q");

  auto* verify = app.add_subcommand("verify", "run a verification");
  verify->add_option("kind", cfg.kind, "central | hc | pfaffian | gt-lemmas")
      ->required()
      ->check(CLI::IsMember({"central", "hc", "pfaffian", "gt-lemmas"}));
  verify->add_option("--n", cfg.n, "rank");
  verify->add_option("--m", cfg.m, "half rank for pfaffian");
  verify->add_option("--lambda", cfg.lambda, "SO(n-1) weight, comma separated");
  verify->add_option("--ell", cfg.ell, "shift index (default: all)");
  verify->add_option("--tolerance", cfg.tolerance, "override every residual tolerance");

  auto* pf = app.add_subcommand("pfaffian", "print PF_{2m}");
  pf->add_option("--m", cfg.m, "half rank")->required();
  pf->add_flag("--check", cfg.check, "centrality and Iwasawa identity");
  pf->add_flag("--hc", cfg.hc, "Harish-Chandra image");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (cfg.threads > 0) set_default_thread_count(cfg.threads);

  Output out(cfg);
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (build->parsed()) {
      code = cmd_build_center(cfg, out);
    } else if (pf->parsed()) {
      code = cmd_pfaffian(cfg, out);
    } else if (cfg.kind == "central") {
      code = verify_central(cfg, out);
    } else if (cfg.kind == "hc") {
      code = verify_hc(cfg, out);
    } else if (cfg.kind == "pfaffian") {
      code = verify_pfaffian(cfg, out);
    } else {
      code = verify_gt(cfg, out);
    }
    out.flush();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  progress("done in " + std::to_string(secs) + " s");
  return code;
}
