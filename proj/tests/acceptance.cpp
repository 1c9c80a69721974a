// One line per acceptance criterion; exit status 0 iff every line passes.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "socenter/center.hpp"
#include "socenter/gt.hpp"
#include "socenter/harish_chandra.hpp"

using namespace socenter;

namespace {

const UPoly kU2 = UPoly::monomial(2);

HPoly expected_gamma_C(int n) {
  const int r = (n - 2) / 2;
  HPoly out = HPoly::constant(r, kU2) - HPoly::variable(r, 0) * HPoly::variable(r, 0);
  for (int i = 1; i <= r; ++i) out = out * (HPoly::constant(r, kU2) - HPoly::variable(r, i) * HPoly::variable(r, i));
  return out;
}

HPoly expected_gamma_PF(int m) {
  const int r = m - 1;
  GaussianRational c = 1;
  for (int k = 0; k < m; ++k) c *= GaussianRational(0, -1);
  HPoly out = HPoly::constant(r, c) * HPoly::variable(r, 0);
  for (int i = 1; i <= r; ++i) out = out * HPoly::variable(r, i);
  return out;
}

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  return sign;
}

// Weyl dimension for SO(N) from the positive roots e_i +- e_j (and e_i for odd N).
long weyl_dimension(int N, const gt::Weight& lambda) {
  const int k = N / 2;
  std::vector<double> rho(k), v(k);
  for (int i = 0; i < k; ++i) {
    rho[i] = N / 2.0 - (i + 1);
    v[i] = lambda[i] + rho[i];
  }
  double num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      num *= (v[i] - v[j]) * (v[i] + v[j]);
      den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
    }
    if (N % 2) {
      num *= v[i];
      den *= rho[i];
    }
  }
  return std::lround(num / den);
}

std::vector<gt::Weight> dominant_weights(int N, int bound) {
  std::vector<gt::Weight> out;
  const int k = N / 2;
  gt::Weight w(k);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      if (gt::is_dominant(N, w)) out.push_back(w);
      return;
    }
    for (int v = -bound; v <= bound; ++v) {
      w[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

struct Line {
  int id;
  std::string what;
  bool pass = true;
  std::ostringstream detail;
};

int failures = 0;

void emit(Line& line, double secs) {
  std::cout << (line.pass ? "PASS" : "FAIL") << " [" << line.id << "] " << line.what;
  const std::string d = line.detail.str();
  if (!d.empty()) std::cout << " | " << d;
  std::cout << " (" << secs << " s)" << std::endl;
  if (!line.pass) ++failures;
}

void run(int id, const std::string& what, const std::function<void(Line&)>& body) {
  Line line{id, what};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(line);
  } catch (const std::exception& e) {
    line.pass = false;
    line.detail << "exception: " << e.what();
  }
  emit(line, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

std::string weight_str(const gt::Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

}  // namespace

int main() {
  run(1, "centrality of C_n, n = 2..7", [](Line& l) {
    for (int n = 2; n <= 7; ++n) {
      auto r = is_central(build_C(n));
      if (!r.central) {
        l.pass = false;
        l.detail << "n=" << n << " witness " << r.witness->str() << " ";
      }
    }
  });

  run(2, "HC images of C_n and gamma_n(C_n) = (u^2 - H^2) C_{n-2}, n = 2..7", [](Line& l) {
    for (int n = 2; n <= 7; ++n) {
      const Element c = build_C(n);
      const Element gn = gamma_n(c);
      const Element h = gen(n, n, n - 1);
      const Element expect = multiply(Element::one(n) * kU2 + multiply(h, h), embed_shift(build_C(n - 2), n - 2, n));
      if (gn != expect) l.pass = false, l.detail << "gamma_n n=" << n << " ";
      if (gamma_u(gn) != expected_gamma_C(n)) l.pass = false, l.detail << "gamma n=" << n << " ";
    }
  });

  run(3, "C_n monic in u^2 of degree floor(n/2), no odd powers, n = 2..7", [](Line& l) {
    for (int n = 2; n <= 7; ++n)
      if (!monic_degree_check(build_C(n), n)) l.pass = false, l.detail << "n=" << n << " ";
  });

  run(4, "opp(C_n) = C_n, n = 2..6", [](Line& l) {
    for (int n = 2; n <= 6; ++n)
      if (opp(build_C(n)) != build_C(n)) l.pass = false, l.detail << "n=" << n << " ";
  });

  run(5, "Pfaffians: central, sign law (24 permutations per size), Iwasawa identity, HC image, m = 1..3", [](Line& l) {
    std::mt19937 rng(20240601);
    for (int m = 1; m <= 3; ++m) {
      const int n = 2 * m;
      const Element pf = build_PF(m);
      if (!is_central(pf).central) l.pass = false, l.detail << "central m=" << m << " ";
      if (!iwasawa_pf_check(m).ok) l.pass = false, l.detail << "Iwasawa m=" << m << " ";
      if (gamma(pf) != expected_gamma_PF(m)) l.pass = false, l.detail << "gamma m=" << m << " ";
      std::vector<int> base(n);
      for (int k = 0; k < n; ++k) base[k] = n - k;
      for (int s = 0; s < 24; ++s) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> idx(n);
        for (int k = 0; k < n; ++k) idx[k] = base[perm[k]];
        Element expect = permutation_sign(perm) > 0 ? pf : -pf;
        if (build_pf(idx, n) != expect) {
          l.pass = false;
          l.detail << "sign law m=" << m << " ";
          break;
        }
      }
    }
  });

  run(6, "GT brackets < 1e-9, Casimir < 1e-10, Weyl dimension, SO(3..5) entries <= 3", [](Line& l) {
    int count = 0;
    double worst_b = 0, worst_c = 0;
    for (int N = 3; N <= 5; ++N)
      for (const auto& w : dominant_weights(N, 3)) {
        ++count;
        auto b = gt::verify_brackets(N, w, 1e-9);
        auto c = gt::verify_casimir(N, w, 1e-10);
        worst_b = std::max(worst_b, b.max_residual);
        worst_c = std::max(worst_c, c.max_residual);
        const long dim = static_cast<long>(gt::enumerate_patterns(N, w).size());
        if (!b.pass || !c.pass || dim != weyl_dimension(N, w)) {
          l.pass = false;
          l.detail << "SO(" << N << ") " << weight_str(w) << " ";
        }
      }
    l.detail << count << " weights, max bracket " << worst_b << ", max Casimir " << worst_c;
  });

  run(7, "shift lemmas pipi/noX/X2/X1 < 1e-8, n = 5, 6, all ell", [](Line& l) {
    const std::vector<std::pair<int, std::vector<gt::Weight>>> cases = {
        {5, {{2, 1}, {1, 1}, {2, 2}, {1, -1}, {2, -2}, {2, 0}}},
        {6, {{2, 1}, {1, 1}, {2, 2}, {2, 0}, {3, 1}}},
    };
    double worst = 0;
    int checks = 0;
    for (const auto& [n, weights] : cases)
      for (const auto& w : weights)
        for (int ell : gt::shift_indices(n))
          for (const auto& r : {gt::verify_pipi(n, w, ell, 1e-8), gt::verify_noX(n, w, ell, 1e-8),
                                gt::verify_X2(n, w, ell, 1e-8), gt::verify_X1(n, w, ell, 1e-8)}) {
            ++checks;
            worst = std::max(worst, r.max_residual);
            if (!r.pass) {
              l.pass = false;
              l.detail << r.lemma << " n=" << n << " " << weight_str(w) << " ell=" << ell << " ";
            }
          }
    l.detail << checks << " checks, max residual " << worst;
  });

  run(8, "C_{n-2}(u) through tau_lambda matches the block scalars < 1e-8, n = 5, 6", [](Line& l) {
    const std::vector<std::pair<int, std::vector<gt::Weight>>> cases = {
        {5, {{1, 0}, {2, 1}, {1, -1}, {2, 2}}},
        {6, {{1, 0}, {2, 1}, {1, 1}, {2, 0}}},
    };
    double worst = 0;
    for (const auto& [n, weights] : cases)
      for (const auto& w : weights)
        for (const mpq_class& u : {mpq_class(0), mpq_class(1, 2), mpq_class(7, 3), mpq_class(-5, 4)}) {
          auto r = gt::verify_c_action(n, w, u, 1e-8);
          worst = std::max(worst, r.max_residual);
          if (!r.pass) l.pass = false, l.detail << "n=" << n << " " << weight_str(w) << " u=" << u << " ";
        }
    l.detail << "max residual " << worst;
  });

  run(9, "Pfaffian shift ratio constancy < 1e-10, n = 4, 6, entries <= 2", [](Line& l) {
    double worst = 0;
    for (int m : {2, 3})
      for (const auto& w : dominant_weights(2 * m - 1, 2)) {
        auto r = gt::verify_pf_shift(m, w, 1e-10);
        worst = std::max(worst, r.max_residual);
        if (!r.pass) l.pass = false, l.detail << "n=" << 2 * m << " " << weight_str(w) << " ";
      }
    l.detail << "max residual " << worst;
  });

  return failures == 0 ? 0 : 1;
}
