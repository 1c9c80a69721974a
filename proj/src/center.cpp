#include "socenter/center.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace socenter {

namespace {

std::atomic<int> g_threads{0};

UPoly rational(long p, long q) { return UPoly(GaussianRational::fraction(p, q)); }

const UPoly kI = UPoly(GaussianRational::i());

}  // namespace

int default_thread_count() {
  if (int t = g_threads.load(); t > 0) return t;
  if (const char* env = std::getenv("SOCENTER_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_default_thread_count(int threads) { g_threads = threads; }

IwasawaGens iwasawa_gens(int n) {
  if (n < 2) throw std::invalid_argument("Iwasawa generators need rank >= 2");
  IwasawaGens g;
  g.rank = n;
  g.H = gen(n, n, n - 1) * kI;
  for (int i = 1; i <= n - 2; ++i) g.X.push_back(gen(n, n - 1, i) + gen(n, n, i) * kI);
  return g;
}

CentralityReport is_central(const Element& x, int threads) {
  const int n = x.rank();
  std::vector<Generator> gens;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) gens.emplace_back(j, i);
  if (threads <= 0) threads = default_thread_count();
  threads = std::min<int>(threads, static_cast<int>(gens.size()));

  std::vector<Element> residuals(gens.size());
  if (threads <= 1) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      residuals[k] = commutator(gens[k], x);
      if (!residuals[k].is_zero()) return {false, gens[k], residuals[k]};
    }
    return {true, std::nullopt, Element(n)};
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < gens.size();) {
        if (failed) return;
        residuals[k] = commutator(gens[k], x);
        if (!residuals[k].is_zero()) failed = true;
      }
    });
  for (auto& th : pool) th.join();
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!residuals[k].is_zero()) return {false, gens[k], residuals[k]};
  return {true, std::nullopt, Element(n)};
}

bool monic_degree_check(const Element& x, int n) {
  const int top = 2 * (n / 2);
  if (x.u_degree() != top) return false;
  for (const auto& [m, c] : x.terms()) {
    for (int k = 1; k <= c.degree(); k += 2)
      if (!c.coeff(k).is_zero()) return false;
    GaussianRational lead = c.coeff(top);
    if (m.empty() ? !lead.is_one() : !lead.is_zero()) return false;
  }
  return !x.coeff(Monomial()).is_zero();
}

Element build_C(int n) {
  if (n < 0) throw std::invalid_argument("rank must be non-negative");
  detail::check_rank(n);
  static std::mutex mu;
  static std::map<int, Element> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  if (n < 2) {
    Element one = Element::one(n);
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(n, one).first->second;
  }

  const auto iw = iwasawa_gens(n);
  const Element& H = iw.H;
  const auto& X = iw.X;
  const Element c_prev = embed_shift(build_C(n - 2), n - 2, n);
  const Element omega = casimir_omega(n, n - 2);
  const Element one = Element::one(n);
  const UPoly u2 = UPoly::monomial(2);

  // Inner brackets [A_{n-1,i}, C_{n-2}], shared by every sum below.
  std::vector<Element> inner;
  for (int i = 1; i <= n - 2; ++i) inner.push_back(commutator(Generator(n - 1, i), c_prev));

  // -{(H - (n-2)/2)^2 - u^2 + sum_i X_i^2} C_{n-2}
  Element shifted = H - one * rational(n - 2, 2);
  Element brace = multiply(shifted, shifted) - one * u2;
  for (const auto& x : X) brace += multiply(x, x);
  Element result = -multiply(brace, c_prev);

  // + sum_i X_i (H - (n-5)/2) [A_{n-1,i}, C_{n-2}]
  Element h5 = H - one * rational(n - 5, 2);
  for (int i = 0; i < n - 2; ++i) result += multiply(multiply(X[i], h5), inner[i]);

  // + 2 sum_i X_i C_{n-2} A_{n-1,i}
  for (int i = 0; i < n - 2; ++i)
    result += multiply(multiply(X[i], c_prev), gen(n, n - 1, i + 1)) * UPoly(2);

  // - 1/2 sum_i X_i [Omega_{n-2}, [A_{n-1,i}, C_{n-2}]]
  for (int i = 0; i < n - 2; ++i)
    result -= multiply(X[i], commutator(omega, inner[i])) * rational(1, 2);

  // - 1/2 sum_{i,j} X_i X_j [A_{n-1,i}, [A_{n-1,j}, C_{n-2}]]
  for (int i = 0; i < n - 2; ++i) {
    for (int j = 0; j < n - 2; ++j) {
      Element nested = commutator(Generator(n - 1, i + 1), inner[j]);
      result -= multiply(multiply(X[i], X[j]), nested) * rational(1, 2);
    }
  }

  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(n, std::move(result)).first->second;
}

namespace {

Element pf_recursive(const std::vector<int>& idx, int n, std::map<std::vector<int>, Element>& memo) {
  if (idx.empty()) return Element::one(n);
  if (auto it = memo.find(idx); it != memo.end()) return it->second;
  // idx = (i_{2k}, i_{2k-1}, ..., i_1); i_j sits at position 2k - j.
  const int size = static_cast<int>(idx.size());
  Element out(n);
  for (int j = 1; j <= size - 1; ++j) {
    std::vector<int> rest;
    for (int p = 1; p < size; ++p)
      if (p != size - j) rest.push_back(idx[p]);
    Element term = multiply(gen(n, idx[0], idx[size - j]), pf_recursive(rest, n, memo));
    if (j % 2 == 0) out -= term;
    else out += term;
  }
  return memo.emplace(idx, out).first->second;
}

}  // namespace

Element build_pf(const std::vector<int>& indices, int n) {
  detail::check_rank(n);
  if (indices.size() % 2 != 0) throw std::invalid_argument("Pfaffian needs an even number of indices");
  std::set<int> seen;
  for (int i : indices) {
    if (i < 1 || i > n) throw std::out_of_range("Pfaffian index out of range");
    if (!seen.insert(i).second) throw std::invalid_argument("repeated Pfaffian index");
  }
  std::map<std::vector<int>, Element> memo;
  return pf_recursive(indices, n, memo);
}

Element build_PF(int m) {
  if (m < 0) throw std::invalid_argument("half-rank must be non-negative");
  std::vector<int> idx;
  for (int k = 2 * m; k >= 1; --k) idx.push_back(k);
  return build_pf(idx, 2 * m);
}

IdentityReport iwasawa_pf_check(int m) {
  if (m < 1) throw std::invalid_argument("half-rank must be >= 1");
  const int n = 2 * m;
  const auto iw = iwasawa_gens(n);
  const Element pf_prev = embed_shift(build_PF(m - 1), 2 * m - 2, n);
  Element lhs = build_PF(m) * kI;
  Element rhs = multiply(iw.H - Element::one(n) * UPoly(m - 1), pf_prev);
  for (int i = 1; i <= n - 2; ++i) rhs -= multiply(iw.X[i - 1], commutator(Generator(n - 1, i), pf_prev));
  Element residual = lhs - rhs;
  return {residual.is_zero(), residual};
}

}  // namespace socenter
