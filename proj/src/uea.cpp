#include "socenter/uea.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace socenter {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_letters(const std::vector<int>& letters) {
  if (static_cast<int>(letters.size()) > kMaxLength) throw std::length_error("monomial exceeds maximum length");
  Monomial m;
  for (int l : letters) {
    if (l < 1 || l > kMaxLetter) throw std::out_of_range("letter out of range");
    m = m.append(l);
  }
  return m;
}

std::vector<int> Monomial::letters() const {
  std::vector<int> out(size());
  for (int k = 0; k < static_cast<int>(out.size()); ++k) out[k] = (*this)[k];
  return out;
}

bool Monomial::is_sorted() const {
  for (int k = 1; k < size(); ++k)
    if ((*this)[k - 1] > (*this)[k]) return false;
  return true;
}

bool Monomial::contains_letter_in(int lo, int hi) const {
  for (int k = 0; k < size(); ++k) {
    int l = (*this)[k];
    if (l >= lo && l <= hi) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Generator

Generator::Generator(int j_, int i_) : j(j_), i(i_) {
  if (i < 1 || i >= j || j > kMaxRank) throw std::invalid_argument("generator indices must satisfy 1 <= i < j <= 8");
}

Generator Generator::from_letter(int letter) {
  if (letter < 1 || letter > dimension(kMaxRank)) throw std::out_of_range("letter out of range");
  int j = 2;
  while (letter > dimension(j)) ++j;
  return Generator(j, letter - dimension(j - 1));
}

std::string Generator::str() const { return "A[" + std::to_string(j) + "," + std::to_string(i) + "]"; }

// ---------------------------------------------------------------------------
// TermAccumulator

void TermAccumulator::add(Monomial m, const UPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = map_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void TermAccumulator::add_scaled(Monomial m, const UPoly& c, long k) {
  if (c.is_zero() || k == 0) return;
  auto [it, inserted] = map_.try_emplace(m);
  it->second.add_scaled(c, k);
}

void TermAccumulator::add_scaled(Monomial m, const UPoly& c, const GaussianRational& k) {
  if (c.is_zero() || k.is_zero()) return;
  auto [it, inserted] = map_.try_emplace(m);
  it->second.add_scaled(c, k);
}

Terms TermAccumulator::finish() && {
  Terms out;
  out.reserve(map_.size());
  for (auto& [m, c] : map_)
    if (!c.is_zero()) out.emplace_back(m, std::move(c));
  map_.clear();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------------------
// Structure constants and per-thread straighteners

namespace detail {

void check_rank(int n) {
  if (n < 0 || n > kMaxRank) throw std::invalid_argument("rank must lie in [0, 8]");
}

}  // namespace detail

namespace {

std::atomic<std::size_t> g_cache_limit{2'000'000};

// [A_a, A_b] from the n x n antisymmetric matrices; coordinates of an
// antisymmetric matrix M in the A_{j,i} basis are M(j,i), j > i.
std::shared_ptr<const BracketTable<long>> compute_structure_constants(int n) {
  const int dim = dimension(n);
  auto table = std::make_shared<BracketTable<long>>(dim + 1, std::vector<std::vector<std::pair<int, long>>>(dim + 1));
  auto matrix = [n](Generator g) {
    std::vector<long> m(n * n, 0);
    m[(g.j - 1) * n + (g.i - 1)] = 1;
    m[(g.i - 1) * n + (g.j - 1)] = -1;
    return m;
  };
  for (int a = 1; a <= dim; ++a) {
    auto ma = matrix(Generator::from_letter(a));
    for (int b = 1; b < a; ++b) {
      auto mb = matrix(Generator::from_letter(b));
      std::vector<long> c(n * n, 0);
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          long acc = 0;
          for (int k = 0; k < n; ++k) acc += ma[r * n + k] * mb[k * n + s] - mb[r * n + k] * ma[k * n + s];
          c[r * n + s] = acc;
        }
      auto& entry = (*table)[a][b];
      for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
          if (long v = c[(j - 1) * n + (i - 1)]; v != 0) entry.emplace_back(Generator(j, i).letter(), v);
    }
  }
  return table;
}

}  // namespace

std::shared_ptr<const BracketTable<long>> structure_constants(int n) {
  detail::check_rank(n);
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const BracketTable<long>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = compute_structure_constants(n);
  return slot;
}

void set_straightener_cache_limit(std::size_t entries) { g_cache_limit = entries; }
std::size_t straightener_cache_limit() { return g_cache_limit.load(); }

namespace detail {

Straightener<long>& thread_straightener(int n) {
  thread_local std::map<int, std::unique_ptr<Straightener<long>>> pool;
  auto& slot = pool[n];
  if (!slot) slot = std::make_unique<Straightener<long>>(structure_constants(n));
  slot->trim(g_cache_limit.load());
  return *slot;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Element

Element::Element(int rank, Terms terms) : rank_(rank), terms_(std::move(terms)) { detail::check_rank(rank); }

Element Element::scalar(int rank, const UPoly& c) {
  detail::check_rank(rank);
  Element e(rank);
  if (!c.is_zero()) e.terms_.emplace_back(Monomial(), c);
  return e;
}

UPoly Element::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const auto& t, Monomial v) { return t.first < v; });
  if (it != terms_.end() && it->first == m) return it->second;
  return {};
}

int Element::degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.first.size());
  return d;
}

int Element::u_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.second.degree());
  return d;
}

int Element::max_index() const {
  int m = 0;
  for (const auto& t : terms_)
    for (int l : t.first.letters()) m = std::max(m, Generator::from_letter(l).j);
  return m;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

void check_same_rank(const Element& a, const Element& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
}

Terms merge(const Terms& a, const Terms& b, bool subtract) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t x = 0, y = 0;
  while (x < a.size() || y < b.size()) {
    if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
      out.push_back(a[x++]);
    } else if (x == a.size() || b[y].first < a[x].first) {
      out.emplace_back(b[y].first, subtract ? -b[y].second : b[y].second);
      ++y;
    } else {
      UPoly c = subtract ? a[x].second - b[y].second : a[x].second + b[y].second;
      if (!c.is_zero()) out.emplace_back(a[x].first, std::move(c));
      ++x;
      ++y;
    }
  }
  return out;
}

std::string monomial_str(Monomial m) {
  std::ostringstream os;
  auto letters = m.letters();
  for (std::size_t k = 0; k < letters.size();) {
    std::size_t e = k;
    while (e < letters.size() && letters[e] == letters[k]) ++e;
    if (k > 0) os << " ";
    os << Generator::from_letter(letters[k]).str();
    if (e - k > 1) os << "^" << (e - k);
    k = e;
  }
  return os.str();
}

}  // namespace

Element& Element::operator+=(const Element& o) {
  check_same_rank(*this, o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same_rank(*this, o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Element& Element::operator*=(const UPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& [m, c] = terms_[k];
    if (k > 0) os << " + ";
    const bool compound = c.sparse().size() > 1;
    if (m.empty()) {
      os << (compound ? "(" + c.str() + ")" : c.str());
      continue;
    }
    if (!(c.degree() == 0 && c.coeff(0).is_one())) os << (compound ? "(" + c.str() + ")" : c.str()) << "*";
    os << monomial_str(m);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Operations

Element gen(int n, int j, int i) {
  detail::check_rank(n);
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("generator index out of range");
  if (i == j) throw std::invalid_argument("generator indices must differ");
  if (j > i) return Element(n, {{Monomial().append(Generator(j, i).letter()), 1}});
  return Element(n, {{Monomial().append(Generator(i, j).letter()), -1}});
}

Element gen(int n, Generator g) { return gen(n, g.j, g.i); }

Element bracket_basis(int n, Generator g1, Generator g2) {
  if (g1.j > n || g2.j > n) throw std::out_of_range("generator index out of range");
  if (g1 == g2) return Element(n);
  auto table = structure_constants(n);
  const int a = g1.letter(), b = g2.letter();
  const long sign = a > b ? 1 : -1;
  const auto& entry = a > b ? (*table)[a][b] : (*table)[b][a];
  Terms terms;
  for (auto [l, c] : entry) terms.emplace_back(Monomial().append(l), UPoly(GaussianRational(sign * c)));
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return Element(n, std::move(terms));
}

Element normal_form(int n, const std::vector<Word>& words) {
  detail::check_rank(n);
  auto& st = detail::thread_straightener(n);
  TermAccumulator acc;
  for (const auto& w : words) {
    std::vector<int> letters;
    letters.reserve(w.letters.size());
    for (auto g : w.letters) {
      if (g.j > n) throw std::out_of_range("generator index exceeds rank");
      letters.push_back(g.letter());
    }
    for (const auto& [m, k] : st.word(letters)) acc.add_scaled(m, w.coeff, k);
  }
  return Element(n, std::move(acc).finish());
}

Element normal_form(const Element& x) {
  std::vector<Word> words;
  words.reserve(x.size());
  for (const auto& [m, c] : x.terms()) {
    Word w;
    for (int l : m.letters()) w.letters.push_back(Generator::from_letter(l));
    w.coeff = c;
    words.push_back(std::move(w));
  }
  return normal_form(x.rank(), words);
}

Element add(const Element& x, const Element& y) { return x + y; }

Element multiply(const Element& x, const Element& y) {
  check_same_rank(x, y);
  auto& st = detail::thread_straightener(x.rank());
  TermAccumulator acc;
  for (const auto& [m1, c1] : x.terms()) {
    for (const auto& [m2, c2] : y.terms()) {
      UPoly c = c1 * c2;
      if (m1.empty() || m2.empty() || m1.back() <= m2.front()) {
        Monomial m = m2;
        for (int k = m1.size() - 1; k >= 0; --k) m = m.prepend(m1[k]);
        acc.add(m, c);
        continue;
      }
      for (const auto& [m, k] : st.product(m1, m2)) acc.add_scaled(m, c, k);
    }
  }
  return Element(x.rank(), std::move(acc).finish());
}

Element commutator(const Element& x, const Element& y) {
  check_same_rank(x, y);
  if (x.size() == 1 && x.terms()[0].first.size() == 1) {
    const auto& [m, c] = x.terms()[0];
    return commutator(Generator::from_letter(m.front()), y) * c;
  }
  return multiply(x, y) - multiply(y, x);
}

Element commutator(Generator g, const Element& x) {
  if (g.j > x.rank()) throw std::out_of_range("generator index exceeds rank");
  auto& st = detail::thread_straightener(x.rank());
  const int l = g.letter();
  TermAccumulator acc;
  for (const auto& [m, c] : x.terms()) {
    for (const auto& [m2, k] : st.left(l, m)) acc.add_scaled(m2, c, k);
    for (const auto& [m2, k] : st.right(m, l)) acc.add_scaled(m2, c, -k);
  }
  return Element(x.rank(), std::move(acc).finish());
}

Element opp(const Element& x) {
  auto& st = detail::thread_straightener(x.rank());
  TermAccumulator acc;
  for (const auto& [m, c] : x.terms()) {
    auto letters = m.letters();
    std::reverse(letters.begin(), letters.end());
    const long sign = letters.size() % 2 == 0 ? 1 : -1;
    for (const auto& [m2, k] : st.word(letters)) acc.add_scaled(m2, c, sign * k);
  }
  return Element(x.rank(), std::move(acc).finish());
}

Element casimir_omega(int n, int k) {
  detail::check_rank(n);
  if (k > n) throw std::invalid_argument("casimir sub-rank exceeds rank");
  Terms terms;
  for (int j = 2; j <= k; ++j)
    for (int i = 1; i < j; ++i) {
      int l = Generator(j, i).letter();
      terms.emplace_back(Monomial().append(l).append(l), 1);
    }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return Element(n, std::move(terms));
}

Element embed_shift(const Element& x, int n_from, int n_to) {
  detail::check_rank(n_to);
  if (n_from > n_to) throw std::invalid_argument("embedding must not shrink the rank");
  if (x.max_index() > n_from) throw std::out_of_range("element index exceeds source rank");
  return Element(n_to, x.terms());
}

Element specialize(const Element& x, const GaussianRational& u) {
  Terms terms;
  for (const auto& [m, c] : x.terms())
    if (GaussianRational v = c.eval(u); !v.is_zero()) terms.emplace_back(m, UPoly(v));
  return Element(x.rank(), std::move(terms));
}

}  // namespace socenter
