#include "socenter/harish_chandra.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace socenter {

namespace {

using Vec = std::vector<GaussianRational>;

GaussianRational power(const GaussianRational& z, int e) {
  GaussianRational out = 1;
  for (int k = 0; k < e; ++k) out *= z;
  return out;
}

long binomial(int n, int k) {
  long out = 1;
  for (int t = 1; t <= k; ++t) out = out * (n - k + t) / t;
  return out;
}

// [v, w] for coordinate vectors over all generators of so_n.
Vec bracket_vec(int n, const Vec& v, const Vec& w) {
  const auto table = structure_constants(n);
  const int d = dimension(n);
  Vec out(d);
  for (int p = 1; p <= d; ++p) {
    if (v[p - 1].is_zero()) continue;
    for (int q = 1; q <= d; ++q) {
      if (q == p || w[q - 1].is_zero()) continue;
      GaussianRational c = v[p - 1] * w[q - 1];
      const auto& entry = p > q ? (*table)[p][q] : (*table)[q][p];
      for (const auto& [h, k] : entry) {
        GaussianRational t = c;
        t *= p > q ? k : -k;
        out[h - 1] += t;
      }
    }
  }
  return out;
}

Vec unit(int d, int letter, GaussianRational c = 1) {
  Vec v(d);
  v[letter - 1] = c;
  return v;
}

Vec add_vec(Vec a, const Vec& b, const GaussianRational& c) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k] * c;
  return a;
}

Element vec_element(int n, const Vec& v) {
  Element out(n);
  for (int k = 0; k < static_cast<int>(v.size()); ++k)
    if (!v[k].is_zero()) out += gen(n, Generator::from_letter(k + 1)) * UPoly(v[k]);
  return out;
}

Straightener<GaussianRational>& thread_straightener(const LieBasis* basis) {
  thread_local std::unordered_map<const LieBasis*, std::unique_ptr<Straightener<GaussianRational>>> pool;
  auto& slot = pool[basis];
  if (!slot) slot = std::make_unique<Straightener<GaussianRational>>(basis->brackets());
  slot->trim(straightener_cache_limit());
  return *slot;
}

}  // namespace

// ---------------------------------------------------------------------------
// LieBasis

LieBasis::LieBasis(int n, std::vector<int> ambient, ExactMatrix change, std::vector<std::string> names)
    : n_(n), ambient_(std::move(ambient)), change_(std::move(change)), names_(std::move(names)) {
  const int k = static_cast<int>(ambient_.size());
  if (change_.rows() != k || change_.cols() != k || static_cast<int>(names_.size()) != k)
    throw std::invalid_argument("basis shape mismatch");
  inverse_ = change_.inverse();
  for (int a = 0; a < k; ++a) {
    auto& img = images_[ambient_[a]];
    for (int r = 0; r < k; ++r)
      if (!inverse_(r, a).is_zero()) img.emplace_back(r + 1, inverse_(r, a));
  }

  const int d = dimension(n_);
  std::vector<Vec> full(k, Vec(d));
  for (int c = 0; c < k; ++c)
    for (int a = 0; a < k; ++a) full[c][ambient_[a] - 1] = change_(a, c);
  auto table = std::make_shared<BracketTable<GaussianRational>>(
      k + 1, std::vector<std::vector<std::pair<int, GaussianRational>>>(k + 1));
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b < a; ++b) {
      Vec coords = coordinates(bracket_vec(n_, full[a - 1], full[b - 1]));
      for (int r = 0; r < k; ++r)
        if (!coords[r].is_zero()) (*table)[a][b].emplace_back(r + 1, coords[r]);
    }
  brackets_ = table;
}

std::vector<GaussianRational> LieBasis::coordinates(const Vec& v) const {
  const int k = static_cast<int>(ambient_.size());
  std::vector<bool> inside(v.size(), false);
  for (int a : ambient_) inside[a - 1] = true;
  for (std::size_t p = 0; p < v.size(); ++p)
    if (!inside[p] && !v[p].is_zero()) throw std::logic_error("bracket leaves the subalgebra");
  Vec out(k);
  for (int r = 0; r < k; ++r)
    for (int a = 0; a < k; ++a)
      if (!v[ambient_[a] - 1].is_zero()) out[r] += inverse_(r, a) * v[ambient_[a] - 1];
  return out;
}

Element LieBasis::element(int letter) const {
  Vec v(dimension(n_));
  for (int a = 0; a < static_cast<int>(ambient_.size()); ++a) v[ambient_[a] - 1] = change_(a, letter - 1);
  return vec_element(n_, v);
}

const std::vector<std::pair<int, GaussianRational>>& LieBasis::image(int primary_letter) const {
  auto it = images_.find(primary_letter);
  if (it == images_.end())
    throw std::invalid_argument("generator " + Generator::from_letter(primary_letter).str() + " outside the basis span");
  return it->second;
}

Terms LieBasis::expand(const Element& x, bool from_right, int drop_lo, int drop_hi) const {
  if (x.rank() != n_) throw std::invalid_argument("rank mismatch");
  auto& st = thread_straightener(this);
  const bool prune = drop_lo <= drop_hi;
  TermAccumulator acc;
  for (const auto& [m, c] : x.terms()) {
    const std::vector<int> letters = m.letters();
    Combination<GaussianRational> cur{{Monomial(), GaussianRational(1)}};
    for (std::size_t t = 0; t < letters.size() && !cur.empty(); ++t) {
      const int primary = from_right ? letters[letters.size() - 1 - t] : letters[t];
      Combination<GaussianRational> next;
      for (const auto& [b, cb] : image(primary)) {
        for (const auto& [w, cw] : cur) {
          GaussianRational scale = cb * cw;
          const auto& prod = from_right ? st.left(b, w) : st.right(w, b);
          for (const auto& [w2, c2] : prod) {
            if (prune && w2.contains_letter_in(drop_lo, drop_hi)) continue;
            next.emplace_back(w2, scale * c2);
          }
        }
      }
      canonicalize(next);
      cur = std::move(next);
    }
    for (const auto& [w, cw] : cur) acc.add_scaled(w, c, cw);
  }
  return std::move(acc).finish();
}

Element LieBasis::collapse(const Terms& terms) const {
  std::vector<Element> letters;
  for (int k = 1; k <= size(); ++k) letters.push_back(element(k));
  Element out(n_);
  for (const auto& [m, c] : terms) {
    Element prod = Element::scalar(n_, c);
    for (int l : m.letters()) prod = multiply(prod, letters[l - 1]);
    out += prod;
  }
  return out;
}

// ---------------------------------------------------------------------------
// TriangularBasis

namespace {

std::unique_ptr<TriangularBasis> make_triangular(int n) {
  const int d = dimension(n);
  const int dm = dimension(n - 2);
  const int r = (n - 2) / 2;
  const GaussianRational I = GaussianRational::i();
  auto tb = std::make_unique<TriangularBasis>();
  tb->rank = n;

  std::vector<Vec> xs, xbars, ts;
  for (int i = 1; i <= n - 2; ++i) {
    Vec a = unit(d, Generator(n - 1, i).letter());
    xs.push_back(add_vec(a, unit(d, Generator(n, i).letter()), I));
    xbars.push_back(add_vec(a, unit(d, Generator(n, i).letter()), -I));
  }
  const Vec h = unit(d, Generator(n, n - 1).letter(), I);
  for (int i = 1; i <= r; ++i) ts.push_back(unit(d, Generator(n - 2 * i, n - 1 - 2 * i).letter(), I));

  // Simultaneous eigenvectors of ad T_i on m, restricted to m coordinates.
  std::vector<ExactMatrix> ad;
  for (const auto& t : ts) {
    ExactMatrix m(dm, dm);
    for (int q = 1; q <= dm; ++q) {
      Vec col = bracket_vec(n, t, unit(d, q));
      for (int p = 1; p <= dm; ++p) m(p - 1, q - 1) = col[p - 1];
    }
    ad.push_back(m);
  }
  auto root_vector = [&](const std::vector<int>& w) -> std::optional<Vec> {
    ExactMatrix stacked(r * dm, dm);
    for (int i = 0; i < r; ++i)
      for (int p = 0; p < dm; ++p)
        for (int q = 0; q < dm; ++q) stacked(i * dm + p, q) = ad[i](p, q) - (p == q ? GaussianRational(w[i]) : 0);
    auto ns = stacked.nullspace();
    if (ns.empty()) return std::nullopt;
    if (ns.size() > 1) throw std::logic_error("root space of dimension > 1");
    Vec v = ns[0];
    GaussianRational lead;
    for (const auto& c : v)
      if (!c.is_zero()) {
        lead = c;
        break;
      }
    Vec full(d);
    for (int p = 0; p < dm; ++p) full[p] = v[p] / lead;
    return full;
  };

  // Weights in {-1,0,1}^r, lexicographically descending.
  std::vector<std::vector<int>> weights;
  if (r > 0) {
    std::vector<int> w(r, 1);
    while (true) {
      weights.push_back(w);
      int k = r - 1;
      while (k >= 0 && w[k] == -1) w[k--] = 1;
      if (k < 0) break;
      --w[k];
    }
  }
  std::vector<Vec> upos, uneg;
  for (const auto& w : weights) {
    auto first = std::find_if(w.begin(), w.end(), [](int c) { return c != 0; });
    if (first == w.end() || *first < 0) continue;
    auto v = root_vector(w);
    if (!v) continue;
    std::vector<int> neg(w);
    for (int& c : neg) c = -c;
    auto vn = root_vector(neg);
    if (!vn) throw std::logic_error("missing negative root vector");
    upos.push_back(*v);
    uneg.push_back(*vn);
    tb->pos_weights.push_back(w);
  }
  if (2 * static_cast<int>(upos.size()) + r != dm) throw std::logic_error("root decomposition is incomplete");

  for (const auto& v : xs) tb->X.push_back(vec_element(n, v));
  for (const auto& v : xbars) tb->Xbar.push_back(vec_element(n, v));
  for (const auto& v : ts) tb->T.push_back(vec_element(n, v));
  for (const auto& v : upos) tb->U_pos.push_back(vec_element(n, v));
  for (const auto& v : uneg) tb->U_neg.push_back(vec_element(n, v));
  tb->H = vec_element(n, h);

  auto fill = [](std::vector<const Vec*> cols, const std::vector<int>& ambient) {
    ExactMatrix m(static_cast<int>(ambient.size()), static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
      for (int a = 0; a < static_cast<int>(ambient.size()); ++a) m(a, c) = (*cols[c])[ambient[a] - 1];
    return m;
  };
  std::vector<int> all(d);
  for (int k = 0; k < d; ++k) all[k] = k + 1;

  const int P = static_cast<int>(upos.size());
  std::vector<const Vec*> cols;
  std::vector<std::string> names;
  for (int i = 0; i < n - 2; ++i) cols.push_back(&xs[i]);
  for (const auto& v : upos) cols.push_back(&v);
  cols.push_back(&h);
  for (const auto& v : ts) cols.push_back(&v);
  for (const auto& v : uneg) cols.push_back(&v);
  for (const auto& v : xbars) cols.push_back(&v);
  tb->change_of_basis = fill(cols, all);

  std::vector<Vec> prim;
  for (int k = 1; k <= d; ++k) prim.push_back(unit(d, k));

  cols.clear();
  names.clear();
  for (int i = 0; i < n - 2; ++i) {
    cols.push_back(&xs[i]);
    names.push_back("X" + std::to_string(i + 1));
  }
  for (int k = 1; k <= dm; ++k) {
    cols.push_back(&prim[k - 1]);
    names.push_back(Generator::from_letter(k).str());
  }
  cols.push_back(&h);
  names.push_back("H");
  for (int i = 0; i < n - 2; ++i) {
    cols.push_back(&xbars[i]);
    names.push_back("Xbar" + std::to_string(i + 1));
  }
  tb->n_order = std::make_unique<LieBasis>(n, all, fill(cols, all), names);

  std::vector<int> ma;
  for (int k = 1; k <= dm; ++k) ma.push_back(k);
  ma.push_back(d);
  cols.clear();
  names.clear();
  for (int k = 0; k < P; ++k) {
    cols.push_back(&upos[k]);
    names.push_back("U" + std::to_string(k + 1));
  }
  cols.push_back(&h);
  names.push_back("H");
  for (int i = 0; i < r; ++i) {
    cols.push_back(&ts[i]);
    names.push_back("T" + std::to_string(i + 1));
  }
  for (int k = 0; k < P; ++k) {
    cols.push_back(&uneg[k]);
    names.push_back("Ubar" + std::to_string(k + 1));
  }
  tb->u_order = std::make_unique<LieBasis>(n, ma, fill(cols, ma), names);

  cols.clear();
  names.clear();
  for (int i = 0; i < n - 2; ++i) {
    cols.push_back(&xs[i]);
    names.push_back("X" + std::to_string(i + 1));
  }
  cols.push_back(&h);
  names.push_back("H");
  for (int k = 1; k <= dimension(n - 1); ++k) {
    cols.push_back(&prim[k - 1]);
    names.push_back(Generator::from_letter(k).str());
  }
  tb->p_order = std::make_unique<LieBasis>(n, all, fill(cols, all), names);
  return tb;
}

}  // namespace

const TriangularBasis& build_triangular(int n) {
  if (n < 2) throw std::invalid_argument("triangular decomposition needs rank >= 2");
  detail::check_rank(n);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<TriangularBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = make_triangular(n);
  return *slot;
}

// ---------------------------------------------------------------------------
// HPoly

HPoly HPoly::constant(int r, const UPoly& c) {
  HPoly p(r);
  p.add_term(std::vector<int>(r + 1, 0), c);
  return p;
}

HPoly HPoly::variable(int r, int k) {
  if (k < 0 || k > r) throw std::out_of_range("HPoly variable index");
  std::vector<int> e(r + 1, 0);
  e[k] = 1;
  HPoly p(r);
  p.add_term(e, 1);
  return p;
}

std::vector<std::string> HPoly::var_names() const {
  std::vector<std::string> v{"H"};
  for (int i = 1; i <= r_; ++i) v.push_back("T" + std::to_string(i));
  return v;
}

void HPoly::add_term(const std::vector<int>& exps, const UPoly& c) {
  if (static_cast<int>(exps.size()) != r_ + 1) throw std::invalid_argument("HPoly exponent length");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("negative HPoly exponent");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(exps, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HPoly HPoly::operator-() const {
  HPoly out(r_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

HPoly& HPoly::operator+=(const HPoly& o) {
  if (o.r_ != r_) throw std::invalid_argument("HPoly variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) { return *this += -o; }

HPoly operator*(const HPoly& a, const HPoly& b) {
  if (a.r_ != b.r_) throw std::invalid_argument("HPoly variable count mismatch");
  HPoly out(a.r_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(ea);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

HPoly operator*(HPoly a, const UPoly& c) {
  HPoly out(a.r_);
  for (const auto& [e, v] : a.terms_) out.add_term(e, v * c);
  return out;
}

HPoly HPoly::shifted(int var, const GaussianRational& c) const {
  HPoly out(r_);
  for (const auto& [e, v] : terms_) {
    const int top = e[var];
    for (int b = 0; b <= top; ++b) {
      std::vector<int> e2(e);
      e2[var] = b;
      GaussianRational s = power(c, top - b);
      s *= binomial(top, b);
      out.add_term(e2, v * s);
    }
  }
  return out;
}

HPoly HPoly::negated_var(int var) const {
  HPoly out(r_);
  for (const auto& [e, v] : terms_) out.add_term(e, e[var] % 2 ? -v : v);
  return out;
}

HPoly HPoly::swapped(int a, int b) const {
  HPoly out(r_);
  for (const auto& [e, v] : terms_) {
    std::vector<int> e2(e);
    std::swap(e2[a], e2[b]);
    out.add_term(e2, v);
  }
  return out;
}

HPoly HPoly::specialize(const GaussianRational& u) const {
  HPoly out(r_);
  for (const auto& [e, v] : terms_) out.add_term(e, UPoly(v.eval(u)));
  return out;
}

std::string HPoly::str() const {
  if (terms_.empty()) return "0";
  const auto names = var_names();
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (int k = 0; k <= r_; ++k) {
      if (it->first[k] == 0) continue;
      os << "*" << names[k];
      if (it->first[k] > 1) os << "^" << it->first[k];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Projections

Element h_power_element(int n, const std::map<int, UPoly>& coeffs) {
  const int hl = Generator(n, n - 1).letter();
  TermAccumulator acc;
  for (const auto& [a, c] : coeffs) {
    Monomial m;
    for (int k = 0; k < a; ++k) m = m.append(hl);
    acc.add_scaled(m, c, power(GaussianRational::i(), a));
  }
  return Element(n, std::move(acc).finish());
}

Element gamma_n(const Element& x) {
  const int n = x.rank();
  if (n < 2) return x;
  const auto& tb = build_triangular(n);
  const int dm = dimension(n - 2);
  const int h_letter = n - 1 + dm;
  const Terms terms = tb.n_order->expand(x, true, h_letter + 1, dimension(n));
  const GaussianRational rho = GaussianRational::fraction(n - 2, 2);
  const GaussianRational I = GaussianRational::i();
  const int hl = Generator(n, n - 1).letter();
  TermAccumulator acc;
  for (const auto& [m, c] : terms) {
    if (m.contains_letter_in(1, n - 2)) continue;
    Monomial base;
    int a = 0;
    for (int l : m.letters()) {
      if (l == h_letter) ++a;
      else base = base.append(l - (n - 2));
    }
    // (H + rho)^a = sum_b binom(a,b) rho^(a-b) i^b A_{n,n-1}^b
    Monomial mono = base;
    for (int b = 0; b <= a; ++b) {
      GaussianRational s = power(rho, a - b) * power(I, b);
      s *= binomial(a, b);
      acc.add_scaled(mono, c, s);
      if (b < a) mono = mono.append(hl);
    }
  }
  return Element(n, std::move(acc).finish());
}

HPoly gamma_u(const Element& x) {
  const int n = x.rank();
  const int r = n >= 2 ? (n - 2) / 2 : 0;
  if (n < 2) {
    HPoly out(0);
    for (const auto& [m, c] : x.terms()) {
      if (!m.empty()) throw std::invalid_argument("gamma_u input must lie in U(m + a)");
      out.add_term({0}, c);
    }
    return out;
  }
  const int dm = dimension(n - 2);
  const int hl = dimension(n);
  for (const auto& [m, c] : x.terms())
    for (int l : m.letters())
      if (l > dm && l != hl) throw std::invalid_argument("gamma_u input contains " + Generator::from_letter(l).str());
  const auto& tb = build_triangular(n);
  const int P = static_cast<int>(tb.U_pos.size());
  const Terms terms = tb.u_order->expand(x, true, P + r + 2, 2 * P + r + 1);
  HPoly out(r);
  for (const auto& [m, c] : terms) {
    if (m.contains_letter_in(1, P)) continue;
    std::vector<int> e(r + 1, 0);
    for (int l : m.letters()) ++e[l - P - 1];
    out.add_term(e, c);
  }
  for (int i = 1; i <= r; ++i) out = out.shifted(i, GaussianRational::fraction(n - 2 - 2 * i, 2));
  return out;
}

HPoly gamma(const Element& x) { return gamma_u(gamma_n(x)); }

Element PProjection::to_element() const {
  Element out(rank);
  for (const auto& [a, k] : parts) out += multiply(h_power_element(rank, {{a, UPoly(1)}}), k);
  return out;
}

PProjection PProjection::rho_shifted(const GaussianRational& c) const {
  PProjection out;
  out.rank = rank;
  for (const auto& [a, k] : parts)
    for (int b = 0; b <= a; ++b) {
      GaussianRational s = power(c, a - b);
      s *= binomial(a, b);
      Element term = k * UPoly(s);
      auto [it, fresh] = out.parts.emplace(b, term);
      if (!fresh) it->second += term;
    }
  for (auto it = out.parts.begin(); it != out.parts.end();)
    it = it->second.is_zero() ? out.parts.erase(it) : std::next(it);
  return out;
}

PProjection PProjection::restricted_to_m() const {
  PProjection out;
  out.rank = rank;
  const int lo = dimension(rank - 2) + 1, hi = dimension(rank - 1);
  for (const auto& [a, k] : parts) {
    Terms kept;
    for (const auto& [m, c] : k.terms())
      if (!m.contains_letter_in(lo, hi)) kept.emplace_back(m, c);
    if (!kept.empty()) out.parts.emplace(a, Element(rank, std::move(kept)));
  }
  return out;
}

PProjection projection_p(const Element& x) {
  const int n = x.rank();
  PProjection out;
  out.rank = n;
  if (n < 2) {
    if (!x.is_zero()) out.parts.emplace(0, x);
    return out;
  }
  const auto& tb = build_triangular(n);
  const Terms terms = tb.p_order->expand(x, false, 1, n - 2);
  std::map<int, TermAccumulator> acc;
  for (const auto& [m, c] : terms) {
    Monomial k;
    int a = 0;
    for (int l : m.letters()) {
      if (l == n - 1) ++a;
      else k = k.append(l - (n - 1));
    }
    acc[a].add(k, c);
  }
  for (auto& [a, t] : acc) {
    Terms finished = std::move(t).finish();
    if (!finished.empty()) out.parts.emplace(a, Element(n, std::move(finished)));
  }
  return out;
}

}  // namespace socenter
