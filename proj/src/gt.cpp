#include "socenter/gt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "socenter/center.hpp"
#include "socenter/harish_chandra.hpp"

namespace socenter::gt {

namespace {

int sgn(long x) { return (x > 0) - (x < 0); }

int row_length(int p) { return (p + 1) / 2; }

// Interleaving of row p (lower) with row p+1 (upper).
bool interleaves(int p, const std::vector<int>& lower, const std::vector<int>& upper) {
  if (static_cast<int>(lower.size()) != row_length(p) || static_cast<int>(upper.size()) != row_length(p + 1))
    return false;
  const int i = (p + 1) / 2;  // p = 2i (upper odd) or p = 2i-1 (upper even)
  if (p % 2 == 0) {
    for (int j = 1; j <= i - 1; ++j)
      if (!(upper[j - 1] >= lower[j - 1] && lower[j - 1] >= upper[j])) return false;
    if (i >= 1 && !(upper[i - 1] >= lower[i - 1] && lower[i - 1] >= std::abs(upper[i]))) return false;
  } else {
    for (int j = 1; j <= i - 1; ++j)
      if (!(upper[j - 1] >= lower[j - 1] && lower[j - 1] >= upper[j])) return false;
    if (!(upper[i - 1] >= lower[i - 1] && lower[i - 1] >= -upper[i - 1])) return false;
  }
  return true;
}

// All rows p compatible with the given row p+1.
void lower_rows(int p, const std::vector<int>& upper, std::vector<std::vector<int>>& out) {
  const int len = row_length(p);
  std::vector<int> lo(len), hi(len);
  const int i = (p + 1) / 2;
  for (int j = 1; j <= len; ++j) {
    hi[j - 1] = upper[j - 1];
    if (p % 2 == 0) lo[j - 1] = j < i ? upper[j] : std::abs(upper[i]);
    else lo[j - 1] = j < i ? upper[j] : -upper[i - 1];
  }
  std::vector<int> cur(len);
  std::function<void(int)> rec = [&](int k) {
    if (k == len) {
      out.push_back(cur);
      return;
    }
    for (int v = lo[k]; v <= hi[k]; ++v) {
      cur[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
}

mpq_class half(long k) {
  mpq_class h(k, 2);
  h.canonicalize();
  return h;
}

Pattern extend(const Pattern& q, const Weight& top) {
  Pattern out = q;
  out.rows.push_back(top);
  return out;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Report make_report(std::string lemma, int n, const Weight& lambda, int ell, double residual, double tol) {
  Report r;
  r.lemma = std::move(lemma);
  r.n = n;
  r.lambda = lambda;
  r.ell = ell;
  r.max_residual = residual;
  r.tolerance = tol;
  r.pass = std::isfinite(residual) && residual < tol;
  return r;
}

Matrix diagonal(const std::vector<Complex>& d) {
  Matrix m = Matrix::Zero(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

}  // namespace

std::string Pattern::str() const {
  std::ostringstream os;
  for (std::size_t p = 0; p < rows.size(); ++p) {
    if (p) os << " | ";
    for (std::size_t j = 0; j < rows[p].size(); ++j) os << (j ? "," : "") << rows[p][j];
  }
  return os.str();
}

bool is_dominant(int N, const Weight& lambda) {
  const int k = N / 2;
  if (static_cast<int>(lambda.size()) != k) return false;
  if (k == 0) return true;
  for (int j = 0; j + 2 < k; ++j)
    if (lambda[j] < lambda[j + 1]) return false;
  if (N % 2 == 1) {
    if (k >= 2 && lambda[k - 2] < lambda[k - 1]) return false;
    return lambda[k - 1] >= 0;
  }
  if (k == 1) return true;
  return lambda[k - 2] >= std::abs(lambda[k - 1]);
}

bool is_valid(const Pattern& q) {
  const int rows = static_cast<int>(q.rows.size());
  for (int p = 1; p < rows; ++p)
    if (!interleaves(p, q.rows[p - 1], q.rows[p])) return false;
  return rows == 0 || static_cast<int>(q.rows.back().size()) == row_length(rows);
}

std::vector<Pattern> enumerate_patterns(int N, const Weight& lambda) {
  if (N < 1) throw std::invalid_argument("group size must be >= 1");
  if (!is_dominant(N, lambda)) throw std::invalid_argument("weight is not dominant for SO(" + std::to_string(N) + ")");
  std::vector<Pattern> out;
  if (N == 1) return {Pattern{}};
  std::function<void(int, Pattern&)> rec = [&](int p, Pattern& partial) {
    // partial.rows holds rows p+1 .. N-1 in reverse order
    if (p == 0) {
      Pattern q;
      q.rows.assign(partial.rows.rbegin(), partial.rows.rend());
      out.push_back(std::move(q));
      return;
    }
    std::vector<std::vector<int>> candidates;
    lower_rows(p, partial.rows.back(), candidates);
    for (auto& row : candidates) {
      partial.rows.push_back(row);
      rec(p - 1, partial);
      partial.rows.pop_back();
    }
  };
  Pattern partial;
  partial.rows.push_back(lambda);
  rec(N - 2, partial);
  std::sort(out.begin(), out.end());
  return out;
}

mpq_class l_value(const Pattern& q, int p, int j) {
  if (j == 0) {
    if (p % 2 != 0) throw std::out_of_range("l_{p,0} needs even p");
    return 0;
  }
  if (j < 0) return p % 2 ? mpq_class(-l_value(q, p, -j)) : mpq_class(1 - l_value(q, p, -j));
  if (p % 2) {
    const int i = (p + 1) / 2;
    return q.q(p, j) + i - j;
  }
  const int i = p / 2;
  return q.q(p, j) + i + 1 - j;
}

Pattern shifted(const Pattern& q, int p, int j) {
  Pattern out = q;
  if (j != 0) out.rows.at(p - 1).at(std::abs(j) - 1) += sgn(j);
  return out;
}

std::optional<mpq_class> a_squared(const Pattern& q, int p, int j) {
  const int N = q.group();
  if (p < 0 || p > N - 2) throw std::out_of_range("level out of range");
  const int i = p % 2 ? (p + 1) / 2 : p / 2;
  if (std::abs(j) > i || (p % 2 == 1 && j == 0)) throw std::out_of_range("shift index out of range");
  if (j != 0 && !is_valid(shifted(q, p, j))) return std::nullopt;

  // Row p of the SO(2) level p = 0 does not exist; l_{0,0} = 0.
  auto l = [&](int row, int k) { return l_value(q, row, k); };
  const mpq_class lj = p == 0 ? mpq_class(0) : l(p, j);
  mpq_class num = 1, den = 1;
  if (p % 2) {
    for (int k = 1; k <= i - 1; ++k) num *= (lj + l(p - 1, k)) * (lj + l(p - 1, -k));
    for (int k = 1; k <= i; ++k) num *= (lj + l(p + 1, k)) * (lj + l(p + 1, -k));
    den = 4;
    for (int k = 1; k <= i; ++k) {
      if (k == std::abs(j)) continue;
      for (int kk : {k, -k}) den *= (lj + l(p, kk)) * (lj + l(p, kk) + 1);
    }
  } else {
    for (int k = 1; k <= i; ++k) num *= (lj + l(p - 1, k)) * (lj + l(p - 1, -k));
    for (int k = 1; k <= i + 1; ++k) num *= (lj + l(p + 1, k)) * (lj + l(p + 1, -k));
    den = 4 * lj * lj - 1;
    if (j != 0) den *= lj * lj;  // k = 0
    for (int k = 1; k <= i; ++k) {
      if (k == std::abs(j)) continue;
      for (int kk : {k, -k}) den *= (lj + l(p, kk)) * (lj - l(p, kk));
    }
  }
  if (num == 0) return mpq_class(0);
  if (den == 0) throw std::logic_error("vanishing denominator in a_{" + std::to_string(p) + "," + std::to_string(j) + "} at " + q.str());
  return mpq_class(-num / den);
}

Complex a_coeff(const Pattern& q, int p, int j) {
  auto sq = a_squared(q, p, j);
  if (!sq || *sq == 0) return 0;
  int eps;
  if (j != 0) eps = sgn(j);
  else if (p == 0) eps = -sgn(q.q(1, 1));
  else eps = sgn(q.q(p - 1, p / 2)) * sgn(q.q(p + 1, p / 2 + 1));
  if (eps == 0) return 0;
  const double mag = std::sqrt(std::abs(sq->get_d()));
  if (j != 0) {
    if (sgn(*sq) < 0) throw std::logic_error("negative radicand for a shift coefficient at " + q.str());
    return Complex(eps * mag, 0);
  }
  if (sgn(*sq) > 0) throw std::logic_error("positive radicand for a diagonal coefficient at " + q.str());
  return Complex(0, eps * mag);
}

// ---------------------------------------------------------------------------
// RepAction

RepAction::RepAction(int N, Weight lambda) : N_(N), lambda_(std::move(lambda)) {
  detail::check_rank(N_);
  patterns_ = enumerate_patterns(N_, lambda_);
  for (int k = 0; k < dim(); ++k) index_.emplace(patterns_[k], k);
  const int D = dim();
  for (int p = 0; p <= N_ - 2; ++p) {
    Matrix m = Matrix::Zero(D, D);
    const int i = p % 2 ? (p + 1) / 2 : p / 2;
    for (int col = 0; col < D; ++col) {
      const Pattern& q = patterns_[col];
      for (int j = -i; j <= i; ++j) {
        if (j == 0 && p % 2) continue;
        Complex a = a_coeff(q, p, j);
        if (a == Complex(0)) continue;
        int row = index(shifted(q, p, j));
        if (row < 0) throw std::logic_error("shifted pattern missing from the basis");
        m(row, col) += a;
      }
    }
    mats_.emplace(Generator(p + 2, p + 1).letter(), std::move(m));
  }
  for (int j = 3; j <= N_; ++j)
    for (int i = j - 2; i >= 1; --i) {
      const Matrix& a = mats_.at(Generator(j, j - 1).letter());
      const Matrix& b = mats_.at(Generator(j - 1, i).letter());
      mats_.emplace(Generator(j, i).letter(), a * b - b * a);
    }
}

int RepAction::index(const Pattern& q) const {
  auto it = index_.find(q);
  return it == index_.end() ? -1 : it->second;
}

Matrix RepAction::represent(const Element& x, Complex u) const {
  if (x.max_index() > N_) throw std::invalid_argument("element does not lie in so_" + std::to_string(N_));
  const int D = dim();
  Matrix out = Matrix::Zero(D, D);
  for (const auto& [m, c] : x.terms()) {
    Matrix prod = Matrix::Identity(D, D);
    for (int l : m.letters()) prod = prod * mats_.at(l);
    out += c.eval(u) * prod;
  }
  return out;
}

double RepAction::bracket_residual() const {
  double worst = 0;
  for (int a = 1; a <= dimension(N_); ++a)
    for (int b = 1; b < a; ++b) {
      const Matrix& ma = mats_.at(a);
      const Matrix& mb = mats_.at(b);
      Matrix expect = represent(bracket_basis(N_, Generator::from_letter(a), Generator::from_letter(b)), 0);
      worst = std::max(worst, max_abs(ma * mb - mb * ma - expect));
    }
  return worst;
}

// ---------------------------------------------------------------------------
// Shift maps

std::vector<int> shift_indices(int n) {
  std::vector<int> out;
  const int top = (n - 1) / 2;
  for (int l = top; l >= 1; --l) out.push_back(l);
  if (n % 2 == 0) out.push_back(0);
  for (int l = 1; l <= top; ++l) out.push_back(-l);
  return out;
}

mpq_class u_of(int n, const Weight& lambda, int ell) {
  if (ell == 0) return 0;
  const int k = std::abs(ell);
  mpq_class base = lambda.at(k - 1) + half(n) - k;
  return ell > 0 ? base : mpq_class(1 - base);
}

namespace {

Weight plus_e(const Weight& lambda, int ell) {
  Weight out = lambda;
  if (ell != 0) out.at(std::abs(ell) - 1) += ell > 0 ? 1 : -1;
  return out;
}

bool embeds(int n, const Weight& tilde, const Weight& lambda, const Weight& target) {
  return is_dominant(n, tilde) && interleaves(n - 2, lambda, tilde) && interleaves(n - 2, target, tilde);
}

void check_ell(int n, int ell) {
  if (std::abs(ell) > (n - 1) / 2 || (ell == 0 && n % 2 == 1))
    throw std::invalid_argument("shift index " + std::to_string(ell) + " not allowed for so_" + std::to_string(n));
}

}  // namespace

Weight choose_lambda_tilde(int n, const Weight& lambda, int ell) {
  check_ell(n, ell);
  const int M = n / 2;
  const Weight target = plus_e(lambda, ell);
  Weight first;
  if (ell == 0) {
    first = lambda;
    first.at(0) += 1;
    first.push_back(lambda.back());
  } else {
    first = plus_e(lambda, ell > 0 ? ell : 1);
    first.resize(M, 0);
  }
  if (embeds(n, first, lambda, target)) return first;
  Weight canon(M, 0);
  for (int j = 0; j < M; ++j) {
    int a = j < static_cast<int>(lambda.size()) ? lambda[j] : 0;
    int b = j < static_cast<int>(target.size()) ? target[j] : 0;
    canon[j] = (j == M - 1 && n % 2 == 1) ? std::max(std::abs(a), std::abs(b)) : std::max(a, b);
  }
  if (embeds(n, canon, lambda, target)) return canon;
  throw std::invalid_argument("no SO(" + std::to_string(n) + ") weight embeds both lambda and lambda + e_ell");
}

ShiftData build_shift(int n, const Weight& lambda, int ell, std::optional<Weight> lambda_tilde) {
  check_ell(n, ell);
  const int N = n - 1;
  if (!is_dominant(N, lambda)) throw std::invalid_argument("weight is not dominant");
  ShiftData s;
  s.n = n;
  s.lambda = lambda;
  s.ell = ell;
  s.target = plus_e(lambda, ell);
  s.target_dominant = is_dominant(N, s.target);
  s.u_ell = u_of(n, lambda, ell);
  const auto source = enumerate_patterns(N, lambda);
  const int D = static_cast<int>(source.size());
  if (!s.target_dominant) {
    s.degenerate = true;
    s.varpi_plus = Matrix::Zero(0, D);
    s.varpi_minus = Matrix::Zero(D, 0);
    s.d = 1;
    return s;
  }
  if (lambda_tilde) {
    if (!embeds(n, *lambda_tilde, lambda, s.target))
      throw std::invalid_argument("given embedding weight does not interleave lambda and lambda + e_ell");
    s.lambda_tilde = *lambda_tilde;
  } else {
    s.lambda_tilde = choose_lambda_tilde(n, lambda, ell);
  }
  const auto dest = enumerate_patterns(N, s.target);
  std::map<Pattern, int> src_index, dst_index;
  for (int k = 0; k < D; ++k) src_index.emplace(source[k], k);
  for (int k = 0; k < static_cast<int>(dest.size()); ++k) dst_index.emplace(dest[k], k);

  s.varpi_plus = Matrix::Zero(dest.size(), D);
  s.varpi_minus = Matrix::Zero(D, dest.size());
  for (int k = 0; k < D; ++k) {
    Pattern qt = extend(source[k], s.lambda_tilde);
    Complex a = a_coeff(qt, n - 2, ell);
    if (a == Complex(0)) continue;
    Pattern to = shifted(source[k], n - 2, ell);
    s.varpi_plus(dst_index.at(to), k) = a;
  }
  for (int k = 0; k < static_cast<int>(dest.size()); ++k) {
    Pattern qt = extend(dest[k], s.lambda_tilde);
    Complex a = a_coeff(qt, n - 2, -ell);
    if (a == Complex(0)) continue;
    Pattern to = shifted(dest[k], n - 2, -ell);
    s.varpi_minus(src_index.at(to), k) = a;
  }
  s.degenerate = max_abs(s.varpi_plus) == 0;
  if (s.degenerate) {
    s.d = 1;
    return s;
  }

  bool have = false;
  for (int k = 0; k < D; ++k) {
    const Pattern& q = source[k];
    mpq_class prod = 1;
    const mpq_class ll = ell == 0 ? mpq_class(0) : l_value(q, n - 2, ell);
    for (int i = 1; i <= (n - 2) / 2; ++i) prod *= (ll + l_value(q, n - 3, i)) * (ll + l_value(q, n - 3, -i));
    if (prod == 0) continue;
    Pattern qt = extend(q, s.lambda_tilde);
    Complex a = a_coeff(qt, n - 2, ell);
    Complex b = a_coeff(extend(shifted(q, n - 2, ell), s.lambda_tilde), n - 2, -ell);
    Complex dq = -(a * b) / prod.get_d();
    if (!have) {
      s.d = dq;
      have = true;
    } else {
      s.d_spread = std::max(s.d_spread, std::abs(dq - s.d));
    }
  }
  if (!have) throw std::logic_error("no pattern determines d");
  return s;
}

mpq_class c_action_exact(const Pattern& q, const mpq_class& u, int n) {
  mpq_class out = 1;
  for (int i = 1; i <= (n - 2) / 2; ++i) {
    mpq_class t = q.q(n - 3, i) + half(n - 2 - 2 * i);
    out *= u * u - t * t;
  }
  return out;
}

double c_action_scalar(const Pattern& q, const mpq_class& u, int n) { return c_action_exact(q, u, n).get_d(); }

// ---------------------------------------------------------------------------
// Verifications

namespace {

struct LemmaContext {
  ShiftData s;
  std::unique_ptr<RepAction> src;
  std::unique_ptr<RepAction> dst;
  Matrix c_diag;  // c_action_scalar on GT(lambda)
  Matrix c_sym;   // symbolic C_{n-2}(u_ell) on V_lambda
  mpq_class l;    // l_{n-2,ell}

  LemmaContext(int n, const Weight& lambda, int ell, std::optional<Weight> tilde = std::nullopt)
      : s(build_shift(n, lambda, ell, std::move(tilde))) {
    src = std::make_unique<RepAction>(n - 1, lambda);
    if (!s.degenerate) dst = std::make_unique<RepAction>(n - 1, s.target);
    std::vector<Complex> diag;
    for (const auto& q : src->patterns()) diag.emplace_back(c_action_scalar(q, s.u_ell, n));
    c_diag = diagonal(diag);
    l = ell == 0 ? mpq_class(0) : l_value(src->patterns().front(), n - 2, ell);
  }

  const Matrix& c_symbolic() {
    if (c_sym.size() == 0) {
      const int n = s.n;
      c_sym = src->represent(embed_shift(build_C(n - 2), n - 2, n - 1), Complex(s.u_ell.get_d(), 0));
    }
    return c_sym;
  }
};

}  // namespace

Report verify_pipi(int n, const Weight& lambda, int ell, double tol, std::optional<Weight> lambda_tilde) {
  LemmaContext ctx(n, lambda, ell, std::move(lambda_tilde));
  double res;
  if (ctx.s.degenerate) {
    res = max_abs(ctx.c_diag);
  } else {
    Matrix mp = ctx.s.varpi_minus * ctx.s.varpi_plus;
    res = max_abs(mp + ctx.s.d * ctx.c_diag);
  }
  return make_report("pipi", n, lambda, ell, res, tol);
}

Report verify_noX(int n, const Weight& lambda, int ell, double tol) {
  LemmaContext ctx(n, lambda, ell);
  double res;
  if (ctx.s.degenerate) {
    res = max_abs(ctx.c_diag);
  } else {
    const Matrix mp = ctx.s.varpi_minus * ctx.s.varpi_plus;
    const double alpha = -ctx.l.get_d() - (n - 1) / 2;
    const double beta = ctx.l.get_d() - (n - 2) / 2;
    const double rho = (n - 2) / 2.0;
    const double u = ctx.s.u_ell.get_d();
    const Complex d = ctx.s.d;
    const Matrix& c = ctx.c_diag;
    res = max_abs(mp + d * c);
    res = std::max(res, max_abs((alpha + beta) * mp - d * (n - 2.0) * c));
    res = std::max(res, max_abs(alpha * beta * mp + d * (rho * rho - u * u) * c));
  }
  return make_report("noX", n, lambda, ell, res, tol);
}

Report verify_X2(int n, const Weight& lambda, int ell, double tol) {
  LemmaContext ctx(n, lambda, ell);
  const Matrix& c = ctx.c_symbolic();
  double res = 0;
  if (ctx.s.degenerate) {
    res = max_abs(c);
  } else {
    const Matrix& P = ctx.s.varpi_plus;
    const Matrix& M = ctx.s.varpi_minus;
    std::vector<Matrix> pa, ma, a;
    for (int i = 1; i <= n - 2; ++i) {
      const Matrix& as = ctx.src->matrix(Generator(n - 1, i));
      const Matrix& at = ctx.dst->matrix(Generator(n - 1, i));
      pa.push_back(P * as - at * P);
      ma.push_back(M * at - as * M);
      a.push_back(as);
    }
    const int D = ctx.src->dim();
    for (int i = 0; i < n - 2; ++i)
      for (int j = 0; j < n - 2; ++j) {
        Matrix lhs = ma[i] * pa[j] + ma[j] * pa[i];
        Matrix inner = a[j] * c - c * a[j];
        Matrix nested = a[i] * inner - inner * a[i];
        Matrix rhs = -ctx.s.d * ((i == j ? 2.0 : 0.0) * c + nested);
        res = std::max(res, max_abs(lhs - rhs));
        (void)D;
      }
  }
  return make_report("X2", n, lambda, ell, res, tol);
}

Report verify_X1(int n, const Weight& lambda, int ell, double tol) {
  LemmaContext ctx(n, lambda, ell);
  const Matrix& c = ctx.c_symbolic();
  double res = 0;
  if (ctx.s.degenerate) {
    res = max_abs(c);
  } else {
    const Matrix& P = ctx.s.varpi_plus;
    const Matrix& M = ctx.s.varpi_minus;
    const Matrix omega = ctx.src->represent(casimir_omega(n - 1, n - 2), 0);
    const double l = ctx.l.get_d();
    const double c1 = -l - (n - 3) / 2;
    const double c2 = l - (n - 2) / 2;
    const Complex d = ctx.s.d;
    for (int i = 1; i <= n - 2; ++i) {
      const Matrix& as = ctx.src->matrix(Generator(n - 1, i));
      const Matrix& at = ctx.dst->matrix(Generator(n - 1, i));
      Matrix l1 = M * (P * as - at * P);
      Matrix l2 = (M * at - as * M) * P;
      Matrix ac = as * c - c * as;
      Matrix h1 = l1 + l2 - d * ac;
      Matrix rhs0 = d * (-(n - 5) / 2.0 * ac - 2.0 * as * c + 0.5 * (omega * ac - ac * omega));
      Matrix h0 = c1 * l1 + c2 * l2 - rhs0;
      res = std::max({res, max_abs(h1), max_abs(h0)});
    }
  }
  return make_report("X1", n, lambda, ell, res, tol);
}

namespace {

Complex eval_hpoly(const HPoly& p, const std::vector<Complex>& vars) {
  Complex out = 0;
  for (const auto& [exps, c] : p.terms()) {
    Complex term = c.eval(Complex(0));
    for (std::size_t k = 0; k < exps.size(); ++k) term *= std::pow(vars.at(k), exps[k]);
    out += term;
  }
  return out;
}

// H = 0 and T_i - rho_i on the vector of rows idx killed by every U_neg, the
// point where the rho-shifted image gives the action.
std::vector<Complex> block_weight(const RepAction& rep, const TriangularBasis& tb, const std::vector<int>& idx) {
  const int b = static_cast<int>(idx.size());
  auto block = [&](const Element& x) {
    Matrix full = rep.represent(x, 0);
    Matrix out(b, b);
    for (int r = 0; r < b; ++r)
      for (int c = 0; c < b; ++c) out(r, c) = full(idx[r], idx[c]);
    return out;
  };
  Matrix stacked(b * static_cast<int>(tb.U_neg.size()), b);
  for (std::size_t k = 0; k < tb.U_neg.size(); ++k) stacked.block(k * b, 0, b, b) = block(tb.U_neg[k]);
  Eigen::VectorXcd v;
  if (stacked.rows() == 0) {
    v = Eigen::VectorXcd::Zero(b);
    v(0) = 1;
  } else {
    Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
    v = svd.matrixV().col(b - 1);
  }
  std::vector<Complex> out{0};
  const int n = tb.rank;
  for (std::size_t i = 1; i <= tb.T.size(); ++i)
    out.push_back(v.dot(block(tb.T[i - 1]) * v) / v.squaredNorm() - (n - 2.0 - 2.0 * i) / 2);
  return out;
}

}  // namespace

Report verify_pf_shift(int m, const Weight& lambda, double tol) {
  if (m < 2) throw std::invalid_argument("Pfaffian shift check needs m >= 2");
  const int n = 2 * m;
  ShiftData s = build_shift(n, lambda, 0);
  RepAction rep(n - 1, lambda);
  double res = 0;
  std::optional<Complex> ratio;
  std::vector<Complex> prods;
  const Complex im(0, 1);
  for (const auto& q : rep.patterns()) {
    mpq_class prod = 1;
    for (int i = 1; i <= m - 1; ++i) prod *= l_value(q, 2 * m - 3, i);
    prods.push_back(prod.get_d());
    const Pattern qt = extend(q, s.lambda_tilde);
    const Complex a = a_coeff(qt, 2 * m - 2, 0);
    if (prod == 0) {
      res = std::max(res, std::abs(a));
      continue;
    }
    const Complex r = a / prod.get_d();
    if (!ratio) ratio = r;
    res = std::max(res, std::abs(r - *ratio));
    // a_{2m-2,0} = i prod l_{2m-3,i} prod l_{2m-1,i} / prod l_{2m-2,k}(l_{2m-2,k} - 1)
    mpq_class top = 1, bottom = 1;
    for (int i = 1; i <= m; ++i) top *= l_value(qt, 2 * m - 1, i);
    for (int k = 1; k <= m - 1; ++k) {
      mpq_class lk = l_value(qt, 2 * m - 2, k);
      bottom *= lk * (lk - 1);
    }
    if (bottom != 0) res = std::max(res, std::abs(r - im * mpq_class(top / bottom).get_d()));
  }

  // opp(PF_{2m-2}) is scalar on each SO(2m-2) block; the scalar is its gamma_u
  // image at the block's highest weight, and equals kappa prod l_{2m-3,i}
  // with kappa = +-i^{m-1} fixed over all blocks.
  const Element pf_opp = embed_shift(opp(build_PF(m - 1)), 2 * m - 2, n);
  const HPoly image = gamma_u(pf_opp);
  const auto& tb = build_triangular(n);
  Matrix pf = rep.represent(pf_opp, 0);
  std::map<std::vector<int>, std::vector<int>> blocks;
  for (int k = 0; k < rep.dim(); ++k) blocks[rep.patterns()[k].rows.at(2 * m - 4)].push_back(k);
  const Complex unit = std::pow(im, m - 1);
  std::optional<Complex> kappa;
  std::vector<Complex> diag(rep.dim());
  for (const auto& [row, idx] : blocks) {
    const Complex scalar = eval_hpoly(image, block_weight(rep, tb, idx));
    const Complex p = prods[idx.front()];
    if (!kappa && std::abs(p) > 0.5) kappa = std::abs(scalar / p - unit) < std::abs(scalar / p + unit) ? unit : -unit;
    for (int k : idx) diag[k] = scalar;
  }
  res = std::max(res, max_abs(pf - diagonal(diag)));
  if (kappa)
    for (int k = 0; k < rep.dim(); ++k) res = std::max(res, std::abs(diag[k] - *kappa * prods[k]));
  return make_report("pf_shift", n, lambda, 0, res, tol);
}

Report verify_casimir(int N, const Weight& lambda, double tol) {
  RepAction rep(N, lambda);
  Matrix sum = Matrix::Zero(rep.dim(), rep.dim());
  for (int a = 1; a <= dimension(N); ++a) {
    const Matrix& m = rep.matrix(Generator::from_letter(a));
    sum += m * m;
  }
  mpq_class scalar = 0;
  for (int i = 1; i <= N / 2; ++i) {
    mpq_class rho = half(N) - i;
    mpq_class v = lambda[i - 1] + rho;
    scalar += rho * rho - v * v;
  }
  Matrix expect = Matrix::Identity(rep.dim(), rep.dim()) * scalar.get_d();
  return make_report("casimir", N + 1, lambda, 0, max_abs(sum - expect), tol);
}

Report verify_brackets(int N, const Weight& lambda, double tol) {
  RepAction rep(N, lambda);
  return make_report("brackets", N + 1, lambda, 0, rep.bracket_residual(), tol);
}

Report verify_c_action(int n, const Weight& lambda, const mpq_class& u, double tol) {
  RepAction rep(n - 1, lambda);
  Matrix c = rep.represent(embed_shift(build_C(n - 2), n - 2, n - 1), Complex(u.get_d(), 0));
  std::vector<Complex> diag;
  for (const auto& q : rep.patterns()) diag.emplace_back(c_action_scalar(q, u, n));
  return make_report("c_action", n, lambda, 0, max_abs(c - diagonal(diag)), tol);
}

}  // namespace socenter::gt
