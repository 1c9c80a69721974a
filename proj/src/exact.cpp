#include "socenter/exact.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace socenter {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long p, long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  return {r, 0};
}

GaussianRational GaussianRational::inverse() const {
  mpq_class norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw std::domain_error("inverse of zero");
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator*=(long k) {
  re_ *= k;
  im_ *= k;
  return *this;
}

std::array<std::string, 4> GaussianRational::to_strings() const {
  return {re_.get_num().get_str(), re_.get_den().get_str(), im_.get_num().get_str(),
          im_.get_den().get_str()};
}

GaussianRational GaussianRational::from_strings(const std::array<std::string, 4>& parts) {
  mpz_class rn(parts[0]), rd(parts[1]), in(parts[2]), id(parts[3]);
  if (sgn(rd) <= 0 || sgn(id) <= 0) throw std::invalid_argument("denominators must be positive");
  return {mpq_class(rn, rd), mpq_class(in, id)};
}

std::string GaussianRational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  const bool has_re = sgn(z.re()) != 0;
  const bool has_im = sgn(z.im()) != 0;
  if (!has_im) return os << z.re();
  if (!has_re) {
    if (z.im() == 1) return os << "i";
    if (z.im() == -1) return os << "-i";
    return os << z.im() << "i";
  }
  os << "(" << z.re() << (sgn(z.im()) > 0 ? "+" : "-");
  mpq_class a = abs(z.im());
  if (a != 1) os << a;
  return os << "i)";
}

// ---------------------------------------------------------------------------

UPoly::UPoly(GaussianRational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int power, GaussianRational c) {
  if (power < 0) throw std::invalid_argument("negative power");
  if (c.is_zero()) return {};
  std::vector<GaussianRational> v(power + 1);
  v[power] = std::move(c);
  UPoly p;
  p.coeffs_ = std::move(v);
  return p;
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational UPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[power];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t x = 0; x < a.coeffs_.size(); ++x) {
    if (a.coeffs_[x].is_zero()) continue;
    for (size_t y = 0; y < b.coeffs_.size(); ++y) {
      if (b.coeffs_[y].is_zero()) continue;
      out[x + y] += a.coeffs_[x] * b.coeffs_[y];
    }
  }
  return UPoly(std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

void UPoly::add_scaled(const UPoly& p, long k) {
  if (k == 0 || p.is_zero()) return;
  if (p.coeffs_.size() > coeffs_.size()) coeffs_.resize(p.coeffs_.size());
  for (size_t x = 0; x < p.coeffs_.size(); ++x) {
    const auto& c = p.coeffs_[x];
    if (c.is_zero()) continue;
    GaussianRational t = c;
    t *= k;
    coeffs_[x] += t;
  }
  trim();
}

void UPoly::add_scaled(const UPoly& p, const GaussianRational& c) {
  if (c.is_zero() || p.is_zero()) return;
  if (p.coeffs_.size() > coeffs_.size()) coeffs_.resize(p.coeffs_.size());
  for (size_t x = 0; x < p.coeffs_.size(); ++x) {
    if (p.coeffs_[x].is_zero()) continue;
    coeffs_[x] += p.coeffs_[x] * c;
  }
  trim();
}

GaussianRational UPoly::eval(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

std::complex<double> UPoly::eval(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

std::vector<std::pair<int, GaussianRational>> UPoly::sparse() const {
  std::vector<std::pair<int, GaussianRational>> out;
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) out.emplace_back(static_cast<int>(k), coeffs_[k]);
  return out;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (!c.is_one()) os << c << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix r(rows_, o.cols_);
  for (int a = 0; a < rows_; ++a)
    for (int k = 0; k < cols_; ++k) {
      const auto& x = (*this)(a, k);
      if (x.is_zero()) continue;
      for (int b = 0; b < o.cols_; ++b)
        if (!o(k, b).is_zero()) r(a, b) += x * o(k, b);
    }
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix r = *this;
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix r = *this;
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational& c) const {
  ExactMatrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& x) { return x.is_zero(); });
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(ExactMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    GaussianRational inv = m(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      GaussianRational f = m(r, col);
      for (int c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int ExactMatrix::rank() const {
  ExactMatrix m = *this;
  return static_cast<int>(row_reduce(m).size());
}

std::vector<std::vector<GaussianRational>> ExactMatrix::nullspace() const {
  ExactMatrix m = *this;
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<GaussianRational>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussianRational> v(cols_);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix ExactMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
  const int n = rows_;
  ExactMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = row_reduce(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
    throw std::domain_error("singular matrix");
  ExactMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace socenter
