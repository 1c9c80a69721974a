#ifndef SOCENTER_EXACT_HPP
#define SOCENTER_EXACT_HPP

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace socenter {

/// Element of Q(i), stored as two canonical GMP rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re, long im) : re_(re), im_(im) {}
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }
  /// p/q + 0i; q must be nonzero.
  static GaussianRational fraction(long p, long q);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;
  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator*=(long k);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// {re_num, re_den, im_num, im_den} as decimal strings.
  std::array<std::string, 4> to_strings() const;
  static GaussianRational from_strings(const std::array<std::string, 4>& parts);

  std::string str() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Dense polynomial in the central indeterminate u over Q(i), lowest power first.
/// The zero polynomial is the empty coefficient sequence.
class UPoly {
 public:
  UPoly() = default;
  UPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<GaussianRational> coeffs);

  /// The monomial c * u^power.
  static UPoly monomial(int power, GaussianRational c = 1);
  static UPoly u() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  GaussianRational coeff(int power) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const GaussianRational& c);

  /// this += k * p, in place.
  void add_scaled(const UPoly& p, long k);
  void add_scaled(const UPoly& p, const GaussianRational& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  GaussianRational eval(const GaussianRational& z) const;
  std::complex<double> eval(std::complex<double> z) const;

  /// Non-zero coefficients as (power, value) pairs.
  std::vector<std::pair<int, GaussianRational>> sparse() const;

  std::string str(const std::string& var = "u") const;

 private:
  void trim();

  std::vector<GaussianRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UPoly& p);

/// Dense matrix over Q(i), used for change-of-basis and eigenspace computations.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussianRational& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(int r, int c) const { return data_[r * cols_ + c]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix scaled(const GaussianRational& c) const;
  bool is_zero() const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  int rank() const;
  /// Basis of the right null space, one column vector per entry.
  std::vector<std::vector<GaussianRational>> nullspace() const;
  /// Throws std::domain_error when singular.
  ExactMatrix inverse() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<GaussianRational> data_;
};

}  // namespace socenter

#endif  // SOCENTER_EXACT_HPP
