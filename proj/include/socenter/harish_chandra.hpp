#ifndef SOCENTER_HARISH_CHANDRA_HPP
#define SOCENTER_HARISH_CHANDRA_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "socenter/uea.hpp"

namespace socenter {

/// An ordered basis Y_1..Y_k of a subalgebra of complexified so_n spanned by
/// a set of primary generators (the ambient letters). Columns of `change`
/// are the Y's in ambient coordinates; the matrix is square and invertible.
class LieBasis {
 public:
  LieBasis(int n, std::vector<int> ambient, ExactMatrix change, std::vector<std::string> names);

  int rank() const { return n_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<int>& ambient() const { return ambient_; }
  const ExactMatrix& change() const { return change_; }
  const std::string& name(int letter) const { return names_.at(letter - 1); }

  /// Y_letter as an element of U(so_n).
  Element element(int letter) const;
  /// A primary generator expanded in this basis; throws if not in the span.
  const std::vector<std::pair<int, GaussianRational>>& image(int primary_letter) const;
  std::shared_ptr<const BracketTable<GaussianRational>> brackets() const { return brackets_; }

  /// PBW expansion of x in this basis. When `drop_lo <= drop_hi`, monomials
  /// touching letters in [drop_lo, drop_hi] are discarded as they appear.
  /// `from_right` multiplies letters in from the right end of each word
  /// (valid pruning for a trailing block), otherwise from the left end
  /// (valid pruning for a leading block).
  Terms expand(const Element& x, bool from_right, int drop_lo = 1, int drop_hi = 0) const;
  /// Inverse of expand without pruning.
  Element collapse(const Terms& terms) const;

 private:
  std::vector<GaussianRational> coordinates(const std::vector<GaussianRational>& ambient_vec) const;

  int n_;
  std::vector<int> ambient_;
  ExactMatrix change_;
  ExactMatrix inverse_;
  std::vector<std::string> names_;
  std::map<int, std::vector<std::pair<int, GaussianRational>>> images_;
  std::shared_ptr<const BracketTable<GaussianRational>> brackets_;
};

/// n + (m + a) + nbar and its refinement u + t_m + ubar of m = so_{n-2}.
struct TriangularBasis {
  int rank = 0;
  Element H;
  std::vector<Element> X;
  std::vector<Element> Xbar;
  std::vector<Element> T;  // T_i = i A_{n-2i, n-1-2i}
  std::vector<Element> U_pos;
  std::vector<Element> U_neg;
  std::vector<std::vector<int>> pos_weights;  // ad T eigenvalues of U_pos
  /// Columns: X, U_pos, H, T, U_neg, Xbar in primary coordinates.
  ExactMatrix change_of_basis;

  /// X < m (primary order) < H < Xbar
  std::unique_ptr<LieBasis> n_order;
  /// U_pos < H < T < U_neg, spanning m + a
  std::unique_ptr<LieBasis> u_order;
  /// X < H < k (primary order)
  std::unique_ptr<LieBasis> p_order;
};

/// Cached per rank; n >= 2.
const TriangularBasis& build_triangular(int n);

/// Polynomial in the commuting variables H, T_1..T_r with UPoly coefficients.
class HPoly {
 public:
  explicit HPoly(int r = 0) : r_(r) {}
  static HPoly constant(int r, const UPoly& c);
  /// Variable k: 0 is H, k >= 1 is T_k.
  static HPoly variable(int r, int k);

  int num_cartan() const { return r_; }
  int num_vars() const { return r_ + 1; }
  std::vector<std::string> var_names() const;
  const std::map<std::vector<int>, UPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const std::vector<int>& exps, const UPoly& c);

  HPoly operator-() const;
  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  friend HPoly operator*(HPoly a, const UPoly& c);
  friend bool operator==(const HPoly& a, const HPoly& b) { return a.r_ == b.r_ && a.terms_ == b.terms_; }
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

  /// var -> var + c
  HPoly shifted(int var, const GaussianRational& c) const;
  /// var -> -var
  HPoly negated_var(int var) const;
  HPoly swapped(int a, int b) const;
  HPoly specialize(const GaussianRational& u) const;

  std::string str() const;

 private:
  int r_;
  std::map<std::vector<int>, UPoly> terms_;
};

/// Projection along n U(g) + U(g) nbar onto U(m + a), then H -> H + (n-2)/2.
Element gamma_n(const Element& x);
/// Projection of x in U(m + a) along u U + U ubar onto U(h), then
/// T_i -> T_i + (n-2-2i)/2. Throws std::invalid_argument on other letters.
HPoly gamma_u(const Element& x);
HPoly gamma(const Element& x);

/// p(x) as sum_a H^a K_a with K_a in U(k).
struct PProjection {
  int rank = 0;
  std::map<int, Element> parts;

  Element to_element() const;
  PProjection rho_shifted(const GaussianRational& c) const;
  /// Drops K_a monomials that involve an index n-1 generator.
  PProjection restricted_to_m() const;
};

/// Projection along n U(g) onto U(a) U(k); no shift.
PProjection projection_p(const Element& x);

/// sum_a c_a H^a as an Element of rank n (H = i A_{n,n-1}).
Element h_power_element(int n, const std::map<int, UPoly>& coeffs);

}  // namespace socenter

#endif  // SOCENTER_HARISH_CHANDRA_HPP
