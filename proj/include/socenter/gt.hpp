#ifndef SOCENTER_GT_HPP
#define SOCENTER_GT_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "socenter/uea.hpp"

namespace socenter::gt {

using Weight = std::vector<int>;
using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Rows q_1 .. q_{N-1} of a Gelfand-Tsetlin pattern for SO(N); rows[p-1] is
/// q_p with floor((p+1)/2) entries and the last row is the highest weight.
struct Pattern {
  std::vector<std::vector<int>> rows;

  int group() const { return static_cast<int>(rows.size()) + 1; }
  int q(int p, int j) const { return rows.at(p - 1).at(j - 1); }
  friend bool operator<(const Pattern& a, const Pattern& b) { return a.rows < b.rows; }
  friend bool operator==(const Pattern& a, const Pattern& b) { return a.rows == b.rows; }
  std::string str() const;
};

/// floor(N/2) entries; non-increasing, last entry >= 0 for odd N and
/// |last| <= previous for even N.
bool is_dominant(int N, const Weight& lambda);
bool is_valid(const Pattern& q);
/// Sorted lexicographically on the rows q_1, q_2, ...; throws on non-dominant input.
std::vector<Pattern> enumerate_patterns(int N, const Weight& lambda);

/// l_{p,j} with the signed-index conventions; j = 0 only for even p.
mpq_class l_value(const Pattern& q, int p, int j);

/// q with row p moved by sgn(j) at position |j|; no validity check.
Pattern shifted(const Pattern& q, int p, int j);

/// The squared coefficient a_{p,j}(Q)^2 as an exact rational (the radicand
/// with its leading minus), or nullopt when sigma_{p,j} Q is not a pattern.
/// p = 0 is the SO(2) level.
std::optional<mpq_class> a_squared(const Pattern& q, int p, int j);
/// a_{p,j}(Q); zero when sigma_{p,j} Q is invalid.
Complex a_coeff(const Pattern& q, int p, int j);

/// Matrices of every generator of so_N on V_lambda in the pattern basis.
class RepAction {
 public:
  RepAction(int N, Weight lambda);

  int group() const { return N_; }
  const Weight& lambda() const { return lambda_; }
  int dim() const { return static_cast<int>(patterns_.size()); }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  /// Index of a pattern, or -1.
  int index(const Pattern& q) const;
  const Matrix& matrix(Generator g) const { return mats_.at(g.letter()); }
  /// Sum of terms evaluated at u, pushed through the representation.
  Matrix represent(const Element& x, Complex u) const;
  /// max-norm of [tau(a), tau(b)] - tau([a, b]) over all pairs.
  double bracket_residual() const;

 private:
  int N_;
  Weight lambda_;
  std::vector<Pattern> patterns_;
  std::map<Pattern, int> index_;
  std::map<int, Matrix> mats_;
};

/// Data attached to the shift V_lambda -> V_{lambda + e_ell} for so_n with
/// K = SO(n-1).
struct ShiftData {
  int n = 0;
  Weight lambda;
  int ell = 0;
  Weight lambda_tilde;
  Weight target;        // lambda + e_ell
  bool target_dominant = false;
  mpq_class u_ell;
  Matrix varpi_plus;    // GT(lambda) -> GT(target)
  Matrix varpi_minus;   // GT(target) -> GT(lambda)
  bool degenerate = false;  // varpi_plus is the zero map
  Complex d = 0;
  double d_spread = 0;  // max |d(Q) - d(Q0)|
};

/// Default embedding weight for SO(n); throws std::invalid_argument when no
/// dominant SO(n) weight interleaves both lambda and lambda + e_ell.
Weight choose_lambda_tilde(int n, const Weight& lambda, int ell);

ShiftData build_shift(int n, const Weight& lambda, int ell, std::optional<Weight> lambda_tilde = std::nullopt);

/// prod_i (u^2 - (q_{n-3,i} + (n-2-2i)/2)^2) for an SO(n-1) pattern.
mpq_class c_action_exact(const Pattern& q, const mpq_class& u, int n);
double c_action_scalar(const Pattern& q, const mpq_class& u, int n);

/// Definition of u_ell for so_n.
mpq_class u_of(int n, const Weight& lambda, int ell);

struct Report {
  std::string lemma;
  int n = 0;
  Weight lambda;
  int ell = 0;
  double max_residual = 0;
  double tolerance = 0;
  bool pass = false;
};

Report verify_pipi(int n, const Weight& lambda, int ell, double tol = 1e-9,
                   std::optional<Weight> lambda_tilde = std::nullopt);
Report verify_noX(int n, const Weight& lambda, int ell, double tol = 1e-9);
Report verify_X2(int n, const Weight& lambda, int ell, double tol = 1e-8);
Report verify_X1(int n, const Weight& lambda, int ell, double tol = 1e-8);
/// n = 2m, lambda an SO(2m-1) weight.
Report verify_pf_shift(int m, const Weight& lambda, double tol = 1e-10);

/// Casimir check: sum tau(A)^2 against -|lambda+rho|^2 + |rho|^2.
Report verify_casimir(int N, const Weight& lambda, double tol = 1e-10);
/// Bracket relations of rep_matrices.
Report verify_brackets(int N, const Weight& lambda, double tol = 1e-9);
/// Symbolic C_{n-2}(u) pushed through tau_lambda against c_action_scalar.
Report verify_c_action(int n, const Weight& lambda, const mpq_class& u, double tol = 1e-8);

/// All shift indices for so_n: +-1..+-floor((n-1)/2), plus 0 for even n.
std::vector<int> shift_indices(int n);

}  // namespace socenter::gt

#endif  // SOCENTER_GT_HPP
