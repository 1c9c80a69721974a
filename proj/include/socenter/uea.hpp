#ifndef SOCENTER_UEA_HPP
#define SOCENTER_UEA_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "socenter/exact.hpp"
#include "socenter/pbw.hpp"

namespace socenter {

/// Largest supported rank: so_8 has 28 basis elements, the packing limit is 31.
constexpr int kMaxRank = 8;

/// The basis element A_{j,i} = E_{j,i} - E_{i,j} of so_n, always with i < j.
struct Generator {
  int j = 0;
  int i = 0;

  /// Throws std::invalid_argument unless 1 <= i < j <= kMaxRank.
  Generator(int j, int i);
  Generator() = default;

  /// Position in the lexicographic order on (j, i), starting at 1.
  int letter() const { return (j - 1) * (j - 2) / 2 + i; }
  static Generator from_letter(int letter);

  friend bool operator==(Generator a, Generator b) { return a.j == b.j && a.i == b.i; }
  friend bool operator<(Generator a, Generator b) { return a.letter() < b.letter(); }
  std::string str() const;
};

/// Number of generators of so_n.
constexpr int dimension(int n) { return n * (n - 1) / 2; }

/// Sparse linear combination of PBW monomials with coefficients in Q(i)[u].
using Terms = std::vector<std::pair<Monomial, UPoly>>;

/// Mutable accumulator used while building Terms.
class TermAccumulator {
 public:
  void add(Monomial m, const UPoly& c);
  void add_scaled(Monomial m, const UPoly& c, long k);
  void add_scaled(Monomial m, const UPoly& c, const GaussianRational& k);
  /// Sorted, zero-free.
  Terms finish() &&;
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<Monomial, UPoly, MonomialHash> map_;
};

/// An element of U(so_n) in PBW normal form for the lexicographic order on
/// the generators A_{j,i}. Terms are sorted by monomial and never zero.
class Element {
 public:
  Element() = default;
  explicit Element(int rank) : rank_(rank) {}
  /// Adopts terms that are already sorted, zero-free and PBW-normal.
  Element(int rank, Terms terms);

  static Element scalar(int rank, const UPoly& c);
  static Element one(int rank) { return scalar(rank, 1); }

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a monomial (zero if absent).
  UPoly coeff(Monomial m) const;
  /// Largest word length.
  int degree() const;
  /// Largest power of u.
  int u_degree() const;
  /// Largest generator index j appearing (0 for scalars).
  int max_index() const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const UPoly& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const UPoly& c) { return a *= c; }
  friend Element operator*(const UPoly& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Human-readable form, e.g. "u^2 + A[2,1]^2".
  std::string str() const;

 private:
  int rank_ = 0;
  Terms terms_;
};

/// A word of generators with a coefficient; not necessarily ordered.
struct Word {
  std::vector<Generator> letters;
  UPoly coeff = 1;
};

/// A_{j,i} for j > i, -A_{i,j} for j < i.
Element gen(int n, int j, int i);
Element gen(int n, Generator g);

/// [A_{g1}, A_{g2}] from the matrix realization.
Element bracket_basis(int n, Generator g1, Generator g2);
/// Cached structure constants for rank n (letters 1..dim(n)).
std::shared_ptr<const BracketTable<long>> structure_constants(int n);

/// PBW normal form of a sum of arbitrary words.
Element normal_form(int n, const std::vector<Word>& words);
/// Re-straightens x; identity on normal elements.
Element normal_form(const Element& x);

Element add(const Element& x, const Element& y);
Element multiply(const Element& x, const Element& y);
Element commutator(const Element& x, const Element& y);
/// [A_g, x], cheaper than the general commutator.
Element commutator(Generator g, const Element& x);

/// Antiautomorphism Y_1...Y_p -> (-Y_p)...(-Y_1).
Element opp(const Element& x);

/// sum_{1 <= i < j <= k} A_{j,i}^2 at rank n.
Element casimir_omega(int n, int k);

/// Reinterprets x, which must only involve indices <= n_from, at rank n_to.
Element embed_shift(const Element& x, int n_from, int n_to);

/// Upper bound on memo entries kept by each thread's straightener.
void set_straightener_cache_limit(std::size_t entries);
std::size_t straightener_cache_limit();

/// Substitutes a value for u.
Element specialize(const Element& x, const GaussianRational& u);

namespace detail {
Straightener<long>& thread_straightener(int n);
void check_rank(int n);
}  // namespace detail

}  // namespace socenter

#endif  // SOCENTER_UEA_HPP
