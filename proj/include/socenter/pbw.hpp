#ifndef SOCENTER_PBW_HPP
#define SOCENTER_PBW_HPP

// Generic PBW straightening for the enveloping algebra of a Lie algebra given
// by an ordered basis ("letters" 1..N) and structure constants.
//
// Termination: rewriting g*w with g > w[0] produces w[0]*(g*w') plus
// [g,w[0]]*w'. Every recursive call has strictly smaller total degree except
// the leading term, which is sorted after one prepend. The measure
// (degree, number of inversions) therefore decreases lexicographically.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "socenter/exact.hpp"

namespace socenter {

/// Sorted word of letters packed five bits per letter, first letter in the
/// high bits. Numeric order of the packed value is lexicographic word order
/// with a proper prefix sorting first.
class Monomial {
 public:
  static constexpr int kMaxLength = 12;
  static constexpr int kMaxLetter = 31;

  constexpr Monomial() = default;
  static Monomial from_bits(std::uint64_t bits) {
    Monomial m;
    m.bits_ = bits;
    return m;
  }
  /// Letters are stored as given; the caller is responsible for ordering.
  static Monomial from_letters(const std::vector<int>& letters);

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return bits_ == 0 ? 0 : kMaxLength - std::countr_zero(bits_) / 5; }
  int operator[](int k) const { return static_cast<int>((bits_ >> shift(k)) & 31u); }
  int front() const { return (*this)[0]; }
  int back() const { return (*this)[size() - 1]; }
  std::vector<int> letters() const;

  Monomial prepend(int letter) const {
    if (size() >= kMaxLength) throw std::length_error("monomial exceeds maximum length");
    return from_bits((bits_ >> 5) | (static_cast<std::uint64_t>(letter) << shift(0)));
  }
  Monomial append(int letter) const {
    const int n = size();
    if (n >= kMaxLength) throw std::length_error("monomial exceeds maximum length");
    return from_bits(bits_ | (static_cast<std::uint64_t>(letter) << shift(n)));
  }
  Monomial tail() const { return from_bits((bits_ << 5) & kMask); }
  Monomial init() const { return empty() ? *this : from_bits(bits_ & ~(31ull << shift(size() - 1))); }
  bool is_sorted() const;
  bool contains_letter_in(int lo, int hi) const;

  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
  friend bool operator!=(Monomial a, Monomial b) { return a.bits_ != b.bits_; }
  friend bool operator<(Monomial a, Monomial b) { return a.bits_ < b.bits_; }

 private:
  static constexpr std::uint64_t kMask = (1ull << (5 * kMaxLength)) - 1;
  static constexpr int shift(int k) { return 5 * (kMaxLength - 1 - k); }
  std::uint64_t bits_ = 0;
};

struct MonomialHash {
  std::size_t operator()(Monomial m) const noexcept {
    std::uint64_t x = m.bits() * 0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

// Coefficient policies for the straightener. Integer structure constants
// (the so_n realization) stay in checked 64-bit arithmetic.
template <class Coef>
struct CoefOps;

template <>
struct CoefOps<long> {
  static bool is_zero(long a) { return a == 0; }
  static long one() { return 1; }
  static long mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("straightening coefficient overflow");
    return r;
  }
  static void add_to(long& a, long b) {
    if (__builtin_add_overflow(a, b, &a)) throw std::overflow_error("straightening coefficient overflow");
  }
};

template <>
struct CoefOps<GaussianRational> {
  static bool is_zero(const GaussianRational& a) { return a.is_zero(); }
  static GaussianRational one() { return 1; }
  static GaussianRational mul(const GaussianRational& a, const GaussianRational& b) { return a * b; }
  static void add_to(GaussianRational& a, const GaussianRational& b) { a += b; }
};

template <class Coef>
using Combination = std::vector<std::pair<Monomial, Coef>>;

/// brackets[a][b] holds [Y_a, Y_b] for a > b as (letter, coefficient) pairs.
template <class Coef>
using BracketTable = std::vector<std::vector<std::vector<std::pair<int, Coef>>>>;

template <class Coef>
void canonicalize(Combination<Coef>& c) {
  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < c.size();) {
    Monomial m = c[k].first;
    Coef acc = std::move(c[k].second);
    std::size_t e = k + 1;
    for (; e < c.size() && c[e].first == m; ++e) CoefOps<Coef>::add_to(acc, c[e].second);
    if (!CoefOps<Coef>::is_zero(acc)) c[out++] = {m, std::move(acc)};
    k = e;
  }
  c.resize(out);
}

/// Memoizing PBW straightener. Not thread-safe; use one instance per thread.
template <class Coef>
class Straightener {
 public:
  explicit Straightener(std::shared_ptr<const BracketTable<Coef>> brackets)
      : brackets_(std::move(brackets)) {}

  int num_letters() const { return static_cast<int>(brackets_->size()) - 1; }

  /// Normal form of g*w for a sorted w.
  const Combination<Coef>& left(int g, Monomial w) {
    auto key = std::make_pair(g, w.bits());
    if (auto it = left_memo_.find(key); it != left_memo_.end()) return it->second;
    Combination<Coef> out = compute_left(g, w);
    return left_memo_.emplace(key, std::move(out)).first->second;
  }

  /// Normal form of w*g for a sorted w.
  const Combination<Coef>& right(Monomial w, int g) {
    auto key = std::make_pair(g, w.bits());
    if (auto it = right_memo_.find(key); it != right_memo_.end()) return it->second;
    Combination<Coef> out = compute_right(w, g);
    return right_memo_.emplace(key, std::move(out)).first->second;
  }

  /// Normal form of an arbitrary word.
  Combination<Coef> word(const std::vector<int>& letters) {
    Combination<Coef> acc{{Monomial(), CoefOps<Coef>::one()}};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) acc = left_all(*it, acc);
    return acc;
  }

  /// Normal form of a*b for sorted a, b.
  Combination<Coef> product(Monomial a, Monomial b) {
    if (a.empty() || b.empty() || a.back() <= b.front()) {
      Monomial m = b;
      for (int k = a.size() - 1; k >= 0; --k) m = m.prepend(a[k]);
      return {{m, CoefOps<Coef>::one()}};
    }
    Combination<Coef> acc{{b, CoefOps<Coef>::one()}};
    for (int k = a.size() - 1; k >= 0; --k) acc = left_all(a[k], acc);
    return acc;
  }

  std::size_t cache_size() const { return left_memo_.size() + right_memo_.size(); }
  void clear() {
    left_memo_.clear();
    right_memo_.clear();
  }
  /// Drops the memo tables when they exceed the given entry count. Only call
  /// between top-level operations: it invalidates references returned earlier.
  void trim(std::size_t max_entries) {
    if (cache_size() > max_entries) clear();
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<int, std::uint64_t>& k) const noexcept {
      return MonomialHash{}(Monomial::from_bits(k.second ^ (static_cast<std::uint64_t>(k.first) << 59)));
    }
  };

  const std::vector<std::pair<int, Coef>>& bracket(int a, int b) const { return (*brackets_)[a][b]; }

  Combination<Coef> left_all(int g, const Combination<Coef>& x) {
    Combination<Coef> out;
    for (const auto& [m, c] : x)
      for (const auto& [m2, c2] : left(g, m)) out.emplace_back(m2, CoefOps<Coef>::mul(c, c2));
    canonicalize(out);
    return out;
  }

  Combination<Coef> compute_left(int g, Monomial w) {
    if (w.empty() || g <= w.front()) return {{w.prepend(g), CoefOps<Coef>::one()}};
    const int w0 = w.front();
    const Monomial rest = w.tail();
    Combination<Coef> out;
    // g w0 rest = w0 (g rest) + [g, w0] rest
    const auto& moved = left(g, rest);
    for (std::size_t k = 0; k < moved.size(); ++k) {
      const Monomial m = moved[k].first;
      if (m.empty() || w0 <= m.front()) {
        out.emplace_back(m.prepend(w0), moved[k].second);
        continue;
      }
      const Coef c = moved[k].second;
      const auto& inner = left(w0, m);
      for (const auto& [m2, c2] : inner) out.emplace_back(m2, CoefOps<Coef>::mul(c, c2));
    }
    for (const auto& [h, ch] : bracket(g, w0))
      for (const auto& [m, c] : left(h, rest)) out.emplace_back(m, CoefOps<Coef>::mul(ch, c));
    canonicalize(out);
    return out;
  }

  Combination<Coef> compute_right(Monomial w, int g) {
    if (w.empty() || w.back() <= g) return {{w.append(g), CoefOps<Coef>::one()}};
    const int wl = w.back();
    const Monomial rest = w.init();
    Combination<Coef> out;
    // rest wl g = (rest g) wl + rest [wl, g]
    const auto& moved = right(rest, g);
    for (std::size_t k = 0; k < moved.size(); ++k) {
      const Monomial m = moved[k].first;
      if (m.empty() || m.back() <= wl) {
        out.emplace_back(m.append(wl), moved[k].second);
        continue;
      }
      const Coef c = moved[k].second;
      const auto& inner = right(m, wl);
      for (const auto& [m2, c2] : inner) out.emplace_back(m2, CoefOps<Coef>::mul(c, c2));
    }
    for (const auto& [h, ch] : bracket(wl, g))
      for (const auto& [m, c] : right(rest, h)) out.emplace_back(m, CoefOps<Coef>::mul(ch, c));
    canonicalize(out);
    return out;
  }

  std::shared_ptr<const BracketTable<Coef>> brackets_;
  std::unordered_map<std::pair<int, std::uint64_t>, Combination<Coef>, KeyHash> left_memo_;
  std::unordered_map<std::pair<int, std::uint64_t>, Combination<Coef>, KeyHash> right_memo_;
};

}  // namespace socenter

#endif  // SOCENTER_PBW_HPP
