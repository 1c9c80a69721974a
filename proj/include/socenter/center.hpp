#ifndef SOCENTER_CENTER_HPP
#define SOCENTER_CENTER_HPP

#include <optional>
#include <vector>

#include "socenter/uea.hpp"

namespace socenter {

/// H = i A_{n,n-1} spanning a, and X_i = A_{n-1,i} + i A_{n,i} spanning n.
struct IwasawaGens {
  int rank = 0;
  Element H;
  std::vector<Element> X;  // X[0] is X_1
};

/// Requires n >= 2.
IwasawaGens iwasawa_gens(int n);

struct CentralityReport {
  bool central = true;
  std::optional<Generator> witness;  // first generator with a nonzero commutator
  Element residual;                  // [witness, x]
};

/// Checks [A_{j,i}, x] == 0 for every generator of so_{rank}. Uses up to
/// `threads` workers (0 = default_thread_count()).
CentralityReport is_central(const Element& x, int threads = 0);

/// True iff x is monic of degree floor(n/2) in u^2 with no odd powers of u.
bool monic_degree_check(const Element& x, int n);

/// C_n(u) built by the Iwasawa-type recursion from C_{n-2}(u). Memoized.
Element build_C(int n);

/// Pf_{2k}(i_{2k}, ..., i_1) with indices listed from i_{2k} down to i_1.
Element build_pf(const std::vector<int>& indices, int n);

/// PF_{2m} = Pf_{2m}(2m, ..., 1) at rank 2m.
Element build_PF(int m);

struct IdentityReport {
  bool ok = false;
  Element residual;
};

/// i PF_{2m} - (H - m + 1) PF_{2m-2} + sum_i X_i [A_{2m-1,i}, PF_{2m-2}] == 0.
IdentityReport iwasawa_pf_check(int m);

/// Worker count: SOCENTER_THREADS if set, otherwise hardware concurrency.
int default_thread_count();
void set_default_thread_count(int threads);

}  // namespace socenter

#endif  // SOCENTER_CENTER_HPP
