#ifndef GLINV_SCHURWEYL_HPP
#define GLINV_SCHURWEYL_HPP

#include <utility>
#include <vector>

#include "glinv/caps.hpp"
#include "glinv/forms.hpp"
#include "glinv/generators.hpp"
#include "glinv/perm.hpp"

namespace glinv {

/// Tensor slots 1..p are symmetric (polynomial), p+1..p+q antisymmetric (dx).
struct SlotSplit {
  int p = 0;
  int q = 0;
  int r() const { return p + q; }
  bool symmetric(int slot) const { return slot <= p; }
};

/// Invariant form attached to rho:
///   sum over j in {1..n}^r of prod_{k<=p} x[j_k, j_{rho^-1(k)}]
///                          ^ wedge_{k>p} dx[j_k, j_{rho^-1(k)}]
/// with the dx factors in slot order. OpenMP-parallel over index tuples.
/// Throws SizeMismatch if deg rho != r, CapError past the caps.
Form phi_form(const Permutation& rho, SlotSplit split, int n, const Caps& caps = Caps{});
/// Single-threaded reference for phi_form.
Form phi_form_serial(const Permutation& rho, SlotSplit split, int n, const Caps& caps = Caps{});

struct CycleFactorization {
  int sign = 1;
  std::vector<GeneratorLabel> factors;  // one canonical label per cycle
  bool is_zero() const;
};

/// Reads rho's cycles as trace generators. Each cycle is traversed along
/// k -> rho^-1(k) from its smallest antisymmetric slot; the exponent before
/// each dX counts the symmetric slots passed since the previous dX. The sign
/// combines the canonicalization signs with the parity of reordering the
/// traversed dx slots into slot order.
CycleFactorization cycle_factorization(const Permutation& rho, SlotSplit split);

/// sign * wedge of the factor forms, in emitted order.
Form factorization_form(const CycleFactorization& f, int n);

/// (rho, phi_form(rho)) for every rho in S_r, in enumeration order. Parallel
/// over permutations.
std::vector<std::pair<Permutation, Form>> spanning_set(SlotSplit split, int n,
                                                       const Caps& caps = Caps{});
std::vector<std::pair<Permutation, Form>> spanning_set_serial(SlotSplit split, int n,
                                                              const Caps& caps = Caps{});

}  // namespace glinv

#endif  // GLINV_SCHURWEYL_HPP
