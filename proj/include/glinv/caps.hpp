#ifndef GLINV_CAPS_HPP
#define GLINV_CAPS_HPP

#include <string>

namespace glinv {

/// Desk-scale size limits shared by enumeration, evaluation and kernels.
struct Caps {
  int max_total_degree = 6;       // p + q, also the Schur-Weyl permutation degree
  int max_n = 3;                  // matrix size
  long long max_tuples = 1000000; // n^r index tuples summed per phi_form

  /// Defaults, overridden by GLINV_CAPS="degree=6,n=3,tuples=1000000" when set.
  static Caps from_env();
  /// Parses the GLINV_CAPS syntax on top of the defaults.
  static Caps parse(const std::string& spec);

  /// Throws CapError naming the violated cap.
  void check_degree(int total_degree) const;
  void check_n(int n) const;
  void check_tuples(int n, int r) const;
};

}  // namespace glinv

#endif  // GLINV_CAPS_HPP
