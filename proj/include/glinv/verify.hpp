#ifndef GLINV_VERIFY_HPP
#define GLINV_VERIFY_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "glinv/caps.hpp"

namespace glinv {

/// Three-way comparison for one bidegree: span of generator products, span
/// of the Schur-Weyl forms and the invariant kernel.
struct VerificationReport {
  int n = 1;
  int p = 0;
  int q = 0;
  std::size_t dim_generator_span = 0;
  std::size_t dim_schurweyl_span = 0;
  std::size_t dim_invariant_kernel = 0;
  bool pass = false;
  double elapsed_ms = 0.0;

  /// "n=2 p=1 q=1 generators=1 schurweyl=1 kernel=1 pass"
  std::string to_text(bool with_timing = false) const;
  nlohmann::json to_json(bool with_timing = false) const;
};

VerificationReport verify_cell(int n, int p, int q, const Caps& caps = Caps{});

/// Every (p, q) with p + q <= max_total_degree, by total degree then
/// decreasing p. Throws CapError up front.
std::vector<VerificationReport> verify_all(int n, int max_total_degree, const Caps& caps = Caps{});

}  // namespace glinv

#endif  // GLINV_VERIFY_HPP
