#include "glinv/verify.hpp"

#include <chrono>
#include <sstream>

#include "glinv/generators.hpp"
#include "glinv/invariance.hpp"
#include "glinv/linalg.hpp"
#include "glinv/schurweyl.hpp"

namespace glinv {

std::string VerificationReport::to_text(bool with_timing) const {
  std::ostringstream out;
  out << "n=" << n << " p=" << p << " q=" << q << " generators=" << dim_generator_span
      << " schurweyl=" << dim_schurweyl_span << " kernel=" << dim_invariant_kernel << ' '
      << (pass ? "pass" : "FAIL");
  if (with_timing) out << " elapsed_ms=" << static_cast<long long>(elapsed_ms);
  return out.str();
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  nlohmann::json j = {{"n", n},
                      {"p", p},
                      {"q", q},
                      {"dim_generator_span", dim_generator_span},
                      {"dim_schurweyl_span", dim_schurweyl_span},
                      {"dim_invariant_kernel", dim_invariant_kernel},
                      {"verdict", pass ? "pass" : "fail"}};
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

VerificationReport verify_cell(int n, int p, int q, const Caps& caps) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.n = n;
  report.p = p;
  report.q = q;
  auto basis = MonomialBasis::get({n, p, q});

  std::vector<SparseVector> generators;
  for (const auto& product : enumerate_generator_products(p, q, n, caps))
    generators.push_back(vectorize(product.form, *basis));
  std::vector<SparseVector> schurweyl;
  for (const auto& [rho, form] : spanning_set({p, q}, n, caps))
    schurweyl.push_back(vectorize(form, *basis));
  std::vector<SparseVector> kernel = invariant_subspace(p, q, n, caps);

  report.dim_generator_span = rank(generators);
  report.dim_schurweyl_span = rank(schurweyl);
  report.dim_invariant_kernel = kernel.size();
  report.pass = report.dim_generator_span == report.dim_schurweyl_span &&
                report.dim_schurweyl_span == report.dim_invariant_kernel &&
                span_equal(generators, schurweyl) && span_equal(schurweyl, kernel) &&
                span_equal(generators, kernel);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> verify_all(int n, int max_total_degree, const Caps& caps) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  if (max_total_degree < 0) throw std::invalid_argument("negative degree bound");
  caps.check_degree(max_total_degree);
  caps.check_n(n);
  caps.check_tuples(n, max_total_degree);
  std::vector<VerificationReport> out;
  for (int d = 0; d <= max_total_degree; ++d)
    for (int p = d; p >= 0; --p) out.push_back(verify_cell(n, p, d - p, caps));
  return out;
}

}  // namespace glinv
