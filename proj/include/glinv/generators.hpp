#ifndef GLINV_GENERATORS_HPP
#define GLINV_GENERATORS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glinv/caps.hpp"
#include "glinv/forms.hpp"

namespace glinv {

enum class GeneratorKind { tau, omega };

/// Name of a trace generator. For omega the exponents are the canonical
/// (lexicographically least) rotation and sign records how the requested
/// rotation relates to it: omega(requested) = sign * omega(exponents).
struct GeneratorLabel {
  GeneratorKind kind = GeneratorKind::tau;
  std::vector<int> exponents;
  int sign = 1;
  bool is_zero = false;

  int poly_degree() const;
  int form_degree() const;

  /// tau before omega, then by length, then lexicographic exponents.
  bool operator<(const GeneratorLabel& o) const;
  bool operator==(const GeneratorLabel& o) const {
    return kind == o.kind && exponents == o.exponents;
  }
};

/// Canonical rotation, accumulated sign (-1)^((p-1)s) and the zero flag.
/// tau labels pass through unchanged. Throws std::invalid_argument on an
/// empty or negative exponent list, or tau with exponent 0.
GeneratorLabel canonical_label(GeneratorKind kind, std::vector<int> exponents);

/// "tau:3", "omega:1,0,2".
std::string to_string(const GeneratorLabel& label);
/// Parses a single label as written (not canonicalized). Throws ParseError.
GeneratorLabel parse_label(std::string_view text);

/// Tr(X^l). Rejects l < 1.
Form tau(int exponent, int n);
/// Tr(X^{l1} dX ^ X^{l2} dX ^ ... ^ X^{lp} dX). Rejects empty lists.
Form omega(std::span<const int> exponents, int n);
/// tau or omega of the label's exponents; the label sign is not applied.
Form generator_form(const GeneratorLabel& label, int n);

/// Coefficient of t^(n-k) in det(t I + X), by cofactor expansion.
Form sigma(int k, int n);
/// k sigma_k - sum_{i=1..k} (-1)^(i-1) sigma_{k-i} tau^i; zero by Newton.
Form newton_identity_residual(int k, int n);

/// Nonzero canonical labels of bidegree exactly (p, q), sorted.
std::vector<GeneratorLabel> canonical_generators(int p, int q);

struct GeneratorProduct {
  std::vector<GeneratorLabel> factors;  // sorted; empty for the constant 1
  Form form;
  /// Factors joined with '*', or "1" for the empty product.
  std::string label() const;
};

/// All products of canonical nonzero generators of total bidegree (p, q),
/// one per sorted label multiset, odd-degree omegas used at most once.
std::vector<GeneratorProduct> enumerate_generator_products(int p, int q, int n,
                                                           const Caps& caps = Caps{});

}  // namespace glinv

#endif  // GLINV_GENERATORS_HPP
