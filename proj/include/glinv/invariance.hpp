#ifndef GLINV_INVARIANCE_HPP
#define GLINV_INVARIANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "glinv/caps.hpp"
#include "glinv/forms.hpp"
#include "glinv/linalg.hpp"
#include "glinv/rational.hpp"

namespace glinv {

/// Matrix unit E_{ab} of gl_n.
struct LieGenerator {
  int a = 1;
  int b = 1;
  bool operator==(const LieGenerator&) const = default;
};

std::string to_string(LieGenerator e);

/// Even derivation with x[i,j] -> (E X - X E)_{ij}, dx[i,j] -> (E dX - dX E)_{ij}.
Form lie_derivative(const Form& f, LieGenerator e);

/// First matrix unit, in row-major order, whose Lie derivative of f is nonzero.
std::optional<LieGenerator> invariance_witness(const Form& f);
bool is_invariant(const Form& f);

/// Dense square rational matrix.
class RationalMatrix {
 public:
  explicit RationalMatrix(int n);
  RationalMatrix(int n, std::vector<std::vector<Rational>> rows);

  static RationalMatrix identity(int n);

  int n() const { return n_; }
  const Rational& operator()(int i, int j) const { return rows_[idx(i)][idx(j)]; }
  Rational& operator()(int i, int j) { return rows_[idx(i)][idx(j)]; }

  /// Gauss-Jordan inverse. Throws std::domain_error when singular.
  RationalMatrix inverse() const;
  Rational determinant() const;

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i - 1); }
  int n_;
  std::vector<std::vector<Rational>> rows_;
};

/// {"n": n, "rows": [["1","1/2"], ...]}. Throws ParseError.
RationalMatrix rational_matrix_from_json(const nlohmann::json& j);

/// Substitutes x -> g X g^-1 and dx -> g dX g^-1. Throws std::domain_error
/// for singular g and SizeMismatch when sizes differ.
Form conjugation_pullback(const Form& f, const RationalMatrix& g);

/// Rows of the stacked operator [L_{E_ab}] on the (p,q) monomial component:
/// row u * dim + i holds the coefficient of basis monomial i in L_u(column).
/// OpenMP-parallel over matrix units.
std::vector<IntegerRow> lie_operator_rows(const MonomialBasis& basis);
std::vector<IntegerRow> lie_operator_rows_serial(const MonomialBasis& basis);

/// Basis of the invariant forms of bidegree (p, q) as vectors over
/// MonomialBasis::get({n, p, q}). Throws CapError past the caps.
std::vector<SparseVector> invariant_subspace(int p, int q, int n, const Caps& caps = Caps{});

}  // namespace glinv

#endif  // GLINV_INVARIANCE_HPP
