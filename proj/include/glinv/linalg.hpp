#ifndef GLINV_LINALG_HPP
#define GLINV_LINALG_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "glinv/forms.hpp"
#include "glinv/rational.hpp"

namespace glinv {

struct BasisKey {
  int n = 1;
  int p = 0;
  int q = 0;
  auto operator<=>(const BasisKey&) const = default;
};

/// Every monomial of bidegree (p, q) over n x n matrices, in Monomial order.
/// size = C(n^2 + p - 1, p) * C(n^2, q).
class MonomialBasis {
 public:
  explicit MonomialBasis(BasisKey key);

  /// Shared, lazily built instance; safe to call from several threads.
  static std::shared_ptr<const MonomialBasis> get(BasisKey key);

  const BasisKey& key() const { return key_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::optional<std::size_t> find(const Monomial& m) const;

 private:
  BasisKey key_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

/// Coordinates over a monomial basis; entries sorted by index, none zero.
struct SparseVector {
  BasisKey basis;
  std::vector<std::pair<std::size_t, Rational>> entries;

  bool empty() const { return entries.empty(); }
  bool operator==(const SparseVector&) const = default;
};

/// Throws std::invalid_argument if a has terms outside the basis bidegree,
/// SizeMismatch if n differs.
SparseVector vectorize(const Form& a, const MonomialBasis& basis);
Form devectorize(const SparseVector& v, const MonomialBasis& basis);

/// Sparse integer row, sorted by column.
using IntegerRow = std::vector<std::pair<std::size_t, Integer>>;

/// Row echelon form built by fraction-free insertion: a new row is combined
/// with the pivot row owning its leading column as a*row - b*pivot and made
/// primitive, until its leading column is free.
class FractionFreeEchelon {
 public:
  /// Returns true when the row increased the rank.
  bool insert(IntegerRow row);
  std::size_t rank() const { return pivots_.size(); }
  /// Pivot rows keyed by leading column.
  const std::map<std::size_t, IntegerRow>& pivots() const { return pivots_; }

 private:
  std::map<std::size_t, IntegerRow> pivots_;
};

/// Clears denominators and removes the content.
IntegerRow to_integer_row(const SparseVector& v);

/// Exact rank by fraction-free elimination. Throws SizeMismatch when the
/// vectors come from different bases.
std::size_t rank(std::span<const SparseVector> vs);

/// Coefficients c with sum c_i v_i = target, or nullopt when target is not
/// in the span. Vectors that depend on earlier ones get coefficient 0.
std::optional<std::vector<Rational>> solve_in_span(const SparseVector& target,
                                                   std::span<const SparseVector> vs);

/// rank(us) == rank(vs) == rank(us + vs).
bool span_equal(std::span<const SparseVector> us, std::span<const SparseVector> vs);

/// Basis of {c : row . c = 0 for every row}, one vector per free column with
/// that column set to 1. Rows are inserted sparsest first.
std::vector<std::vector<std::pair<std::size_t, Rational>>> nullspace(
    std::vector<IntegerRow> rows, std::size_t columns);

}  // namespace glinv

#endif  // GLINV_LINALG_HPP
