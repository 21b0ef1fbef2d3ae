#ifndef GLINV_FORMS_HPP
#define GLINV_FORMS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "glinv/rational.hpp"

namespace glinv {

/// Matrix position (i, j) of a coordinate x[i,j] or its differential dx[i,j].
struct VarIndex {
  int i = 1;
  int j = 1;
  auto operator<=>(const VarIndex&) const = default;
};

/// Packed (i, j), ordered lexicographically. Valid for i, j <= 255.
using VarCode = std::uint16_t;

constexpr VarCode encode(VarIndex v) { return static_cast<VarCode>((v.i << 8) | v.j); }
constexpr VarIndex decode(VarCode c) { return {c >> 8, c & 0xff}; }

/// Commuting part times a sorted Grassmann part. The sign produced when
/// sorting the Grassmann part belongs to the owning term, never to the
/// monomial itself.
class Monomial {
 public:
  using XFactor = std::pair<VarCode, int>;  // (variable, exponent > 0)

  Monomial() = default;

  static Monomial x(VarIndex v, int exponent = 1);
  static Monomial dx(VarIndex v);

  /// Builds from arbitrary factor lists: repeated x variables merge their
  /// exponents, dx factors are sorted. Returns the sorting sign, or nullopt
  /// when a dx factor repeats.
  static std::optional<std::pair<Monomial, int>> build(std::vector<VarCode> xs,
                                                       std::vector<VarCode> dxs);

  const std::vector<XFactor>& xpart() const { return xpart_; }
  const std::vector<VarCode>& dxpart() const { return dxpart_; }

  /// Total x exponent.
  int poly_degree() const { return poly_degree_; }
  /// Number of dx factors.
  int form_degree() const { return static_cast<int>(dxpart_.size()); }
  /// Largest row or column index appearing in the monomial (0 for 1).
  int max_index() const;

  bool operator==(const Monomial& o) const {
    return xpart_ == o.xpart_ && dxpart_ == o.dxpart_;
  }
  /// Graded order: total degree ascending, then more x factors first, then
  /// lexicographic on the expanded x sequence, then on the dx sequence.
  bool operator<(const Monomial& o) const;

  /// Wedge product of monomials; nullopt when a dx factor repeats.
  friend std::optional<std::pair<Monomial, int>> multiply(const Monomial& a, const Monomial& b);

 private:
  std::vector<XFactor> xpart_;
  std::vector<VarCode> dxpart_;
  int poly_degree_ = 0;
};

std::optional<std::pair<Monomial, int>> multiply(const Monomial& a, const Monomial& b);

/// Polynomial-coefficient differential form on n x n matrices, stored as a
/// canonical map from monomial to nonzero rational coefficient.
class Form {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Form(int n = 1);

  static Form constant(int n, const Rational& c);
  static Form x(int n, int i, int j);
  static Form dx(int n, int i, int j);
  /// Throws std::out_of_range if the monomial refers to indices beyond n.
  static Form term(int n, const Monomial& m, const Rational& c);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c*m in place. Indices are not range-checked here.
  void add_term(const Monomial& m, const Rational& c);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form operator-() const;

  bool operator==(const Form& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  int n_;
  Terms terms_;
};

Form add(const Form& a, const Form& b);
Form scale(const Rational& c, const Form& a);
Form operator+(const Form& a, const Form& b);
Form operator-(const Form& a, const Form& b);
Form operator*(const Rational& c, const Form& a);

/// Graded-commutative product. Throws SizeMismatch when n differs.
Form wedge(const Form& a, const Form& b);

/// d(x[i,j]) = dx[i,j], d(dx[i,j]) = 0, extended as an odd derivation.
Form exterior_derivative(const Form& a);

/// (polynomial degree, form degree) of every term.
std::set<std::pair<int, int>> bidegree(const Form& a);

/// The bidegree of a nonzero homogeneous form, nullopt otherwise.
std::optional<std::pair<int, int>> homogeneous_bidegree(const Form& a);

/// n x n matrix of forms, row-major, 1-based accessors.
class FormMatrix {
 public:
  explicit FormMatrix(int n);

  static FormMatrix identity(int n);

  int n() const { return n_; }
  const Form& operator()(int i, int j) const { return entries_[index(i, j)]; }
  Form& operator()(int i, int j) { return entries_[index(i, j)]; }

  bool operator==(const FormMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }
  int n_;
  std::vector<Form> entries_;
};

/// X = (x[i,j]). Throws std::invalid_argument for n < 1.
FormMatrix coordinate_matrix(int n);
/// dX = (dx[i,j]).
FormMatrix differential_matrix(int n);

FormMatrix mat_mul(const FormMatrix& a, const FormMatrix& b);
FormMatrix mat_pow(const FormMatrix& a, int exponent);
Form trace(const FormMatrix& a);

}  // namespace glinv

#endif  // GLINV_FORMS_HPP
