#include "glinv/forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "glinv/errors.hpp"

namespace glinv {

namespace {

void require_same_n(const Form& a, const Form& b, const char* op) {
  if (a.n() != b.n())
    throw SizeMismatch(std::string(op) + ": forms over n=" + std::to_string(a.n()) +
                       " and n=" + std::to_string(b.n()));
}

// Merges two sorted dx sequences. The sign counts the inversions between
// them; a shared factor annihilates the product.
std::optional<int> merge_grassmann(const std::vector<VarCode>& a, const std::vector<VarCode>& b,
                                   std::vector<VarCode>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  int sign = 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else if (b[j] < a[i]) {
      if ((a.size() - i) % 2 == 1) sign = -sign;
      out.push_back(b[j++]);
    } else {
      return std::nullopt;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return sign;
}

// Sorts by merge sort, counting inversions. nullopt on a repeated factor.
std::optional<int> sort_grassmann(std::vector<VarCode>& v) {
  if (v.size() < 2) return 1;
  auto mid = v.size() / 2;
  std::vector<VarCode> left(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  std::vector<VarCode> right(v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  auto sl = sort_grassmann(left);
  if (!sl) return std::nullopt;
  auto sr = sort_grassmann(right);
  if (!sr) return std::nullopt;
  auto sm = merge_grassmann(left, right, v);
  if (!sm) return std::nullopt;
  return *sl * *sr * *sm;
}

std::vector<Monomial::XFactor> merge_commuting(const std::vector<Monomial::XFactor>& a,
                                               const std::vector<Monomial::XFactor>& b) {
  std::vector<Monomial::XFactor> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

void check_index(int n, VarIndex v) {
  if (v.i < 1 || v.j < 1 || v.i > n || v.j > n)
    throw std::out_of_range("index [" + std::to_string(v.i) + "," + std::to_string(v.j) +
                            "] outside 1.." + std::to_string(n));
}

}  // namespace

Monomial Monomial::x(VarIndex v, int exponent) {
  Monomial m;
  if (exponent > 0) {
    m.xpart_.emplace_back(encode(v), exponent);
    m.poly_degree_ = exponent;
  }
  return m;
}

Monomial Monomial::dx(VarIndex v) {
  Monomial m;
  m.dxpart_.push_back(encode(v));
  return m;
}

std::optional<std::pair<Monomial, int>> Monomial::build(std::vector<VarCode> xs,
                                                        std::vector<VarCode> dxs) {
  Monomial m;
  std::sort(xs.begin(), xs.end());
  for (VarCode c : xs) {
    if (!m.xpart_.empty() && m.xpart_.back().first == c)
      ++m.xpart_.back().second;
    else
      m.xpart_.emplace_back(c, 1);
  }
  m.poly_degree_ = static_cast<int>(xs.size());
  auto sign = sort_grassmann(dxs);
  if (!sign) return std::nullopt;
  m.dxpart_ = std::move(dxs);
  return std::make_pair(std::move(m), *sign);
}

int Monomial::max_index() const {
  int top = 0;
  for (const auto& [c, e] : xpart_) top = std::max({top, decode(c).i, decode(c).j});
  for (VarCode c : dxpart_) top = std::max({top, decode(c).i, decode(c).j});
  return top;
}

bool Monomial::operator<(const Monomial& o) const {
  const int total = poly_degree_ + form_degree();
  const int other_total = o.poly_degree_ + o.form_degree();
  if (total != other_total) return total < other_total;
  if (poly_degree_ != o.poly_degree_) return poly_degree_ > o.poly_degree_;
  // Same x length: compare the expanded variable sequences.
  for (std::size_t k = 0; k < xpart_.size() && k < o.xpart_.size(); ++k) {
    if (xpart_[k].first != o.xpart_[k].first) return xpart_[k].first < o.xpart_[k].first;
    if (xpart_[k].second != o.xpart_[k].second) return xpart_[k].second > o.xpart_[k].second;
  }
  return dxpart_ < o.dxpart_;
}

std::optional<std::pair<Monomial, int>> multiply(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto sign = merge_grassmann(a.dxpart_, b.dxpart_, m.dxpart_);
  if (!sign) return std::nullopt;
  m.xpart_ = merge_commuting(a.xpart_, b.xpart_);
  m.poly_degree_ = a.poly_degree_ + b.poly_degree_;
  return std::make_pair(std::move(m), *sign);
}

Form::Form(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
}

Form Form::constant(int n, const Rational& c) {
  Form f(n);
  f.add_term(Monomial{}, c);
  return f;
}

Form Form::x(int n, int i, int j) {
  check_index(n, {i, j});
  return term(n, Monomial::x({i, j}), Rational(1));
}

Form Form::dx(int n, int i, int j) {
  check_index(n, {i, j});
  return term(n, Monomial::dx({i, j}), Rational(1));
}

Form Form::term(int n, const Monomial& m, const Rational& c) {
  if (m.max_index() > n)
    throw std::out_of_range("monomial index exceeds n=" + std::to_string(n));
  Form f(n);
  f.add_term(m, c);
  return f;
}

void Form::add_term(const Monomial& m, const Rational& c) {
  if (glinv::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (glinv::is_zero(it->second)) terms_.erase(it);
}

Form& Form::operator+=(const Form& o) {
  require_same_n(*this, o, "add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  require_same_n(*this, o, "subtract");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Form Form::operator-() const {
  Form f = *this;
  for (auto& [m, c] : f.terms_) c = -c;
  return f;
}

Form add(const Form& a, const Form& b) {
  Form f = a;
  f += b;
  return f;
}

Form scale(const Rational& c, const Form& a) {
  Form out(a.n());
  if (is_zero(c)) return out;
  for (const auto& [m, coeff] : a.terms()) out.add_term(m, c * coeff);
  return out;
}

Form operator+(const Form& a, const Form& b) { return add(a, b); }
Form operator-(const Form& a, const Form& b) {
  Form f = a;
  f -= b;
  return f;
}
Form operator*(const Rational& c, const Form& a) { return scale(c, a); }

Form wedge(const Form& a, const Form& b) {
  require_same_n(a, b, "wedge");
  Form out(a.n());
  Rational product;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto m = multiply(ma, mb);
      if (!m) continue;
      product = ca * cb;
      if (m->second < 0) product = -product;
      out.add_term(m->first, product);
    }
  }
  return out;
}

Form exterior_derivative(const Form& a) {
  Form out(a.n());
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [var, exp] : m.xpart()) {
      std::vector<VarCode> xs;
      for (const auto& [v, e] : m.xpart())
        for (int k = 0; k < (v == var ? e - 1 : e); ++k) xs.push_back(v);
      std::vector<VarCode> dxs;
      dxs.reserve(m.dxpart().size() + 1);
      dxs.push_back(var);
      dxs.insert(dxs.end(), m.dxpart().begin(), m.dxpart().end());
      auto built = Monomial::build(std::move(xs), std::move(dxs));
      if (!built) continue;
      Rational coeff = c * exp;
      if (built->second < 0) coeff = -coeff;
      out.add_term(built->first, coeff);
    }
  }
  return out;
}

std::set<std::pair<int, int>> bidegree(const Form& a) {
  std::set<std::pair<int, int>> out;
  for (const auto& [m, c] : a.terms()) out.emplace(m.poly_degree(), m.form_degree());
  return out;
}

std::optional<std::pair<int, int>> homogeneous_bidegree(const Form& a) {
  auto degrees = bidegree(a);
  if (degrees.size() != 1) return std::nullopt;
  return *degrees.begin();
}

FormMatrix::FormMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  entries_.assign(static_cast<std::size_t>(n * n), Form(n));
}

FormMatrix FormMatrix::identity(int n) {
  FormMatrix m(n);
  for (int i = 1; i <= n; ++i) m(i, i) = Form::constant(n, Rational(1));
  return m;
}

FormMatrix coordinate_matrix(int n) {
  FormMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i, j) = Form::x(n, i, j);
  return m;
}

FormMatrix differential_matrix(int n) {
  FormMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i, j) = Form::dx(n, i, j);
  return m;
}

FormMatrix mat_mul(const FormMatrix& a, const FormMatrix& b) {
  if (a.n() != b.n())
    throw SizeMismatch("mat_mul: sizes " + std::to_string(a.n()) + " and " +
                       std::to_string(b.n()));
  const int n = a.n();
  FormMatrix out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) out(i, j) += wedge(a(i, k), b(k, j));
  return out;
}

FormMatrix mat_pow(const FormMatrix& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative matrix power");
  FormMatrix out = FormMatrix::identity(a.n());
  for (int k = 0; k < exponent; ++k) out = mat_mul(out, a);
  return out;
}

Form trace(const FormMatrix& a) {
  Form out(a.n());
  for (int i = 1; i <= a.n(); ++i) out += a(i, i);
  return out;
}

}  // namespace glinv
