#include "glinv/invariance.hpp"

#include <map>
#include <stdexcept>

#include "glinv/errors.hpp"

namespace glinv {

std::string to_string(LieGenerator e) {
  return "E[" + std::to_string(e.a) + "," + std::to_string(e.b) + "]";
}

namespace {

// Image of the coordinate (i, j) under X -> E_ab X - X E_ab:
// delta_{ia} x[b,j] - delta_{jb} x[i,a].
std::vector<std::pair<VarCode, int>> lie_image(VarCode code, LieGenerator e) {
  VarIndex v = decode(code);
  std::vector<std::pair<VarCode, int>> out;
  if (v.i == e.a) out.emplace_back(encode({e.b, v.j}), 1);
  if (v.j == e.b) {
    VarCode minus = encode({v.i, e.a});
    if (!out.empty() && out.front().first == minus)
      out.clear();
    else
      out.emplace_back(minus, -1);
  }
  return out;
}

std::vector<VarCode> expand_x(const Monomial& m) {
  std::vector<VarCode> xs;
  xs.reserve(static_cast<std::size_t>(m.poly_degree()));
  for (const auto& [c, e] : m.xpart()) xs.insert(xs.end(), static_cast<std::size_t>(e), c);
  return xs;
}

// Calls emit(monomial, integer coefficient) for every term of L_e(m).
template <typename Emit>
void lie_on_monomial(const Monomial& m, LieGenerator e, Emit&& emit) {
  const std::vector<VarCode> xs = expand_x(m);
  const std::vector<VarCode>& dxs = m.dxpart();
  // Commuting factors: replace one occurrence at a time (exponent multiplicity
  // comes from the repeated entries of xs).
  for (std::size_t k = 0; k < xs.size(); ++k) {
    for (const auto& [code, coeff] : lie_image(xs[k], e)) {
      std::vector<VarCode> nx = xs;
      nx[k] = code;
      auto built = Monomial::build(std::move(nx), dxs);
      emit(built->first, coeff * built->second);
    }
  }
  // Grassmann factors: even derivation, so no sign for the position.
  for (std::size_t k = 0; k < dxs.size(); ++k) {
    for (const auto& [code, coeff] : lie_image(dxs[k], e)) {
      std::vector<VarCode> nd = dxs;
      nd[k] = code;
      auto built = Monomial::build(xs, std::move(nd));
      if (!built) continue;
      emit(built->first, coeff * built->second);
    }
  }
}

void check_generator(LieGenerator e, int n) {
  if (e.a < 1 || e.b < 1 || e.a > n || e.b > n)
    throw std::out_of_range("matrix unit " + to_string(e) + " outside n=" + std::to_string(n));
}

}  // namespace

Form lie_derivative(const Form& f, LieGenerator e) {
  check_generator(e, f.n());
  Form out(f.n());
  for (const auto& [m, c] : f.terms())
    lie_on_monomial(m, e, [&](const Monomial& mm, int k) { out.add_term(mm, c * k); });
  return out;
}

std::optional<LieGenerator> invariance_witness(const Form& f) {
  for (int a = 1; a <= f.n(); ++a)
    for (int b = 1; b <= f.n(); ++b)
      if (!lie_derivative(f, {a, b}).is_zero()) return LieGenerator{a, b};
  return std::nullopt;
}

bool is_invariant(const Form& f) { return !invariance_witness(f).has_value(); }

RationalMatrix::RationalMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  rows_.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
}

RationalMatrix::RationalMatrix(int n, std::vector<std::vector<Rational>> rows)
    : n_(n), rows_(std::move(rows)) {
  if (n < 1 || rows_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("matrix must have n rows");
  for (const auto& r : rows_)
    if (r.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("matrix must be square");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::inverse() const {
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n_);
  for (int col = 1; col <= n_; ++col) {
    int pivot = col;
    while (pivot <= n_ && is_zero(a(pivot, col))) ++pivot;
    if (pivot > n_) throw std::domain_error("matrix is singular");
    std::swap(a.rows_[idx(pivot)], a.rows_[idx(col)]);
    std::swap(inv.rows_[idx(pivot)], inv.rows_[idx(col)]);
    Rational scale = a(col, col);
    for (int j = 1; j <= n_; ++j) {
      a(col, j) /= scale;
      inv(col, j) /= scale;
    }
    for (int i = 1; i <= n_; ++i) {
      if (i == col || is_zero(a(i, col))) continue;
      Rational factor = a(i, col);
      for (int j = 1; j <= n_; ++j) {
        a(i, j) -= factor * a(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

Rational RationalMatrix::determinant() const {
  RationalMatrix a = *this;
  Rational det = 1;
  for (int col = 1; col <= n_; ++col) {
    int pivot = col;
    while (pivot <= n_ && is_zero(a(pivot, col))) ++pivot;
    if (pivot > n_) return 0;
    if (pivot != col) {
      std::swap(a.rows_[idx(pivot)], a.rows_[idx(col)]);
      det = -det;
    }
    det *= a(col, col);
    for (int i = col + 1; i <= n_; ++i) {
      Rational factor = a(i, col) / a(col, col);
      for (int j = col; j <= n_; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

RationalMatrix rational_matrix_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j.at("rows")) {
      std::vector<Rational> r;
      for (const auto& v : row)
        r.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>()));
      rows.push_back(std::move(r));
    }
    return RationalMatrix(n, std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed matrix: ") + e.what());
  }
}

Form conjugation_pullback(const Form& f, const RationalMatrix& g) {
  const int n = f.n();
  if (g.n() != n)
    throw SizeMismatch("matrix of size " + std::to_string(g.n()) + " acting on n=" +
                       std::to_string(n));
  const RationalMatrix ginv = g.inverse();
  // Linear images of x[i,j] and dx[i,j], keyed by the packed index.
  std::map<VarCode, Form> x_image;
  std::map<VarCode, Form> dx_image;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Form xi(n);
      Form di(n);
      for (int k = 1; k <= n; ++k) {
        if (is_zero(g(i, k))) continue;
        for (int l = 1; l <= n; ++l) {
          Rational c = g(i, k) * ginv(l, j);
          if (is_zero(c)) continue;
          xi.add_term(Monomial::x({k, l}), c);
          di.add_term(Monomial::dx({k, l}), c);
        }
      }
      x_image.emplace(encode({i, j}), std::move(xi));
      dx_image.emplace(encode({i, j}), std::move(di));
    }
  }
  Form out(n);
  for (const auto& [m, c] : f.terms()) {
    Form product = Form::constant(n, c);
    for (const auto& [code, e] : m.xpart())
      for (int k = 0; k < e; ++k) product = wedge(product, x_image.at(code));
    for (VarCode code : m.dxpart()) product = wedge(product, dx_image.at(code));
    out += product;
  }
  return out;
}

namespace {

// Rows contributed by one matrix unit, keyed by global row id.
std::map<std::size_t, IntegerRow> unit_rows(const MonomialBasis& basis, LieGenerator e,
                                            std::size_t unit) {
  const std::size_t dim = basis.size();
  std::map<std::size_t, IntegerRow> rows;
  for (std::size_t col = 0; col < dim; ++col) {
    std::map<std::size_t, long> image;
    lie_on_monomial(basis[col], e, [&](const Monomial& mm, int k) {
      image[*basis.find(mm)] += k;
    });
    for (const auto& [i, v] : image)
      if (v != 0) rows[unit * dim + i].emplace_back(col, Integer(v));
  }
  return rows;
}

std::vector<IntegerRow> flatten(std::vector<std::map<std::size_t, IntegerRow>>& per_unit) {
  std::vector<IntegerRow> out;
  for (auto& rows : per_unit)
    for (auto& [id, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace

std::vector<IntegerRow> lie_operator_rows_serial(const MonomialBasis& basis) {
  const int n = basis.key().n;
  std::vector<std::map<std::size_t, IntegerRow>> per_unit(static_cast<std::size_t>(n * n));
  for (int u = 0; u < n * n; ++u)
    per_unit[static_cast<std::size_t>(u)] =
        unit_rows(basis, {u / n + 1, u % n + 1}, static_cast<std::size_t>(u));
  return flatten(per_unit);
}

std::vector<IntegerRow> lie_operator_rows(const MonomialBasis& basis) {
  const int n = basis.key().n;
  std::vector<std::map<std::size_t, IntegerRow>> per_unit(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(dynamic)
  for (int u = 0; u < n * n; ++u)
    per_unit[static_cast<std::size_t>(u)] =
        unit_rows(basis, {u / n + 1, u % n + 1}, static_cast<std::size_t>(u));
  return flatten(per_unit);
}

std::vector<SparseVector> invariant_subspace(int p, int q, int n, const Caps& caps) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative bidegree");
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  caps.check_degree(p + q);
  caps.check_n(n);
  auto basis = MonomialBasis::get({n, p, q});
  std::vector<SparseVector> out;
  for (auto& v : nullspace(lie_operator_rows(*basis), basis->size()))
    out.push_back(SparseVector{basis->key(), std::move(v)});
  return out;
}

}  // namespace glinv
