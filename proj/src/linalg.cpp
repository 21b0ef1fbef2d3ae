#include "glinv/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "glinv/errors.hpp"

namespace glinv {

namespace {

// Combinations with repetition of `count` items from codes, nondecreasing.
void x_multisets(const std::vector<VarCode>& codes, int count, std::size_t start,
                 std::vector<VarCode>& cur, std::vector<std::vector<VarCode>>& out) {
  if (count == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < codes.size(); ++i) {
    cur.push_back(codes[i]);
    x_multisets(codes, count - 1, i, cur, out);
    cur.pop_back();
  }
}

void dx_subsets(const std::vector<VarCode>& codes, int count, std::size_t start,
                std::vector<VarCode>& cur, std::vector<std::vector<VarCode>>& out) {
  if (count == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < codes.size(); ++i) {
    cur.push_back(codes[i]);
    dx_subsets(codes, count - 1, i + 1, cur, out);
    cur.pop_back();
  }
}

void require_common_basis(std::span<const SparseVector> vs, const BasisKey* expected) {
  for (const auto& v : vs) {
    if (expected && v.basis != *expected) throw SizeMismatch("vectors over different bases");
    expected = &v.basis;
  }
}

void make_primitive(IntegerRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*row - b*pivot, dropping zeros.
IntegerRow combine(const IntegerRow& row, const Integer& a, const IntegerRow& pivot,
                   const Integer& b) {
  IntegerRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Integer v;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

using RationalRow = std::vector<std::pair<std::size_t, Rational>>;

// row - factor * pivot.
RationalRow subtract_multiple(const RationalRow& row, const Rational& factor,
                              const RationalRow& pivot) {
  RationalRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Rational v = row[i].second - factor * pivot[j].second;
      if (!is_zero(v)) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MonomialBasis::MonomialBasis(BasisKey key) : key_(key) {
  if (key.n < 1 || key.p < 0 || key.q < 0) throw std::invalid_argument("invalid basis key");
  std::vector<VarCode> codes;
  for (int i = 1; i <= key.n; ++i)
    for (int j = 1; j <= key.n; ++j) codes.push_back(encode({i, j}));
  std::vector<std::vector<VarCode>> xs;
  std::vector<std::vector<VarCode>> dxs;
  std::vector<VarCode> cur;
  x_multisets(codes, key.p, 0, cur, xs);
  dx_subsets(codes, key.q, 0, cur, dxs);
  for (const auto& x : xs)
    for (const auto& d : dxs) monomials_.push_back(Monomial::build(x, d)->first);
  std::sort(monomials_.begin(), monomials_.end());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(BasisKey key) {
  static std::mutex mutex;
  static std::map<BasisKey, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_shared<const MonomialBasis>(key);
  return slot;
}

std::optional<std::size_t> MonomialBasis::find(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector vectorize(const Form& a, const MonomialBasis& basis) {
  if (a.n() != basis.key().n)
    throw SizeMismatch("form over n=" + std::to_string(a.n()) + " against basis over n=" +
                       std::to_string(basis.key().n));
  SparseVector v{basis.key(), {}};
  for (const auto& [m, c] : a.terms()) {
    auto idx = basis.find(m);
    if (!idx)
      throw std::invalid_argument("form has a term of bidegree (" +
                                  std::to_string(m.poly_degree()) + "," +
                                  std::to_string(m.form_degree()) + ") outside the basis (" +
                                  std::to_string(basis.key().p) + "," +
                                  std::to_string(basis.key().q) + ")");
    v.entries.emplace_back(*idx, c);
  }
  std::sort(v.entries.begin(), v.entries.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return v;
}

Form devectorize(const SparseVector& v, const MonomialBasis& basis) {
  if (v.basis != basis.key()) throw SizeMismatch("vector over a different basis");
  Form out(basis.key().n);
  for (const auto& [i, c] : v.entries) out.add_term(basis[i], c);
  return out;
}

IntegerRow to_integer_row(const SparseVector& v) {
  Integer lcm = 1;
  for (const auto& [i, c] : v.entries)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  IntegerRow row;
  row.reserve(v.entries.size());
  for (const auto& [i, c] : v.entries) row.emplace_back(i, c.get_num() * (lcm / c.get_den()));
  make_primitive(row);
  return row;
}

bool FractionFreeEchelon::insert(IntegerRow row) {
  make_primitive(row);
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    const IntegerRow& pivot = it->second;
    Integer a = pivot.front().second;
    Integer b = row.front().second;
    Integer g = gcd(a, b);
    a /= g;
    b /= g;
    row = combine(row, a, pivot, b);
    make_primitive(row);
  }
  if (row.empty()) return false;
  std::size_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

std::size_t rank(std::span<const SparseVector> vs) {
  require_common_basis(vs, nullptr);
  FractionFreeEchelon echelon;
  for (const auto& v : vs) echelon.insert(to_integer_row(v));
  return echelon.rank();
}

std::optional<std::vector<Rational>> solve_in_span(const SparseVector& target,
                                                   std::span<const SparseVector> vs) {
  require_common_basis(vs, &target.basis);
  // Each pivot row carries the combination of inputs that produced it.
  struct Pivot {
    RationalRow row;
    RationalRow combination;
  };
  std::map<std::size_t, Pivot> pivots;
  auto reduce = [&pivots](RationalRow& row, RationalRow& combination) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) return;
      Rational factor = row.front().second / it->second.row.front().second;
      row = subtract_multiple(row, factor, it->second.row);
      combination = subtract_multiple(combination, factor, it->second.combination);
    }
  };
  for (std::size_t i = 0; i < vs.size(); ++i) {
    RationalRow row = vs[i].entries;
    RationalRow combination{{i, Rational(1)}};
    reduce(row, combination);
    if (row.empty()) continue;
    std::size_t lead = row.front().first;
    pivots.emplace(lead, Pivot{std::move(row), std::move(combination)});
  }
  RationalRow row = target.entries;
  RationalRow combination;
  reduce(row, combination);
  if (!row.empty()) return std::nullopt;
  // target - sum(combination) reduced to zero.
  std::vector<Rational> coefficients(vs.size(), Rational(0));
  for (const auto& [i, c] : combination) coefficients[i] = -c;
  return coefficients;
}

bool span_equal(std::span<const SparseVector> us, std::span<const SparseVector> vs) {
  std::vector<SparseVector> both(us.begin(), us.end());
  both.insert(both.end(), vs.begin(), vs.end());
  const std::size_t ru = rank(us);
  const std::size_t rv = rank(vs);
  return ru == rv && rank(both) == ru;
}

std::vector<std::vector<std::pair<std::size_t, Rational>>> nullspace(std::vector<IntegerRow> rows,
                                                                     std::size_t columns) {
  for (const auto& row : rows)
    for (const auto& [c, v] : row)
      if (c >= columns) throw std::out_of_range("row entry beyond column count");
  std::stable_sort(rows.begin(), rows.end(),
                   [](const IntegerRow& a, const IntegerRow& b) { return a.size() < b.size(); });
  FractionFreeEchelon echelon;
  for (auto& row : rows) echelon.insert(std::move(row));
  const auto& pivots = echelon.pivots();

  std::vector<std::vector<std::pair<std::size_t, Rational>>> out;
  for (std::size_t free = 0; free < columns; ++free) {
    if (pivots.count(free)) continue;
    // Back substitution from the last pivot column towards the first.
    std::map<std::size_t, Rational> x;
    x.emplace(free, Rational(1));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      if (it->first > free) continue;
      const IntegerRow& row = it->second;
      Rational sum = 0;
      for (std::size_t k = 1; k < row.size(); ++k) {
        auto xi = x.find(row[k].first);
        if (xi != x.end()) sum += Rational(row[k].second) * xi->second;
      }
      if (!is_zero(sum)) x.emplace(it->first, -sum / Rational(row.front().second));
    }
    out.emplace_back(x.begin(), x.end());
  }
  return out;
}

}  // namespace glinv
