#include "glinv/generators.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "glinv/errors.hpp"

namespace glinv {

int GeneratorLabel::poly_degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

int GeneratorLabel::form_degree() const {
  return kind == GeneratorKind::tau ? 0 : static_cast<int>(exponents.size());
}

bool GeneratorLabel::operator<(const GeneratorLabel& o) const {
  if (kind != o.kind) return kind == GeneratorKind::tau;
  if (exponents.size() != o.exponents.size()) return exponents.size() < o.exponents.size();
  return exponents < o.exponents;
}

GeneratorLabel canonical_label(GeneratorKind kind, std::vector<int> exponents) {
  if (exponents.empty()) throw std::invalid_argument("generator needs at least one exponent");
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative generator exponent");
  GeneratorLabel label{kind, exponents, 1, false};
  if (kind == GeneratorKind::tau) {
    if (exponents.size() != 1 || exponents[0] < 1)
      throw std::invalid_argument("tau takes a single exponent >= 1");
    return label;
  }
  // omega(l1..lp) = (-1)^(p-1) omega(l2..lp l1): rotating left by s costs
  // (-1)^((p-1)s).
  const std::size_t p = exponents.size();
  auto rotation_sign = [p](std::size_t s) { return ((p - 1) * s) % 2 == 0 ? 1 : -1; };
  std::size_t best = 0;
  std::vector<int> rotated = exponents;
  for (std::size_t s = 1; s < p; ++s) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (rotated < label.exponents) {
      label.exponents = rotated;
      best = s;
    }
    if (rotated == exponents && rotation_sign(s) < 0) label.is_zero = true;
  }
  label.sign = rotation_sign(best);
  return label;
}

std::string to_string(const GeneratorLabel& label) {
  std::string out = label.kind == GeneratorKind::tau ? "tau:" : "omega:";
  for (std::size_t i = 0; i < label.exponents.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(label.exponents[i]);
  }
  return out;
}

GeneratorLabel parse_label(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("malformed label '" + std::string(text) + "': expected kind:exponents");
  std::string_view kind_text = text.substr(0, colon);
  GeneratorLabel label;
  if (kind_text == "tau")
    label.kind = GeneratorKind::tau;
  else if (kind_text == "omega")
    label.kind = GeneratorKind::omega;
  else
    throw ParseError("unknown generator kind '" + std::string(kind_text) + "'");
  std::string_view rest = text.substr(colon + 1);
  for (;;) {
    auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    if (token.empty() || token.size() > 6 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("malformed exponent '" + std::string(token) + "' in label '" +
                       std::string(text) + "'");
    label.exponents.push_back(std::stoi(std::string(token)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (label.kind == GeneratorKind::tau && (label.exponents.size() != 1 || label.exponents[0] < 1))
    throw ParseError("tau takes a single exponent >= 1 in '" + std::string(text) + "'");
  return label;
}

namespace {

// X^l for l = 0..max, built incrementally.
std::vector<FormMatrix> powers_of_x(int n, int max_exponent) {
  std::vector<FormMatrix> out;
  out.push_back(FormMatrix::identity(n));
  FormMatrix x = coordinate_matrix(n);
  for (int l = 1; l <= max_exponent; ++l) out.push_back(mat_mul(out.back(), x));
  return out;
}

}  // namespace

Form tau(int exponent, int n) {
  if (exponent < 1) throw std::invalid_argument("tau^0 = n is a constant, not a generator");
  return trace(mat_pow(coordinate_matrix(n), exponent));
}

Form omega(std::span<const int> exponents, int n) {
  if (exponents.empty()) throw std::invalid_argument("omega needs at least one exponent");
  int top = 0;
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative omega exponent");
    top = std::max(top, e);
  }
  auto powers = powers_of_x(n, top);
  FormMatrix dx = differential_matrix(n);
  FormMatrix product = FormMatrix::identity(n);
  for (int e : exponents) {
    product = mat_mul(product, powers[static_cast<std::size_t>(e)]);
    product = mat_mul(product, dx);
  }
  return trace(product);
}

Form generator_form(const GeneratorLabel& label, int n) {
  if (label.kind == GeneratorKind::tau) return tau(label.exponents.at(0), n);
  return omega(label.exponents, n);
}

namespace {

// Polynomial in t with Form coefficients, index = power of t.
using TPoly = std::vector<Form>;

TPoly tpoly_mul(const TPoly& a, const TPoly& b, int n) {
  TPoly out(a.size() + b.size() - 1, Form(n));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += wedge(a[i], b[j]);
  return out;
}

void tpoly_add(TPoly& acc, const TPoly& b, int sign) {
  if (acc.size() < b.size()) acc.resize(b.size(), Form(b.front().n()));
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sign > 0)
      acc[i] += b[i];
    else
      acc[i] -= b[i];
  }
}

// Laplace expansion along the first row of the given rows/columns.
TPoly cofactor_det(const std::vector<std::vector<TPoly>>& m, std::vector<int> rows,
                   std::vector<int> cols, int n) {
  if (rows.empty()) return TPoly{Form::constant(n, Rational(1))};
  const int row = rows.front();
  std::vector<int> rest_rows(rows.begin() + 1, rows.end());
  TPoly det{Form(n)};
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const TPoly& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[c])];
    bool zero = std::all_of(entry.begin(), entry.end(), [](const Form& f) { return f.is_zero(); });
    if (zero) continue;
    std::vector<int> rest_cols = cols;
    rest_cols.erase(rest_cols.begin() + static_cast<std::ptrdiff_t>(c));
    TPoly minor = cofactor_det(m, rest_rows, rest_cols, n);
    tpoly_add(det, tpoly_mul(entry, minor, n), c % 2 == 0 ? 1 : -1);
  }
  return det;
}

}  // namespace

Form sigma(int k, int n) {
  if (k < 1 || k > n)
    throw std::out_of_range("sigma_k needs 1 <= k <= n, got k=" + std::to_string(k));
  // Entries of t I + X as polynomials in t.
  std::vector<std::vector<TPoly>> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      TPoly entry{Form::x(n, i + 1, j + 1)};
      if (i == j) entry.push_back(Form::constant(n, Rational(1)));
      m[static_cast<std::size_t>(i)].push_back(std::move(entry));
    }
  }
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  TPoly det = cofactor_det(m, idx, idx, n);
  const auto power = static_cast<std::size_t>(n - k);
  return power < det.size() ? det[power] : Form(n);
}

Form newton_identity_residual(int k, int n) {
  if (k < 1 || k > n)
    throw std::out_of_range("Newton identity needs 1 <= k <= n, got k=" + std::to_string(k));
  Form residual = scale(Rational(k), sigma(k, n));
  for (int i = 1; i <= k; ++i) {
    Form lower = k - i == 0 ? Form::constant(n, Rational(1)) : sigma(k - i, n);
    Form term = wedge(lower, tau(i, n));
    if ((i - 1) % 2 == 0)
      residual -= term;
    else
      residual += term;
  }
  return residual;
}

namespace {

// Weak compositions of total into parts nonnegative parts.
void compositions(int total, int parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(current);
    return;
  }
  for (int v = 0; v <= total; ++v) {
    current.push_back(v);
    compositions(total - v, parts - 1, current, out);
    current.pop_back();
  }
}

std::mutex generator_cache_mutex;
std::map<std::pair<std::string, int>, Form> generator_cache;

Form cached_generator_form(const GeneratorLabel& label, int n) {
  auto key = std::make_pair(to_string(label), n);
  {
    std::lock_guard lock(generator_cache_mutex);
    if (auto it = generator_cache.find(key); it != generator_cache.end()) return it->second;
  }
  Form f = generator_form(label, n);
  std::lock_guard lock(generator_cache_mutex);
  return generator_cache.try_emplace(key, std::move(f)).first->second;
}

}  // namespace

std::vector<GeneratorLabel> canonical_generators(int p, int q) {
  std::vector<GeneratorLabel> out;
  if (q == 0) {
    if (p >= 1) out.push_back(canonical_label(GeneratorKind::tau, {p}));
    return out;
  }
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> all;
  std::vector<int> current;
  compositions(p, q, current, all);
  for (auto& exps : all) {
    GeneratorLabel label = canonical_label(GeneratorKind::omega, exps);
    if (label.is_zero || !seen.insert(label.exponents).second) continue;
    label.sign = 1;
    out.push_back(std::move(label));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string GeneratorProduct::label() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += '*';
    out += to_string(f);
  }
  return out;
}

namespace {

void extend_products(const std::vector<GeneratorLabel>& pool, std::size_t start, int p, int q,
                     std::vector<GeneratorLabel>& chosen,
                     std::vector<std::vector<GeneratorLabel>>& out) {
  if (p == 0 && q == 0) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    const auto& g = pool[i];
    if (g.poly_degree() > p || g.form_degree() > q) continue;
    chosen.push_back(g);
    // Odd-degree elements square to zero, so they are never repeated.
    std::size_t next = g.form_degree() % 2 == 1 ? i + 1 : i;
    extend_products(pool, next, p - g.poly_degree(), q - g.form_degree(), chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<GeneratorProduct> enumerate_generator_products(int p, int q, int n, const Caps& caps) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative bidegree");
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  caps.check_degree(p + q);
  caps.check_n(n);

  std::vector<GeneratorLabel> pool;
  for (int a = 0; a <= p; ++a)
    for (int b = 0; b <= q; ++b)
      for (auto& g : canonical_generators(a, b)) pool.push_back(std::move(g));
  std::sort(pool.begin(), pool.end());

  std::vector<std::vector<GeneratorLabel>> multisets;
  std::vector<GeneratorLabel> chosen;
  extend_products(pool, 0, p, q, chosen, multisets);

  std::vector<GeneratorProduct> out;
  out.reserve(multisets.size());
  for (auto& factors : multisets) {
    Form f = Form::constant(n, Rational(1));
    for (const auto& g : factors) f = wedge(f, cached_generator_form(g, n));
    out.push_back({std::move(factors), std::move(f)});
  }
  return out;
}

}  // namespace glinv
