#include "glinv/schurweyl.hpp"

#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "glinv/errors.hpp"

namespace glinv {

namespace {

void check_phi_inputs(const Permutation& rho, SlotSplit split, int n, const Caps& caps) {
  if (split.p < 0 || split.q < 0) throw std::invalid_argument("negative slot split");
  if (rho.degree() != split.r())
    throw SizeMismatch("permutation degree " + std::to_string(rho.degree()) +
                       " does not match p+q=" + std::to_string(split.r()));
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  caps.check_degree(split.r());
  caps.check_tuples(n, split.r());
}

long long tuple_count(int n, int r) {
  long long total = 1;
  for (int k = 0; k < r; ++k) total *= n;
  return total;
}

using Accumulator = std::map<Monomial, long long>;

// Adds the contributions of tuples [begin, end) into acc.
void accumulate_tuples(const Permutation& rho, SlotSplit split, int n, long long begin,
                       long long end, Accumulator& acc) {
  const int r = split.r();
  const Permutation inv = inverse(rho);
  std::vector<int> j(static_cast<std::size_t>(r));
  std::vector<VarCode> xs(static_cast<std::size_t>(split.p));
  std::vector<VarCode> dxs(static_cast<std::size_t>(split.q));
  for (long long t = begin; t < end; ++t) {
    long long rest = t;
    for (int k = 0; k < r; ++k) {
      j[static_cast<std::size_t>(k)] = static_cast<int>(rest % n) + 1;
      rest /= n;
    }
    for (int k = 1; k <= r; ++k) {
      VarCode v = encode({j[static_cast<std::size_t>(k - 1)],
                          j[static_cast<std::size_t>(inv(k) - 1)]});
      if (split.symmetric(k))
        xs[static_cast<std::size_t>(k - 1)] = v;
      else
        dxs[static_cast<std::size_t>(k - 1 - split.p)] = v;
    }
    auto built = Monomial::build(xs, dxs);
    if (!built) continue;
    acc[built->first] += built->second;
  }
}

Form to_form(const Accumulator& acc, int n) {
  Form out(n);
  for (const auto& [m, c] : acc)
    if (c != 0) out.add_term(m, Rational(static_cast<long>(c)));
  return out;
}

}  // namespace

Form phi_form_serial(const Permutation& rho, SlotSplit split, int n, const Caps& caps) {
  check_phi_inputs(rho, split, n, caps);
  Accumulator acc;
  accumulate_tuples(rho, split, n, 0, tuple_count(n, split.r()), acc);
  return to_form(acc, n);
}

Form phi_form(const Permutation& rho, SlotSplit split, int n, const Caps& caps) {
  check_phi_inputs(rho, split, n, caps);
  const long long total = tuple_count(n, split.r());
  Accumulator merged;
#pragma omp parallel
  {
    Accumulator local;
#ifdef _OPENMP
    const long long threads = omp_get_num_threads();
    const long long id = omp_get_thread_num();
#else
    const long long threads = 1;
    const long long id = 0;
#endif
    const long long chunk = (total + threads - 1) / threads;
    const long long begin = std::min(total, id * chunk);
    const long long end = std::min(total, begin + chunk);
    accumulate_tuples(rho, split, n, begin, end, local);
    // Integer sums: the merge order cannot change the result.
#pragma omp critical(glinv_phi_merge)
    for (const auto& [m, c] : local) merged[m] += c;
  }
  return to_form(merged, n);
}

bool CycleFactorization::is_zero() const {
  for (const auto& f : factors)
    if (f.is_zero) return true;
  return false;
}

CycleFactorization cycle_factorization(const Permutation& rho, SlotSplit split) {
  if (split.p < 0 || split.q < 0) throw std::invalid_argument("negative slot split");
  if (rho.degree() != split.r())
    throw SizeMismatch("permutation degree " + std::to_string(rho.degree()) +
                       " does not match p+q=" + std::to_string(split.r()));
  const Permutation inv = inverse(rho);
  CycleFactorization out;
  std::vector<int> dx_order;
  for (const auto& cycle : cycle_decomposition(rho)) {
    int start = 0;
    for (int slot : cycle.slots) {
      if (!split.symmetric(slot) && (start == 0 || slot < start)) start = slot;
    }
    if (start == 0) {
      out.factors.push_back(
          canonical_label(GeneratorKind::tau, {static_cast<int>(cycle.length())}));
      continue;
    }
    // Walk start, rho^-1(start), ...; each dX collects the symmetric slots
    // seen since the previous dX. The run after the last dX wraps to the first.
    std::vector<int> exponents;
    int run = 0;
    int k = start;
    do {
      if (split.symmetric(k)) {
        ++run;
      } else {
        dx_order.push_back(k);
        exponents.push_back(run);
        run = 0;
      }
      k = inv(k);
    } while (k != start);
    exponents.front() += run;
    GeneratorLabel label = canonical_label(GeneratorKind::omega, std::move(exponents));
    out.sign *= label.sign;
    out.factors.push_back(std::move(label));
  }
  out.sign *= sorting_sign(std::move(dx_order));
  return out;
}

Form factorization_form(const CycleFactorization& f, int n) {
  Form out = Form::constant(n, Rational(f.sign));
  if (f.is_zero()) return Form(n);
  for (const auto& label : f.factors) out = wedge(out, generator_form(label, n));
  return out;
}

std::vector<std::pair<Permutation, Form>> spanning_set_serial(SlotSplit split, int n,
                                                              const Caps& caps) {
  caps.check_degree(split.r());
  caps.check_n(n);
  std::vector<std::pair<Permutation, Form>> out;
  for (auto& rho : enumerate_symmetric_group(split.r())) {
    Form f = phi_form_serial(rho, split, n, caps);
    out.emplace_back(std::move(rho), std::move(f));
  }
  return out;
}

std::vector<std::pair<Permutation, Form>> spanning_set(SlotSplit split, int n, const Caps& caps) {
  caps.check_degree(split.r());
  caps.check_n(n);
  caps.check_tuples(n, split.r());
  std::vector<Permutation> perms = enumerate_symmetric_group(split.r());
  std::vector<Form> forms(perms.size(), Form(n));
  const auto count = static_cast<long long>(perms.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i)
    forms[static_cast<std::size_t>(i)] =
        phi_form_serial(perms[static_cast<std::size_t>(i)], split, n, caps);
  std::vector<std::pair<Permutation, Form>> out;
  out.reserve(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i)
    out.emplace_back(std::move(perms[i]), std::move(forms[i]));
  return out;
}

}  // namespace glinv
