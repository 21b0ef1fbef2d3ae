// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any fails. Expected values come from the brute-force oracles, never
// from the code under test.
#include <omp.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "glinv/caps.hpp"
#include "glinv/cli.hpp"
#include "glinv/form_io.hpp"
#include "glinv/forms.hpp"
#include "glinv/generators.hpp"
#include "glinv/invariance.hpp"
#include "glinv/linalg.hpp"
#include "glinv/perm.hpp"
#include "glinv/schurweyl.hpp"
#include "glinv/verify.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace glinv;

namespace {

// Collects the first few failure messages of a criterion.
struct Check {
  int failures = 0;
  int checks = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

int cycle_count(const Permutation& rho) {
  const int r = rho.degree();
  std::vector<bool> seen(static_cast<std::size_t>(r + 1), false);
  int count = 0;
  for (int s = 1; s <= r; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++count;
    for (int t = s; !seen[static_cast<std::size_t>(t)]; t = rho(t)) seen[static_cast<std::size_t>(t)] = true;
  }
  return count;
}

// All exponent lists of length len with sum <= max_sum.
std::vector<std::vector<int>> exponent_lists(int len, int max_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int l = 0; l <= left; ++l) {
      cur.push_back(l);
      rec(left - l);
      cur.pop_back();
    }
  };
  rec(max_sum);
  return out;
}

std::size_t partitions(int p, int largest) {
  if (p == 0) return 1;
  std::size_t total = 0;
  for (int part = std::min(p, largest); part >= 1; --part) total += partitions(p - part, part);
  return total;
}

Form random_form(std::mt19937& rng, int n, int terms) {
  std::uniform_int_distribution<int> idx(1, n), deg(0, 2), coeff(-4, 4), den(1, 3);
  Form f(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<VarCode> xs;
    std::vector<VarCode> dxs;
    for (int k = deg(rng); k > 0; --k) xs.push_back(encode({idx(rng), idx(rng)}));
    for (int k = deg(rng); k > 0; --k) dxs.push_back(encode({idx(rng), idx(rng)}));
    auto m = Monomial::build(xs, dxs);
    if (!m) continue;
    f.add_term(m->first, make_rational(coeff(rng) * m->second, den(rng)));
  }
  return f;
}

oracle::Poly oracle_generator(const GeneratorLabel& label, int n) {
  if (label.kind == GeneratorKind::tau) return oracle::tau(label.exponents.at(0), n);
  return oracle::omega(label.exponents, n);
}

std::vector<SparseVector> vectors_of(const std::vector<Form>& forms, const MonomialBasis& basis) {
  std::vector<SparseVector> out;
  for (const auto& f : forms) out.push_back(vectorize(f, basis));
  return out;
}

// 1. Three-way span equality.
void span_equality(Check& c) {
  auto cell = [&](int n, int p, int q) {
    auto basis = MonomialBasis::get({n, p, q});
    std::vector<Form> products;
    for (auto& g : enumerate_generator_products(p, q, n)) products.push_back(g.form);
    std::vector<Form> sw;
    for (auto& [rho, f] : spanning_set({p, q}, n)) sw.push_back(f);
    auto gv = vectors_of(products, *basis);
    auto sv = vectors_of(sw, *basis);
    auto kernel = invariant_subspace(p, q, n);
    std::ostringstream tag;
    tag << "n=" << n << " p=" << p << " q=" << q;
    c.expect(span_equal(gv, sv), tag.str() + ": generators vs Schur-Weyl");
    c.expect(span_equal(sv, kernel), tag.str() + ": Schur-Weyl vs kernel");
    c.expect(rank(gv) == kernel.size(), tag.str() + ": rank vs kernel dim");
    // The kernel itself against the dense oracle on the smaller cells.
    if (basis->size() <= 400)
      c.expect(kernel.size() == oracle::invariant_dimension(n, p, q), tag.str() + ": kernel dim vs oracle");
  };
  for (int n = 1; n <= 2; ++n)
    for (int d = 0; d <= 5; ++d)
      for (int p = d; p >= 0; --p) cell(n, p, d - p);
  for (int d = 0; d <= 4; ++d)
    for (int p = d; p >= 0; --p) cell(3, p, d - p);
}

// 2. Cycle formula against the direct evaluation.
void cycle_formula(Check& c) {
  for (int n = 2; n <= 3; ++n)
    for (int r = 0; r <= 5; ++r)
      for (int p = 0; p <= r; ++p) {
        SlotSplit split{p, r - p};
        for (const auto& rho : enumerate_symmetric_group(r)) {
          auto fact = cycle_factorization(rho, split);
          std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " rho=" + to_string(rho);
          c.expect(static_cast<int>(fact.factors.size()) == cycle_count(rho), tag + ": factor count");
          Form direct = phi_form(rho, split, n);
          c.expect(factorization_form(fact, n) == direct, tag + ": product vs phi_form");
          if (fact.is_zero()) c.expect(direct.is_zero(), tag + ": zero factor but nonzero form");
        }
      }
}

// 3. Generators are invariant, infinitesimally and under conjugation.
void generator_invariance(Check& c) {
  std::vector<std::pair<std::string, Form>> gens;
  auto collect = [&](int n) {
    gens.clear();
    for (int l = 1; l <= 4; ++l) gens.emplace_back("tau:" + std::to_string(l), tau(l, n));
    for (int p = 1; p <= 3; ++p)
      for (const auto& ls : exponent_lists(p, 3)) {
        std::string name = "omega:";
        for (int l : ls) name += std::to_string(l) + ",";
        gens.emplace_back(name, omega(ls, n));
      }
  };
  for (int n = 1; n <= 3; ++n) {
    collect(n);
    for (const auto& [name, f] : gens)
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          std::string tag = name + " n=" + std::to_string(n) + " E[" + std::to_string(a) + "," + std::to_string(b) + "]";
          c.expect(lie_derivative(f, {a, b}).is_zero(), tag);
          c.expect(oracle::lie(oracle::from_form(f), a, b).empty(), tag + " (oracle)");
        }
  }
  RationalMatrix unipotent(2, {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
  RationalMatrix general(2, {{make_rational(1, 2), Rational(2)}, {Rational(3), Rational(-1)}});
  c.expect(general.determinant() == make_rational(-13, 2), "determinant of the test matrix");
  collect(2);
  for (const auto& g : {unipotent, general})
    for (const auto& [name, f] : gens) c.expect(conjugation_pullback(f, g) == f, name + " under conjugation");
}

// 4. Cyclic symmetry, vanishing squares, d tau and d^2 = 0.
void identities(Check& c) {
  for (int n = 1; n <= 3; ++n) {
    for (int p = 1; p <= 4; ++p) {
      int max_sum = n == 3 ? 7 - p : 8 - p;
      if (max_sum < 0) continue;
      for (const auto& ls : exponent_lists(p, max_sum)) {
        std::vector<int> rotated(ls.begin() + 1, ls.end());
        rotated.push_back(ls.front());
        Form lhs = omega(ls, n);
        Form rhs = omega(rotated, n);
        if ((p - 1) % 2 == 1) rhs = -rhs;
        c.expect(lhs == rhs, "cyclic identity n=" + std::to_string(n) + " p=" + std::to_string(p));
        c.expect(oracle::from_form(lhs) == oracle::omega(ls, n), "omega vs oracle");
      }
    }
    for (int l = 0; l <= 4; ++l) {
      std::vector<int> twice{l, l};
      c.expect(omega(twice, n).is_zero(), "omega^{ll} n=" + std::to_string(n) + " l=" + std::to_string(l));
    }
    for (int l = 1; l <= 4; ++l) {
      std::vector<int> one{l - 1};
      c.expect(exterior_derivative(tau(l, n)) == Rational(l) * omega(one, n),
               "d tau^" + std::to_string(l) + " n=" + std::to_string(n));
    }
  }
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 3;
    Form f = random_form(rng, n, 6);
    c.expect(exterior_derivative(exterior_derivative(f)).is_zero(), "d(d f) on random form");
  }
}

// 5. Newton's identities; sigma against the Leibniz-expansion oracle.
void newton(Check& c) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= n; ++k) {
      std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      c.expect(newton_identity_residual(k, n).is_zero(), "residual " + tag);
      c.expect(oracle::from_form(sigma(k, n)) == oracle::sigma(k, n), "sigma " + tag);
    }
}

// 6. Stable-range dimensions and the n = 1 collapse.
void dimensions(Check& c) {
  Caps wide;
  wide.max_n = 4;
  for (int p = 1; p <= 4; ++p) {
    const std::size_t expected = partitions(p, p);
    for (int n = std::max(p, 1); n <= std::max(p, 3); ++n) {
      Caps caps = n > 3 ? wide : Caps{};
      auto basis = MonomialBasis::get({n, p, 0});
      std::vector<Form> sw;
      for (auto& [rho, f] : spanning_set({p, 0}, n, caps)) sw.push_back(f);
      std::vector<Form> products;
      for (auto& g : enumerate_generator_products(p, 0, n, caps)) products.push_back(g.form);
      std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
      c.expect(rank(vectors_of(sw, *basis)) == expected, tag + ": Schur-Weyl rank");
      c.expect(rank(vectors_of(products, *basis)) == expected, tag + ": generator rank");
      if (n <= 3) c.expect(invariant_subspace(p, 0, n).size() == expected, tag + ": kernel dim");
    }
  }
  for (int p = 2; p <= 4; ++p)
    for (const auto& ls : exponent_lists(p, 3))
      c.expect(omega(ls, 1).is_zero(), "omega of length " + std::to_string(p) + " at n=1");
  for (int d = 0; d <= 5; ++d)
    for (int q = 0; q <= d; ++q) {
      std::size_t expected = q <= 1 ? 1 : 0;
      std::string tag = "n=1 p=" + std::to_string(d - q) + " q=" + std::to_string(q);
      c.expect(invariant_subspace(d - q, q, 1).size() == expected, tag + ": kernel dim");
      c.expect(oracle::invariant_dimension(1, d - q, q) == expected, tag + ": oracle dim");
    }
}

std::string run(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = run_cli(args, out, err);
  return out.str();
}

// 7. Random combinations survive decompose and re-evaluation.
void round_trip(Check& c) {
  const int n = 2;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  auto path = std::filesystem::temp_directory_path() / ("glinv_acceptance_" + std::to_string(::getpid()) + ".json");
  for (int d = 0; d <= 4; ++d)
    for (int p = d; p >= 0; --p) {
      const int q = d - p;
      auto products = enumerate_generator_products(p, q, n);
      for (int trial = 0; trial < 25; ++trial) {
        std::string tag = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " trial " + std::to_string(trial);
        Form target(n);
        for (const auto& g : products) target += make_rational(num(rng), den(rng)) * g.form;
        {
          std::ofstream file(path);
          file << to_json(target).dump();
        }
        int code = 0;
        std::string out = run({"decompose", path.string(), "--p", std::to_string(p), "--q", std::to_string(q),
                               "--format", "structured"},
                              code);
        c.expect(code == kExitOk, tag + ": exit code " + std::to_string(code));
        if (code != kExitOk) continue;
        auto j = nlohmann::json::parse(out);
        // Rebuild from the printed labels with the oracle arithmetic.
        oracle::Poly rebuilt;
        for (const auto& term : j.at("coefficients")) {
          Rational coeff = parse_rational(term.at("c").get<std::string>());
          std::string label = term.at("product");
          oracle::Poly product;
          product[{{}, {}}] = Rational(1);
          if (label != "1") {
            std::size_t start = 0;
            while (start <= label.size()) {
              std::size_t end = label.find('*', start);
              if (end == std::string::npos) end = label.size();
              product = oracle::multiply(product, oracle_generator(parse_label(label.substr(start, end - start)), n));
              start = end + 1;
            }
          }
          rebuilt = oracle::sum(rebuilt, oracle::scaled(product, coeff));
        }
        c.expect(rebuilt == oracle::from_form(target), tag + ": re-evaluation");
      }
    }
  std::filesystem::remove(path);
}

// 8. Verify reports are byte-identical across runs and thread counts.
void determinism(Check& c) {
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "--n", "2", "--max", "5"},
      {"verify", "--n", "3", "--max", "4"},
      {"verify", "--n", "2", "--max", "4", "--format", "structured"},
  };
  const int saved = omp_get_max_threads();
  for (const auto& args : commands) {
    int code = 0;
    omp_set_num_threads(1);
    std::string first = run(args, code);
    c.expect(code == kExitOk, "verify exit code");
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      int again = 0;
      c.expect(run(args, again) == first && again == code,
               "verify output differs with " + std::to_string(threads) + " threads");
    }
  }
  omp_set_num_threads(saved);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"three-way span equality (n<=2 deg<=5, n=3 deg<=4)", span_equality},
      {"cycle formula equals direct evaluation (r<=5, n=2,3)", cycle_formula},
      {"generator invariance (Lie derivatives, conjugation)", generator_invariance},
      {"algebraic identities (cyclic, omega^{ll}, d tau, d^2)", identities},
      {"Newton identities (k<=n<=3)", newton},
      {"stable-range dimensions and n=1 collapse", dimensions},
      {"decomposition round trip (n=2, deg<=4, 25 per cell)", round_trip},
      {"deterministic verify output", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      ++check.failures;
      check.notes.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.failures) ++failed;
    std::printf("criterion %zu: %s  %s  [%d checks, %.1fs]\n", i + 1, check.failures ? "FAIL" : "PASS",
                criteria[i].first.c_str(), check.checks, seconds);
    for (const auto& note : check.notes) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
