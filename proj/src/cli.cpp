#include "glinv/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "glinv/caps.hpp"
#include "glinv/errors.hpp"
#include "glinv/form_io.hpp"
#include "glinv/generators.hpp"
#include "glinv/invariance.hpp"
#include "glinv/linalg.hpp"
#include "glinv/perm.hpp"
#include "glinv/schurweyl.hpp"
#include "glinv/verify.hpp"

namespace glinv {

namespace {

// Thrown when a mathematical contract the tool relies on is violated.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string caps_spec;
  int n = 2;
  int p = 0;
  int q = 0;
  int k = 1;
  int max_degree = 0;
  bool timing = false;
  std::string label;
  std::string perm;
  std::string mode = "evaluate";
  std::string method = "both";
  std::string file;
  std::string g_file;
};

bool structured(const Options& o) { return o.format == "structured"; }

Caps effective_caps(const Options& o) {
  return o.caps_spec.empty() ? Caps::from_env() : Caps::parse(o.caps_spec);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void print_form(const Form& f, const Options& o, std::ostream& out) {
  if (structured(o))
    out << to_json(f).dump() << '\n';
  else
    out << to_text(f) << '\n';
}

int cmd_gen(const Options& o, std::ostream& out) {
  GeneratorLabel label = parse_label(o.label);
  effective_caps(o).check_n(o.n);
  print_form(generator_form(label, o.n), o, out);
  return kExitOk;
}

int cmd_perm(const Options& o, std::ostream& out) {
  Permutation rho = parse_permutation(o.perm);
  SlotSplit split{o.p, o.q};
  if (rho.degree() != split.r())
    throw ParseError("permutation of degree " + std::to_string(rho.degree()) +
                     " does not match p+q=" + std::to_string(split.r()));
  Caps caps = effective_caps(o);
  if (o.mode == "evaluate") {
    caps.check_n(o.n);
    print_form(phi_form(rho, split, o.n, caps), o, out);
    return kExitOk;
  }
  CycleFactorization f = cycle_factorization(rho, split);
  std::vector<std::string> labels;
  for (const auto& g : f.factors) labels.push_back(to_string(g));
  if (structured(o)) {
    nlohmann::json j = {{"sign", f.sign},
                        {"factors", labels},
                        {"count", labels.size()},
                        {"zero", f.is_zero()}};
    out << j.dump() << '\n';
  } else {
    out << "sign: " << (f.sign > 0 ? "+1" : "-1") << '\n' << "factors:";
    for (const auto& l : labels) out << ' ' << l;
    out << '\n' << "count: " << labels.size() << '\n' << "zero: " << (f.is_zero() ? "true" : "false")
        << '\n';
  }
  return kExitOk;
}

int cmd_dim(const Options& o, std::ostream& out) {
  Caps caps = effective_caps(o);
  if (o.p < 0 || o.q < 0) throw ParseError("negative bidegree");
  caps.check_degree(o.p + o.q);
  caps.check_n(o.n);
  nlohmann::json j = nlohmann::json::object();
  std::vector<std::pair<std::string, std::string>> lines;
  auto basis = MonomialBasis::get({o.n, o.p, o.q});
  std::vector<SparseVector> span_vectors;
  std::vector<SparseVector> kernel;
  if (o.method == "span" || o.method == "both") {
    for (const auto& [rho, f] : spanning_set({o.p, o.q}, o.n, caps))
      span_vectors.push_back(vectorize(f, *basis));
    std::size_t r = rank(span_vectors);
    j["span"] = r;
    lines.emplace_back("span", std::to_string(r));
  }
  if (o.method == "kernel" || o.method == "both") {
    kernel = invariant_subspace(o.p, o.q, o.n, caps);
    j["kernel"] = kernel.size();
    lines.emplace_back("kernel", std::to_string(kernel.size()));
  }
  if (o.method == "both") {
    bool equal = span_equal(span_vectors, kernel);
    j["equal"] = equal;
    lines.emplace_back("equal", equal ? "true" : "false");
  }
  if (structured(o)) {
    out << j.dump() << '\n';
  } else {
    for (const auto& [k, v] : lines) out << k << ": " << v << '\n';
  }
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  Form f = parse_form_auto(read_input(o.file), o.n);
  Caps caps = effective_caps(o);
  caps.check_n(f.n());
  int p = o.p;
  int q = o.q;
  if (!f.is_zero()) {
    auto degree = homogeneous_bidegree(f);
    if (!degree) throw ParseError("input form is not homogeneous");
    if ((o.p || o.q) && *degree != std::make_pair(o.p, o.q))
      throw ParseError("input form has bidegree (" + std::to_string(degree->first) + "," +
                       std::to_string(degree->second) + "), not the requested one");
    p = degree->first;
    q = degree->second;
  }
  if (auto witness = invariance_witness(f)) {
    if (structured(o)) {
      nlohmann::json j = {{"invariant", false}, {"witness", {witness->a, witness->b}}};
      out << j.dump() << '\n';
    } else {
      out << "non-invariant: witness " << to_string(*witness) << '\n';
    }
    return kExitOk;
  }
  auto basis = MonomialBasis::get({f.n(), p, q});
  auto products = enumerate_generator_products(p, q, f.n(), caps);
  std::vector<SparseVector> vectors;
  for (const auto& prod : products) vectors.push_back(vectorize(prod.form, *basis));
  auto coefficients = solve_in_span(vectorize(f, *basis), vectors);
  if (!coefficients)
    throw InternalError("invariant form of bidegree (" + std::to_string(p) + "," +
                        std::to_string(q) + ") is not a combination of generator products");
  if (structured(o)) {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t i = 0; i < products.size(); ++i)
      terms.push_back({{"product", products[i].label()}, {"c", to_string((*coefficients)[i])}});
    nlohmann::json j = {{"invariant", true}, {"p", p}, {"q", q}, {"coefficients", terms}};
    out << j.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < products.size(); ++i)
      out << products[i].label() << ": " << to_string((*coefficients)[i]) << '\n';
  }
  return kExitOk;
}

std::vector<RationalMatrix> default_spot_checks(int n) {
  if (n == 1) return {RationalMatrix(1, {{Rational(2)}})};
  // Unipotent I + E_12, then a block with determinant -2.
  RationalMatrix unipotent = RationalMatrix::identity(n);
  unipotent(1, 2) = 1;
  RationalMatrix scaled = RationalMatrix::identity(n);
  scaled(1, 1) = 1;
  scaled(1, 2) = 2;
  scaled(2, 1) = 3;
  scaled(2, 2) = 4;
  return {unipotent, scaled};
}

int cmd_check_invariance(const Options& o, std::ostream& out) {
  Form f = parse_form_auto(read_input(o.file), o.n);
  effective_caps(o).check_n(f.n());
  std::vector<RationalMatrix> checks;
  if (!o.g_file.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_input(o.g_file));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed matrix file: ") + e.what());
    }
    checks.push_back(rational_matrix_from_json(j));
    if (is_zero(checks.back().determinant())) throw ParseError("conjugating matrix is singular");
  } else {
    checks = default_spot_checks(f.n());
  }
  auto witness = invariance_witness(f);
  std::vector<bool> fixed;
  for (const auto& g : checks) fixed.push_back(conjugation_pullback(f, g) == f);
  if (!witness) {
    for (bool b : fixed)
      if (!b) throw InternalError("Lie-invariant form moved by a conjugation");
  }
  if (structured(o)) {
    nlohmann::json j = {{"invariant", !witness.has_value()}, {"conjugation_fixed", fixed}};
    if (witness) j["witness"] = {witness->a, witness->b};
    out << j.dump() << '\n';
  } else {
    out << "invariant: " << (witness ? "false" : "true") << '\n';
    if (witness) out << "witness: " << to_string(*witness) << '\n';
    for (std::size_t i = 0; i < fixed.size(); ++i)
      out << "conjugation " << i + 1 << ": " << (fixed[i] ? "fixed" : "moved") << '\n';
  }
  return kExitOk;
}

int cmd_newton(const Options& o, std::ostream& out) {
  effective_caps(o).check_n(o.n);
  if (o.k < 1 || o.k > o.n) throw ParseError("newton needs 1 <= k <= n");
  Form residual = newton_identity_residual(o.k, o.n);
  print_form(residual, o, out);
  if (!residual.is_zero()) throw InternalError("Newton identity residual is nonzero");
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.n < 1) throw ParseError("matrix size must be at least 1");
  auto reports = verify_all(o.n, o.max_degree, effective_caps(o));
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  if (structured(o)) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(r.to_json(o.timing));
    out << j.dump() << '\n';
  } else {
    for (const auto& r : reports) out << r.to_text(o.timing) << '\n';
    out << (all_pass ? "all " + std::to_string(reports.size()) + " cells pass"
                     : "verification FAILED")
        << '\n';
  }
  return all_pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariant differential forms on n x n matrices", "glinv"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--caps", o.caps_spec, "Size caps, e.g. degree=6,n=3,tuples=1000000");

  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  auto* gen = app.add_subcommand("gen", "Print tau or omega, e.g. tau:2 or omega:0,1");
  gen->add_option("--n", o.n, "Matrix size")->check(CLI::PositiveNumber);
  gen->add_option("label", o.label, "Generator label")->required();
  add_format(gen);

  auto* perm = app.add_subcommand("perm", "Evaluate or factor the form of a permutation");
  perm->add_option("--n", o.n, "Matrix size")->check(CLI::PositiveNumber);
  perm->add_option("--p", o.p, "Symmetric slots")->check(CLI::NonNegativeNumber);
  perm->add_option("--q", o.q, "Antisymmetric slots")->check(CLI::NonNegativeNumber);
  perm->add_option("permutation", o.perm, "One-line notation, e.g. \"2 3 1\"")->required();
  perm->add_option("--mode", o.mode, "evaluate or factor")
      ->check(CLI::IsMember({"evaluate", "factor"}));
  add_format(perm);

  auto* dim = app.add_subcommand("dim", "Dimension of the Schur-Weyl span and invariant kernel");
  dim->add_option("--n", o.n, "Matrix size")->check(CLI::PositiveNumber);
  dim->add_option("--p", o.p, "Polynomial degree")->check(CLI::NonNegativeNumber);
  dim->add_option("--q", o.q, "Form degree")->check(CLI::NonNegativeNumber);
  dim->add_option("--method", o.method, "span, kernel or both")
      ->check(CLI::IsMember({"span", "kernel", "both"}));
  add_format(dim);

  auto* decompose = app.add_subcommand("decompose", "Write an invariant form over generator products");
  decompose->add_option("file", o.file, "Form file (text or structured), '-' for stdin")->required();
  decompose->add_option("--n", o.n, "Matrix size for text input")->check(CLI::PositiveNumber);
  decompose->add_option("--p", o.p, "Bidegree for the zero form")->check(CLI::NonNegativeNumber);
  decompose->add_option("--q", o.q, "Bidegree for the zero form")->check(CLI::NonNegativeNumber);
  add_format(decompose);

  auto* check = app.add_subcommand("check-invariance", "Lie-derivative test plus conjugation spot checks");
  check->add_option("file", o.file, "Form file (text or structured), '-' for stdin")->required();
  check->add_option("--n", o.n, "Matrix size for text input")->check(CLI::PositiveNumber);
  check->add_option("--g", o.g_file, "Structured rational matrix to conjugate by");
  add_format(check);

  auto* newton = app.add_subcommand("newton", "Residual of Newton's identity for sigma_k");
  newton->add_option("--k", o.k, "Index k")->required();
  newton->add_option("--n", o.n, "Matrix size")->check(CLI::PositiveNumber);
  add_format(newton);

  auto* verify = app.add_subcommand("verify", "Three-way span check for all p+q <= max");
  verify->add_option("--n", o.n, "Matrix size")->check(CLI::PositiveNumber);
  verify->add_option("--max", o.max_degree, "Largest total degree p+q")->required();
  verify->add_flag("--timing", o.timing, "Append elapsed time per cell");
  add_format(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*perm) return cmd_perm(o, out);
    if (*dim) return cmd_dim(o, out);
    if (*decompose) return cmd_decompose(o, out);
    if (*check) return cmd_check_invariance(o, out);
    if (*newton) return cmd_newton(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  } catch (const CapError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace glinv
