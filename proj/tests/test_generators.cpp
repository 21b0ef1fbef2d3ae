#include "doctest.h"

#include "glinv/errors.hpp"
#include "glinv/form_io.hpp"
#include "glinv/generators.hpp"
#include "oracles.hpp"

using namespace glinv;

namespace {

Form omega_of(std::vector<int> ls, int n) { return omega(ls, n); }

std::vector<std::string> labels_of(const std::vector<GeneratorProduct>& products) {
  std::vector<std::string> out;
  for (const auto& p : products) out.push_back(p.label());
  return out;
}

}  // namespace

TEST_CASE("tau examples") {
  CHECK(to_text(tau(1, 2)) == "x[1,1] + x[2,2]");
  for (int l = 1; l <= 4; ++l) CHECK(tau(l, 1) == Form::term(1, Monomial::x({1, 1}, l), 1));
  CHECK(to_text(tau(2, 2)) == "x[1,1]^2 + 2*x[1,2]x[2,1] + x[2,2]^2");
  for (int n = 1; n <= 3; ++n)
    for (int l = 1; l <= 4; ++l) {
      CHECK(oracle::from_form(tau(l, n)) == oracle::tau(l, n));
      CHECK(bidegree(tau(l, n)) == std::set<std::pair<int, int>>{{l, 0}});
    }
  CHECK_THROWS_AS(tau(0, 2), std::invalid_argument);
}

TEST_CASE("omega examples") {
  CHECK(to_text(omega_of({0}, 2)) == "dx[1,1] + dx[2,2]");
  CHECK(to_text(omega_of({1}, 2)) ==
        "x[1,1]dx[1,1] + x[1,2]dx[2,1] + x[2,1]dx[1,2] + x[2,2]dx[2,2]");
  for (int n = 1; n <= 4; ++n) {
    CHECK(oracle::omega({0, 0}, n).empty());
    CHECK(omega_of({0, 0}, n).is_zero());
  }
  CHECK_THROWS_AS(omega_of({}, 2), std::invalid_argument);
}

TEST_CASE("omega agrees with closed-walk expansion") {
  const std::vector<std::vector<int>> cases = {{0},       {1},       {2},       {0, 1},
                                               {1, 0},    {0, 2},    {1, 1},    {0, 0, 0},
                                               {0, 0, 1}, {1, 0, 2}, {0, 1, 0, 1}};
  for (int n = 1; n <= 3; ++n)
    for (const auto& ls : cases) {
      CAPTURE(n);
      Form f = omega_of(ls, n);
      CHECK(oracle::from_form(f) == oracle::omega(ls, n));
      if (!f.is_zero()) {
        int p = 0;
        for (int l : ls) p += l;
        CHECK(homogeneous_bidegree(f) == std::make_pair(p, static_cast<int>(ls.size())));
      }
    }
}

TEST_CASE("canonical_label examples") {
  auto a = canonical_label(GeneratorKind::omega, {2, 0, 1});
  CHECK(a.exponents == std::vector<int>{0, 1, 2});
  CHECK(a.sign == 1);
  CHECK(!a.is_zero);
  auto b = canonical_label(GeneratorKind::omega, {1, 0});
  CHECK(b.exponents == std::vector<int>{0, 1});
  CHECK(b.sign == -1);
  for (int l = 0; l <= 3; ++l) CHECK(canonical_label(GeneratorKind::omega, {l, l}).is_zero);
  CHECK(!canonical_label(GeneratorKind::omega, {0, 1, 0, 1}).is_zero);
  CHECK(canonical_label(GeneratorKind::omega, {0, 0, 0}).sign == 1);
  CHECK(canonical_label(GeneratorKind::tau, {3}).exponents == std::vector<int>{3});
  CHECK_THROWS_AS(canonical_label(GeneratorKind::tau, {0}), std::invalid_argument);
  CHECK_THROWS_AS(canonical_label(GeneratorKind::omega, {}), std::invalid_argument);
}

TEST_CASE("canonical labels match the forms they name") {
  // omega(l) = sign * omega(canonical), checked against the oracle expansion.
  for (int n = 1; n <= 2; ++n)
    for (const auto& ls : std::vector<std::vector<int>>{
             {2, 0, 1}, {1, 0}, {1, 2}, {2, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {2, 2}}) {
      auto label = canonical_label(GeneratorKind::omega, ls);
      auto lhs = oracle::omega(ls, n);
      if (label.is_zero) {
        CHECK(lhs.empty());
        continue;
      }
      CHECK(lhs == oracle::scaled(oracle::omega(label.exponents, n), label.sign));
    }
}

TEST_CASE("cyclic identity and antisymmetry of two-factor omegas") {
  for (int n = 1; n <= 3; ++n) {
    for (int p = 1; p <= 3; ++p) {
      std::vector<int> ls(static_cast<std::size_t>(p), 0);
      for (;;) {
        std::vector<int> rotated(ls.begin() + 1, ls.end());
        rotated.push_back(ls.front());
        Form lhs = omega(ls, n);
        Form rhs = omega(rotated, n);
        CHECK(lhs == ((p - 1) % 2 ? -rhs : rhs));
        std::size_t k = 0;
        while (k < ls.size() && ls[k] == 2) ls[k++] = 0;
        if (k == ls.size()) break;
        ++ls[k];
      }
    }
    for (int l = 0; l <= 3; ++l) {
      CHECK(omega_of({l, l}, n).is_zero());
      for (int m = 0; m <= 3; ++m) CHECK(omega_of({l, m}, n) == -omega_of({m, l}, n));
    }
  }
}

TEST_CASE("d tau^l = l omega^(l-1)") {
  for (int n = 1; n <= 3; ++n)
    for (int l = 1; l <= 4; ++l)
      CHECK(exterior_derivative(tau(l, n)) == scale(Rational(l), omega_of({l - 1}, n)));
}

TEST_CASE("sigma examples and Leibniz oracle") {
  CHECK(to_text(sigma(1, 2)) == "x[1,1] + x[2,2]");
  CHECK(to_text(sigma(2, 2)) == "x[1,1]x[2,2] - x[1,2]x[2,1]");
  CHECK(sigma(1, 1) == Form::x(1, 1, 1));
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      CHECK(oracle::from_form(sigma(k, n)) == oracle::sigma(k, n));
      CHECK(homogeneous_bidegree(sigma(k, n)) == std::make_pair(k, 0));
    }
  CHECK_THROWS_AS(sigma(0, 2), std::out_of_range);
  CHECK_THROWS_AS(sigma(3, 2), std::out_of_range);
}

TEST_CASE("Newton identity residuals vanish") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) CHECK(newton_identity_residual(k, n).is_zero());
  // 2 sigma_2 = tau1^2 - tau2 at n = 2, through the oracle.
  auto lhs = oracle::scaled(oracle::sigma(2, 2), 2);
  auto rhs = oracle::sum(oracle::multiply(oracle::tau(1, 2), oracle::tau(1, 2)),
                         oracle::scaled(oracle::tau(2, 2), -1));
  CHECK(lhs == rhs);
}

TEST_CASE("label text format") {
  auto l = parse_label("omega:1,0,2");
  CHECK(l.kind == GeneratorKind::omega);
  CHECK(l.exponents == std::vector<int>{1, 0, 2});
  CHECK(to_string(parse_label("tau:3")) == "tau:3");
  CHECK_THROWS_AS(parse_label("tau:0"), ParseError);
  CHECK_THROWS_AS(parse_label("tau:1,2"), ParseError);
  CHECK_THROWS_AS(parse_label("omega:"), ParseError);
  CHECK_THROWS_AS(parse_label("omega:1,,2"), ParseError);
  CHECK_THROWS_AS(parse_label("theta:1"), ParseError);
  CHECK_THROWS_AS(parse_label("omega1"), ParseError);
}

TEST_CASE("enumerate_generator_products examples") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(labels_of(enumerate_generator_products(2, 0, n)) ==
          std::vector<std::string>{"tau:1*tau:1", "tau:2"});
    CHECK(labels_of(enumerate_generator_products(0, 1, n)) == std::vector<std::string>{"omega:0"});
    CHECK(labels_of(enumerate_generator_products(0, 3, n)) ==
          std::vector<std::string>{"omega:0,0,0"});
    auto unit = enumerate_generator_products(0, 0, n);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].label() == "1");
    CHECK(unit[0].form == Form::constant(n, 1));
  }
  CHECK(labels_of(enumerate_generator_products(1, 2, 2)) ==
        std::vector<std::string>{"omega:0*omega:1", "omega:0,1"});
  CHECK_THROWS_AS(enumerate_generator_products(4, 3, 2), CapError);
  CHECK_THROWS_AS(enumerate_generator_products(1, 1, 4), CapError);
}

TEST_CASE("generator products are homogeneous of the requested bidegree") {
  for (int n = 1; n <= 2; ++n)
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q + p <= 5; ++q)
        for (const auto& prod : enumerate_generator_products(p, q, n)) {
          CAPTURE(prod.label());
          auto degrees = bidegree(prod.form);
          CHECK((degrees.empty() || degrees == std::set<std::pair<int, int>>{{p, q}}));
          // Odd-degree omegas never repeat.
          for (std::size_t i = 1; i < prod.factors.size(); ++i)
            if (prod.factors[i] == prod.factors[i - 1]) CHECK(prod.factors[i].form_degree() % 2 == 0);
        }
}
