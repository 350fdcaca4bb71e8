#include "doctest.h"

#include <random>

#include "cochar/hilbert.hpp"
#include "cochar/operators.hpp"
#include "oracles.hpp"

using namespace cochar;

namespace {

PartitionMap pm(std::initializer_list<Partition> ps) {
  PartitionMap m;
  for (const auto& p : ps) cochar::accumulate(m, p, 1);
  return m;
}

SchurExpansion one(int d, int N) { return SchurExpansion::single(d, N, {}); }

Series synthesize(const SchurExpansion& e) {
  Series g(VarSet::indexed("t", e.d()), e.bound());
  for (const auto& [lam, c] : e.coeffs()) g += c * schur_poly(lam, e.d(), e.bound());
  return g;
}

// V-form of a rational display in v1, v2, restricted to weight <= N.
Series v_display(const std::function<Series(const Series&, const Series&)>& f, int N) {
  VarSet v = VarSet::indexed("v", 2);
  return restrict_v_weight(f(Series::variable(v, N, "v1"), Series::variable(v, N, "v2")), 2, N);
}

Series v_form(const SchurExpansion& e) { return to_mult_series(e, MultForm::V).series; }

}  // namespace

TEST_CASE("Y examples") {
  CHECK(op_Y(one(2, 2)).coeffs() == pm({{}, {1}, {2}}));
  CHECK(op_Y(op_Y(one(2, 6))).coeff({1, 1}) == 1);
  CHECK(v_form(op_Y(op_Yhat(one(2, 10)))) ==
        v_display([](auto v1, auto v2) { return (1 + v2) * inverse(1 - v1); }, 10));
}

TEST_CASE("Y-hat examples") {
  CHECK(op_Yhat(one(2, 6)).coeffs() == pm({{}, {1, 1}}));
  CHECK(op_Yhat(one(3, 6)).coeffs() == pm({{}, {1, 1}}));
  for (const auto e = op_Yhat(op_Yhat(one(2, 10))); const auto& [lam, c] : e.coeffs()) CHECK(lam[0] <= 2);
}

TEST_CASE("Z powers") {
  const int N = 12;
  CHECK(v_form(op_Z_power(one(2, N), 1)) ==
        v_display([](auto v1, auto v2) { return (1 + v2) * inverse(1 - v1); }, N));
  CHECK(v_form(op_Z_power(one(2, N), 2)) ==
        v_display([](auto v1, auto v2) {
          return (1 + v2) * (1 + v2) * pow(1 - v1, -2) * inverse(1 - v2);
        }, N));
  CHECK(v_form(op_Z_power(SchurExpansion::single(2, N, {1}), 2)) ==
        v_display([](auto v1, auto v2) {
          return (1 + v2) * (1 + v2) * (v1 + Rational(2) * v2 - v1 * v2) * pow(1 - v1, -2) *
                 inverse(1 - v2);
        }, N));
  CHECK(op_Z_power(one(2, N), 0) == one(2, N));
  CHECK_THROWS_AS(op_Z_power(one(2, N), -1), std::invalid_argument);
}

TEST_CASE("Y-bar examples") {
  CHECK(op_Ybar(one(1, 4)).coeffs() == pm({{}, {1}}));
  CHECK(op_Ybar(one(2, 4)).coeffs() == pm({{}, {1}, {1, 1}}));
  const int N = 8;
  SchurExpansion rows(1, N);
  for (int n = 0; n <= N; ++n) rows.add({n}, 1);
  VarSet v = VarSet::indexed("v", 1);
  CHECK(v_form(op_Ybar(rows)) == expand_factor(v, parse_factors("(1+v1)(1-v1)^-1", v), N));
}

TEST_CASE("operators equal multiplication by their generating series") {
  std::mt19937 rng(23);
  for (int d = 1; d <= 3; ++d) {
    const int N = 8;
    VarSet t = VarSet::indexed("t", d);
    std::vector<Factor> geo, plus, minus;
    for (int i = 0; i < d; ++i) {
      geo.push_back({i, -1, -1});
      plus.push_back({i, 1, 1});
      minus.push_back({i, -1, 1});
    }
    Series y = expand_factor(t, geo, N);
    Series yhat = Rational(1, 2) * (expand_factor(t, plus, N) + expand_factor(t, minus, N));
    Series ybar = expand_factor(t, plus, N);
    for (int it = 0; it < 5; ++it) {
      auto e = oracle::random_schur(rng, d, N, 6);
      Series g = synthesize(e);
      REQUIRE(synthesize(op_Y(e)) == g * y);
      REQUIRE(synthesize(op_Yhat(e)) == g * yhat);
      REQUIRE(synthesize(op_Ybar(e)) == g * ybar);
      REQUIRE(synthesize(op_Z(e)) == g * hilbert_E(d, N));
    }
  }
}

TEST_CASE("Y-hat is the sum of even elementary functions (d <= 4)") {
  for (int d = 1; d <= 4; ++d) {
    const int N = 6;
    VarSet t = VarSet::indexed("t", d);
    std::vector<Factor> plus, minus;
    for (int i = 0; i < d; ++i) {
      plus.push_back({i, 1, 1});
      minus.push_back({i, -1, 1});
    }
    Series half = Rational(1, 2) * (expand_factor(t, plus, N) + expand_factor(t, minus, N));
    Series even(t, N);
    for (int m = 0; m <= d; m += 2)
      even += schur_poly(Partition(std::vector<int>(static_cast<std::size_t>(m), 1)), d, N);
    REQUIRE(half == even);
    REQUIRE(synthesize(op_Yhat(one(d, N))) == half);
  }
}

TEST_CASE("Y and Y-hat commute") {
  std::mt19937 rng(29);
  for (int it = 0; it < 100; ++it) {
    const int d = 1 + it % 3;
    auto e = oracle::random_schur(rng, d, 10, 8);
    REQUIRE(op_Y(op_Yhat(e)) == op_Yhat(op_Y(e)));
  }
}

TEST_CASE("Y by Pieri sums equals Y by substitution") {
  std::mt19937 rng(31);
  for (int d = 1; d <= 3; ++d)
    for (int it = 0; it < 15; ++it) {
      auto e = oracle::random_schur(rng, d, 8, 8);
      REQUIRE(op_Y(e) == op_Y_substitution(e));
    }
  for (int n = 1; n <= 3; ++n) {
    auto e = mult_expansion_UTnE(n, 3, 8);
    REQUIRE(op_Y(e) == op_Y_substitution(e));
  }
}

TEST_CASE("two variables: Y-hat multiplies the T-form by 1 + t1 t2") {
  std::mt19937 rng(37);
  const int N = 10;
  VarSet t = VarSet::indexed("t", 2);
  Series f = 1 + Series::variable(t, N, "t1") * Series::variable(t, N, "t2");
  for (int it = 0; it < 30; ++it) {
    auto e = oracle::random_schur(rng, 2, N, 10);
    REQUIRE(to_mult_series(op_Yhat(e), MultForm::T).series ==
            to_mult_series(e, MultForm::T).series * f);
  }
}

TEST_CASE("Y-hat^j(1) has at most j columns") {
  for (int d = 1; d <= 4; ++d) {
    auto e = one(d, 10);
    for (int j = 1; j <= 4; ++j) {
      e = op_Yhat(e);
      for (const auto& [lam, c] : e.coeffs()) REQUIRE(lam[0] <= j);
    }
  }
}
