#include "doctest.h"

#include <random>
#include <stdexcept>

#include "cochar/series.hpp"

using namespace cochar;

namespace {

Series var(const VarSet& v, int N, const char* name) { return Series::variable(v, N, name); }

Series random_series(std::mt19937& rng, const VarSet& vars, int N, int terms) {
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4);
  std::vector<Series::Term> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<int> ex;
    for (int j = 0; j < vars.size(); ++j) ex.push_back(e(rng));
    ts.emplace_back(make_monomial(ex), Rational(c(rng), 1 + (i % 3)));
  }
  return Series::from_terms(vars, N, std::move(ts));
}

}  // namespace

TEST_CASE("series_mul examples") {
  VarSet v = VarSet::indexed("t", 1);
  Series t = var(v, 5, "t1");
  CHECK((1 + t) * (1 - t) == 1 - t * t);
  Series s(v, 5);
  for (int i = 0; i <= 5; ++i) s += pow(t, i);
  CHECK(s * (1 - t) == Series::constant(v, 5, 1));
  CHECK((s * Series(v, 5)).is_zero());
  CHECK_THROWS_AS(series_mul(t, Series(v, 4)), std::invalid_argument);
  CHECK_THROWS_AS(series_mul(t, Series(VarSet::indexed("x", 1), 5)), std::invalid_argument);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(7);
  VarSet v = VarSet::indexed("x", 4);
  for (int it = 0; it < 20; ++it) {
    Series a = random_series(rng, v, 12, 6), b = random_series(rng, v, 12, 6),
           c = random_series(rng, v, 12, 6);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
  }
}

TEST_CASE("expand_factor examples") {
  VarSet v = VarSet::indexed("t", 1);
  CHECK(expand_factor(v, {{0, -1, -1}}, 3).str() == "1 + t1 + t1^2 + t1^3");
  CHECK(expand_factor(v, parse_factors("(1+t1)(1-t1)^-1", v), 2).str() == "1 + 2*t1 + 2*t1^2");
  CHECK(expand_factor(v, parse_factors("(1-t1)(1+t1)(1-t1)^-1(1+t1)^-1", v), 4) ==
        Series::constant(v, 4, 1));
  CHECK(expand_factor(v, parse_factors("(1+t1)^-1", v), 3).str() == "1 - t1 + t1^2 - t1^3");
  CHECK_THROWS_AS(parse_factors("(1*t1)", v), std::invalid_argument);
  CHECK_THROWS_AS(parse_factors("(1+t9)", v), std::invalid_argument);
  CHECK_THROWS_AS(parse_factors("(1+t1", v), std::invalid_argument);
}

TEST_CASE("expand_factor of F and 1/F multiply to 1") {
  std::mt19937 rng(11);
  VarSet v = VarSet::indexed("t", 3);
  std::uniform_int_distribution<int> var_d(0, 2), sign(0, 1), p(1, 3);
  for (int it = 0; it < 20; ++it) {
    std::vector<Factor> f, inv;
    for (int i = 0; i < 4; ++i) {
      Factor x{var_d(rng), sign(rng) ? 1 : -1, p(rng) * (sign(rng) ? 1 : -1)};
      f.push_back(x);
      inv.push_back({x.var, x.sign, -x.power});
    }
    REQUIRE(expand_factor(v, f, 10) * expand_factor(v, inv, 10) == Series::constant(v, 10, 1));
  }
}

TEST_CASE("inverse and division") {
  VarSet v = VarSet::indexed("t", 2);
  Series a = 2 + var(v, 8, "t1") - Rational(3) * var(v, 8, "t1") * var(v, 8, "t2");
  CHECK(a * inverse(a) == Series::constant(v, 8, 1));
  CHECK(a / a == Series::constant(v, 8, 1));
  CHECK_THROWS_AS(inverse(var(v, 8, "t1")), std::domain_error);
  CHECK(pow(a, -2) * pow(a, 2) == Series::constant(v, 8, 1));
}

TEST_CASE("substitute_monomials examples") {
  VarSet v = VarSet::indexed("t", 2);
  const int N = 6;
  Series t1 = var(v, N, "t1"), t2 = var(v, N, "t2");
  CHECK(substitute_monomials(t1 * t1, std::vector<Series>{t1 * t2, t2}, v, N) == pow(t1 * t2, 2));
  CHECK(substitute_monomials(1 + t2, std::vector<Series>{t1, -t2}, v, N) == 1 - t2);
  CHECK(substitute_monomials(t1 * t2, std::vector<Series>{t1 * t2, t2}, v, N) == t1 * t2 * t2);
  CHECK_THROWS_AS(substitute_monomials(t1, std::vector<Series>{t1 + t2, t2}, v, N),
                  std::invalid_argument);
  CHECK_THROWS_AS(substitute_monomials(t1, std::vector<Series>{Rational(2) * t1, t2}, v, N),
                  std::invalid_argument);
}

TEST_CASE("substitution commutes with products") {
  std::mt19937 rng(3);
  VarSet v = VarSet::indexed("x", 3);
  const int N = 10;
  std::vector<Series> rep = {var(v, N, "x1") * var(v, N, "x2"), -var(v, N, "x2"),
                             var(v, N, "x3") * var(v, N, "x3")};
  for (int it = 0; it < 20; ++it) {
    Series a = random_series(rng, v, N, 5), b = random_series(rng, v, N, 5);
    REQUIRE(substitute_monomials(a * b, rep, v, N) ==
            substitute_monomials(a, rep, v, N) * substitute_monomials(b, rep, v, N));
  }
}

TEST_CASE("truncation and canonical order") {
  VarSet v = VarSet::indexed("t", 2);
  Series s = Series::from_terms(v, 2,
                                {{make_monomial({0, 2}), 1},
                                 {make_monomial({3, 0}), 5},
                                 {make_monomial({2, 0}), 1},
                                 {make_monomial({1, 0}), 1},
                                 {make_monomial({1, 0}), -1},
                                 {make_monomial({0, 0}), Rational(1, 2)}});
  CHECK(s.str() == "1/2 + t1^2 + t2^2");
  CHECK(s.size() == 3);
  CHECK(s.homogeneous_part(2).str() == "t1^2 + t2^2");
  CHECK(s.with_bound(1).str() == "1/2");
  CHECK_THROWS_AS(Series(v, -1), std::invalid_argument);
  CHECK_THROWS_AS(VarSet({"a", "a"}), std::invalid_argument);
}

TEST_CASE("json round trip") {
  VarSet v = VarSet::indexed("t", 2);
  Series s = Series::from_terms(v, 4, {{make_monomial({1, 1}), Rational(-3, 2)}, {make_monomial({0, 0}), 2}});
  std::string j = to_json(s);
  CHECK(j == R"([{"exp":[0,0],"num":"2","den":"1"},{"exp":[1,1],"num":"-3","den":"2"}])");
  CHECK(series_from_json(j, v, 4) == s);
  CHECK_THROWS_AS(series_from_json("[{\"exp\":[1],\"num\":\"1\",\"den\":\"1\"}]", v, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_from_json("not json", v, 4), std::invalid_argument);
}
