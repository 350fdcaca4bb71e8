#include "cochar/hilbert.hpp"

#include "cochar/operators.hpp"
#include "cochar/parallel.hpp"

namespace cochar {

mpz_class binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

void check_multiplicities(const PartitionMap& m, const std::string& what) {
  for (const auto& [lam, c] : m)
    if (c.get_den() != 1 || c < 0)
      throw IntegralityError(what + ": multiplicity of " + lam.str() + " is " + c.get_str());
}

namespace {

// prod over the variables of (1+x)/(1-x).
Series ratio_product(const VarSet& vars, int bound) {
  std::vector<Factor> f;
  for (int i = 0; i < vars.size(); ++i) {
    f.push_back({i, 1, 1});
    f.push_back({i, -1, -1});
  }
  return expand_factor(vars, f, bound);
}

// sum_{j=1}^{n} C(n,j) h^j (sum of all variables - 1)^(j-1)
Series power_law(const Series& h, int n) {
  const VarSet& vars = h.vars();
  const int bound = h.bound();
  Series linear = Series::constant(vars, bound, -1);
  for (int i = 0; i < vars.size(); ++i) linear += Series::variable(vars, bound, i);
  Series out(vars, bound);
  Series hp = Series::constant(vars, bound, 1);
  Series lp = Series::constant(vars, bound, 1);
  for (int j = 1; j <= n; ++j) {
    hp = hp * h;
    if (j > 1) lp = lp * linear;
    out += Rational(binomial(n, j)) * (hp * lp);
  }
  return out;
}

}  // namespace

Series hilbert_E(int d, int bound) {
  if (d < 1) throw std::invalid_argument("hilbert_E: d must be at least 1");
  VarSet vars = VarSet::indexed("t", d);
  return Rational(1, 2) + Rational(1, 2) * ratio_product(vars, bound);
}

Series hilbert_UTnE(int n, int d, int bound) {
  if (n < 1) throw std::invalid_argument("hilbert_UTnE: n must be at least 1");
  return power_law(hilbert_E(d, bound), n);
}

SchurExpansion mult_expansion_UTnE(int n, int d, int bound) {
  if (n < 1 || d < 1) throw std::invalid_argument("mult_series_UTnE: n and d must be at least 1");
  // Z^j is linear, so all (q, lambda) seeds of one j share a single Z^j pass.
  std::vector<SchurExpansion> parts(static_cast<std::size_t>(n), SchurExpansion(d, bound));
  parallel_for(parts.size(), [&](std::size_t idx) {
    const int j = static_cast<int>(idx) + 1;
    SchurExpansion seed(d, bound);
    for (int q = 0; q < j; ++q) {
      mpz_class coef = binomial(n, j) * binomial(j - 1, q);
      if ((j - 1 - q) % 2) coef = -coef;
      for (const auto& lam : partitions_of(q, d)) seed.add(lam, Rational(coef * char_degree(lam)));
    }
    parts[idx] = op_Z_power(seed, j);
  });
  SchurExpansion out(d, bound);
  for (const auto& p : parts) out += p;
  check_multiplicities(out.coeffs(), "mult_series_UTnE(" + std::to_string(n) + "," +
                                         std::to_string(d) + ")");
  return out;
}

MultSeries mult_series_UTnE(int n, int d, int bound) {
  return to_mult_series(mult_expansion_UTnE(n, d, bound), MultForm::T);
}

Series double_hilbert_E(int k, int l, int bound) {
  if (k < 0 || l < 0 || k + l < 1)
    throw std::invalid_argument("double_hilbert_E: need k, l >= 0 and k + l >= 1");
  VarSet vars = VarSet::hook(k, l);
  return Rational(1, 2) + Rational(1, 2) * ratio_product(vars, bound);
}

Series double_hilbert_UTnE(int n, int k, int l, int bound) {
  if (n < 1) throw std::invalid_argument("double_hilbert_UTnE: n must be at least 1");
  return power_law(double_hilbert_E(k, l, bound), n);
}

}  // namespace cochar
