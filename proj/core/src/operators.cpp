#include "cochar/operators.hpp"

#include <stdexcept>

namespace cochar {

SchurExpansion op_Y(const SchurExpansion& e) {
  SchurExpansion out(e.d(), e.bound());
  for (const auto& [lam, c] : e.coeffs())
    for (int m = 0; lam.weight() + m <= e.bound(); ++m)
      for (const auto& beta : horizontal_strips(lam, m, e.d())) out.add(beta, c);
  return out;
}

SchurExpansion op_Y_substitution(const SchurExpansion& e) {
  const int d = e.d(), n = e.bound();
  const MultSeries h = to_mult_series(e, MultForm::T);
  const VarSet& vars = h.series.vars();
  Series acc(vars, n);
  if (d == 0) return e;
  // eps[0] is fixed to 0; the remaining d-1 bits range over all patterns.
  for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
    auto eps = [mask](int i) { return i == 0 ? 0 : static_cast<int>((mask >> (i - 1)) & 1u); };
    std::vector<SignedMonomial> reps(static_cast<std::size_t>(d));
    Monomial shift;
    int sign = 1;
    for (int i = 0; i < d; ++i) {
      auto& r = reps[static_cast<std::size_t>(i)].m;
      r.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(1 - eps(i));
      if (i + 1 < d) r.e[static_cast<std::size_t>(i + 1)] = static_cast<std::uint8_t>(eps(i + 1));
      if (eps(i)) {
        shift.e[static_cast<std::size_t>(i)] = 1;
        sign = -sign;
      }
    }
    // Substituted monomials never lose degree (lambda_{i-1} >= lambda_i), so
    // truncating at n keeps every term that can reach weight <= n.
    Series part = substitute_monomials(h.series, reps, vars, n);
    acc += Series::monomial(vars, n, shift, sign) * part;
  }
  std::vector<Factor> geom;
  for (int i = 0; i < d; ++i) geom.push_back({i, -1, -1});
  acc = acc * expand_factor(vars, geom, n);
  return from_mult_series({MultForm::T, d, n, acc});
}

namespace {

// Y-hat and G keep integral inputs integral; a fractional output is a bug.
void ensure_integral(const PartitionMap& in, const PartitionMap& out, const char* op) {
  if (all_integral(in) && !all_integral(out))
    throw IntegralityError(std::string(op) + " produced a non-integral coefficient");
}

}  // namespace

SchurExpansion op_Yhat(const SchurExpansion& e) {
  SchurExpansion out(e.d(), e.bound());
  for (int m = 0; m <= e.d(); m += 2) out += pieri_col(e, m);
  ensure_integral(e.coeffs(), out.coeffs(), "op_Yhat");
  return out;
}

SchurExpansion op_Z(const SchurExpansion& e) { return op_Y(op_Yhat(e)); }

SchurExpansion op_Z_power(const SchurExpansion& e, int j) {
  if (j < 0) throw std::invalid_argument("op_Z_power: j must be nonnegative");
  SchurExpansion out = e;
  for (int i = 0; i < j; ++i) out = op_Z(out);
  return out;
}

SchurExpansion op_Ybar(const SchurExpansion& e) {
  SchurExpansion out(e.d(), e.bound());
  for (int s = 0; s <= e.d(); ++s) out += pieri_col(e, s);
  return out;
}

}  // namespace cochar
