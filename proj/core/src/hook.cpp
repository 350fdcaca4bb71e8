#include "cochar/hook.hpp"

#include <stdexcept>

#include "cochar/hilbert.hpp"
#include "cochar/parallel.hpp"
#include "tableau.hpp"

namespace cochar {

HookExpansion::HookExpansion(int k, int l, int bound) : k_(k), l_(l), bound_(bound) {
  if (k < 0 || l < 0 || k + l < 1) throw std::invalid_argument("hook needs k, l >= 0 and k + l >= 1");
  if (bound < 0 || bound > kMaxBound) throw std::invalid_argument("weight bound out of range");
}

HookExpansion HookExpansion::single(int k, int l, int bound, const Partition& lam,
                                    const Rational& c) {
  HookExpansion e(k, l, bound);
  e.add(lam, c);
  return e;
}

Rational HookExpansion::coeff(const Partition& lam) const {
  auto it = coeffs_.find(lam);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void HookExpansion::add(const Partition& lam, const Rational& c) {
  if (lam.weight() > bound_ || !in_hook(lam, k_, l_)) return;
  accumulate(coeffs_, lam, c);
}

HookExpansion& HookExpansion::operator+=(const HookExpansion& o) {
  if (o.k_ != k_ || o.l_ != l_ || o.bound_ != bound_)
    throw std::invalid_argument("adding hook expansions with different hooks or bounds");
  for (const auto& [p, c] : o.coeffs_) accumulate(coeffs_, p, c);
  return *this;
}

HookExpansion& HookExpansion::operator*=(const Rational& c) {
  if (c == 0) coeffs_.clear();
  for (auto& kv : coeffs_) kv.second *= c;
  return *this;
}

Series hs_poly(const Partition& lam, int k, int l, int bound) {
  if (lam.weight() > bound)
    throw std::invalid_argument("hs_poly: weight of " + lam.str() + " exceeds the bound");
  VarSet vars = VarSet::hook(k, l);
  if (!in_hook(lam, k, l)) return Series(vars, bound);
  std::vector<detail::Strip> letters(static_cast<std::size_t>(k), detail::Strip::Horizontal);
  letters.insert(letters.end(), static_cast<std::size_t>(l), detail::Strip::Vertical);
  return detail::tableau_sum(lam, letters, vars, bound);
}

namespace {

bool dominant(const Monomial& m, int k, int l) {
  for (int i = 1; i < k; ++i)
    if (m[i] > m[i - 1]) return false;
  for (int j = 1; j < l; ++j)
    if (m[k + j] > m[k + j - 1]) return false;
  return true;
}

// Solves A x = b exactly; A has full column rank. Returns false if inconsistent.
bool solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational>& x) {
  const std::size_t rows = a.size();
  const std::size_t cols = x.size();
  std::vector<std::size_t> pivot_row(cols, rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j <= cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_row[c] = r++;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][cols] != 0) return false;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row[c] == rows) throw std::logic_error("hook Schur basis lost rank");
    x[c] = a[pivot_row[c]][cols];
  }
  return true;
}

}  // namespace

HookExpansion hs_decompose(const Series& g, int k, int l) {
  if (g.vars().size() != k + l)
    throw std::invalid_argument("hs_decompose: series must have k + l variables");
  const int bound = g.bound();
  std::vector<std::vector<std::pair<Partition, Rational>>> solved(static_cast<std::size_t>(bound) + 1);
  parallel_for(solved.size(), [&](std::size_t deg) {
    const int n = static_cast<int>(deg);
    const Series gn = g.homogeneous_part(n).relabel(VarSet::hook(k, l));
    std::vector<Partition> cols;
    std::vector<Series> basis;
    for (const auto& lam : partitions_of(n))
      if (in_hook(lam, k, l)) {
        cols.push_back(lam);
        basis.push_back(hs_poly(lam, k, l, bound));
      }
    std::map<Monomial, std::size_t, decltype(&canonical_less)> row_of(&canonical_less);
    auto note = [&](const Series& s) {
      for (const auto& [m, c] : s.terms())
        if (dominant(m, k, l)) row_of.try_emplace(m, 0);
    };
    note(gn);
    for (const auto& b : basis) note(b);
    std::size_t idx = 0;
    for (auto& kv : row_of) kv.second = idx++;
    std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(cols.size() + 1));
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (const auto& [m, c] : basis[j].terms())
        if (auto it = row_of.find(m); it != row_of.end()) a[it->second][j] = c;
    for (const auto& [m, c] : gn.terms())
      if (auto it = row_of.find(m); it != row_of.end()) a[it->second][cols.size()] = c;
    std::vector<Rational> x(cols.size());
    if (!solve_exact(std::move(a), x))
      throw DecompositionError("hs_decompose: degree " + std::to_string(n) +
                                   " is outside the span of hook Schur functions",
                               n);
    Series recomposed(gn.vars(), bound);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (x[j] != 0) recomposed += basis[j] * x[j];
    if (!(recomposed == gn))
      throw DecompositionError("hs_decompose: nonzero residual at degree " + std::to_string(n), n);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (x[j] != 0) solved[deg].emplace_back(cols[j], x[j]);
  });
  HookExpansion out(k, l, bound);
  for (const auto& slice : solved)
    for (const auto& [lam, c] : slice) out.add(lam, c);
  return out;
}

namespace {

// Rows of p (inside l^k) of length l.
int full_rows(const Partition& p, int k, int l) {
  int r = 0;
  for (int i = 0; i < k; ++i)
    if (p[i] == l) ++r;
  return r;
}

// Columns of p (inside l^k) of height k.
int full_columns(const Partition& p, int k, int l) { return k == 0 ? l : std::min(p[k - 1], l); }

// Every lambda' in HS_lambda * HS_(n): grow lambda0 by a horizontal strip inside
// the rectangle, the arm by row Pieri on the full rows of the grown rectangle,
// the leg by column Pieri (on nu) under the full columns of the old rectangle.
template <class Emit>
void row_products(const Partition& lam, int k, int l, int n, Emit&& emit) {
  const HookSplit s = split_hook(lam, k, l);
  const int c = full_columns(s.lambda0, k, l);
  for (int m = 0; m <= n; ++m)
    for (const auto& b0 : horizontal_strips(s.lambda0, m, k, l)) {
      const int r = full_rows(b0, k, l);
      const int rest = n - m;
      for (int a = 0; a <= rest; ++a)
        for (const auto& mu : horizontal_strips(s.mu, a, r))
          for (const auto& nu : vertical_strips(s.nu, rest - a, c))
            emit(HookSplit{b0, mu, nu, k, l}.reassemble());
    }
}

// Conjugate-dual of row_products for HS_lambda * HS_(1^m).
template <class Emit>
void col_products(const Partition& lam, int k, int l, int n, Emit&& emit) {
  const HookSplit s = split_hook(lam, k, l);
  const int r = full_rows(s.lambda0, k, l);
  for (int m = 0; m <= n; ++m)
    for (const auto& b0 : vertical_strips(s.lambda0, m, k, l)) {
      const int c = full_columns(b0, k, l);
      const int rest = n - m;
      for (int a = 0; a <= rest; ++a)
        for (const auto& mu : vertical_strips(s.mu, a, r))
          for (const auto& nu : horizontal_strips(s.nu, rest - a, c))
            emit(HookSplit{b0, mu, nu, k, l}.reassemble());
    }
}

void ensure_integral(const PartitionMap& in, const PartitionMap& out, const char* op) {
  if (all_integral(in) && !all_integral(out))
    throw IntegralityError(std::string(op) + " produced a non-integral coefficient");
}

}  // namespace

HookExpansion hook_pieri_row(const HookExpansion& e, int n) {
  HookExpansion out(e.k(), e.l(), e.bound());
  for (const auto& [lam, c] : e.coeffs()) {
    if (lam.weight() + n > e.bound()) continue;
    row_products(lam, e.k(), e.l(), n, [&](const Partition& p) { out.add(p, c); });
  }
  return out;
}

HookExpansion hook_pieri_col(const HookExpansion& e, int m) {
  HookExpansion out(e.k(), e.l(), e.bound());
  for (const auto& [lam, c] : e.coeffs()) {
    if (lam.weight() + m > e.bound()) continue;
    col_products(lam, e.k(), e.l(), m, [&](const Partition& p) { out.add(p, c); });
  }
  return out;
}

HookExpansion op_G1(const HookExpansion& e) {
  HookExpansion out(e.k(), e.l(), e.bound());
  for (const auto& [lam, c] : e.coeffs())
    for (int n = 0; lam.weight() + n <= e.bound(); ++n)
      row_products(lam, e.k(), e.l(), n, [&](const Partition& p) { out.add(p, c); });
  return out;
}

HookExpansion op_G2(const HookExpansion& e) {
  HookExpansion out(e.k(), e.l(), e.bound());
  for (const auto& [lam, c] : e.coeffs())
    for (int m = 0; lam.weight() + m <= e.bound(); ++m)
      col_products(lam, e.k(), e.l(), m, [&](const Partition& p) { out.add(p, c); });
  return out;
}

HookExpansion op_G(const HookExpansion& e) {
  HookExpansion out = e + op_G2(op_G1(e));
  out *= Rational(1, 2);
  ensure_integral(e.coeffs(), out.coeffs(), "op_G");
  return out;
}

HookExpansion op_G_power(const HookExpansion& e, int j) {
  if (j < 0) throw std::invalid_argument("op_G_power: j must be nonnegative");
  HookExpansion out = e;
  for (int i = 0; i < j; ++i) out = op_G(out);
  return out;
}

HookExpansion hook_mult_expansion_UTnE(int n, int k, int l, int bound) {
  if (n < 1) throw std::invalid_argument("hook_mult_UTnE: n must be at least 1");
  std::vector<HookExpansion> parts(static_cast<std::size_t>(n), HookExpansion(k, l, bound));
  parallel_for(parts.size(), [&](std::size_t idx) {
    const int j = static_cast<int>(idx) + 1;
    HookExpansion seed(k, l, bound);
    for (int q = 0; q < j; ++q) {
      mpz_class coef = binomial(n, j) * binomial(j - 1, q);
      if ((j - 1 - q) % 2) coef = -coef;
      for (const auto& lam : partitions_of(q))
        if (in_hook(lam, k, l)) seed.add(lam, Rational(coef * char_degree(lam)));
    }
    parts[idx] = op_G_power(seed, j);
  });
  HookExpansion out(k, l, bound);
  for (const auto& p : parts) out += p;
  check_multiplicities(out.coeffs(), "hook_mult_UTnE(" + std::to_string(n) + "," +
                                         std::to_string(k) + "," + std::to_string(l) + ")");
  return out;
}

HookMultSeries hook_mult_UTnE(int n, int k, int l, int bound) {
  return encode_hook(hook_mult_expansion_UTnE(n, k, l, bound));
}

HookMultSeries encode_hook(const HookExpansion& e) {
  const int k = e.k(), l = e.l();
  VarSet vars = VarSet::hook_mult(k, l);
  std::vector<Series::Term> terms;
  for (const auto& [lam, c] : e.coeffs()) {
    const HookSplit s = split_hook(lam, k, l);
    std::vector<int> exps;
    for (int i = 0; i < k; ++i) exps.push_back(s.lambda0[i]);
    for (int i = 0; i < k; ++i) exps.push_back(s.mu[i]);
    for (int j = 0; j < l; ++j) exps.push_back(s.nu[j]);
    terms.emplace_back(make_monomial(exps), c);
  }
  return {k, l, e.bound(), Series::from_terms(vars, e.bound(), std::move(terms))};
}

HookExpansion decode_hook(const HookMultSeries& h) {
  const int k = h.k, l = h.l;
  if (h.series.vars().size() != 2 * k + l)
    throw std::invalid_argument("hook multiplicity series has the wrong number of variables");
  HookExpansion out(k, l, h.bound);
  for (const auto& [m, c] : h.series.terms()) {
    std::vector<int> a, b, y;
    for (int i = 0; i < k; ++i) a.push_back(m[i]);
    for (int i = 0; i < k; ++i) b.push_back(m[k + i]);
    for (int j = 0; j < l; ++j) y.push_back(m[2 * k + j]);
    out.add(HookSplit::make(Partition(a), Partition(b), Partition(y), k, l).reassemble(), c);
  }
  return out;
}

}  // namespace cochar
