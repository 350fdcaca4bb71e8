#include "cochar/schur.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "tableau.hpp"

namespace cochar {

void accumulate(PartitionMap& m, const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

bool all_integral(const PartitionMap& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

bool all_nonnegative_integral(const PartitionMap& m) {
  return std::all_of(m.begin(), m.end(),
                     [](const auto& kv) { return kv.second.get_den() == 1 && kv.second >= 0; });
}

SchurExpansion::SchurExpansion(int d, int bound) : d_(d), bound_(bound) {
  if (d < 0) throw std::invalid_argument("variable count must be nonnegative");
  if (bound < 0 || bound > kMaxBound) throw std::invalid_argument("weight bound out of range");
}

SchurExpansion SchurExpansion::single(int d, int bound, const Partition& lam, const Rational& c) {
  SchurExpansion e(d, bound);
  e.add(lam, c);
  return e;
}

Rational SchurExpansion::coeff(const Partition& lam) const {
  auto it = coeffs_.find(lam);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SchurExpansion::add(const Partition& lam, const Rational& c) {
  if (lam.length() > d_ || lam.weight() > bound_) return;
  accumulate(coeffs_, lam, c);
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
  if (o.d_ != d_ || o.bound_ != bound_)
    throw std::invalid_argument("adding Schur expansions with different d or bound");
  for (const auto& [p, c] : o.coeffs_) accumulate(coeffs_, p, c);
  return *this;
}

SchurExpansion& SchurExpansion::operator*=(const Rational& c) {
  if (c == 0) coeffs_.clear();
  for (auto& kv : coeffs_) kv.second *= c;
  return *this;
}

namespace detail {

Series tableau_sum(const Partition& lam, const std::vector<Strip>& letters, const VarSet& vars,
                   int bound) {
  Series zero(vars, bound);
  if (lam.weight() > bound) return zero;
  const int rows = lam.length();
  using Poly = std::unordered_map<Monomial, Rational, MonomialHash>;
  std::map<std::vector<int>, Poly> states;
  states[std::vector<int>(static_cast<std::size_t>(rows), 0)][Monomial{}] = 1;
  for (std::size_t letter = 0; letter < letters.size(); ++letter) {
    std::map<std::vector<int>, Poly> next;
    for (const auto& [shape, poly] : states) {
      std::vector<int> cur = shape;
      auto emit = [&](int added) {
        Poly& dst = next[cur];
        for (const auto& [m, c] : poly) {
          Monomial m2 = m;
          m2.e[letter] = static_cast<std::uint8_t>(added);
          dst[m2] += c;
        }
      };
      auto rec = [&](auto&& self, int i, int added) -> void {
        if (i == rows) {
          emit(added);
          return;
        }
        const int lo = shape[static_cast<std::size_t>(i)];
        int hi;
        if (letters[letter] == Strip::Horizontal)
          hi = std::min(lam[i], i > 0 ? shape[static_cast<std::size_t>(i - 1)] : lam[i]);
        else
          hi = std::min({lam[i], lo + 1, i > 0 ? cur[static_cast<std::size_t>(i - 1)] : lam[i]});
        for (int b = lo; b <= hi; ++b) {
          cur[static_cast<std::size_t>(i)] = b;
          self(self, i + 1, added + (b - lo));
        }
        cur[static_cast<std::size_t>(i)] = lo;
      };
      rec(rec, 0, 0);
    }
    states = std::move(next);
  }
  auto it = states.find(lam.parts());
  if (it == states.end()) return zero;
  std::vector<Series::Term> terms(it->second.begin(), it->second.end());
  return Series::from_terms(vars, bound, std::move(terms));
}

}  // namespace detail

Series schur_poly(const Partition& lam, int d, int bound) {
  if (lam.weight() > bound)
    throw std::invalid_argument("schur_poly: weight of " + lam.str() + " exceeds the bound");
  VarSet vars = VarSet::indexed("t", d);
  if (lam.length() > d) return Series(vars, bound);
  return detail::tableau_sum(lam, std::vector<detail::Strip>(static_cast<std::size_t>(d),
                                                              detail::Strip::Horizontal),
                             vars, bound);
}

Series vandermonde(const VarSet& vars, int bound) {
  Series v = Series::constant(vars, bound, 1);
  for (int i = 0; i < vars.size(); ++i)
    for (int j = i + 1; j < vars.size(); ++j)
      v = v * (Series::variable(vars, bound, i) - Series::variable(vars, bound, j));
  return v;
}

namespace {

int delta_degree(int d) { return d * (d - 1) / 2; }

// Sorts exponents into strictly decreasing order; returns 0 on a repeat, else
// the sign of the sorting permutation.
int sort_decreasing(std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] < p[j]) ++inversions;
    }
  std::sort(p.begin(), p.end(), std::greater<int>());
  return inversions % 2 ? -1 : 1;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

SchurExpansion schur_decompose(const Series& g, int d) {
  if (g.vars().size() != d)
    throw std::invalid_argument("schur_decompose: series must be in exactly d variables");
  const int n = g.bound(), dd = delta_degree(d);
  if (n + dd > kMaxBound) throw std::invalid_argument("schur_decompose: bound too large");
  // The Vandermonde product is homogeneous, so degree n + dd of the product only
  // involves degree n of g and the raised bound is exact.
  const Series prod = g.with_bound(n + dd) * vandermonde(g.vars(), n + dd);
  SchurExpansion out(d, n);
  std::map<std::vector<int>, long> orbit;
  for (const auto& [m, c] : prod.terms()) {
    std::vector<int> p(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = m[i];
    const int slice = m.degree() - dd;
    const int sign = sort_decreasing(p);
    if (sign == 0)
      throw DecompositionError("schur_decompose: input is not symmetric (repeated exponent at degree " +
                                   std::to_string(slice) + ")",
                               slice);
    const Rational cq = prod.coeff(make_monomial(p));
    if (c != (sign > 0 ? cq : Rational(-cq)))
      throw DecompositionError("schur_decompose: input is not symmetric at degree " +
                                   std::to_string(slice),
                               slice);
    ++orbit[p];
  }
  const long full = factorial(d);
  for (const auto& [p, count] : orbit) {
    int weight = 0;
    for (int x : p) weight += x;
    if (count != full)
      throw DecompositionError("schur_decompose: input is not symmetric at degree " +
                                   std::to_string(weight - dd),
                               weight - dd);
    std::vector<int> lam(p.size());
    for (int i = 0; i < d; ++i)
      lam[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] - (d - 1 - i);
    out.add(Partition(lam), prod.coeff(make_monomial(p)));
  }
  return out;
}

SchurExpansion pieri_row(const SchurExpansion& e, int m) {
  SchurExpansion out(e.d(), e.bound());
  for (const auto& [lam, c] : e.coeffs()) {
    if (lam.weight() + m > e.bound()) continue;
    for (const auto& beta : horizontal_strips(lam, m, e.d())) out.add(beta, c);
  }
  return out;
}

SchurExpansion pieri_col(const SchurExpansion& e, int m) {
  SchurExpansion out(e.d(), e.bound());
  for (const auto& [lam, c] : e.coeffs()) {
    if (lam.weight() + m > e.bound()) continue;
    for (const auto& beta : vertical_strips(lam, m, e.d())) out.add(beta, c);
  }
  return out;
}

MultSeries to_mult_series(const SchurExpansion& e, MultForm form) {
  const int d = e.d();
  VarSet vars = VarSet::indexed(form == MultForm::T ? "t" : "v", d);
  std::vector<Series::Term> terms;
  for (const auto& [lam, c] : e.coeffs()) {
    std::vector<int> exps(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
      exps[static_cast<std::size_t>(i)] = form == MultForm::T ? lam[i] : lam[i] - lam[i + 1];
    terms.emplace_back(make_monomial(exps), c);
  }
  return {form, d, e.bound(), Series::from_terms(vars, e.bound(), std::move(terms))};
}

int v_weight(const Monomial& m, int d) {
  int w = 0;
  for (int i = 0; i < d; ++i) w += (i + 1) * m[i];
  return w;
}

Series restrict_v_weight(const Series& s, int d, int bound) {
  return s.filter([d, bound](const Monomial& m) { return v_weight(m, d) <= bound; });
}

SchurExpansion from_mult_series(const MultSeries& h) {
  const int d = h.d;
  if (h.series.vars().size() != d)
    throw std::invalid_argument("multiplicity series variable count differs from d");
  SchurExpansion out(d, h.bound);
  for (const auto& [m, c] : h.series.terms()) {
    std::vector<int> lam(static_cast<std::size_t>(d));
    if (h.form == MultForm::T) {
      for (int i = 0; i < d; ++i) {
        lam[static_cast<std::size_t>(i)] = m[i];
        if (i > 0 && m[i] > m[i - 1])
          throw std::invalid_argument("T-form exponent vector is not weakly decreasing");
      }
    } else {
      int acc = 0;
      for (int i = d - 1; i >= 0; --i) lam[static_cast<std::size_t>(i)] = acc += m[i];
    }
    Partition p(std::move(lam));
    if (p.weight() <= h.bound) out.add(p, c);
  }
  return out;
}

MultSeries convert_form(const MultSeries& h, MultForm form) {
  if (h.form == form) return h;
  if (form == MultForm::V) return to_mult_series(from_mult_series(h), MultForm::V);
  // v_i -> t_1 ... t_i; the T-degree of the image is the weight.
  VarSet tvars = VarSet::indexed("t", h.d);
  std::vector<SignedMonomial> reps;
  for (int i = 0; i < h.d; ++i) {
    SignedMonomial r;
    for (int j = 0; j <= i; ++j) r.m.e[static_cast<std::size_t>(j)] = 1;
    reps.push_back(r);
  }
  return {MultForm::T, h.d, h.bound, substitute_monomials(h.series, reps, tvars, h.bound)};
}

bool verify_mult_series(const Series& f, const MultSeries& h) {
  const int d = h.d;
  if (h.form != MultForm::T || f.vars().size() != d || h.series.vars().size() != d) return false;
  const int n = f.bound(), dd = delta_degree(d);
  if (n + dd > kMaxBound) return false;
  const Series lhs = f.with_bound(n + dd) * vandermonde(f.vars(), n + dd);
  std::vector<int> sigma(static_cast<std::size_t>(d));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Series::Term> rhs;
  for (const auto& [m, c] : h.series.terms()) {
    if (m.degree() > n) continue;
    for (int i = 1; i < d; ++i)
      if (m[i] > m[i - 1]) return false;
  }
  do {
    int inversions = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)]) ++inversions;
    for (const auto& [m, c] : h.series.terms()) {
      if (m.degree() > n) continue;
      Monomial e;
      for (int i = 0; i < d; ++i)
        e.e[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] =
            static_cast<std::uint8_t>(m[i] + d - 1 - i);
      rhs.emplace_back(e, inversions % 2 ? Rational(-c) : c);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return lhs == Series::from_terms(f.vars(), n + dd, std::move(rhs));
}

}  // namespace cochar
