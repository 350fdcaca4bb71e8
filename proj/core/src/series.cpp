#include "cochar/series.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <unordered_map>

#include "cochar/parallel.hpp"

namespace cochar {

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t lo = 0, hi = 0;
  for (int i = 0; i < 8; ++i) {
    lo |= static_cast<std::uint64_t>(m.e[static_cast<std::size_t>(i)]) << (8 * i);
    hi |= static_cast<std::uint64_t>(m.e[static_cast<std::size_t>(i + 8)]) << (8 * i);
  }
  std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL;
  h ^= (hi + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2)) * 0xbf58476d1ce4e5b9ULL;
  return static_cast<std::size_t>(h ^ (h >> 31));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    r.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
  return r;
}

Monomial make_monomial(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("too many exponents for a monomial");
  Monomial m;
  int deg = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw std::invalid_argument("negative exponent");
    deg += exps[i];
    if (deg > kMaxBound) throw std::invalid_argument("monomial degree exceeds the maximum bound");
    m.e[i] = static_cast<std::uint8_t>(exps[i]);
  }
  return m;
}

VarSet::VarSet(std::vector<std::string> names, std::vector<VarBlock> blocks)
    : names_(std::move(names)), blocks_(std::move(blocks)) {
  if (names_.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
  }
  int next = 0;
  for (const auto& b : blocks_) {
    if (b.start != next || b.size < 0 || b.start + b.size > size())
      throw std::invalid_argument("variable blocks must tile a prefix in order");
    next += b.size;
  }
}

VarSet VarSet::indexed(const std::string& prefix, int count) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return VarSet(std::move(names));
}

VarSet VarSet::hook(int k, int l) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("t" + std::to_string(i));
  for (int i = 1; i <= l; ++i) names.push_back("y" + std::to_string(i));
  return VarSet(std::move(names), {{"T", 0, k}, {"Y", k, l}});
}

VarSet VarSet::hook_mult(int k, int l) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("v" + std::to_string(i));
  for (int i = 1; i <= k; ++i) names.push_back("t" + std::to_string(i));
  for (int i = 1; i <= l; ++i) names.push_back("y" + std::to_string(i));
  return VarSet(std::move(names), {{"V", 0, k}, {"T", k, k}, {"Y", 2 * k, l}});
}

int VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

const VarBlock* VarSet::block(std::string_view label) const {
  for (const auto& b : blocks_)
    if (b.label == label) return &b;
  return nullptr;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

namespace {

bool term_less(const Series::Term& a, const Series::Term& b) {
  return canonical_less(a.first, b.first);
}

std::vector<Series::Term> collect(std::unordered_map<Monomial, Rational, MonomialHash>& acc) {
  std::vector<Series::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, std::move(c));
  std::sort(out.begin(), out.end(), term_less);
  return out;
}

}  // namespace

Series::Series(VarSet vars, int bound) : vars_(std::move(vars)), bound_(bound) {
  if (bound < 0 || bound > kMaxBound)
    throw std::invalid_argument("truncation bound must be in [0, " + std::to_string(kMaxBound) + "]");
}

Series Series::constant(const VarSet& vars, int bound, const Rational& c) {
  Series s(vars, bound);
  if (c != 0) {
    s.terms_.emplace_back(Monomial{}, c);
    s.terms_.back().second.canonicalize();
  }
  return s;
}

Series Series::variable(const VarSet& vars, int bound, int index) {
  if (index < 0 || index >= vars.size()) throw std::invalid_argument("variable index out of range");
  Monomial m;
  m.e[static_cast<std::size_t>(index)] = 1;
  return monomial(vars, bound, m);
}

Series Series::variable(const VarSet& vars, int bound, std::string_view name) {
  int idx = vars.index_of(name);
  if (idx < 0) throw std::invalid_argument("unknown variable " + std::string(name));
  return variable(vars, bound, idx);
}

Series Series::monomial(const VarSet& vars, int bound, const Monomial& m, const Rational& c) {
  return from_terms(vars, bound, {{m, c}});
}

Series Series::from_terms(const VarSet& vars, int bound, std::vector<Term> terms) {
  Series s(vars, bound);
  for (const auto& [m, c] : terms)
    for (int i = vars.size(); i < kMaxVars; ++i)
      if (m[i] != 0) throw std::invalid_argument("exponent on an undeclared variable");
  std::erase_if(terms, [&](const Term& t) { return t.first.degree() > bound; });
  std::sort(terms.begin(), terms.end(), term_less);
  for (auto& t : terms) {
    // Callers may hand in values built from an unreduced numerator/denominator pair.
    t.second.canonicalize();
    if (!s.terms_.empty() && s.terms_.back().first == t.first)
      s.terms_.back().second += t.second;
    else
      s.terms_.push_back(std::move(t));
  }
  std::erase_if(s.terms_, [](const Term& t) { return t.second == 0; });
  return s;
}

Rational Series::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return canonical_less(t.first, x); });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Rational Series::constant_term() const { return coeff(Monomial{}); }

Series Series::with_bound(int bound) const {
  Series s(vars_, bound);
  for (const auto& t : terms_)
    if (t.first.degree() <= bound) s.terms_.push_back(t);
  return s;
}

Series Series::filter(const std::function<bool(const Monomial&)>& pred) const {
  Series s(vars_, bound_);
  for (const auto& t : terms_)
    if (pred(t.first)) s.terms_.push_back(t);
  return s;
}

Series Series::homogeneous_part(int degree) const {
  return filter([degree](const Monomial& m) { return m.degree() == degree; });
}

Series Series::relabel(const VarSet& vars) const {
  if (vars.size() != vars_.size()) throw std::invalid_argument("relabel needs equal variable counts");
  Series s = *this;
  s.vars_ = vars;
  return s;
}

void Series::check_compatible(const Series& o, const char* op) const {
  if (!(vars_ == o.vars_))
    throw std::invalid_argument(std::string(op) + ": mismatched variable sets");
  if (bound_ != o.bound_) throw std::invalid_argument(std::string(op) + ": mismatched bounds");
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

namespace {

std::vector<Series::Term> merge(const std::vector<Series::Term>& a,
                                const std::vector<Series::Term>& b, int sign) {
  std::vector<Series::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_less(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_less(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : Rational(-b[j].second));
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].second + b[j].second)
                            : Rational(a[i].second - b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Series& Series::operator+=(const Series& o) {
  check_compatible(o, "series add");
  terms_ = merge(terms_, o.terms_, 1);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check_compatible(o, "series subtract");
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Series operator+(Series a, const Rational& c) {
  return a + Series::constant(a.vars(), a.bound(), c);
}

bool operator==(const Series& a, const Series& b) {
  return a.vars_ == b.vars_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
}

std::string Series::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    std::string mono;
    for (int i = 0; i < vars_.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_.name(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

Series series_mul(const Series& a, const Series& b) {
  if (!(a.vars() == b.vars())) throw std::invalid_argument("series_mul: mismatched variable sets");
  if (a.bound() != b.bound()) throw std::invalid_argument("series_mul: mismatched bounds");
  const int n = a.bound();
  // Terms are sorted by degree, so each degree is a contiguous range.
  auto ranges = [n](const Series& s) {
    std::vector<std::size_t> start(static_cast<std::size_t>(n) + 2, s.size());
    const auto& t = s.terms();
    for (std::size_t i = t.size(); i-- > 0;) start[static_cast<std::size_t>(t[i].first.degree())] = i;
    for (int d = n; d >= 0; --d)
      start[static_cast<std::size_t>(d)] =
          std::min(start[static_cast<std::size_t>(d)], start[static_cast<std::size_t>(d) + 1]);
    return start;
  };
  const auto ra = ranges(a), rb = ranges(b);
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<std::vector<Series::Term>> slices(static_cast<std::size_t>(n) + 1);
  parallel_for(slices.size(), [&](std::size_t deg) {
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    Rational prod;
    for (std::size_t da = 0; da <= deg; ++da) {
      const std::size_t db = deg - da;
      for (std::size_t i = ra[da]; i < ra[da + 1]; ++i)
        for (std::size_t j = rb[db]; j < rb[db + 1]; ++j) {
          mpq_mul(prod.get_mpq_t(), ta[i].second.get_mpq_t(), tb[j].second.get_mpq_t());
          auto& slot = acc[ta[i].first * tb[j].first];
          mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), prod.get_mpq_t());
        }
    }
    slices[deg] = collect(acc);
  });
  std::vector<Series::Term> all;
  for (auto& s : slices)
    for (auto& t : s) all.push_back(std::move(t));
  return Series::from_terms(a.vars(), n, std::move(all));
}

Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

Series pow(const Series& a, int exponent) {
  if (exponent < 0) return pow(inverse(a), -exponent);
  Series result = Series::constant(a.vars(), a.bound(), 1);
  Series base = a;
  while (exponent > 0) {
    if (exponent & 1) result = series_mul(result, base);
    exponent >>= 1;
    if (exponent) base = series_mul(base, base);
  }
  return result;
}

Series inverse(const Series& a) {
  const Rational c0 = a.constant_term();
  if (c0 == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  // Newton iteration b <- b(2 - ab); exact to degree 2^k - 1 after k steps.
  Series b = Series::constant(a.vars(), a.bound(), Rational(1) / c0);
  for (int exact = 1; exact <= a.bound(); exact *= 2)
    b = series_mul(b, Rational(2) - series_mul(a, b));
  return b;
}

Series operator/(const Series& a, const Series& b) { return series_mul(a, inverse(b)); }

Series expand_factor(const VarSet& vars, const std::vector<Factor>& factors, int bound) {
  Series result = Series::constant(vars, bound, 1);
  for (const auto& f : factors) {
    if (f.var < 0 || f.var >= vars.size())
      throw std::invalid_argument("factor references an unknown variable");
    if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("factor sign must be +1 or -1");
    // (1 + s x)^p = sum_j binom(p, j) s^j x^j, with binom(p, j) generalized for p < 0.
    std::vector<Series::Term> terms;
    mpz_class c = 1;
    for (int j = 0; j <= bound; ++j) {
      if (j > 0) {
        c = c * (f.power - (j - 1));
        c /= j;
      }
      if (c == 0) break;
      Monomial m;
      m.e[static_cast<std::size_t>(f.var)] = static_cast<std::uint8_t>(j);
      mpz_class coef = (f.sign < 0 && j % 2 == 1) ? mpz_class(-c) : c;
      terms.emplace_back(m, Rational(coef));
    }
    result = series_mul(result, Series::from_terms(vars, bound, std::move(terms)));
  }
  return result;
}

std::vector<Factor> parse_factors(std::string_view spec, const VarSet& vars) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed factor spec '" + std::string(spec) + "': " + why);
  };
  std::vector<Factor> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < spec.size() && (std::isspace(static_cast<unsigned char>(spec[i])) || spec[i] == '*')) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= spec.size() || spec[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  };
  skip();
  if (i == spec.size()) fail("empty");
  while (i < spec.size()) {
    Factor f;
    expect('(');
    expect('1');
    skip();
    if (i >= spec.size() || (spec[i] != '+' && spec[i] != '-')) fail("expected + or -");
    f.sign = spec[i] == '+' ? 1 : -1;
    ++i;
    skip();
    std::size_t start = i;
    while (i < spec.size() && (std::isalnum(static_cast<unsigned char>(spec[i])) || spec[i] == '_')) ++i;
    std::string_view name = spec.substr(start, i - start);
    if (name.empty()) fail("missing variable");
    f.var = vars.index_of(name);
    if (f.var < 0) fail("unknown variable " + std::string(name));
    expect(')');
    skip();
    if (i < spec.size() && spec[i] == '^') {
      ++i;
      skip();
      std::size_t s = i;
      if (i < spec.size() && (spec[i] == '-' || spec[i] == '+')) ++i;
      while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
      std::string tok(spec.substr(s, i - s));
      if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
      int p = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), p);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) fail("bad exponent");
      f.power = p;
    }
    out.push_back(f);
    skip();
  }
  return out;
}

Series substitute_monomials(const Series& s, const std::vector<SignedMonomial>& replacement,
                            const VarSet& target, int target_bound) {
  if (replacement.size() != static_cast<std::size_t>(s.vars().size()))
    throw std::invalid_argument("substitute_monomials: one replacement per source variable required");
  std::vector<int> rdeg;
  for (const auto& r : replacement) {
    if (r.sign != 1 && r.sign != -1)
      throw std::invalid_argument("substitute_monomials: replacement sign must be +1 or -1");
    for (int i = target.size(); i < kMaxVars; ++i)
      if (r.m[i] != 0) throw std::invalid_argument("substitute_monomials: replacement outside target");
    rdeg.push_back(r.m.degree());
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& [m, c] : s.terms()) {
    int deg = 0;
    for (int i = 0; i < s.vars().size(); ++i) deg += m[i] * rdeg[static_cast<std::size_t>(i)];
    if (deg > target_bound) continue;
    std::array<int, kMaxVars> e{};
    int sign = 1;
    for (int i = 0; i < s.vars().size(); ++i) {
      const auto& r = replacement[static_cast<std::size_t>(i)];
      for (int v = 0; v < kMaxVars; ++v) e[static_cast<std::size_t>(v)] += m[i] * r.m[v];
      if (r.sign < 0 && m[i] % 2 == 1) sign = -sign;
    }
    Monomial out;
    for (std::size_t v = 0; v < kMaxVars; ++v) out.e[v] = static_cast<std::uint8_t>(e[v]);
    acc[out] += sign > 0 ? c : Rational(-c);
  }
  return Series::from_terms(target, target_bound, collect(acc));
}

Series substitute_monomials(const Series& s, const std::vector<Series>& replacement,
                            const VarSet& target, int target_bound) {
  std::vector<SignedMonomial> reps;
  for (const auto& r : replacement) {
    if (!(r.vars() == target))
      throw std::invalid_argument("substitute_monomials: replacement not over the target variables");
    if (r.size() != 1 || (r.terms()[0].second != 1 && r.terms()[0].second != -1))
      throw std::invalid_argument("substitute_monomials: replacement is not a signed monomial: " +
                                  r.str());
    reps.push_back({r.terms()[0].second > 0 ? 1 : -1, r.terms()[0].first});
  }
  return substitute_monomials(s, reps, target, target_bound);
}

}  // namespace cochar
