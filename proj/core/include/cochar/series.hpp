#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cochar {

using Rational = mpq_class;

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxBound = 255;

// Exponent vector. Exponents fit a byte because every stored monomial has
// total degree at most kMaxBound.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Caller guarantees the product degree is at most kMaxBound.
Monomial operator*(const Monomial& a, const Monomial& b);

// Builds a monomial from exponents; throws if the degree exceeds kMaxBound.
Monomial make_monomial(const std::vector<int>& exps);

struct VarBlock {
  std::string label;
  int start = 0;
  int size = 0;
  friend bool operator==(const VarBlock&, const VarBlock&) = default;
};

class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names, std::vector<VarBlock> blocks = {});

  // prefix1, ..., prefix{count}
  static VarSet indexed(const std::string& prefix, int count);
  // t1..tk then y1..yl, blocks "T" and "Y".
  static VarSet hook(int k, int l);
  // v1..vk, t1..tk, y1..yl, blocks "V", "T", "Y".
  static VarSet hook_mult(int k, int l);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<VarBlock>& blocks() const { return blocks_; }
  // -1 when absent.
  int index_of(std::string_view name) const;
  const VarBlock* block(std::string_view label) const;

  // Variable names only; block labels are layout metadata.
  friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<VarBlock> blocks_;
};

// Canonical order: total degree ascending, then exponent vectors
// lexicographically descending in the declared variable order.
bool canonical_less(const Monomial& a, const Monomial& b);

// Sparse power series with exact rational coefficients, truncated at total
// degree `bound`. Terms are kept sorted canonically with no zero coefficients.
class Series {
 public:
  using Term = std::pair<Monomial, Rational>;

  Series() = default;
  Series(VarSet vars, int bound);

  static Series constant(const VarSet& vars, int bound, const Rational& c);
  static Series variable(const VarSet& vars, int bound, int index);
  static Series variable(const VarSet& vars, int bound, std::string_view name);
  static Series monomial(const VarSet& vars, int bound, const Monomial& m,
                         const Rational& c = 1);
  // Terms above the bound are dropped; duplicates are summed.
  static Series from_terms(const VarSet& vars, int bound, std::vector<Term> terms);

  const VarSet& vars() const { return vars_; }
  int bound() const { return bound_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;

  // Copy truncated to a smaller bound, or relabelled with a larger one. A larger
  // bound is only meaningful when the caller knows the omitted degrees vanish
  // (e.g. for polynomials).
  Series with_bound(int bound) const;
  // Keeps only terms whose monomial satisfies pred.
  Series filter(const std::function<bool(const Monomial&)>& pred) const;
  // Sum of terms of one total degree, same bound.
  Series homogeneous_part(int degree) const;
  // Same terms over another variable set of equal size.
  Series relabel(const VarSet& vars) const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& c);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator+(Series a, const Rational& c);
  friend Series operator+(const Rational& c, Series a) { return std::move(a) + c; }
  friend Series operator-(Series a, const Rational& c) { return std::move(a) + Rational(-c); }
  friend Series operator-(const Rational& c, const Series& a) { return -a + c; }

  friend bool operator==(const Series& a, const Series& b);

  // "1 + 2*t1 - 1/2*t1^2*t2"; "0" for the zero series.
  std::string str() const;

 private:
  void check_compatible(const Series& o, const char* op) const;

  VarSet vars_;
  int bound_ = 0;
  std::vector<Term> terms_;
};

// Truncated product. Throws std::invalid_argument on mismatched vars or bounds.
Series series_mul(const Series& a, const Series& b);
Series pow(const Series& a, int exponent);
// Multiplicative inverse; requires a nonzero constant term.
Series inverse(const Series& a);
Series operator/(const Series& a, const Series& b);

// (1 + sign*x_var)^power
struct Factor {
  int var = 0;
  int sign = -1;
  int power = 1;
};

// Expansion of the product of factors, exact to total degree N.
Series expand_factor(const VarSet& vars, const std::vector<Factor>& factors, int bound);
// Parses "(1+t1)(1-t2)^-1 (1-y1)^2". Throws std::invalid_argument when malformed.
std::vector<Factor> parse_factors(std::string_view spec, const VarSet& vars);

struct SignedMonomial {
  int sign = 1;
  Monomial m;
};

// Replaces source variable i by replacement[i] (in the target variable set) and
// truncates at target_bound.
Series substitute_monomials(const Series& s, const std::vector<SignedMonomial>& replacement,
                            const VarSet& target, int target_bound);
// Same, with each replacement given as a series that must be +-1 times a monomial.
Series substitute_monomials(const Series& s, const std::vector<Series>& replacement,
                            const VarSet& target, int target_bound);

// JSON: [{"exp":[...],"num":"..","den":".."}, ...] in canonical order.
std::string to_json(const Series& s);
Series series_from_json(std::string_view json, const VarSet& vars, int bound);

}  // namespace cochar
