#pragma once

#include <string>

#include "cochar/schur.hpp"

namespace cochar {

// Sum of m_lambda HS_lambda(T_k, Y_l) through weight `bound`.
class HookExpansion {
 public:
  HookExpansion(int k, int l, int bound);
  static HookExpansion single(int k, int l, int bound, const Partition& lam, const Rational& c = 1);

  int k() const { return k_; }
  int l() const { return l_; }
  int bound() const { return bound_; }
  const PartitionMap& coeffs() const { return coeffs_; }
  Rational coeff(const Partition& lam) const;
  bool empty() const { return coeffs_.empty(); }

  // Partitions outside H(k,l) or above the bound are dropped.
  void add(const Partition& lam, const Rational& c);

  HookExpansion& operator+=(const HookExpansion& o);
  HookExpansion& operator*=(const Rational& c);
  friend HookExpansion operator+(HookExpansion a, const HookExpansion& b) { return a += b; }
  friend HookExpansion operator*(const Rational& c, HookExpansion a) { return a *= c; }
  friend bool operator==(const HookExpansion&, const HookExpansion&) = default;

 private:
  int k_;
  int l_;
  int bound_;
  PartitionMap coeffs_;
};

// M-hat over VarSet::hook_mult(k,l): lambda is stored as V^lambda0 T^mu Y^nu
// with V^lambda0 = prod v_i^(lambda0_i). Total degree equals |lambda|.
struct HookMultSeries {
  int k = 0;
  int l = 0;
  int bound = 0;
  Series series;
};

// Hook Schur function over VarSet::hook(k,l), summed over (k,l)-semistandard
// tableaux. Zero exactly when lambda is outside H(k,l).
Series hs_poly(const Partition& lam, int k, int l, int bound);

// Coefficients in the hook Schur basis, one exact linear solve per degree.
// Throws DecompositionError with the offending degree on a nonzero residual.
HookExpansion hs_decompose(const Series& g, int k, int l);

// Multiplication by HS_(n) and HS_(1^m), computed on the hook split.
HookExpansion hook_pieri_row(const HookExpansion& e, int n);
HookExpansion hook_pieri_col(const HookExpansion& e, int m);

// G1 = sum_n hook_pieri_row(., n), G2 = sum_m hook_pieri_col(., m),
// G = (e + G2(G1(e))) / 2.
HookExpansion op_G1(const HookExpansion& e);
HookExpansion op_G2(const HookExpansion& e);
HookExpansion op_G(const HookExpansion& e);
HookExpansion op_G_power(const HookExpansion& e, int j);

// Hook version of the multiplicity pipeline for UT_n(E), with G in place of Z.
HookExpansion hook_mult_expansion_UTnE(int n, int k, int l, int bound);
HookMultSeries hook_mult_UTnE(int n, int k, int l, int bound);

HookMultSeries encode_hook(const HookExpansion& e);
// Throws std::invalid_argument on a monomial that is not a valid hook split.
HookExpansion decode_hook(const HookMultSeries& h);

// {"hook":[k,l],"terms":[{"lambda0":[..],"mu":[..],"nu":[..],"coeff":".."}, ...]}
std::string to_json(const HookMultSeries& h);

}  // namespace cochar
