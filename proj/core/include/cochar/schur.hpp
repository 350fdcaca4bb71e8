#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "cochar/partition.hpp"
#include "cochar/series.hpp"

namespace cochar {

using PartitionMap = std::map<Partition, Rational, WeightLexLess>;

// Adds c to m[p], erasing the entry when it cancels.
void accumulate(PartitionMap& m, const Partition& p, const Rational& c);
bool all_integral(const PartitionMap& m);
bool all_nonnegative_integral(const PartitionMap& m);

// Sum of m_lambda S_lambda(T_d) through weight `bound`.
class SchurExpansion {
 public:
  SchurExpansion(int d, int bound);
  static SchurExpansion single(int d, int bound, const Partition& lam, const Rational& c = 1);

  int d() const { return d_; }
  int bound() const { return bound_; }
  const PartitionMap& coeffs() const { return coeffs_; }
  Rational coeff(const Partition& lam) const;
  bool empty() const { return coeffs_.empty(); }

  // Partitions with more than d parts or weight above the bound are dropped.
  void add(const Partition& lam, const Rational& c);

  SchurExpansion& operator+=(const SchurExpansion& o);
  SchurExpansion& operator*=(const Rational& c);
  friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
  friend SchurExpansion operator*(const Rational& c, SchurExpansion a) { return a *= c; }
  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  int d_;
  int bound_;
  PartitionMap coeffs_;
};

// Raised when a series handed to a decomposition is not in the span of the basis.
class DecompositionError : public std::domain_error {
 public:
  DecompositionError(const std::string& what, int degree)
      : std::domain_error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

// Raised when a pipeline produces a negative or non-integral multiplicity.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// S_lambda(t1..td) summed over semistandard tableaux, truncated at N.
Series schur_poly(const Partition& lam, int d, int bound);

// Schur-basis coefficients of a symmetric series in d variables. Throws
// DecompositionError (with the offending degree) when g is not symmetric.
SchurExpansion schur_decompose(const Series& g, int d);

// Multiplication by S_(m) (horizontal strips) and S_(1^m) (vertical strips).
SchurExpansion pieri_row(const SchurExpansion& e, int m);
SchurExpansion pieri_col(const SchurExpansion& e, int m);

enum class MultForm { T, V };

// M(g;T_d) = sum m_lambda t^lambda, or M'(g;V_d) = sum m_lambda v^(lambda_i - lambda_{i+1}).
// `bound` is the weight bound of the underlying expansion.
struct MultSeries {
  MultForm form = MultForm::T;
  int d = 0;
  int bound = 0;
  Series series;
};

MultSeries to_mult_series(const SchurExpansion& e, MultForm form);
// Inverse of to_mult_series. Terms of weight above h.bound are dropped. Throws
// std::invalid_argument on a T-form exponent vector that is not weakly decreasing.
SchurExpansion from_mult_series(const MultSeries& h);
// Weight of a V-form monomial: sum i * a_i.
int v_weight(const Monomial& m, int d);
// V-form series restricted to weight <= bound.
Series restrict_v_weight(const Series& s, int d, int bound);
MultSeries convert_form(const MultSeries& h, MultForm form);

// Checks f * prod_{i<j}(t_i - t_j) = sum_sigma sign(sigma) sigma(t^delta h)
// coefficient-wise up to the bound. False on any mismatch or invalid h.
bool verify_mult_series(const Series& f, const MultSeries& h);

// prod_{i<j}(t_i - t_j) over the given variables, with the given bound.
Series vandermonde(const VarSet& vars, int bound);

// JSON: [{"partition":[..],"coeff":".."}, ...] sorted by weight then parts.
std::string to_json(const PartitionMap& m);

}  // namespace cochar
