#pragma once

#include "cochar/schur.hpp"

namespace cochar {

// 1/2 + 1/2 prod_{i<=d} (1+t_i)/(1-t_i), truncated at N.
Series hilbert_E(int d, int bound);

// sum_{j=1}^{n} C(n,j) H(E)^j (t_1 + ... + t_d - 1)^(j-1).
Series hilbert_UTnE(int n, int d, int bound);

// Operator pipeline:
//   sum_j sum_q sum_{lambda |- q} (-1)^(j-1-q) C(n,j) C(j-1,q) d_lambda Z^j(lambda).
// Throws IntegralityError on a negative or fractional multiplicity.
SchurExpansion mult_expansion_UTnE(int n, int d, int bound);
MultSeries mult_series_UTnE(int n, int d, int bound);

// 1/2 (1 + prod_i (1+t_i)/(1-t_i) prod_s (1+y_s)/(1-y_s)) over VarSet::hook(k,l).
Series double_hilbert_E(int k, int l, int bound);

// sum_{j=1}^{n} C(n,j) H(E;T_k,Y_l)^j (sum t_i + sum y_s - 1)^(j-1).
Series double_hilbert_UTnE(int n, int k, int l, int bound);

// Throws IntegralityError naming `what` if any coefficient is negative or fractional.
void check_multiplicities(const PartitionMap& m, const std::string& what);

mpz_class binomial(int n, int k);

}  // namespace cochar
