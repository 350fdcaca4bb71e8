#pragma once

#include "cochar/schur.hpp"

namespace cochar {

// Y: multiplication by prod 1/(1 - t_i), i.e. sum over m of pieri_row(e, m).
SchurExpansion op_Y(const SchurExpansion& e);

// Y computed on the T-form multiplicity series by the substitution formula
//   Y(M) = prod 1/(1-t_i) * sum_eps (-t_2)^eps_2 ... (-t_d)^eps_d
//          M(t_1 t_2^eps_2, t_2^(1-eps_2) t_3^eps_3, ..., t_d^(1-eps_d)).
// Independent of the Pieri route; the two must agree exactly.
SchurExpansion op_Y_substitution(const SchurExpansion& e);

// Y-hat: multiplication by (prod(1-t_i) + prod(1+t_i)) / 2, the sum of the even
// elementary symmetric functions.
SchurExpansion op_Yhat(const SchurExpansion& e);

// Z = Y o Y-hat: multiplication by 1/2 + 1/2 prod (1+t_i)/(1-t_i).
SchurExpansion op_Z(const SchurExpansion& e);
SchurExpansion op_Z_power(const SchurExpansion& e, int j);

// Y-bar: multiplication by sum_{s=0}^{d} e_s(T_d).
SchurExpansion op_Ybar(const SchurExpansion& e);

}  // namespace cochar
