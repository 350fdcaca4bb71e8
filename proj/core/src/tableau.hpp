#pragma once

#include <vector>

#include "cochar/partition.hpp"
#include "cochar/series.hpp"

namespace cochar::detail {

enum class Strip { Horizontal, Vertical };

// Sum over chains {} = s0 <= s1 <= ... <= sr = lam where s_i / s_{i-1} is a strip
// of kind letters[i-1]; variable i-1 gets exponent |s_i / s_{i-1}|. With
// horizontal letters this enumerates semistandard tableaux, and appending
// vertical letters gives the (k,l)-semistandard tableaux of the hook case.
Series tableau_sum(const Partition& lam, const std::vector<Strip>& letters,
                   const VarSet& vars, int bound);

}  // namespace cochar::detail
