#pragma once

#include <array>
#include <string>
#include <vector>

#include "ogs/generators.hpp"

namespace ogs {

/// A claimed identity between two words.
struct Relation
{
  std::string name;
  GeneratorWord left;
  GeneratorWord right;

  bool holds() const
  { return evaluate(left) == evaluate(right); }
};

/// The five exchange laws of Alt_4 between t_3, u_4 and v_4.
std::vector<Relation> alt4_exchange_table();

/**
 * t_{2r}^{-1} * t_{2r+2} = t_{2r+1}^{-1} * u_{2r+2} and
 * t_{2r} * t_{2r+2} = v_{2r} * t_{2r+1}^{-1} * u_{2r+2}.
 * Requires r >= 2 and 2r + 2 <= n.
 */
std::array<Relation, 2> rel_tt_step(int r, unsigned n);

/**
 * t_{2r}^{-1} * t_{2r'} = prod_{m = 2r+1, 2r+3, ..., 2r'-1} t_m^{-1} * u_{m+1}
 * and the same with t_{2r} on the left and v_{2r} prepended on the right.
 * Requires 2 <= r < r' and 2r' <= n.
 */
std::array<Relation, 2> rel_tt_general(int r, int r_prime, unsigned n);

/// rel_tt_general with t_m in place of t_m^{-1} in the product. Does not hold.
std::array<Relation, 2> rel_tt_general_uninverted(int r, int r_prime, unsigned n);

/**
 * v_{2r} * u_{2r} = prod_{i=2}^{r-1} (u_{2i} * t_{2i+1}^{-1}) * u_{2r} * v_{2r}.
 * Requires r >= 3 and 2r <= n.
 */
Relation rel_vu(int r, unsigned n);

/**
 * t_{2r'-1} * t_{2r-1} = prod_{i=2}^{r} (t_{2i-1}^{-1} * u_{2i}) * t_{2r'-1}.
 * Requires r' > r >= 2 and 2r' - 1 <= n.
 */
Relation rel_t_odd(int r, int r_prime, unsigned n);

} // namespace ogs
