#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ogs/generators.hpp"
#include "ogs/permutation.hpp"
#include "ogs/power_product.hpp"
#include "ogs/sn_ogs.hpp"

namespace ogs {

/// Exponents of u_{2r}, v_{2r} and (when 2r+1 <= n) t_{2r+1}.
struct AltBlock
{
  int j = 0;
  int k = 0;
  std::optional<int> i_odd;

  friend bool operator==(AltBlock const &, AltBlock const &) = default;
  friend auto operator<=>(AltBlock const &, AltBlock const &) = default;
};

/**
 * Canonical form of an element of Alt_n (n >= 3):
 *
 *   t_3^{i_3} * u_4^{j_4} * v_4^{k_4} * t_5^{i_5} * u_6^{j_6} * v_6^{k_6} * ...
 *
 * truncated at degree n, so odd n ends with t_n and even n with v_n. Block r
 * (2 <= r <= n/2) holds j_{2r} < 2, k_{2r} < r and i_{2r+1} < 2r+1.
 */
class AltCanonicalForm
{
public:
  /// Throws RangeError on bound violations or a block list of the wrong shape.
  AltCanonicalForm(unsigned degree, int i3, std::vector<AltBlock> blocks);

  static AltCanonicalForm zero(unsigned degree);

  unsigned degree() const
  { return degree_; }

  int i3() const
  { return i3_; }

  /// blocks()[r - 2] is the block of u_{2r}, v_{2r}, t_{2r+1}.
  std::vector<AltBlock> const &blocks() const
  { return blocks_; }

  /// The letters in decode order, zero exponents included.
  std::vector<Letter> letters() const;

  /// Flat exponent tuple (i3, j4, k4, i5, j6, ...) in decode order.
  std::vector<int> tuple() const;

  /// Upper bounds matching tuple(): (3, 2, 2, 5, 2, 3, 7, ...).
  static std::vector<int> tuple_bounds(unsigned degree);

  static AltCanonicalForm from_tuple(unsigned degree, std::vector<int> const &tuple);

  GeneratorWord to_word() const;

  friend bool operator==(AltCanonicalForm const &, AltCanonicalForm const &) = default;

private:
  unsigned degree_;
  int i3_;
  std::vector<AltBlock> blocks_;
};

Permutation decode_alt(AltCanonicalForm const &c);

/// Throws ParityError for odd permutations and RangeError for degree < 3.
AltCanonicalForm encode_alt(Permutation const &p);

/**
 * Exchange law for v_{2q}^{k_{2q}} * v_{2p}^{k_{2p}}, obtained from
 * exchange_sn on t_{2q}^{2k_{2q}} * t_{2p}^{2k_{2p}} since v_{2r} = t_{2r}^2.
 * Requires 2 <= p < q, 2q <= n, 1 <= k_2q < q, 1 <= k_2p < p.
 */
VPowerProduct v_exchange(int q, int k_2q, int p, int k_2p, unsigned n);

/// The same law evaluated from its own three-case formula.
VPowerProduct v_exchange_direct(int q, int k_2q, int p, int k_2p, unsigned n);

VPowerProduct v_exchange_case(ExchangeCase which, int q, int k_2q, int p,
                              int k_2p, unsigned n);

/// "t3^a * u4^b * v4^c * t5^d * ..." in decode order, zero factors omitted.
std::string print_alt_form(AltCanonicalForm const &c);

/// Accepts letters in decode order, each at most once, within bounds.
AltCanonicalForm parse_alt_form(std::string_view text, unsigned degree);

} // namespace ogs
