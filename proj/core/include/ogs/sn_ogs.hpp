#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ogs/generators.hpp"
#include "ogs/permutation.hpp"
#include "ogs/power_product.hpp"

namespace ogs {

/**
 * Exponents (i_2, ..., i_n) of the canonical form t_2^{i_2} * ... * t_n^{i_n}
 * of an element of S_n, with 0 <= i_k < k.
 */
class SnCanonicalForm
{
public:
  /// `exponents[k - 2]` is i_k. Throws RangeError on a bound violation.
  SnCanonicalForm(unsigned degree, std::vector<int> exponents);

  static SnCanonicalForm zero(unsigned degree);

  unsigned degree() const
  { return degree_; }

  std::vector<int> const &exponents() const
  { return exponents_; }

  /// i_k for 2 <= k <= n.
  int exponent(unsigned k) const
  { return exponents_[k - 2u]; }

  GeneratorWord to_word() const;

  friend bool operator==(SnCanonicalForm const &, SnCanonicalForm const &) = default;
  friend auto operator<=>(SnCanonicalForm const &, SnCanonicalForm const &) = default;

private:
  unsigned degree_;
  std::vector<int> exponents_;
};

Permutation decode_sn(SnCanonicalForm const &c);

/// Coset peeling from the top point down; decode_sn(encode_sn(p)) == p.
SnCanonicalForm encode_sn(Permutation const &p);

/// Sum of the exponents; equals major_index(decode_sn(c)).
unsigned maj_of_form(SnCanonicalForm const &c);

/// The three cases of the exchange law for t_q^{i_q} * t_p^{i_p}.
enum class ExchangeCase { high = 1, middle = 2, low = 3 };

/// Cases whose side condition holds; two of them on the boundaries.
std::vector<ExchangeCase> exchange_cases(int q, int i_q, int p, int i_p);

/// The right-hand side of one specific case, reduced. No case check is done.
TPowerProduct exchange_sn_case(ExchangeCase which, int q, int i_q, int p,
                               int i_p, unsigned n);

/**
 * Rewrites t_q^{i_q} * t_p^{i_p} (p < q) into ascending-subscript order with
 * the first applicable case. Requires 2 <= p < q <= n, 1 <= i_q < q and
 * 1 <= i_p < p; throws RangeError otherwise.
 */
TPowerProduct exchange_sn(int q, int i_q, int p, int i_p, unsigned n);

struct NormalizeStats
{
  std::size_t rewrites = 0;
  std::size_t budget = 0;
};

/**
 * Canonical form of a word in the t generators, computed by exchange-law
 * rewriting: repeatedly rewrite the rightmost adjacent pair with descending
 * subscripts until the subscripts ascend. Throws RangeError on non-t letters
 * and InternalError if the rewrite budget of 10 * len * n^2 runs out or the
 * result disagrees with encode_sn(evaluate(w)).
 */
SnCanonicalForm normalize_sn(GeneratorWord const &w, NormalizeStats *stats = nullptr);

/// "t2^a * t3^b * ..." with zero exponents omitted, "e" for the identity.
std::string print_sn_form(SnCanonicalForm const &c);

/// Accepts t letters in strictly ascending subscript order within bounds.
SnCanonicalForm parse_sn_form(std::string_view text, unsigned degree);

} // namespace ogs
