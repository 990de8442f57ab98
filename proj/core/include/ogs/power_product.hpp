#pragma once

#include <vector>

#include "ogs/generators.hpp"

namespace ogs {

struct PowerFactor
{
  int subscript;
  long long exponent;

  friend bool operator==(PowerFactor const &, PowerFactor const &) = default;
};

/**
 * A product of powers of a single generator family (t or v), kept reduced:
 * exponents lie in [0, order), identity factors are dropped and adjacent
 * factors with equal subscript are merged.
 */
template<Gen Family>
class PowerProduct
{
  static_assert(Family == Gen::T || Family == Gen::V);

public:
  explicit PowerProduct(unsigned degree)
  : degree_(degree)
  {}

  unsigned degree() const
  { return degree_; }

  std::vector<PowerFactor> const &factors() const
  { return factors_; }

  bool empty() const
  { return factors_.empty(); }

  /// Multiplies on the right by family_subscript^exponent.
  PowerProduct &append(int subscript, long long exponent)
  {
    auto ord = static_cast<long long>(generator_order(Family, subscript));
    long long e = ((exponent % ord) + ord) % ord;
    if (e == 0)
      return *this;

    if (!factors_.empty() && factors_.back().subscript == subscript) {
      auto &last = factors_.back();
      last.exponent = (last.exponent + e) % ord;
      if (last.exponent == 0)
        factors_.pop_back();
      return *this;
    }

    factors_.push_back({subscript, e});
    return *this;
  }

  GeneratorWord to_word() const
  {
    GeneratorWord w(degree_);
    for (auto const &f : factors_)
      w.append(Family, f.subscript, f.exponent);
    return w;
  }

  friend bool operator==(PowerProduct const &, PowerProduct const &) = default;

private:
  unsigned degree_;
  std::vector<PowerFactor> factors_;
};

using TPowerProduct = PowerProduct<Gen::T>;
using VPowerProduct = PowerProduct<Gen::V>;

} // namespace ogs
