#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ogs/permutation.hpp"

namespace ogs {

/// The Coxeter transposition (i, i+1). Requires 1 <= i <= n - 1.
Permutation s(unsigned i, unsigned n);

/**
 * t_m = s_1 * s_2 * ... * s_{m-1}, the m-cycle (m, m-1, ..., 1), i.e. the
 * one-line form [m;1;...;m-1]. Subscripts m <= 1 give the identity; m > n
 * throws RangeError.
 */
Permutation t(int m, unsigned n);

/// t_m^e in O(n) without repeated multiplication; e is taken modulo m.
Permutation t_pow(int m, long long e, unsigned n);

/**
 * u_{2r} = t_{2r-2} * s_{2r-1}. Subscripts below 4 give the identity; odd
 * subscripts and subscripts above n throw RangeError.
 */
Permutation u(int index, unsigned n);

/**
 * v_{2r} = t_{2r}^2, the double cycle (2r, 2r-2, ..., 2)(2r-1, 2r-3, ..., 1).
 * Subscripts <= 2 give the identity; odd subscripts and subscripts above n
 * throw RangeError.
 */
Permutation v(int index, unsigned n);

/// v_{2r}^e; e is taken modulo r.
Permutation v_pow(int index, long long e, unsigned n);

enum class Gen : char { S = 's', T = 't', U = 'u', V = 'v' };

struct Letter
{
  Gen symbol;
  int index;
  long long exponent = 1;

  friend bool operator==(Letter const &, Letter const &) = default;
};

/// Order of a generator symbol, with the degenerate subscripts counting as 1.
std::uint64_t generator_order(Gen symbol, int index);

/// Whether `index` is a proper (non-degenerate) subscript of `symbol` at degree n.
bool valid_index(Gen symbol, int index, unsigned n);

/// The permutation of a single letter, exponent included.
Permutation letter_value(Letter const &l, unsigned n);

/**
 * A formal product of generator powers over the alphabet s_i, t_m, u_2r, v_2r.
 * Every letter carries a proper subscript for the word's degree.
 */
class GeneratorWord
{
public:
  explicit GeneratorWord(unsigned degree, std::vector<Letter> letters = {});

  unsigned degree() const
  { return degree_; }

  std::vector<Letter> const &letters() const
  { return letters_; }

  bool empty() const
  { return letters_.empty(); }

  std::size_t size() const
  { return letters_.size(); }

  GeneratorWord &append(Letter l);
  GeneratorWord &append(Gen symbol, int index, long long exponent = 1)
  { return append(Letter{symbol, index, exponent}); }

  GeneratorWord &append(GeneratorWord const &other);

  friend bool operator==(GeneratorWord const &, GeneratorWord const &) = default;

private:
  unsigned degree_;
  std::vector<Letter> letters_;
};

/// Left-to-right product of the letters; negative exponents invert.
Permutation evaluate(GeneratorWord const &w);

} // namespace ogs
