#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ogs {

using Point = std::uint32_t;

enum class Parity { even, odd };

constexpr Parity operator^(Parity a, Parity b)
{ return a == b ? Parity::even : Parity::odd; }

const char *to_string(Parity p);

/**
 * A bijection of {1..n}, stored in one-line form: images()[x - 1] is the
 * image of the point x. Points are 1-based throughout.
 *
 * Products are taken left to right, so (a * b)(x) = b(a(x)).
 */
class Permutation
{
public:
  /// Throws RangeError unless `images` is a permutation of {1..images.size()}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(unsigned degree);

  unsigned degree() const
  { return static_cast<unsigned>(images_.size()); }

  Point operator()(Point x) const
  { return images_[x - 1u]; }

  std::span<const Point> images() const
  { return images_; }

  bool is_identity() const;

  Permutation inverse() const;

  /// p^e for any integer e; the exponent is reduced modulo the order.
  Permutation pow(long long e) const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked)
  : images_(std::move(images))
  {}

  friend Permutation compose(Permutation const &, Permutation const &);

  std::vector<Point> images_;
};

/// Left-to-right product: compose(a, b)(x) = b(a(x)). Throws DegreeMismatch.
Permutation compose(Permutation const &a, Permutation const &b);

inline Permutation operator*(Permutation const &a, Permutation const &b)
{ return compose(a, b); }

inline Permutation inverse(Permutation const &p)
{ return p.inverse(); }

/**
 * Disjoint cycles of a permutation, fixed points omitted. Normalized form:
 * each cycle starts at its largest point and cycles are sorted by that point
 * in descending order.
 */
struct CycleDecomposition
{
  unsigned degree = 0;
  std::vector<std::vector<Point>> cycles;

  friend bool operator==(CycleDecomposition const &,
                         CycleDecomposition const &) = default;
};

CycleDecomposition cycles_of(Permutation const &p);

/// Throws RangeError if the cycles overlap or leave {1..degree}.
Permutation from_cycles(CycleDecomposition const &c);

Parity parity(Permutation const &p);

/// Least k >= 1 with p^k = id, computed as the lcm of the cycle lengths.
std::uint64_t order(Permutation const &p);

/// Positions x < n with p(x) > p(x + 1), ascending.
std::vector<unsigned> descent_set(Permutation const &p);

unsigned major_index(Permutation const &p);

/// Number of pairs x < y with p(x) > p(y).
unsigned inversion_length(Permutation const &p);

/// Position of p in the lexicographic order of one-line forms (Lehmer code).
std::uint64_t lex_rank(Permutation const &p);

std::uint64_t factorial(unsigned n);

} // namespace ogs
