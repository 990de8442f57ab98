#include "ogs/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ogs/error.hpp"

namespace ogs {

const char *to_string(Parity p)
{ return p == Parity::even ? "even" : "odd"; }

Permutation::Permutation(std::vector<Point> images)
: images_(std::move(images))
{
  if (images_.empty())
    throw RangeError("permutation must have degree >= 1");

  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x < 1u || x > images_.size())
      throw RangeError("point " + std::to_string(x) + " outside 1.." +
                       std::to_string(images_.size()));
    if (seen[x - 1u])
      throw RangeError("point " + std::to_string(x) + " occurs twice");
    seen[x - 1u] = true;
  }
}

Permutation Permutation::identity(unsigned degree)
{
  if (degree == 0u)
    throw RangeError("permutation must have degree >= 1");

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const
{
  for (Point x = 1u; x <= degree(); ++x) {
    if (images_[x - 1u] != x)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (Point x = 1u; x <= degree(); ++x)
    inv[images_[x - 1u] - 1u] = x;
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::pow(long long e) const
{
  // walk each cycle once and shift by e modulo its length
  std::vector<Point> result(images_.size());
  std::vector<bool> done(images_.size(), false);
  std::vector<Point> cycle;

  for (Point start = 1u; start <= degree(); ++start) {
    if (done[start - 1u])
      continue;

    cycle.clear();
    for (Point x = start; !done[x - 1u]; x = images_[x - 1u]) {
      done[x - 1u] = true;
      cycle.push_back(x);
    }

    auto len = static_cast<long long>(cycle.size());
    long long shift = ((e % len) + len) % len;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      result[cycle[i] - 1u] = cycle[(i + static_cast<std::size_t>(shift)) % cycle.size()];
  }

  return Permutation(std::move(result), Unchecked{});
}

Permutation compose(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));

  std::vector<Point> images(a.degree());
  for (Point x = 1u; x <= a.degree(); ++x)
    images[x - 1u] = b(a(x));
  return Permutation(std::move(images), Permutation::Unchecked{});
}

CycleDecomposition cycles_of(Permutation const &p)
{
  CycleDecomposition result{p.degree(), {}};
  std::vector<bool> done(p.degree(), false);

  // starting from the largest unvisited point yields the normalized form
  for (Point start = p.degree(); start >= 1u; --start) {
    if (done[start - 1u])
      continue;

    std::vector<Point> cycle;
    for (Point x = start; !done[x - 1u]; x = p(x)) {
      done[x - 1u] = true;
      cycle.push_back(x);
    }

    if (cycle.size() > 1u)
      result.cycles.push_back(std::move(cycle));
  }

  return result;
}

Permutation from_cycles(CycleDecomposition const &c)
{
  if (c.degree == 0u)
    throw RangeError("permutation must have degree >= 1");

  std::vector<Point> out(c.degree);
  std::iota(out.begin(), out.end(), Point{1});
  std::vector<bool> used(c.degree, false);

  for (auto const &cycle : c.cycles) {
    for (Point x : cycle) {
      if (x < 1u || x > c.degree)
        throw RangeError("point " + std::to_string(x) + " outside 1.." +
                         std::to_string(c.degree));
      if (used[x - 1u])
        throw RangeError("point " + std::to_string(x) + " occurs twice");
      used[x - 1u] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out[cycle[i] - 1u] = cycle[(i + 1u) % cycle.size()];
  }

  return Permutation(std::move(out));
}

Parity parity(Permutation const &p)
{
  std::size_t transpositions = 0;
  for (auto const &cycle : cycles_of(p).cycles)
    transpositions += cycle.size() - 1u;
  return transpositions % 2u == 0u ? Parity::even : Parity::odd;
}

std::uint64_t order(Permutation const &p)
{
  std::uint64_t result = 1;
  for (auto const &cycle : cycles_of(p).cycles)
    result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
  return result;
}

std::vector<unsigned> descent_set(Permutation const &p)
{
  std::vector<unsigned> descents;
  for (Point x = 1u; x < p.degree(); ++x) {
    if (p(x) > p(x + 1u))
      descents.push_back(x);
  }
  return descents;
}

unsigned major_index(Permutation const &p)
{
  auto descents = descent_set(p);
  return std::accumulate(descents.begin(), descents.end(), 0u);
}

unsigned inversion_length(Permutation const &p)
{
  unsigned count = 0;
  for (Point x = 1u; x <= p.degree(); ++x) {
    for (Point y = x + 1u; y <= p.degree(); ++y) {
      if (p(x) > p(y))
        ++count;
    }
  }
  return count;
}

std::uint64_t lex_rank(Permutation const &p)
{
  std::uint64_t rank = 0;
  unsigned n = p.degree();
  for (Point x = 1u; x <= n; ++x) {
    std::uint64_t smaller_later = 0;
    for (Point y = x + 1u; y <= n; ++y) {
      if (p(y) < p(x))
        ++smaller_later;
    }
    rank = rank * (n - x + 1u) + smaller_later;
  }
  return rank;
}

std::uint64_t factorial(unsigned n)
{
  if (n > 20u)
    throw RangeError("factorial overflows 64 bits for n > 20");

  std::uint64_t f = 1;
  for (unsigned k = 2u; k <= n; ++k)
    f *= k;
  return f;
}

} // namespace ogs
