#include "ogs/generators.hpp"

#include <numeric>
#include <string>

#include "ogs/error.hpp"

namespace ogs {

namespace {

std::string describe(Gen symbol, int index)
{ return std::string(1, static_cast<char>(symbol)) + std::to_string(index); }

void require_degree(int index, unsigned n, Gen symbol)
{
  if (index > static_cast<int>(n))
    throw RangeError(describe(symbol, index) + " does not exist in degree " +
                     std::to_string(n));
}

void require_even(int index, Gen symbol)
{
  if (index % 2 != 0)
    throw RangeError(describe(symbol, index) + " needs an even subscript");
}

std::vector<Point> iota_images(unsigned n)
{
  if (n == 0u)
    throw RangeError("degree must be >= 1");

  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  return images;
}

} // namespace

Permutation s(unsigned i, unsigned n)
{
  if (i < 1u || i + 1u > n)
    throw RangeError("s" + std::to_string(i) + " does not exist in degree " +
                     std::to_string(n));

  auto images = iota_images(n);
  std::swap(images[i - 1u], images[i]);
  return Permutation(std::move(images));
}

Permutation t_pow(int m, long long e, unsigned n)
{
  require_degree(m, n, Gen::T);
  auto images = iota_images(n);
  if (m <= 1)
    return Permutation(std::move(images));

  // t_m sends x to x - 1 cyclically on {1..m}
  long long shift = ((e % m) + m) % m;
  for (int x = 1; x <= m; ++x)
    images[x - 1] = static_cast<Point>(((x - 1 - shift) % m + m) % m + 1);
  return Permutation(std::move(images));
}

Permutation t(int m, unsigned n)
{ return t_pow(m, 1, n); }

Permutation u(int index, unsigned n)
{
  require_degree(index, n, Gen::U);
  if (index < 4)
    return Permutation::identity(n);
  require_even(index, Gen::U);

  return compose(t(index - 2, n), s(static_cast<unsigned>(index - 1), n));
}

Permutation v_pow(int index, long long e, unsigned n)
{
  require_degree(index, n, Gen::V);
  if (index <= 2)
    return Permutation::identity(n);
  require_even(index, Gen::V);

  long long r = index / 2;
  return t_pow(index, 2 * (((e % r) + r) % r), n);
}

Permutation v(int index, unsigned n)
{ return v_pow(index, 1, n); }

std::uint64_t generator_order(Gen symbol, int index)
{
  switch (symbol) {
  case Gen::S:
    return 2;
  case Gen::T:
    return index <= 1 ? 1 : static_cast<std::uint64_t>(index);
  case Gen::U:
    return index < 4 ? 1 : static_cast<std::uint64_t>(index - 2);
  case Gen::V:
    return index <= 2 ? 1 : static_cast<std::uint64_t>(index / 2);
  }
  return 1;
}

bool valid_index(Gen symbol, int index, unsigned n)
{
  int degree = static_cast<int>(n);
  switch (symbol) {
  case Gen::S:
    return index >= 1 && index <= degree - 1;
  case Gen::T:
    return index >= 2 && index <= degree;
  case Gen::U:
  case Gen::V:
    return index >= 4 && index <= degree && index % 2 == 0;
  }
  return false;
}

Permutation letter_value(Letter const &l, unsigned n)
{
  switch (l.symbol) {
  case Gen::S:
    return l.exponent % 2 == 0 ? Permutation::identity(n)
                               : s(static_cast<unsigned>(l.index), n);
  case Gen::T:
    return t_pow(l.index, l.exponent, n);
  case Gen::U:
    return u(l.index, n).pow(l.exponent);
  case Gen::V:
    return v_pow(l.index, l.exponent, n);
  }
  return Permutation::identity(n);
}

GeneratorWord::GeneratorWord(unsigned degree, std::vector<Letter> letters)
: degree_(degree)
{
  if (degree == 0u)
    throw RangeError("degree must be >= 1");

  letters_.reserve(letters.size());
  for (auto const &l : letters)
    append(l);
}

GeneratorWord &GeneratorWord::append(Letter l)
{
  if (!valid_index(l.symbol, l.index, degree_))
    throw RangeError(describe(l.symbol, l.index) +
                     " is not a generator in degree " + std::to_string(degree_));
  letters_.push_back(l);
  return *this;
}

GeneratorWord &GeneratorWord::append(GeneratorWord const &other)
{
  if (other.degree() != degree_)
    throw DegreeMismatch("cannot concatenate words of degree " +
                         std::to_string(degree_) + " and " +
                         std::to_string(other.degree()));
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Permutation evaluate(GeneratorWord const &w)
{
  auto result = Permutation::identity(w.degree());
  for (auto const &l : w.letters())
    result = compose(result, letter_value(l, w.degree()));
  return result;
}

} // namespace ogs
