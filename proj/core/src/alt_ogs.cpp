#include "ogs/alt_ogs.hpp"

#include <string>

#include "ogs/error.hpp"
#include "ogs/notation.hpp"

namespace ogs {

namespace {

void check_bound(char const *name, int index, int value, int bound)
{
  if (value < 0 || value >= bound)
    throw RangeError(std::string(name) + std::to_string(index) + " exponent must lie in [0, " +
                     std::to_string(bound) + "), got " + std::to_string(value));
}

} // namespace

AltCanonicalForm::AltCanonicalForm(unsigned degree, int i3, std::vector<AltBlock> blocks)
: degree_(degree), i3_(i3), blocks_(std::move(blocks))
{
  if (degree_ < 3u)
    throw RangeError("Alt_n canonical forms need n >= 3, got " + std::to_string(degree_));

  unsigned expected = degree_ / 2u - 1u;
  if (blocks_.size() != expected)
    throw RangeError("Alt_" + std::to_string(degree_) + " form needs " +
                     std::to_string(expected) + " blocks, got " +
                     std::to_string(blocks_.size()));

  check_bound("t", 3, i3_, 3);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    int r = static_cast<int>(b) + 2;
    auto const &block = blocks_[b];
    check_bound("u", 2 * r, block.j, 2);
    check_bound("v", 2 * r, block.k, r);

    bool has_odd = 2 * r + 1 <= static_cast<int>(degree_);
    if (block.i_odd.has_value() != has_odd)
      throw RangeError("block " + std::to_string(r) + (has_odd ? " needs" : " cannot have") +
                       " a t" + std::to_string(2 * r + 1) + " exponent");
    if (has_odd)
      check_bound("t", 2 * r + 1, *block.i_odd, 2 * r + 1);
  }
}

AltCanonicalForm AltCanonicalForm::zero(unsigned degree)
{
  if (degree < 3u)
    throw RangeError("Alt_n canonical forms need n >= 3, got " + std::to_string(degree));

  std::vector<AltBlock> blocks;
  for (unsigned r = 2u; 2u * r <= degree; ++r) {
    AltBlock block;
    if (2u * r + 1u <= degree)
      block.i_odd = 0;
    blocks.push_back(block);
  }
  return AltCanonicalForm(degree, 0, std::move(blocks));
}

std::vector<Letter> AltCanonicalForm::letters() const
{
  std::vector<Letter> out{{Gen::T, 3, i3_}};
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    int r = static_cast<int>(b) + 2;
    out.push_back({Gen::U, 2 * r, blocks_[b].j});
    out.push_back({Gen::V, 2 * r, blocks_[b].k});
    if (blocks_[b].i_odd)
      out.push_back({Gen::T, 2 * r + 1, *blocks_[b].i_odd});
  }
  return out;
}

std::vector<int> AltCanonicalForm::tuple() const
{
  std::vector<int> out;
  for (auto const &l : letters())
    out.push_back(static_cast<int>(l.exponent));
  return out;
}

std::vector<int> AltCanonicalForm::tuple_bounds(unsigned degree)
{
  std::vector<int> bounds;
  for (auto const &l : zero(degree).letters()) {
    // u_{2r} only selects the parity of the coset, whatever its order
    bounds.push_back(l.symbol == Gen::U ? 2
                                        : static_cast<int>(generator_order(l.symbol, l.index)));
  }
  return bounds;
}

AltCanonicalForm AltCanonicalForm::from_tuple(unsigned degree, std::vector<int> const &tuple)
{
  if (degree < 3u)
    throw RangeError("Alt_n canonical forms need n >= 3, got " + std::to_string(degree));

  std::size_t expected = 1u + 3u * (degree / 2u - 1u) - (degree % 2u == 0u ? 1u : 0u);
  if (tuple.size() != expected)
    throw RangeError("Alt_" + std::to_string(degree) + " tuple needs " +
                     std::to_string(expected) + " entries, got " +
                     std::to_string(tuple.size()));

  std::vector<AltBlock> blocks;
  std::size_t at = 1;
  for (unsigned r = 2u; 2u * r <= degree; ++r) {
    AltBlock block{tuple[at], tuple[at + 1u], std::nullopt};
    at += 2u;
    if (2u * r + 1u <= degree)
      block.i_odd = tuple[at++];
    blocks.push_back(block);
  }
  return AltCanonicalForm(degree, tuple[0], std::move(blocks));
}

GeneratorWord AltCanonicalForm::to_word() const
{
  GeneratorWord w(degree_);
  for (auto const &l : letters()) {
    if (l.exponent != 0)
      w.append(l);
  }
  return w;
}

Permutation decode_alt(AltCanonicalForm const &c)
{
  auto result = Permutation::identity(c.degree());
  for (auto const &l : c.letters()) {
    if (l.exponent != 0)
      result = result * letter_value(l, c.degree());
  }
  return result;
}

AltCanonicalForm encode_alt(Permutation const &p)
{
  unsigned n = p.degree();
  if (n < 3u)
    throw RangeError("Alt_n canonical forms need n >= 3, got " + std::to_string(n));
  if (parity(p) != Parity::even)
    throw ParityError("not an even permutation: " + print_one_line(p));

  auto form = AltCanonicalForm::zero(n);
  auto tuple = form.tuple();
  auto letters = form.letters();

  // tuple positions of the top letters per level m
  auto slot = [&](Gen symbol, int index) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (letters[i].symbol == symbol && letters[i].index == index)
        return i;
    }
    throw InternalError("no slot for generator");
  };

  auto g = p;
  for (unsigned m = n; m >= 4u; --m) {
    int top = static_cast<int>(m);
    int image = static_cast<int>(g(m));

    if (m % 2u == 1u) {
      // g = h * t_m^i with h fixing m: g(m) = m - i
      int i = (top - image) % top;
      tuple[slot(Gen::T, top)] = i;
      if (i != 0)
        g = g * t_pow(top, -i, n);
    } else {
      // g = h * u_m^j * v_m^k: g(m) = m - 2k (j = 0) or m - 1 - 2k (j = 1)
      int j = (image % 2 == top % 2) ? 0 : 1;
      int k = (top - j - image) / 2;
      tuple[slot(Gen::U, top)] = j;
      tuple[slot(Gen::V, top)] = k;
      if (k != 0)
        g = g * v_pow(top, -k, n);
      if (j != 0)
        g = g * u(top, n).inverse();
    }

    if (g(m) != m)
      throw InternalError("coset peeling failed to fix point " + std::to_string(m));
  }

  tuple[0] = (3 - static_cast<int>(g(3u))) % 3;
  if (tuple[0] != 0)
    g = g * t_pow(3, -tuple[0], n);

  if (!g.is_identity())
    throw InternalError("coset peeling left " + print_one_line(g));
  return AltCanonicalForm::from_tuple(n, tuple);
}

namespace {

void check_v_args(int q, int k_2q, int p, int k_2p, unsigned n)
{
  if (!(2 <= p && p < q && 2 * q <= static_cast<int>(n)) || !(1 <= k_2q && k_2q < q) ||
      !(1 <= k_2p && k_2p < p))
    throw RangeError("v_exchange needs 2 <= p < q <= n/2, 1 <= k_2q < q, 1 <= k_2p < p; got q=" +
                     std::to_string(q) + " k_2q=" + std::to_string(k_2q) +
                     " p=" + std::to_string(p) + " k_2p=" + std::to_string(k_2p) +
                     " n=" + std::to_string(n));
}

} // namespace

VPowerProduct v_exchange(int q, int k_2q, int p, int k_2p, unsigned n)
{
  check_v_args(q, k_2q, p, k_2p, n);

  auto doubled = exchange_sn(2 * q, 2 * k_2q, 2 * p, 2 * k_2p, n);
  VPowerProduct result(n);
  for (auto const &f : doubled.factors()) {
    if (f.subscript % 2 != 0 || f.exponent % 2 != 0)
      throw InternalError("t-exchange of even data produced t" +
                          std::to_string(f.subscript) + "^" + std::to_string(f.exponent));
    result.append(f.subscript, f.exponent / 2);
  }
  return result;
}

VPowerProduct v_exchange_case(ExchangeCase which, int q, int k_2q, int p, int k_2p,
                              unsigned n)
{
  VPowerProduct rhs(n);
  switch (which) {
  case ExchangeCase::high:
    rhs.append(2 * k_2q + 2 * k_2p, k_2q)
      .append(2 * p + 2 * k_2q, k_2p)
      .append(2 * q, k_2q);
    break;
  case ExchangeCase::middle:
    rhs.append(2 * k_2q, p + k_2q - q)
      .append(2 * k_2q + 2 * k_2p, q - p)
      .append(2 * q, k_2q + k_2p);
    break;
  case ExchangeCase::low:
    rhs.append(2 * p + 2 * k_2q - 2 * q, k_2q + k_2p - q)
      .append(2 * k_2q, p - k_2p)
      .append(2 * q, k_2q + k_2p - p);
    break;
  }
  return rhs;
}

VPowerProduct v_exchange_direct(int q, int k_2q, int p, int k_2p, unsigned n)
{
  check_v_args(q, k_2q, p, k_2p, n);
  return v_exchange_case(exchange_cases(q, k_2q, p, k_2p).front(), q, k_2q, p, k_2p, n);
}

std::string print_alt_form(AltCanonicalForm const &c)
{ return print_word(c.to_word()); }

AltCanonicalForm parse_alt_form(std::string_view text, unsigned degree)
{
  auto w = parse_word(text, degree);
  auto letters = AltCanonicalForm::zero(degree).letters();
  auto bounds = AltCanonicalForm::tuple_bounds(degree);
  std::vector<int> tuple(letters.size(), 0);

  std::size_t next = 0;
  for (auto const &l : w.letters()) {
    std::size_t at = next;
    while (at < letters.size() &&
           !(letters[at].symbol == l.symbol && letters[at].index == l.index))
      ++at;
    if (at == letters.size())
      throw ParseError("letter " + std::string(1, static_cast<char>(l.symbol)) +
                       std::to_string(l.index) +
                       " is not an Alt_n generator here or is out of order");
    if (l.exponent < 0 || l.exponent >= bounds[at])
      throw RangeError(std::string(1, static_cast<char>(l.symbol)) + std::to_string(l.index) +
                       " exponent must lie in [0, " + std::to_string(bounds[at]) +
                       "), got " + std::to_string(l.exponent));
    tuple[at] = static_cast<int>(l.exponent);
    next = at + 1u;
  }

  return AltCanonicalForm::from_tuple(degree, tuple);
}

} // namespace ogs
