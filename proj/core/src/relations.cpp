#include "ogs/relations.hpp"

#include <string>

#include "ogs/error.hpp"

namespace ogs {

namespace {

GeneratorWord word(unsigned n, std::initializer_list<Letter> letters)
{ return GeneratorWord(n, letters); }

std::string params(int r, int r_prime, unsigned n)
{
  return "(r=" + std::to_string(r) + ", r'=" + std::to_string(r_prime) +
         ", n=" + std::to_string(n) + ")";
}

// prod over odd m = 2r+1, 2r+3, ..., 2r'-1 of t_m^{e} * u_{m+1}
GeneratorWord odd_t_u_chain(int r, int r_prime, long long t_exponent, unsigned n)
{
  GeneratorWord w(n);
  for (int m = 2 * r + 1; m <= 2 * r_prime - 1; m += 2)
    w.append(Gen::T, m, t_exponent).append(Gen::U, m + 1);
  return w;
}

std::array<Relation, 2> tt_general(int r, int r_prime, unsigned n, long long t_exponent,
                                   std::string const &tag)
{
  if (!(2 <= r && r < r_prime && 2 * r_prime <= static_cast<int>(n)))
    throw RangeError("rel_tt_general needs 2 <= r < r' and 2r' <= n, got " +
                     params(r, r_prime, n));

  auto chain = odd_t_u_chain(r, r_prime, t_exponent, n);
  auto with_v = word(n, {{Gen::V, 2 * r, 1}});
  with_v.append(chain);

  return {
    Relation{"t" + std::to_string(2 * r) + "^-1 * t" + std::to_string(2 * r_prime) + tag,
             word(n, {{Gen::T, 2 * r, -1}, {Gen::T, 2 * r_prime, 1}}), chain},
    Relation{"t" + std::to_string(2 * r) + " * t" + std::to_string(2 * r_prime) + tag,
             word(n, {{Gen::T, 2 * r, 1}, {Gen::T, 2 * r_prime, 1}}), with_v},
  };
}

} // namespace

std::vector<Relation> alt4_exchange_table()
{
  constexpr unsigned n = 4;
  Letter t3{Gen::T, 3, 1};
  Letter t3_sq{Gen::T, 3, 2};
  Letter u4{Gen::U, 4, 1};
  Letter v4{Gen::V, 4, 1};

  return {
    {"u4 * t3 = t3 * v4", word(n, {u4, t3}), word(n, {t3, v4})},
    {"u4 * t3^2 = t3^2 * u4 * v4", word(n, {u4, t3_sq}), word(n, {t3_sq, u4, v4})},
    {"v4 * t3 = t3 * u4 * v4", word(n, {v4, t3}), word(n, {t3, u4, v4})},
    {"v4 * t3^2 = t3^2 * u4", word(n, {v4, t3_sq}), word(n, {t3_sq, u4})},
    {"v4 * u4 = u4 * v4", word(n, {v4, u4}), word(n, {u4, v4})},
  };
}

std::array<Relation, 2> rel_tt_step(int r, unsigned n)
{
  if (!(2 <= r && 2 * r + 2 <= static_cast<int>(n)))
    throw RangeError("rel_tt_step needs r >= 2 and 2r + 2 <= n, got r=" + std::to_string(r) +
                     " n=" + std::to_string(n));

  int even = 2 * r;
  return {
    Relation{"t" + std::to_string(even) + "^-1 * t" + std::to_string(even + 2),
             word(n, {{Gen::T, even, -1}, {Gen::T, even + 2, 1}}),
             word(n, {{Gen::T, even + 1, -1}, {Gen::U, even + 2, 1}})},
    Relation{"t" + std::to_string(even) + " * t" + std::to_string(even + 2),
             word(n, {{Gen::T, even, 1}, {Gen::T, even + 2, 1}}),
             word(n, {{Gen::V, even, 1}, {Gen::T, even + 1, -1}, {Gen::U, even + 2, 1}})},
  };
}

std::array<Relation, 2> rel_tt_general(int r, int r_prime, unsigned n)
{ return tt_general(r, r_prime, n, -1, ""); }

std::array<Relation, 2> rel_tt_general_uninverted(int r, int r_prime, unsigned n)
{ return tt_general(r, r_prime, n, 1, " (uninverted)"); }

Relation rel_vu(int r, unsigned n)
{
  if (!(3 <= r && 2 * r <= static_cast<int>(n)))
    throw RangeError("rel_vu needs r >= 3 and 2r <= n, got r=" + std::to_string(r) +
                     " n=" + std::to_string(n));

  GeneratorWord rhs(n);
  for (int i = 2; i <= r - 1; ++i)
    rhs.append(Gen::U, 2 * i).append(Gen::T, 2 * i + 1, -1);
  rhs.append(Gen::U, 2 * r).append(Gen::V, 2 * r);

  return {"v" + std::to_string(2 * r) + " * u" + std::to_string(2 * r),
          word(n, {{Gen::V, 2 * r, 1}, {Gen::U, 2 * r, 1}}), rhs};
}

Relation rel_t_odd(int r, int r_prime, unsigned n)
{
  if (!(2 <= r && r < r_prime && 2 * r_prime - 1 <= static_cast<int>(n)))
    throw RangeError("rel_t_odd needs r' > r >= 2 and 2r' - 1 <= n, got " +
                     params(r, r_prime, n));

  GeneratorWord rhs(n);
  for (int i = 2; i <= r; ++i)
    rhs.append(Gen::T, 2 * i - 1, -1).append(Gen::U, 2 * i);
  rhs.append(Gen::T, 2 * r_prime - 1);

  return {"t" + std::to_string(2 * r_prime - 1) + " * t" + std::to_string(2 * r - 1),
          word(n, {{Gen::T, 2 * r_prime - 1, 1}, {Gen::T, 2 * r - 1, 1}}), rhs};
}

} // namespace ogs
