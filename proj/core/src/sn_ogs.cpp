#include "ogs/sn_ogs.hpp"

#include <numeric>
#include <string>

#include "ogs/error.hpp"
#include "ogs/notation.hpp"

namespace ogs {

SnCanonicalForm::SnCanonicalForm(unsigned degree, std::vector<int> exponents)
: degree_(degree), exponents_(std::move(exponents))
{
  if (degree_ == 0u)
    throw RangeError("degree must be >= 1");
  if (exponents_.size() + 1u != degree_)
    throw RangeError("S_" + std::to_string(degree_) + " form needs " +
                     std::to_string(degree_ - 1u) + " exponents, got " +
                     std::to_string(exponents_.size()));

  for (unsigned k = 2u; k <= degree_; ++k) {
    int e = exponents_[k - 2u];
    if (e < 0 || e >= static_cast<int>(k))
      throw RangeError("exponent of t" + std::to_string(k) + " must lie in [0, " +
                       std::to_string(k) + "), got " + std::to_string(e));
  }
}

SnCanonicalForm SnCanonicalForm::zero(unsigned degree)
{ return SnCanonicalForm(degree, std::vector<int>(degree == 0u ? 0u : degree - 1u, 0)); }

GeneratorWord SnCanonicalForm::to_word() const
{
  GeneratorWord w(degree_);
  for (unsigned k = 2u; k <= degree_; ++k) {
    if (exponent(k) != 0)
      w.append(Gen::T, static_cast<int>(k), exponent(k));
  }
  return w;
}

Permutation decode_sn(SnCanonicalForm const &c)
{
  auto result = Permutation::identity(c.degree());
  for (unsigned k = 2u; k <= c.degree(); ++k) {
    if (c.exponent(k) != 0)
      result = result * t_pow(static_cast<int>(k), c.exponent(k), c.degree());
  }
  return result;
}

SnCanonicalForm encode_sn(Permutation const &p)
{
  unsigned n = p.degree();
  std::vector<int> exponents(n - 1u, 0);

  // g = h * t_m^i with h fixing m gives g(m) = m - i
  auto g = p;
  for (unsigned m = n; m >= 2u; --m) {
    int i = static_cast<int>((m - g(m)) % m);
    exponents[m - 2u] = i;
    if (i != 0)
      g = g * t_pow(static_cast<int>(m), -i, n);
  }

  if (!g.is_identity())
    throw InternalError("coset peeling left " + print_one_line(g));
  return SnCanonicalForm(n, std::move(exponents));
}

unsigned maj_of_form(SnCanonicalForm const &c)
{
  return static_cast<unsigned>(
    std::accumulate(c.exponents().begin(), c.exponents().end(), 0));
}

std::vector<ExchangeCase> exchange_cases(int q, int i_q, int p, int i_p)
{
  std::vector<ExchangeCase> cases;
  int gap = q - i_q;
  if (gap >= p)
    cases.push_back(ExchangeCase::high);
  if (i_p <= gap && gap <= p)
    cases.push_back(ExchangeCase::middle);
  if (gap <= i_p)
    cases.push_back(ExchangeCase::low);
  return cases;
}

TPowerProduct exchange_sn_case(ExchangeCase which, int q, int i_q, int p,
                               int i_p, unsigned n)
{
  TPowerProduct rhs(n);
  switch (which) {
  case ExchangeCase::high:
    rhs.append(i_q + i_p, i_q).append(p + i_q, i_p).append(q, i_q);
    break;
  case ExchangeCase::middle:
    rhs.append(i_q, p + i_q - q).append(i_q + i_p, q - p).append(q, i_q + i_p);
    break;
  case ExchangeCase::low:
    rhs.append(p + i_q - q, i_q + i_p - q).append(i_q, p - i_p).append(q, i_q + i_p - p);
    break;
  }
  return rhs;
}

TPowerProduct exchange_sn(int q, int i_q, int p, int i_p, unsigned n)
{
  if (!(2 <= p && p < q && q <= static_cast<int>(n)) || !(1 <= i_q && i_q < q) ||
      !(1 <= i_p && i_p < p))
    throw RangeError("exchange_sn needs 2 <= p < q <= n, 1 <= i_q < q, 1 <= i_p < p; got q=" +
                     std::to_string(q) + " i_q=" + std::to_string(i_q) +
                     " p=" + std::to_string(p) + " i_p=" + std::to_string(i_p) +
                     " n=" + std::to_string(n));

  return exchange_sn_case(exchange_cases(q, i_q, p, i_p).front(), q, i_q, p, i_p, n);
}

namespace {

// Appends with reduction and merging, like PowerProduct::append, but on a
// plain factor list so the normalizer can splice in the middle.
void push_reduced(std::vector<PowerFactor> &out, int subscript, long long exponent)
{
  auto ord = static_cast<long long>(generator_order(Gen::T, subscript));
  long long e = ((exponent % ord) + ord) % ord;
  if (e == 0)
    return;

  if (!out.empty() && out.back().subscript == subscript) {
    out.back().exponent = (out.back().exponent + e) % ord;
    if (out.back().exponent == 0)
      out.pop_back();
    return;
  }
  out.push_back({subscript, e});
}

std::vector<PowerFactor> reduce(std::vector<PowerFactor> const &in)
{
  std::vector<PowerFactor> out;
  out.reserve(in.size());
  for (auto const &f : in)
    push_reduced(out, f.subscript, f.exponent);
  return out;
}

} // namespace

SnCanonicalForm normalize_sn(GeneratorWord const &w, NormalizeStats *stats)
{
  unsigned n = w.degree();
  std::vector<PowerFactor> factors;
  factors.reserve(w.size());
  for (auto const &l : w.letters()) {
    if (l.symbol != Gen::T)
      throw RangeError("normalize_sn accepts t letters only");
    factors.push_back({l.index, l.exponent});
  }
  factors = reduce(factors);

  std::size_t budget = 10u * std::max<std::size_t>(w.size(), 1u) * n * n;
  std::size_t rewrites = 0;

  for (;;) {
    // rightmost adjacent pair with descending subscripts
    std::size_t at = factors.size();
    for (std::size_t i = factors.size(); i-- > 1u;) {
      if (factors[i - 1u].subscript > factors[i].subscript) {
        at = i - 1u;
        break;
      }
    }
    if (at == factors.size())
      break;

    if (++rewrites > budget)
      throw InternalError("normalize_sn exceeded its budget of " +
                          std::to_string(budget) + " rewrites on " + print_word(w));

    auto const &hi = factors[at];
    auto const &lo = factors[at + 1u];
    auto rhs = exchange_sn(hi.subscript, static_cast<int>(hi.exponent), lo.subscript,
                           static_cast<int>(lo.exponent), n);

    std::vector<PowerFactor> next(factors.begin(), factors.begin() + static_cast<long>(at));
    next.insert(next.end(), rhs.factors().begin(), rhs.factors().end());
    next.insert(next.end(), factors.begin() + static_cast<long>(at) + 2, factors.end());
    factors = reduce(next);
  }

  std::vector<int> exponents(n - 1u, 0);
  for (auto const &f : factors)
    exponents[static_cast<std::size_t>(f.subscript) - 2u] = static_cast<int>(f.exponent);
  SnCanonicalForm result(n, std::move(exponents));

  if (stats) {
    stats->rewrites = rewrites;
    stats->budget = budget;
  }

  auto expected = encode_sn(evaluate(w));
  if (result != expected)
    throw InternalError("normalize_sn gave " + print_sn_form(result) + " for " +
                        print_word(w) + ", expected " + print_sn_form(expected));
  return result;
}

std::string print_sn_form(SnCanonicalForm const &c)
{ return print_word(c.to_word()); }

SnCanonicalForm parse_sn_form(std::string_view text, unsigned degree)
{
  auto w = parse_word(text, degree);
  std::vector<int> exponents(degree - 1u, 0);
  int last = 1;

  for (auto const &l : w.letters()) {
    if (l.symbol != Gen::T)
      throw ParseError("S_n canonical forms use t letters only");
    if (l.index <= last)
      throw ParseError("t subscripts must be strictly ascending");
    if (l.exponent < 0 || l.exponent >= l.index)
      throw RangeError("exponent of t" + std::to_string(l.index) + " must lie in [0, " +
                       std::to_string(l.index) + "), got " + std::to_string(l.exponent));
    exponents[static_cast<std::size_t>(l.index) - 2u] = static_cast<int>(l.exponent);
    last = l.index;
  }

  return SnCanonicalForm(degree, std::move(exponents));
}

} // namespace ogs
