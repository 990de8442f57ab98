#include <gtest/gtest.h>

#include <set>

#include "ogs/error.hpp"
#include "ogs/notation.hpp"
#include "ogs/sn_ogs.hpp"
#include "ogs/verify.hpp"
#include "oracle.hpp"

namespace ogs {
namespace {

Permutation P(std::vector<Point> images)
{ return Permutation(std::move(images)); }

std::vector<PowerFactor> F(std::initializer_list<PowerFactor> f)
{ return f; }

TEST(SnForm, Bounds)
{
  EXPECT_NO_THROW(SnCanonicalForm(4, {1, 2, 3}));
  EXPECT_THROW(SnCanonicalForm(4, {2, 0, 0}), RangeError);
  EXPECT_THROW(SnCanonicalForm(4, {0, 0, 4}), RangeError);
  EXPECT_THROW(SnCanonicalForm(4, {0, -1, 0}), RangeError);
  EXPECT_THROW(SnCanonicalForm(4, {0, 0}), RangeError);
}

TEST(SnForm, Decode)
{
  EXPECT_TRUE(decode_sn(SnCanonicalForm::zero(5)).is_identity());
  EXPECT_EQ(decode_sn(SnCanonicalForm(4, {0, 0, 1})), P({4, 1, 2, 3}));
  EXPECT_EQ(decode_sn(SnCanonicalForm(4, {0, 1, 1})), P({2, 4, 1, 3}));
  EXPECT_EQ(decode_sn(SnCanonicalForm(5, {1, 2, 3, 1})), P({3, 2, 1, 5, 4}));
}

TEST(SnForm, Encode)
{
  EXPECT_EQ(encode_sn(Permutation::identity(6)), SnCanonicalForm::zero(6));
  EXPECT_EQ(encode_sn(P({2, 4, 1, 3})), SnCanonicalForm(4, {0, 1, 1}));
  EXPECT_EQ(encode_sn(t(5, 5) * t(5, 5)), SnCanonicalForm(5, {0, 0, 0, 2}));
  EXPECT_EQ(encode_sn(Permutation::identity(1)), SnCanonicalForm::zero(1));
}

TEST(SnForm, BijectionExhaustive)
{
  for (unsigned n = 1; n <= 7; ++n) {
    std::set<Permutation> images;
    for (auto const &p : enumerate_group(n, false)) {
      auto c = encode_sn(p);
      ASSERT_EQ(decode_sn(c), p);
      ASSERT_EQ(encode_sn(decode_sn(c)), c);
      images.insert(decode_sn(c));
    }
    EXPECT_EQ(images.size(), factorial(n));
  }
}

TEST(SnForm, DecodeAgreesWithOracleProduct)
{
  for (auto const &p : enumerate_group(6, false)) {
    auto c = encode_sn(p);
    auto expected = oracle::identity(6);
    for (unsigned k = 2; k <= 6; ++k)
      expected = oracle::mul(expected, oracle::power(oracle::t(k, 6), c.exponent(k)));
    ASSERT_EQ(oracle::of(p), expected);
  }
}

TEST(SnForm, MajorIndex)
{
  EXPECT_EQ(maj_of_form(SnCanonicalForm::zero(4)), 0u);
  EXPECT_EQ(maj_of_form(SnCanonicalForm(4, {0, 1, 1})), 2u);
  EXPECT_EQ(major_index(P({2, 4, 1, 3})), 2u);
  EXPECT_EQ(maj_of_form(SnCanonicalForm(3, {0, 2})), 2u);
  EXPECT_EQ(decode_sn(SnCanonicalForm(3, {0, 2})), P({2, 3, 1}));
  EXPECT_EQ(major_index(P({2, 3, 1})), 2u);

  for (unsigned n = 2; n <= 6; ++n) {
    for (auto const &p : enumerate_group(n, false))
      ASSERT_EQ(maj_of_form(encode_sn(p)), oracle::maj(oracle::of(p)));
  }
}

TEST(Exchange, CaseSelection)
{
  using C = ExchangeCase;
  EXPECT_EQ(exchange_cases(4, 1, 3, 1), (std::vector<C>{C::high, C::middle}));
  EXPECT_EQ(exchange_cases(5, 3, 3, 1), (std::vector<C>{C::middle}));
  EXPECT_EQ(exchange_cases(5, 4, 3, 2), (std::vector<C>{C::low}));
  EXPECT_EQ(exchange_cases(8, 5, 4, 3), (std::vector<C>{C::middle, C::low}));
}

TEST(Exchange, Examples)
{
  EXPECT_EQ(exchange_sn(4, 1, 3, 1, 4).factors(), F({{2, 1}, {4, 2}}));
  EXPECT_EQ(evaluate(exchange_sn(4, 1, 3, 1, 4).to_word()), P({4, 3, 1, 2}));
  EXPECT_EQ(exchange_sn(5, 3, 3, 1, 5).factors(), F({{3, 1}, {4, 2}, {5, 4}}));
  EXPECT_EQ(exchange_sn(5, 4, 3, 2, 5).factors(), F({{2, 1}, {4, 1}, {5, 3}}));
}

TEST(Exchange, Preconditions)
{
  EXPECT_THROW(exchange_sn(3, 1, 3, 1, 5), RangeError);
  EXPECT_THROW(exchange_sn(4, 0, 3, 1, 5), RangeError);
  EXPECT_THROW(exchange_sn(4, 4, 3, 1, 5), RangeError);
  EXPECT_THROW(exchange_sn(4, 1, 3, 3, 5), RangeError);
  EXPECT_THROW(exchange_sn(6, 1, 3, 1, 5), RangeError);
}

// both sides against oracle products, every case whose condition holds
TEST(Exchange, SoundExhaustive)
{
  constexpr unsigned n = 8;
  for (int q = 3; q <= 8; ++q) {
    for (int p = 2; p < q; ++p) {
      for (int iq = 1; iq < q; ++iq) {
        for (int ip = 1; ip < p; ++ip) {
          auto lhs = oracle::mul(oracle::power(oracle::t(q, n), iq),
                                 oracle::power(oracle::t(p, n), ip));
          auto rhs = exchange_sn(q, iq, p, ip, n);
          ASSERT_EQ(oracle::of(evaluate(rhs.to_word())), lhs);
          for (std::size_t i = 1; i < rhs.factors().size(); ++i)
            ASSERT_LT(rhs.factors()[i - 1].subscript, rhs.factors()[i].subscript);
          for (auto c : exchange_cases(q, iq, p, ip))
            ASSERT_EQ(oracle::of(evaluate(exchange_sn_case(c, q, iq, p, ip, n).to_word())), lhs);
        }
      }
    }
  }
}

TEST(Normalize, Examples)
{
  auto w = parse_word("t4 * t3", 4);
  EXPECT_EQ(normalize_sn(w), SnCanonicalForm(4, {1, 0, 2}));
  EXPECT_EQ(normalize_sn(parse_word("t3 * t4", 4)), SnCanonicalForm(4, {0, 1, 1}));
  EXPECT_EQ(normalize_sn(parse_word("t5^2 * t5^3", 5)), SnCanonicalForm::zero(5));
  EXPECT_EQ(normalize_sn(GeneratorWord(5)), SnCanonicalForm::zero(5));
}

TEST(Normalize, HandlesNegativeAndLargeExponents)
{
  auto w = parse_word("t6^-7 * t2^3 * t5^11 * t3^-1 * t6^2", 6);
  NormalizeStats stats;
  EXPECT_EQ(normalize_sn(w, &stats), encode_sn(evaluate(w)));
  EXPECT_LE(stats.rewrites, stats.budget);
}

TEST(Normalize, RejectsOtherLetters)
{
  EXPECT_THROW(normalize_sn(parse_word("t3 * s1", 4)), RangeError);
  EXPECT_THROW(normalize_sn(parse_word("u4", 4)), RangeError);
}

TEST(Normalize, DescendingWordsExhaustive)
{
  // every product t_q^a * t_p^b * t_m^c with q > p > m at n = 6
  constexpr unsigned n = 6;
  for (int q = 4; q <= 6; ++q)
    for (int p = 3; p < q; ++p)
      for (int m = 2; m < p; ++m)
        for (int a = 1; a < q; ++a)
          for (int b = 1; b < p; ++b)
            for (int c = 1; c < m; ++c) {
              GeneratorWord w(n, {{Gen::T, q, a}, {Gen::T, p, b}, {Gen::T, m, c}});
              ASSERT_EQ(normalize_sn(w), encode_sn(evaluate(w))) << print_word(w);
            }
}

TEST(SnText, PrintAndParse)
{
  EXPECT_EQ(print_sn_form(SnCanonicalForm(4, {0, 1, 1})), "t3^1 * t4^1");
  EXPECT_EQ(print_sn_form(SnCanonicalForm::zero(4)), "e");
  EXPECT_EQ(parse_sn_form("t2^1 * t4^2", 4), SnCanonicalForm(4, {1, 0, 2}));
  EXPECT_EQ(parse_sn_form("t3", 4), SnCanonicalForm(4, {0, 1, 0}));
  EXPECT_EQ(parse_sn_form("e", 4), SnCanonicalForm::zero(4));
  EXPECT_THROW(parse_sn_form("t4^5", 4), RangeError);
  EXPECT_THROW(parse_sn_form("t4 * t3", 4), ParseError);
  EXPECT_THROW(parse_sn_form("t3 * t3", 4), ParseError);
  EXPECT_THROW(parse_sn_form("u4", 4), ParseError);

  for (auto const &p : enumerate_group(5, false)) {
    auto c = encode_sn(p);
    ASSERT_EQ(parse_sn_form(print_sn_form(c), 5), c);
  }
}

} // namespace
} // namespace ogs
