#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "ogs/notation.hpp"
#include "ogs/verify.hpp"

namespace ogs {
namespace {

struct Result
{
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, std::string const &stdin_text = "")
{
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Encode)
{
  EXPECT_EQ(run({"encode", "sym", "4", "[2;4;1;3]"}).out, "t3^1 * t4^1\n");
  EXPECT_EQ(run({"encode", "alt", "5", "(3,4,5)"}).out, "v4^1 * t5^2\n");
  EXPECT_EQ(run({"encode", "--group", "alt", "--n", "5", "(3,4,5)"}).out, "v4^1 * t5^2\n");

  auto odd = run({"encode", "alt", "4", "(1,2)"});
  EXPECT_EQ(odd.code, cli::domain_error);
  EXPECT_NE(odd.err.find("not an even permutation"), std::string::npos);
}

TEST(Cli, Decode)
{
  auto u4 = run({"decode", "alt", "4", "u4^1"});
  EXPECT_EQ(u4.code, cli::ok);
  EXPECT_EQ(u4.out, "[2;1;4;3] = (4,3)(2,1)\n");
  EXPECT_EQ(parse_cycles("(1,2)(3,4)", 4), parse_cycles("(4,3)(2,1)", 4));

  EXPECT_EQ(run({"decode", "sym", "4", "t2^1 * t4^2"}).out, "[4;3;1;2] = (4,2,3,1)\n");
  EXPECT_EQ(run({"decode", "sym", "4", "t4^5"}).code, cli::bad_input);
}

TEST(Cli, ReadsStdinWhenInputOmitted)
{
  EXPECT_EQ(run({"encode", "sym", "4"}, "[2;4;1;3]\n").out, "t3^1 * t4^1\n");
  EXPECT_EQ(run({"normalize", "sym", "4"}, "t4 * t3").out, "t2^1 * t4^2\n");
  EXPECT_EQ(run({"encode", "sym", "4"}, "").code, cli::bad_input);
}

TEST(Cli, Normalize)
{
  EXPECT_EQ(run({"normalize", "sym", "5", "t5^2 * t5^3"}).out, "e\n");
  EXPECT_EQ(run({"normalize", "sym", "4", "s1 * s3"}).out, "t2^1 * t3^2 * t4^1\n");
  EXPECT_EQ(run({"normalize", "alt", "4", "v4 * u4"}).out, "u4^1 * v4^1\n");
  EXPECT_EQ(run({"normalize", "alt", "4", "s1"}).code, cli::domain_error);
}

TEST(Cli, Stats)
{
  EXPECT_EQ(run({"stats", "3", "[3;1;2]"}).out,
            "descents\t{1}\nmaj\t1\ninversions\t2\nparity\teven\norder\t3\n");
  EXPECT_EQ(run({"stats", "5", "[1;2;3;4;5]"}).out,
            "descents\t{}\nmaj\t0\ninversions\t0\nparity\teven\norder\t1\n");
  auto u4 = run({"stats", "4", "(1,2)(3,4)"}).out;
  EXPECT_NE(u4.find("parity\teven\n"), std::string::npos);
  EXPECT_NE(u4.find("order\t2\n"), std::string::npos);
  EXPECT_EQ(run({"stats", "3", "[3;1"}).code, cli::bad_input);
}

TEST(Cli, Convert)
{
  EXPECT_EQ(run({"convert", "5", "[3;4;1;5;2]"}).out, "(5,2,4)(3,1)\n");
  EXPECT_EQ(run({"convert", "4", "()"}).out, "[1;2;3;4]\n");
  EXPECT_EQ(run({"convert", "3", "(1,2,3)"}).out, "[2;3;1]\n");
  EXPECT_EQ(run({"convert", "3", "[1;2]"}).code, cli::bad_input);
}

std::size_t lines(std::string const &s)
{ return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(Cli, Table)
{
  EXPECT_EQ(lines(run({"table", "alt", "4"}).out), 12u);
  EXPECT_EQ(lines(run({"table", "sym", "3"}).out), 6u);
  auto alt3 = run({"table", "alt", "3"}).out;
  EXPECT_EQ(alt3, "(0)\t[1;2;3]\t()\t0\n(1)\t[3;1;2]\t(3,2,1)\t1\n(2)\t[2;3;1]\t(3,1,2)\t2\n");
  EXPECT_EQ(run({"table", "sym", "8"}).code, cli::bad_input);
}

TEST(Cli, TableMajColumnSumsToMahonianTotal)
{
  // sum of maj over S_n is n! * n(n-1)/4
  auto out = run({"table", "sym", "5"}).out;
  std::istringstream rows(out);
  std::string line;
  unsigned total = 0;
  while (std::getline(rows, line))
    total += static_cast<unsigned>(std::stoul(line.substr(line.rfind('\t') + 1)));
  EXPECT_EQ(total, 120u * 5u * 4u / 4u);
}

TEST(Cli, Verify)
{
  auto alt4 = run({"verify", "--suite", "alt4"});
  EXPECT_EQ(alt4.code, cli::ok);
  EXPECT_EQ(alt4.out.substr(0, 9), "alt4\t5\t5\t");

  auto uniq = run({"verify", "--suite", "uniqueness", "--group", "alt", "--nmax", "4"});
  EXPECT_EQ(uniq.code, cli::ok);
  EXPECT_NE(uniq.out.find("uniqueness_alt4\t12\t12\t"), std::string::npos);
  EXPECT_EQ(uniq.out.find("uniqueness_sym"), std::string::npos);

  EXPECT_EQ(run({"verify"}).code, cli::bad_input);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, cli::bad_input);
}

TEST(Cli, BadInvocations)
{
  EXPECT_EQ(run({}).code, cli::bad_input);
  EXPECT_EQ(run({"encode", "nope", "4", "()"}).code, cli::bad_input);
  EXPECT_EQ(run({"encode", "alt", "2", "()"}).code, cli::bad_input);
  EXPECT_EQ(run({"encode", "sym", "4", "[1;2;3]"}).code, cli::bad_input);
  EXPECT_EQ(run({"--help"}).code, cli::ok);
}

TEST(Cli, Deterministic)
{
  auto a = run({"table", "alt", "5"});
  auto b = run({"table", "alt", "5"});
  EXPECT_EQ(a.out, b.out);
}

} // namespace
} // namespace ogs
