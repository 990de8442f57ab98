#include "ogs/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "ogs/alt_ogs.hpp"
#include "ogs/error.hpp"
#include "ogs/generators.hpp"
#include "ogs/notation.hpp"
#include "ogs/relations.hpp"
#include "ogs/sn_ogs.hpp"

namespace ogs {

namespace {

VerificationReport named_report(std::string suite)
{
  VerificationReport report;
  report.suite = std::move(suite);
  return report;
}

class Stopwatch
{
public:
  explicit Stopwatch(VerificationReport &report)
  : report_(report), start_(std::chrono::steady_clock::now())
  {}

  ~Stopwatch()
  {
    report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start_);
  }

  Stopwatch(Stopwatch const &) = delete;
  Stopwatch &operator=(Stopwatch const &) = delete;

private:
  VerificationReport &report_;
  std::chrono::steady_clock::time_point start_;
};

std::string join(std::vector<int> const &values)
{
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0u)
      out += ',';
    out += std::to_string(values[i]);
  }
  return out + ")";
}

/// Odometer over [0, bounds[0]) x [0, bounds[1]) x ..., last entry fastest.
bool next_tuple(std::vector<int> &tuple, std::vector<int> const &bounds)
{
  for (std::size_t i = tuple.size(); i-- > 0u;) {
    if (++tuple[i] < bounds[i])
      return true;
    tuple[i] = 0;
  }
  return false;
}

std::vector<int> sn_bounds(unsigned n)
{
  std::vector<int> bounds;
  for (unsigned k = 2u; k <= n; ++k)
    bounds.push_back(static_cast<int>(k));
  return bounds;
}

void check_relation(VerificationReport &report, Relation const &rel, std::string const &where)
{
  auto lhs = evaluate(rel.left);
  auto rhs = evaluate(rel.right);
  report.record(lhs == rhs, [&] {
    return Counterexample{rel.name + " " + where + ": " + print_word(rel.left) + " = " +
                            print_word(rel.right),
                          print_one_line(lhs), print_one_line(rhs)};
  });
}

std::string where(int r, int r_prime, unsigned n)
{
  return "(r=" + std::to_string(r) + ", r'=" + std::to_string(r_prime) +
         ", n=" + std::to_string(n) + ")";
}

VerificationReport tt_general_suite(std::string suite, unsigned n_max, bool inverted,
                                    int min_gap)
{
  auto report = named_report(std::move(suite));
  Stopwatch timer(report);
  for (unsigned n = 6u; n <= n_max; ++n) {
    for (int r = 2; 2 * r + 2 <= static_cast<int>(n); ++r) {
      for (int r_prime = r + min_gap; 2 * r_prime <= static_cast<int>(n); ++r_prime) {
        auto rels = inverted ? rel_tt_general(r, r_prime, n)
                             : rel_tt_general_uninverted(r, r_prime, n);
        for (auto const &rel : rels)
          check_relation(report, rel, where(r, r_prime, n));
      }
    }
  }
  return report;
}

} // namespace

void VerificationReport::record(bool success, std::function<Counterexample()> const &describe)
{
  ++checked;
  if (success)
    ++passed;
  else if (!first_failure)
    first_failure = describe();
}

void VerificationReport::merge(VerificationReport const &other)
{
  checked += other.checked;
  passed += other.passed;
  if (!first_failure && other.first_failure)
    first_failure = other.first_failure;
  elapsed += other.elapsed;
}

std::string VerificationReport::to_tsv() const
{
  std::string failure = "-";
  if (first_failure) {
    failure = first_failure->input + " expected " + first_failure->expected + " got " +
              first_failure->actual;
    std::replace(failure.begin(), failure.end(), '\t', ' ');
  }
  return suite + '\t' + std::to_string(checked) + '\t' + std::to_string(passed) + '\t' +
         std::to_string(elapsed.count()) + '\t' + failure;
}

std::uint64_t group_order(unsigned n, bool alternating)
{
  auto f = factorial(n);
  return alternating && n >= 2u ? f / 2u : f;
}

void for_each_element(unsigned n, bool alternating,
                      std::function<void(Permutation const &)> const &visit)
{
  if (n == 0u)
    throw RangeError("degree must be >= 1");

  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  do {
    Permutation p(images);
    if (!alternating || parity(p) == Parity::even)
      visit(p);
  } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<Permutation> enumerate_group(unsigned n, bool alternating)
{
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(group_order(n, alternating)));
  for_each_element(n, alternating, [&](Permutation const &p) { out.push_back(p); });
  return out;
}

VerificationReport certify_uniqueness(unsigned n, bool alternating, bool force)
{
  unsigned limit = alternating ? (force ? kMaxCertifyAltForced : kMaxCertifyAlt) : kMaxCertifySym;
  unsigned floor = alternating ? 3u : 1u;
  if (n < floor || n > limit)
    throw RangeError(std::string("certify_uniqueness supports ") +
                     (alternating ? "Alt_n" : "S_n") + " for " + std::to_string(floor) +
                     " <= n <= " + std::to_string(limit) + ", got " + std::to_string(n));

  auto report = named_report(std::string("uniqueness_") + (alternating ? "alt" : "sym") +
                            std::to_string(n));
  Stopwatch timer(report);

  auto bounds = alternating ? AltCanonicalForm::tuple_bounds(n) : sn_bounds(n);
  std::vector<int> tuple(bounds.size(), 0);
  std::vector<bool> seen(static_cast<std::size_t>(factorial(n)), false);
  std::uint64_t tuples = 0;

  do {
    ++tuples;
    std::string problem;
    Permutation p = Permutation::identity(n);

    try {
      if (alternating) {
        auto form = AltCanonicalForm::from_tuple(n, tuple);
        p = decode_alt(form);
        if (parity(p) != Parity::even)
          problem = "odd image";
        else if (encode_alt(p) != form)
          problem = "round trip " + join(encode_alt(p).tuple());
      } else {
        SnCanonicalForm form(n, tuple);
        p = decode_sn(form);
        if (encode_sn(p) != form)
          problem = "round trip " + join(encode_sn(p).exponents());
      }

      auto rank = static_cast<std::size_t>(lex_rank(p));
      if (problem.empty() && seen[rank])
        problem = "duplicate image";
      seen[rank] = true;
    } catch (Error const &e) {
      problem = e.what();
    }

    report.record(problem.empty(), [&] {
      return Counterexample{join(tuple), "distinct element with exact round trip",
                            print_one_line(p) + " (" + problem + ")"};
    });
  } while (next_tuple(tuple, bounds));

  if (tuples != group_order(n, alternating)) {
    report.record(false, [&] {
      return Counterexample{"tuple count", std::to_string(group_order(n, alternating)),
                            std::to_string(tuples)};
    });
  }
  return report;
}

VerificationReport cross_check_enumeration(unsigned n, bool alternating)
{
  auto report = named_report(std::string("enumeration_") + (alternating ? "alt" : "sym") +
                            std::to_string(n));
  Stopwatch timer(report);

  std::uint64_t count = 0;
  std::vector<bool> seen(static_cast<std::size_t>(factorial(n)), false);
  bool parity_ok = true;
  bool distinct = true;
  for_each_element(n, alternating, [&](Permutation const &p) {
    ++count;
    auto rank = static_cast<std::size_t>(lex_rank(p));
    distinct = distinct && !seen[rank];
    seen[rank] = true;
    parity_ok = parity_ok && (!alternating || parity(p) == Parity::even);
  });

  report.record(count == group_order(n, alternating) && parity_ok && distinct, [&] {
    return Counterexample{"element count", std::to_string(group_order(n, alternating)),
                          std::to_string(count) + (parity_ok ? "" : " with odd elements") +
                            (distinct ? "" : " with repeats")};
  });
  return report;
}

VerificationReport check_exchange_sn(unsigned n_max)
{
  auto report = named_report("exchange_sn");
  Stopwatch timer(report);
  unsigned n = n_max;

  for (int q = 3; q <= static_cast<int>(n_max); ++q) {
    for (int p = 2; p < q; ++p) {
      for (int i_q = 1; i_q < q; ++i_q) {
        for (int i_p = 1; i_p < p; ++i_p) {
          auto lhs = t_pow(q, i_q, n) * t_pow(p, i_p, n);
          auto rhs = exchange_sn(q, i_q, p, i_p, n);
          auto value = evaluate(rhs.to_word());

          bool ascending = std::is_sorted(
            rhs.factors().begin(), rhs.factors().end(),
            [](PowerFactor const &a, PowerFactor const &b) { return a.subscript < b.subscript; });

          bool overlap = true;
          for (auto c : exchange_cases(q, i_q, p, i_p))
            overlap = overlap && evaluate(exchange_sn_case(c, q, i_q, p, i_p, n).to_word()) == lhs;

          report.record(value == lhs && ascending && overlap, [&] {
            return Counterexample{"t" + std::to_string(q) + "^" + std::to_string(i_q) + " * t" +
                                    std::to_string(p) + "^" + std::to_string(i_p),
                                  print_one_line(lhs),
                                  print_word(rhs.to_word()) + " = " + print_one_line(value) +
                                    (ascending ? "" : " (not ascending)") +
                                    (overlap ? "" : " (cases disagree)")};
          });
        }
      }
    }
  }
  return report;
}

VerificationReport check_v_exchange(unsigned degree)
{
  auto report = named_report("v_exchange");
  Stopwatch timer(report);
  unsigned n = degree;

  for (int q = 3; 2 * q <= static_cast<int>(n); ++q) {
    for (int p = 2; p < q; ++p) {
      for (int k_q = 1; k_q < q; ++k_q) {
        for (int k_p = 1; k_p < p; ++k_p) {
          auto lhs = v_pow(2 * q, k_q, n) * v_pow(2 * p, k_p, n);
          auto delegated = v_exchange(q, k_q, p, k_p, n);
          auto direct = v_exchange_direct(q, k_q, p, k_p, n);
          auto value = evaluate(delegated.to_word());

          bool overlap = true;
          for (auto c : exchange_cases(q, k_q, p, k_p))
            overlap = overlap && evaluate(v_exchange_case(c, q, k_q, p, k_p, n).to_word()) == lhs;

          report.record(value == lhs && delegated == direct && overlap, [&] {
            return Counterexample{"v" + std::to_string(2 * q) + "^" + std::to_string(k_q) +
                                    " * v" + std::to_string(2 * p) + "^" + std::to_string(k_p),
                                  print_one_line(lhs),
                                  print_word(delegated.to_word()) + " / direct " +
                                    print_word(direct.to_word()) + " = " + print_one_line(value) +
                                    (overlap ? "" : " (cases disagree)")};
          });
        }
      }
    }
  }
  return report;
}

VerificationReport check_alt4_table()
{
  auto report = named_report("alt4");
  Stopwatch timer(report);
  for (auto const &rel : alt4_exchange_table())
    check_relation(report, rel, "(n=4)");
  return report;
}

VerificationReport check_rel_tt_step(unsigned n_max)
{
  auto report = named_report("rel_tt_step");
  Stopwatch timer(report);
  for (unsigned n = 6u; n <= n_max; ++n) {
    for (int r = 2; 2 * r + 2 <= static_cast<int>(n); ++r) {
      for (auto const &rel : rel_tt_step(r, n))
        check_relation(report, rel, "(r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")");
    }
  }
  return report;
}

VerificationReport check_rel_tt_general(unsigned n_max)
{ return tt_general_suite("rel_tt_general", n_max, true, 1); }

VerificationReport check_rel_vu(unsigned n_max)
{
  auto report = named_report("rel_vu");
  Stopwatch timer(report);
  for (unsigned n = 6u; n <= n_max; ++n) {
    for (int r = 3; 2 * r <= static_cast<int>(n); ++r)
      check_relation(report, rel_vu(r, n), "(r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")");
  }
  return report;
}

VerificationReport check_rel_t_odd(unsigned n_max)
{
  auto report = named_report("rel_t_odd");
  Stopwatch timer(report);
  for (unsigned n = 5u; n <= n_max; ++n) {
    for (int r = 2; 2 * r + 1 <= static_cast<int>(n); ++r) {
      for (int r_prime = r + 1; 2 * r_prime - 1 <= static_cast<int>(n); ++r_prime)
        check_relation(report, rel_t_odd(r, r_prime, n), where(r, r_prime, n));
    }
  }
  return report;
}

VerificationReport check_generator_facts(unsigned n_max)
{
  auto report = named_report("generators");
  Stopwatch timer(report);

  for (unsigned n = 2u; n <= n_max; ++n) {
    for (int m = 2; m <= static_cast<int>(n); ++m) {
      auto tm = t(m, n);
      GeneratorWord coxeter(n);
      for (int j = 1; j <= m - 1; ++j)
        coxeter.append(Gen::S, j);

      bool even = parity(tm) == Parity::even;
      report.record(even == (m % 2 == 1) && evaluate(coxeter) == tm, [&] {
        return Counterexample{"t" + std::to_string(m) + " in degree " + std::to_string(n),
                              std::string(m % 2 == 1 ? "even" : "odd") + " and s1*...*s" +
                                std::to_string(m - 1),
                              std::string(to_string(parity(tm))) + " " + print_one_line(tm)};
      });
    }

    for (int r = 2; 2 * r <= static_cast<int>(n); ++r) {
      auto ur = u(2 * r, n);
      auto vr = v(2 * r, n);
      auto u_sq = ur * ur;
      bool square_ok = r >= 3 ? u_sq == v(2 * r - 2, n) : u_sq.is_identity();

      report.record(order(ur) == static_cast<std::uint64_t>(2 * r - 2) &&
                      order(vr) == static_cast<std::uint64_t>(r) && square_ok &&
                      parity(ur) == Parity::even && parity(vr) == Parity::even,
                    [&] {
                      return Counterexample{"u" + std::to_string(2 * r) + ", v" +
                                              std::to_string(2 * r) + " in degree " +
                                              std::to_string(n),
                                            "orders " + std::to_string(2 * r - 2) + ", " +
                                              std::to_string(r) + ", u^2 = v" +
                                              std::to_string(2 * r - 2),
                                            "orders " + std::to_string(order(ur)) + ", " +
                                              std::to_string(order(vr)) + ", u^2 " +
                                              print_cycles(u_sq)};
                    });
    }
  }
  return report;
}

VerificationReport check_major_index(unsigned n_max, bool use_inverse)
{
  auto report = named_report(use_inverse ? "maj_inverse" : "maj");
  Stopwatch timer(report);

  for (unsigned n = 1u; n <= n_max; ++n) {
    auto bounds = sn_bounds(n);
    std::vector<int> tuple(bounds.size(), 0);
    do {
      SnCanonicalForm form(n, tuple);
      auto g = decode_sn(form);
      unsigned maj = major_index(use_inverse ? g.inverse() : g);
      report.record(maj == maj_of_form(form), [&] {
        return Counterexample{print_one_line(g) + " = " + print_sn_form(form),
                              "maj " + std::to_string(maj_of_form(form)),
                              "maj " + std::to_string(maj)};
      });
    } while (!bounds.empty() && next_tuple(tuple, bounds));
  }
  return report;
}

std::vector<VerificationReport> run_identity_suites(unsigned n_max)
{
  if (n_max < 6u)
    throw RangeError("identity suites need n_max >= 6, got " + std::to_string(n_max));

  return {
    check_exchange_sn(n_max),   check_v_exchange(n_max), check_alt4_table(),
    check_rel_tt_step(n_max),   check_rel_tt_general(n_max),
    check_rel_vu(n_max),        check_rel_t_odd(n_max),  check_generator_facts(n_max),
  };
}

const char *to_string(MajConvention c)
{ return c == MajConvention::left_to_right ? "left_to_right" : "inverse"; }

ConventionsReport resolve_conventions()
{
  constexpr unsigned maj_degree = 6;
  // r' > r + 1 first occurs at 2r' = 8
  constexpr unsigned relation_degree = 8;

  ConventionsReport out;
  out.maj = MajConvention::left_to_right;

  auto direct = check_major_index(maj_degree, false);
  auto inverted = check_major_index(maj_degree, true);
  if (direct.ok())
    out.maj = MajConvention::left_to_right;
  else if (inverted.ok())
    out.maj = MajConvention::inverse;
  else
    throw InternalError("no major-index convention holds: " + direct.to_tsv());

  auto inverse_form = check_rel_tt_general(relation_degree);
  auto printed_form = tt_general_suite("rel_tt_general_uninverted", relation_degree, false, 2);
  out.general_inverse_form_holds = inverse_form.ok();
  out.general_uninverted_form_holds = printed_form.ok();

  out.reports = {direct, inverted, inverse_form, printed_form};
  return out;
}

VerificationReport fuzz_normalizer(unsigned n, std::uint64_t trials, unsigned max_len,
                                   std::uint64_t seed)
{
  if (n < 4u)
    throw RangeError("fuzz_normalizer needs n >= 4, got " + std::to_string(n));

  auto report = named_report("fuzz_normalizer_n" + std::to_string(n));
  Stopwatch timer(report);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> length(0u, max_len);
  std::uniform_int_distribution<int> subscript(2, static_cast<int>(n));
  std::uniform_int_distribution<long long> exponent(-static_cast<long long>(n), n);

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    GeneratorWord w(n);
    for (unsigned len = length(rng), i = 0; i < len; ++i) {
      int m = subscript(rng);
      w.append(Gen::T, m, exponent(rng));
    }

    auto expected = encode_sn(evaluate(w));
    std::string actual;
    bool ok = false;
    try {
      auto got = normalize_sn(w);
      ok = got == expected;
      actual = print_sn_form(got);
    } catch (InternalError const &e) {
      actual = e.what();
    }

    report.record(ok, [&] {
      return Counterexample{"trial " + std::to_string(trial) + ": " + print_word(w),
                            print_sn_form(expected), actual};
    });
  }
  return report;
}

} // namespace ogs
