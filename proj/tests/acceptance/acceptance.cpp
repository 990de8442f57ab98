// Acceptance suite: one line per criterion, exit status 0 iff all pass.
//
//   acceptance            criteria 1-10
//   acceptance --alt10    additionally certifies Alt_10 (1,814,400 elements)

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ogs/alt_ogs.hpp"
#include "ogs/notation.hpp"
#include "ogs/sn_ogs.hpp"
#include "ogs/verify.hpp"

#ifdef OGS_HAVE_CLI
#include "cli.hpp"
#endif

namespace {

using namespace ogs;
using Clock = std::chrono::steady_clock;

struct Outcome
{
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start)
{ return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt_seconds(double s)
{
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

/// Folds a list of reports into one outcome, naming the first failing suite.
Outcome all_ok(std::vector<VerificationReport> const &reports)
{
  Outcome o;
  std::uint64_t checked = 0;
  for (auto const &r : reports) {
    checked += r.checked;
    if (!r.ok() && o.pass) {
      o.pass = false;
      o.detail = "FAILED " + r.to_tsv();
    }
    if (r.checked == 0u && o.pass) {
      o.pass = false;
      o.detail = "suite " + r.suite + " checked nothing";
    }
  }
  if (o.pass)
    o.detail = std::to_string(reports.size()) + " suite(s), " + std::to_string(checked) +
               " checks, 0 failures";
  return o;
}

Outcome certify_range(bool alternating, unsigned lo, unsigned hi, double limit_s, bool force)
{
  auto start = Clock::now();
  std::vector<VerificationReport> reports;
  for (unsigned n = lo; n <= hi; ++n) {
    auto r = certify_uniqueness(n, alternating, force);
    if (r.checked != group_order(n, alternating)) {
      r.record(false, [&] {
        return Counterexample{"n=" + std::to_string(n), std::to_string(group_order(n, alternating)),
                              std::to_string(r.checked) + " tuples"};
      });
    }
    reports.push_back(r);
  }
  auto o = all_ok(reports);
  double s = seconds_since(start);
  o.detail += ", " + fmt_seconds(s) + " (limit " + fmt_seconds(limit_s) + ")";
  if (s >= limit_s)
    o.pass = false;
  return o;
}

Outcome criterion_relations()
{
  constexpr unsigned n_max = 12;
  auto o = all_ok({check_rel_tt_step(n_max), check_rel_tt_general(n_max), check_rel_vu(n_max),
                   check_rel_t_odd(n_max)});

  auto conventions = resolve_conventions();
  auto const &printed = conventions.reports.back();
  bool demonstrated = !conventions.general_uninverted_form_holds &&
                      conventions.general_inverse_form_holds && printed.first_failure;
  if (!demonstrated) {
    o.pass = false;
    o.detail += "; uninverted product was not refuted";
  } else {
    o.detail += "; uninverted product refuted at " + printed.first_failure->input;
  }
  return o;
}

Outcome criterion_major_index()
{
  auto conventions = resolve_conventions();
  auto r = check_major_index(7, conventions.maj == MajConvention::inverse);
  auto o = all_ok({r});
  o.detail += " (convention " + std::string(to_string(conventions.maj)) + ")";
  return o;
}

Outcome criterion_fuzz()
{
  std::vector<VerificationReport> reports;
  for (unsigned n = 4; n <= 8; ++n) {
    auto r = fuzz_normalizer(n, 10'000, 30, 1);
    if (r.checked != 10'000u)
      r.record(false, [&] { return Counterexample{"trial count", "10000", std::to_string(r.checked)}; });
    reports.push_back(r);
  }
  return all_ok(reports);
}

#ifdef OGS_HAVE_CLI
Outcome criterion_cli_round_trip()
{
  auto call = [](std::vector<std::string> const &args, std::string &out) {
    std::istringstream in;
    std::ostringstream os, err;
    int code = cli::run(args, in, os, err);
    out = os.str();
    return code;
  };
  auto chomp = [](std::string s) {
    if (!s.empty() && s.back() == '\n')
      s.pop_back();
    return s;
  };

  Outcome o;
  std::uint64_t checked = 0;
  for (std::string group : {"sym", "alt"}) {
    bool alternating = group == "alt";
    for (unsigned n = alternating ? 3u : 2u; n <= 6u && o.pass; ++n) {
      auto degree = std::to_string(n);
      for (auto const &p : enumerate_group(n, alternating)) {
        std::string form, again, decoded, form2;
        bool ok = call({"encode", group, degree, print_one_line(p)}, form) == 0 &&
                  call({"encode", group, degree, print_one_line(p)}, again) == 0 &&
                  form == again &&
                  call({"decode", group, degree, chomp(form)}, decoded) == 0;

        std::string one_line = decoded.substr(0, decoded.find(" = "));
        ok = ok && one_line == print_one_line(p) &&
             chomp(decoded.substr(decoded.find(" = ") + 3u)) == print_cycles(p) &&
             call({"encode", group, degree, one_line}, form2) == 0 && form2 == form;
        ++checked;
        if (!ok) {
          o.pass = false;
          o.detail = "FAILED " + group + " n=" + degree + " " + print_one_line(p) + " -> " +
                     chomp(form) + " -> " + chomp(decoded) + " -> " + chomp(form2);
          break;
        }
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " elements round-tripped byte-identically";
  return o;
}
#endif

} // namespace

int main(int argc, char **argv)
{
  bool alt10 = false;
  for (int i = 1; i < argc; ++i)
    alt10 = alt10 || std::strcmp(argv[i], "--alt10") == 0;

  struct Criterion
  {
    std::string name;
    std::function<Outcome()> run;
  };

  std::vector<Criterion> criteria = {
    {"AC1 S_n canonical form unique, n=2..8",
     [] { return certify_range(false, 2, 8, 10.0, false); }},
    {"AC2 Alt_n canonical form unique, n=3..9",
     [] { return certify_range(true, 3, 9, 30.0, false); }},
    {"AC3 exchange law sound, 2<=p<q<=8", [] { return all_ok({check_exchange_sn(8)}); }},
    {"AC4 v-exchange law sound, 2<=p<q<=6 at degree 12",
     [] { return all_ok({check_v_exchange(12)}); }},
    {"AC5 Alt_4 exchange table", [] {
       auto r = check_alt4_table();
       auto o = all_ok({r});
       if (r.checked != 5u)
         o.pass = false;
       return o;
     }},
    {"AC6 relation identities at n<=12", criterion_relations},
    {"AC7 generator parity and orders at n<=16", [] { return all_ok({check_generator_facts(16)}); }},
    {"AC8 major index equals exponent sum, n<=7", criterion_major_index},
    {"AC9 normalizer matches oracle, n=4..8 x 10^4", criterion_fuzz},
#ifdef OGS_HAVE_CLI
    {"AC10 CLI encode/decode round trip, n<=6", criterion_cli_round_trip},
#else
    {"AC10 CLI encode/decode round trip, n<=6",
     [] { return Outcome{false, "built without the CLI (OGS_BUILD_TOOLS=OFF)"}; }},
#endif
  };
  if (alt10)
    criteria.push_back({"AC2b Alt_10 canonical form unique",
                        [] { return certify_range(true, 10, 10, 300.0, true); }});

  int failures = 0;
  for (auto const &c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << c.name << "  --  " << o.detail << std::endl;
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
