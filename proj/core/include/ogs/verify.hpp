#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ogs/permutation.hpp"

namespace ogs {

struct Counterexample
{
  std::string input;
  std::string expected;
  std::string actual;
};

/**
 * Outcome of one verification suite. Failures never abort a suite; the first
 * one is kept for reproduction. Invariant: first_failure is set iff
 * passed < checked.
 */
struct VerificationReport
{
  std::string suite;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::optional<Counterexample> first_failure;
  std::chrono::milliseconds elapsed{0};

  bool ok() const
  { return passed == checked; }

  /// Counts one check; `describe` is only invoked for the first failure.
  void record(bool success, std::function<Counterexample()> const &describe);

  void merge(VerificationReport const &other);

  /// suite, checked, passed, elapsed_ms, first failure or "-", tab separated.
  std::string to_tsv() const;
};

/// Every element of S_n (or Alt_n) once, in lexicographic one-line order.
void for_each_element(unsigned n, bool alternating,
                      std::function<void(Permutation const &)> const &visit);

std::vector<Permutation> enumerate_group(unsigned n, bool alternating);

/// n! or n!/2.
std::uint64_t group_order(unsigned n, bool alternating);

/// Default limits on the exhaustive uniqueness checks.
inline constexpr unsigned kMaxCertifySym = 8;
inline constexpr unsigned kMaxCertifyAlt = 9;
inline constexpr unsigned kMaxCertifyAltForced = 10;

/**
 * Decodes every in-bounds exponent tuple and checks that the results are
 * pairwise distinct (even, for Alt_n), that the tuple count equals the group
 * order, and that encode inverts decode. Throws RangeError beyond the budget
 * unless `force` is set (which lifts the alternating limit to 10).
 */
VerificationReport certify_uniqueness(unsigned n, bool alternating, bool force = false);

/// Counts elements via for_each_element and compares with the group order.
VerificationReport cross_check_enumeration(unsigned n, bool alternating);

VerificationReport check_exchange_sn(unsigned n_max);
VerificationReport check_v_exchange(unsigned degree);
VerificationReport check_alt4_table();
VerificationReport check_rel_tt_step(unsigned n_max);
VerificationReport check_rel_tt_general(unsigned n_max);
VerificationReport check_rel_vu(unsigned n_max);
VerificationReport check_rel_t_odd(unsigned n_max);

/// Parity of t_m, orders of u_2r and v_2r, u_2r^2 = v_{2r-2}, up to degree n_max.
VerificationReport check_generator_facts(unsigned n_max);

/// Sum of canonical exponents against the major index of every element.
VerificationReport check_major_index(unsigned n_max, bool use_inverse = false);

/**
 * Every identity suite over all valid parameters at degree <= n_max
 * (v_exchange at degree n_max). Requires n_max >= 6.
 */
std::vector<VerificationReport> run_identity_suites(unsigned n_max);

enum class MajConvention { left_to_right, inverse };

const char *to_string(MajConvention c);

struct ConventionsReport
{
  MajConvention maj = MajConvention::left_to_right;
  bool general_inverse_form_holds = false;
  bool general_uninverted_form_holds = false;
  std::vector<VerificationReport> reports;
};

/// Convention fixed by resolve_conventions() and locked by the test suite.
inline constexpr MajConvention kMajConvention = MajConvention::left_to_right;

/**
 * Runs the candidate conventions exhaustively at n <= 6: the major index
 * against the canonical exponent sum of g and of g^{-1}, and the inverted
 * against the printed (uninverted) general t_{2r}^{-1} * t_{2r'} product,
 * the latter over r' > r + 1. Throws InternalError if no maj candidate holds.
 */
ConventionsReport resolve_conventions();

/**
 * Seeded random t-words (length <= max_len, exponents in [-n, n]) checked
 * with normalize_sn against encode_sn(evaluate(w)). Deterministic in seed.
 */
VerificationReport fuzz_normalizer(unsigned n, std::uint64_t trials,
                                   unsigned max_len, std::uint64_t seed);

} // namespace ogs
