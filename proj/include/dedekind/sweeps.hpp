#pragma once

// Exhaustive verification sweeps over all moduli n = 1..n_max. Each sweep
// pits a production path against its oracle for every unit m mod n:
//
//   counting       count_solutions vs count_solutions_bruteforce
//   congruence    check_pair vs check_pair_via_sums, all unit pairs (x, m)
//   enumeration    enumerate_solutions vs enumerate_solutions_bruteforce
//   dedekind_sums  dedekind_sum vs dedekind_sum_naive, plus the negation and
//                  inverse symmetries and integrality of 6 n s(m, n)
//
// serial:: is the reference; parallel:: spreads moduli over OpenMP threads
// and merges per-modulus results in order, so both produce identical reports.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dedekind::sweeps {

enum class Check { counting, congruence, enumeration, dedekind_sums };

std::string_view to_string(Check check);

struct Mismatch {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t x = 0;  // second argument for pair checks, else 0
  std::string detail;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// `checked` counts comparisons up to and including the first mismatch.
struct SweepReport {
  Check check = Check::counting;
  std::uint64_t n_max = 0;
  std::uint64_t checked = 0;
  std::optional<Mismatch> first_mismatch;

  bool passed() const noexcept { return !first_mismatch.has_value(); }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// All comparisons of one kind at a single modulus, stopping at the first
/// mismatch. Exceptions from the library are reported as mismatches.
SweepReport check_modulus(Check check, std::uint64_t n);

namespace serial {
SweepReport run(Check check, std::uint64_t n_max);
}  // namespace serial

namespace parallel {
SweepReport run(Check check, std::uint64_t n_max);
}  // namespace parallel

}  // namespace dedekind::sweeps
