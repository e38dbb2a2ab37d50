#include "dedekind/sweeps.hpp"

#include <numeric>
#include <vector>

#include "dedekind/counting.hpp"
#include "dedekind/dedekind_sum.hpp"
#include "dedekind/enumeration.hpp"
#include "dedekind/number_theory.hpp"

namespace dedekind::sweeps {
namespace {

using u64 = std::uint64_t;

bool counting_at(u64 n, SweepReport& report) {
  const Integer nn(n);
  for (u64 m = 1; m <= n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    ++report.checked;
    const Integer closed = count_solutions(Integer(m), nn).total;
    const Integer scanned = count_solutions_bruteforce(Integer(m), nn);
    if (closed != scanned) {
      report.first_mismatch = Mismatch{n, m, 0,
                                       "closed form " + dedekind::to_string(closed) + " != scan " +
                                           dedekind::to_string(scanned)};
      return false;
    }
  }
  return true;
}

bool congruence_at(u64 n, SweepReport& report) {
  const Integer nn(n);
  for (u64 m = 1; m <= n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    for (u64 x = 1; x <= n; ++x) {
      if (std::gcd(x, n) != 1) continue;
      ++report.checked;
      const bool congruence = check_pair(Integer(x), Integer(m), nn);
      const bool sums = check_pair_via_sums(Integer(x), Integer(m), nn);
      if (congruence != sums) {
        report.first_mismatch =
            Mismatch{n, m, x, std::string("congruence says ") + (congruence ? "yes" : "no") +
                                  ", Dedekind sums say " + (sums ? "yes" : "no")};
        return false;
      }
    }
  }
  return true;
}

bool enumeration_at(u64 n, SweepReport& report) {
  const Integer nn(n);
  for (u64 m = 1; m <= n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    ++report.checked;
    const ResidueSet structured = enumerate_solutions(Integer(m), nn);
    const ResidueSet scanned = enumerate_solutions_bruteforce(Integer(m), nn);
    if (structured != scanned) {
      report.first_mismatch =
          Mismatch{n, m, 0,
                   "structured set has " + std::to_string(structured.size()) +
                       " members, scan has " + std::to_string(scanned.size())};
      return false;
    }
  }
  return true;
}

bool dedekind_sums_at(u64 n, SweepReport& report) {
  const Integer nn(n);
  for (u64 m = 1; m <= n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    ++report.checked;
    const Integer mm(m);
    const Rational fast = dedekind_sum(mm, nn);
    auto fail = [&](std::string detail) {
      report.first_mismatch = Mismatch{n, m, 0, std::move(detail)};
      return false;
    };
    if (fast != dedekind_sum_naive(mm, nn)) return fail("reciprocity recursion != defining sum");
    if (dedekind_sum(nn - mm, nn) != -fast) return fail("s(n - m, n) != -s(m, n)");
    if (dedekind_sum(mod_inverse(mm, nn), nn) != fast) return fail("s(1/m, n) != s(m, n)");
    if (!(fast * Rational(6 * nn)).is_integer()) return fail("6 n s(m, n) is not an integer");
  }
  return true;
}

SweepReport merge(Check check, u64 n_max, const std::vector<SweepReport>& per_modulus) {
  SweepReport out{check, n_max, 0, std::nullopt};
  for (const SweepReport& r : per_modulus) {
    out.checked += r.checked;
    if (!r.passed()) {
      out.first_mismatch = r.first_mismatch;
      break;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Check check) {
  switch (check) {
    case Check::counting: return "counting";
    case Check::congruence: return "congruence";
    case Check::enumeration: return "enumeration";
    case Check::dedekind_sums: return "dedekind_sums";
  }
  return "unknown";
}

SweepReport check_modulus(Check check, u64 n) {
  SweepReport report{check, n, 0, std::nullopt};
  try {
    switch (check) {
      case Check::counting: counting_at(n, report); break;
      case Check::congruence: congruence_at(n, report); break;
      case Check::enumeration: enumeration_at(n, report); break;
      case Check::dedekind_sums: dedekind_sums_at(n, report); break;
    }
  } catch (const std::exception& e) {
    report.first_mismatch = Mismatch{n, 0, 0, std::string("exception: ") + e.what()};
  }
  return report;
}

namespace serial {

SweepReport run(Check check, u64 n_max) {
  SweepReport out{check, n_max, 0, std::nullopt};
  for (u64 n = 1; n <= n_max; ++n) {
    const SweepReport r = check_modulus(check, n);
    out.checked += r.checked;
    if (!r.passed()) {
      out.first_mismatch = r.first_mismatch;
      break;
    }
  }
  return out;
}

}  // namespace serial

namespace parallel {

SweepReport run(Check check, u64 n_max) {
  std::vector<SweepReport> per_modulus(n_max);
  const auto count = static_cast<std::int64_t>(n_max);
  // Cost grows with n; hand out the large moduli first.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = count - 1; i >= 0; --i) {
    per_modulus[static_cast<std::size_t>(i)] = check_modulus(check, static_cast<u64>(i) + 1);
  }
  return merge(check, n_max, per_modulus);
}

}  // namespace parallel

}  // namespace dedekind::sweeps
