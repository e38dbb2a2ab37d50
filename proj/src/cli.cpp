#include "dedekind/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dedekind/counting.hpp"
#include "dedekind/dedekind_sum.hpp"
#include "dedekind/enumeration.hpp"
#include "dedekind/errors.hpp"
#include "dedekind/scan.hpp"
#include "dedekind/sweeps.hpp"

namespace dedekind::cli {
namespace {

using nlohmann::ordered_json;

// Largest modulus for the exhaustive congruence-vs-sums sweep; its cost grows like
// sum phi(n)^2 log n.
constexpr std::uint64_t kCongruenceCap = 300;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool oracle = false;
  bool with_sums = false;
  std::string m;
  std::string n;
};

Integer parse_arg(const std::string& text, const char* name) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(name) + " must be an integer, got '" + text + "'");
  }
}

Integer parse_modulus(const std::string& text) {
  Integer n = parse_arg(text, "n");
  if (n < 1) throw UsageError("n must be positive, got " + text);
  return n;
}

std::pair<Integer, Integer> parse_unit_pair(const Options& o) {
  Integer m = parse_arg(o.m, "m");
  Integer n = parse_modulus(o.n);
  if (Integer g = gcd(m, n); g != 1) {
    throw UsageError("m and n must be coprime; gcd(" + o.m + ", " + o.n + ") = " + to_string(g));
  }
  return {std::move(m), std::move(n)};
}

class Emitter {
 public:
  Emitter(std::ostream& os, bool json) : os_(os), json_(json) {}

  bool json() const { return json_; }
  void text(const std::string& line) { os_ << line << '\n'; }
  void record(const ordered_json& obj) { os_ << obj.dump() << '\n'; }

 private:
  std::ostream& os_;
  bool json_;
};

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

std::string join_members(const std::vector<Integer>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(xs[i]);
  }
  return out + "]";
}

int cmd_sum(const Options& o, Emitter& e) {
  const auto start = std::chrono::steady_clock::now();
  auto [m, n] = parse_unit_pair(o);
  const DedekindValue v = dedekind_value(m, n);
  if (e.json()) {
    e.record({{"command", "sum"}, {"m", to_string(m)}, {"n", to_string(n)},
              {"s", v.s.to_string()}, {"S", v.S.to_string()}, {"q", v.q.to_string()},
              {"time_ms", elapsed_ms(start)}});
  } else {
    e.text("s=" + v.s.to_string());
    e.text("S=" + v.S.to_string());
    e.text("q=" + v.q.to_string());
  }
  return kExitOk;
}

int cmd_count(const Options& o, Emitter& e) {
  const auto start = std::chrono::steady_clock::now();
  auto [m, n] = parse_unit_pair(o);
  Integer total;
  if (o.oracle) {
    total = count_solutions_bruteforce(m, n);
  } else {
    const CountBreakdown b = count_solutions(m, n);
    for (const LocalCount& local : b.locals) {
      const std::string label = to_string(local.factor.p) + "^" + std::to_string(local.factor.k);
      if (e.json()) {
        e.record({{"command", "count"}, {"m", to_string(m)}, {"n", to_string(n)},
                  {"p", to_string(local.factor.p)}, {"k", std::to_string(local.factor.k)},
                  {"local", to_string(local.count)}});
      } else {
        e.text(label + ": " + to_string(local.count));
      }
    }
    total = b.total;
  }
  if (e.json()) {
    e.record({{"command", "count"}, {"m", to_string(m)}, {"n", to_string(n)},
              {"method", o.oracle ? "scan" : "closed_form"}, {"total", to_string(total)},
              {"time_ms", elapsed_ms(start)}});
  } else {
    e.text("total: " + to_string(total));
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, Emitter& e) {
  const auto start = std::chrono::steady_clock::now();
  auto [m, n] = parse_unit_pair(o);
  const ResidueSet set = enumerate_solutions(m, n);
  for (const Integer& x : set.members) {
    if (e.json()) {
      ordered_json rec{{"command", "enumerate"}, {"m", to_string(m)}, {"n", to_string(n)},
                       {"x", to_string(x)}};
      if (o.with_sums) rec["S"] = dedekind_value(x, n).S.to_string();
      e.record(rec);
    } else if (o.with_sums) {
      e.text(to_string(x) + " " + dedekind_value(x, n).S.to_string());
    } else {
      e.text(to_string(x));
    }
  }
  if (e.json()) {
    e.record({{"command", "enumerate"}, {"m", to_string(m)}, {"n", to_string(n)},
              {"size", std::to_string(set.size())}, {"time_ms", elapsed_ms(start)}});
  }
  return kExitOk;
}

int cmd_classes(const Options& o, Emitter& e) {
  const auto start = std::chrono::steady_clock::now();
  const Integer n = parse_modulus(o.n);
  if (n > scan::kNativeLimit) throw UsageError("n is too large to partition: " + o.n);
  const ClassPartition partition = fractional_classes(n);
  for (const FractionalClass& c : partition.classes) {
    if (e.json()) {
      ordered_json members = ordered_json::array();
      for (const Integer& x : c.members.members) members.push_back(to_string(x));
      e.record({{"command", "classes"}, {"n", to_string(n)}, {"q", c.q.to_string()},
                {"size", std::to_string(c.members.size())}, {"members", members}});
    } else {
      e.text("q=" + c.q.to_string() + " size=" + std::to_string(c.members.size()) +
             " members=" + join_members(c.members.members));
    }
  }
  if (e.json()) {
    e.record({{"command", "classes"}, {"n", to_string(n)},
              {"classes", std::to_string(partition.classes.size())},
              {"time_ms", elapsed_ms(start)}});
  }
  return kExitOk;
}

int cmd_verify(const Options& o, Emitter& e) {
  const auto start = std::chrono::steady_clock::now();
  const Integer bound = parse_arg(o.n, "n_max");
  if (bound < 0 || bound > scan::kNativeLimit) {
    throw UsageError("n_max must lie in [0, 2^32], got " + o.n);
  }
  const auto n_max = static_cast<std::uint64_t>(bound);
  const sweeps::SweepReport reports[] = {
      sweeps::parallel::run(sweeps::Check::counting, n_max),
      sweeps::parallel::run(sweeps::Check::congruence, std::min(n_max, kCongruenceCap)),
  };

  bool passed = true;
  for (const sweeps::SweepReport& r : reports) {
    passed = passed && r.passed();
    const std::string status = r.passed() ? "PASS" : "FAIL";
    if (e.json()) {
      ordered_json rec{{"command", "verify"}, {"check", std::string(sweeps::to_string(r.check))},
                       {"n_max", std::to_string(r.n_max)}, {"checked", std::to_string(r.checked)},
                       {"status", r.passed() ? "pass" : "fail"}};
      if (const auto& mm = r.first_mismatch) {
        rec["counterexample"] = {{"n", std::to_string(mm->n)}, {"m", std::to_string(mm->m)},
                                 {"x", std::to_string(mm->x)}, {"detail", mm->detail}};
      }
      e.record(rec);
    } else {
      std::string line = std::string(sweeps::to_string(r.check)) + " n<=" +
                         std::to_string(r.n_max) + ": " + status + " (checked " +
                         std::to_string(r.checked) + ")";
      if (const auto& mm = r.first_mismatch) {
        line += " counterexample n=" + std::to_string(mm->n) + " m=" + std::to_string(mm->m);
        if (mm->x != 0) line += " x=" + std::to_string(mm->x);
        line += ": " + mm->detail;
      }
      e.text(line);
    }
  }

  const std::string pairs = std::to_string(reports[1].checked);
  const std::string counts = std::to_string(reports[0].checked);
  if (e.json()) {
    e.record({{"command", "verify"}, {"status", passed ? "pass" : "fail"}, {"pairs", pairs},
              {"counts", counts}, {"time_ms", elapsed_ms(start)}});
  } else {
    e.text(std::string(passed ? "PASS" : "FAIL") + " pairs=" + pairs + " counts=" + counts);
  }
  return passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dedekind sums and their fractional-part classes", "dedekind"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "One JSON object per output line");

  auto* sum = app.add_subcommand("sum", "s(m,n), S(m,n) = 12 s(m,n) and its fractional part q");
  sum->add_option("m", o.m)->required();
  sum->add_option("n", o.n)->required();

  auto* count = app.add_subcommand("count", "L(m,n) with its prime-power breakdown");
  count->add_flag("--oracle", o.oracle, "Count by scanning x = 1..n instead");
  count->add_option("m", o.m)->required();
  count->add_option("n", o.n)->required();

  auto* enumerate = app.add_subcommand("enumerate", "All x with S(x,n) = S(m,n) mod 1");
  enumerate->add_flag("--with-sums", o.with_sums, "Append S(x,n) to each member");
  enumerate->add_option("m", o.m)->required();
  enumerate->add_option("n", o.n)->required();

  auto* classes = app.add_subcommand("classes", "Partition the units mod n by fractional part");
  classes->add_option("n", o.n)->required();

  auto* verify = app.add_subcommand("verify", "Count oracle and congruence-vs-sums sweeps up to n_max");
  verify->add_option("n_max", o.n)->required();

  for (auto* sub : {sum, count, enumerate, classes, verify}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::ostringstream buffer;
  Emitter emitter(buffer, o.json);
  int code = kExitOk;
  try {
    if (sum->parsed()) code = cmd_sum(o, emitter);
    else if (count->parsed()) code = cmd_count(o, emitter);
    else if (enumerate->parsed()) code = cmd_enumerate(o, emitter);
    else if (classes->parsed()) code = cmd_classes(o, emitter);
    else code = cmd_verify(o, emitter);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  out << buffer.str();
  return code;
}

}  // namespace dedekind::cli
