// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails. An optional argument names the CLI
// binary used for the grid determinism check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fatpoints/certifier.hpp"
#include "fatpoints/conjecture.hpp"
#include "fatpoints/grid.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/verify.hpp"

using namespace fatpoints;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct TheoremCell {
  std::int64_t n, m, alpha;
  friend auto operator<=>(const TheoremCell&, const TheoremCell&) = default;
};

// Every (s, x, k) of the theorem with s in [4, 7] and k in {0, 1}.
std::vector<TheoremCell> theorem_sweep() {
  std::vector<TheoremCell> cells;
  for (std::int64_t s = 4; s <= 7; ++s) {
    const bool even = s % 2 == 0;
    const auto hi = even ? s / 2 : (s + 1) / 2;
    const auto lo = even ? hi - l_index(s) : hi - l_index(2 * s);
    for (auto x = lo; x <= hi; ++x) {
      for (std::int64_t k = 0; k <= 1; ++k) {
        const auto m = x + k * (s - 1);
        cells.push_back({s * s, m, even ? m * s + s / 2 - 1 : m * s + (s - 1) / 2 - 1});
      }
    }
  }
  return cells;
}

// Oracle invariants collected from every report produced by criteria 2 and 3.
struct InvariantLog {
  std::int64_t calls = 0;
  bool monotone = true;
  bool above_bound = true;
  void add(const VerifyReport& r) {
    calls += r.oracle_calls;
    monotone = monotone && r.monotone;
    above_bound = above_bound && r.above_count_bound;
  }
};

Result criterion1() {
  Result res;
  const auto cells = theorem_sweep();
  for (const auto& c : cells) {
    const auto s = *exact_sqrt(c.n);
    const auto st = mainthm_parameters(c.n, c.m);
    if (!st.applicable || *st.predicted_alpha != c.alpha) {
      res.fail("theorem parameters n=" + std::to_string(c.n) + " m=" + std::to_string(c.m));
      continue;
    }
    const auto best = best_certified_t(c.n, c.m, s - 1, s * (s - 1));
    if (best != c.alpha - 1) {
      res.fail("best_certified_t n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) + " got " +
               std::to_string(best) + " want " + std::to_string(c.alpha - 1));
    }
    const auto bound = aprop_lower_bound(c.n, c.m, s * (s - 1), s - 1);
    if (bound != c.alpha) {
      res.fail("aprop n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) + " got " + std::to_string(bound));
    }
  }
  if (res.pass) res.detail = std::to_string(cells.size()) + " (s, x, k) cells";
  return res;
}

Result criterion2(InvariantLog& log) {
  Result res;
  int checked = 0;
  for (const std::int64_t n : {16, 25}) {
    for (std::int64_t m = 1; m <= 9; ++m) {
      if (!mainthm_parameters(n, m).applicable) continue;
      const auto rep = verify_conjectures(n, m, kDefaultPrime, 0, false);
      log.add(rep);
      ++checked;
      for (const auto& c : rep.hilbert) {
        if (c.oracle != c.conjectured) {
          res.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) + " t=" + std::to_string(c.t) +
                   " oracle " + std::to_string(c.oracle) + " vs " + std::to_string(c.conjectured));
        }
      }
    }
  }
  if (res.pass) res.detail = std::to_string(checked) + " (n, m) pairs x 3 degrees";
  return res;
}

Result criterion3(InvariantLog& log) {
  Result res;
  const std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> frozen{{1, {5, 0}}, {2, {7, 0}}};
  for (const std::int64_t m : {1, 2, 5}) {
    const auto betti = conjectured_resolution(16, m);
    const auto rep = verify_conjectures(16, m, kDefaultPrime, 0, true);
    log.add(rep);
    if (auto it = frozen.find(m); it != frozen.end() && it->second != std::pair{betti.a, betti.b}) {
      res.fail("conjectured (a, b) for m=" + std::to_string(m) + " drifted from frozen value");
    }
    if (rep.generators.size() != 2 || rep.generators[0].second != betti.a || rep.generators[1].second != betti.b) {
      res.fail("generator counts for m=" + std::to_string(m));
    }
  }
  return res;
}

Result criterion4() {
  Result res;
  const auto out = certify_alpha_exceeds(16, 2, 8, 3, 12);
  const std::vector<std::string> want{"(8, 2^16)", "(5, 2^4, 1^12)", "(2, 1^8, 0^8)", "(-1, 0^16)"};
  std::vector<std::string> got;
  for (const auto& s : out.trace.steps) got.push_back(s.to_string());
  if (got != want) res.fail("trace steps differ");
  if (out.omega != 3 || out.trace.omega_prime != std::optional<std::int64_t>{3}) res.fail("omega/omega'");
  if (out.mu != 8) res.fail("mu");
  if (out.condition2_lhs != 12 || 2 * out.mu != 16) res.fail("condition 2 values");
  if (!out.certified) res.fail("not certified");

  const auto bad = certify_alpha_exceeds(16, 2, 9, 3, 12);
  if (bad.certified || !bad.failing_condition ||
      bad.failing_condition->kind != FailingCondition::Kind::condition1 || bad.failing_condition->step != 0 ||
      bad.trace.intersections[0] != 3) {
    res.fail("t=9 should fail condition (1) at i=0 with D_0.C = 3");
  }
  return res;
}

Result criterion5(const InvariantLog& log) {
  Result res;
  std::mt19937_64 rng(5);
  auto uni = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };

  for (int iter = 0; iter < 500; ++iter) {
    const auto n = uni(1, 40), d = uni(1, 9), r = uni(1, n), t = uni(0, 300);
    std::vector<std::int64_t> ms(static_cast<std::size_t>(n));
    for (auto& v : ms) v = uni(0, 12);
    const auto tr = run_reduction(MultiplicityTuple::canonical(t, ms), ReductionCurve::make(n, d, r));
    if (tr.omega != t / d + 1) res.fail("omega formula");
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
      if (tr.steps[i].degree() != t - static_cast<std::int64_t>(i) * d) res.fail("degree recurrence");
    }
  }

  for (int iter = 0; iter < 100; ++iter) {
    const auto n = uni(1, 36), m = uni(1, 8), d = uni(1, 6), r = uni(1, n);
    const auto wp = uniform_omega_prime(n, m, r);
    const auto t = wp * d + uni(0, 10);
    const auto tr = run_reduction(MultiplicityTuple::uniform(t, n, m), ReductionCurve::make(n, d, r));
    for (std::int64_t i = 0; i < wp; ++i) {
      if (!(lemma_closed_form(t, m, n, d, r, i) == tr.steps[static_cast<std::size_t>(i)])) res.fail("closed form");
      const auto [lo, hi] = lemma_intersection_bounds(t, m, n, d, r, i);
      const Rational diff(tr.intersections[static_cast<std::size_t>(i)] - tr.intersections[0]);
      if (diff < lo || diff > hi) res.fail("intersection bounds");
    }
  }

  for (int iter = 0; iter < 50; ++iter) {
    const auto n = uni(10, 100), m = uni(1, 12);
    const auto b = conjectured_resolution(n, m);
    if (b.a < 1 || b.b < 0 || b.c < 0 || b.b * b.c != 0 || b.d_ != b.a + b.b - b.c - 1 || b.d_ < 0) {
      res.fail("Betti invariants n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
    for (auto t = b.alpha; t <= b.alpha + 5; ++t) {
      if (resolution_hilbert_check(b, t) != conjectured_hilbert(n, m, t)) res.fail("resolution vs hilbert");
    }
  }

  if (log.calls == 0) res.fail("no oracle calls recorded");
  if (!log.monotone) res.fail("oracle monotonicity");
  if (!log.above_bound) res.fail("oracle conditions-count bound");
  if (res.pass) res.detail = std::to_string(log.calls) + " oracle evaluations checked";
  return res;
}

Result criterion6() {
  Result res;
  const struct {
    std::int64_t n, m, alpha;
  } spots[] = {{16, 1, 5}, {25, 1, 6}, {16, 2, 9}};
  for (const auto& s : spots) {
    const auto got = alpha_oracle_with_reseeds(s.n, s.m, kDefaultPrime, 0, s.alpha);
    if (got != s.alpha) {
      res.fail("alpha_oracle(" + std::to_string(s.n) + "," + std::to_string(s.m) + ") = " + std::to_string(got));
    }
  }
  return res;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result criterion7(const char* cli) {
  Result res;
  std::string first, second;
  if (cli) {
    const auto dir = std::filesystem::temp_directory_path() / ("fatpoints_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    for (int run = 0; run < 2; ++run) {
      const auto out = dir / ("grid" + std::to_string(run) + ".csv");
      const auto cmd = std::string("\"") + cli + "\" grid --s 4..5 --m-max 9 --seed 7 --with-oracle --out \"" +
                       out.string() + "\"";
      if (std::system(cmd.c_str()) != 0) res.fail("grid command failed");
      (run == 0 ? first : second) = slurp(out);
    }
    std::filesystem::remove_all(dir);
  } else {
    first = grid_csv(build_grid({4, 5, 9, 7, true}));
    second = grid_csv(build_grid({4, 5, 9, 7, true}));
  }
  if (first.empty() || first != second) res.fail("CSV output differs between runs");

  std::set<TheoremCell> sweep;
  for (const auto& c : theorem_sweep()) {
    if (c.n <= 25 && c.m <= 9) sweep.insert(c);
  }
  std::set<TheoremCell> reported;
  std::istringstream in(first);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string n, m, status, predicted, oracle;
    std::getline(row, n, ',');
    std::getline(row, m, ',');
    std::getline(row, status, ',');
    std::getline(row, predicted, ',');
    std::getline(row, oracle, ',');
    if (status == "theorem_certified") reported.insert({std::stoll(n), std::stoll(m), std::stoll(predicted)});
    if (status == "oracle_mismatch") res.fail("oracle mismatch at n=" + n + " m=" + m);
  }
  // The sweep only uses k <= 1; every such cell must be reported, and every
  // reported cell must carry the sweep's alpha when it appears there.
  for (const auto& c : sweep) {
    if (!reported.contains(c)) res.fail("sweep cell n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) + " missing");
  }
  for (const auto& c : reported) {
    const auto st = mainthm_parameters(c.n, c.m);
    if (!st.applicable || *st.predicted_alpha != c.alpha) res.fail("reported theorem cell disagrees");
  }
  if (res.pass) res.detail = std::to_string(reported.size()) + " theorem cells";
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  InvariantLog log;
  bool all = true;

  auto run = [&](const char* name, const std::function<Result()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    const auto res = fn();
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.2fs)%s%s\n", res.pass ? "PASS" : "FAIL", name, secs, res.detail.empty() ? "" : ": ",
                res.detail.c_str());
    std::fflush(stdout);
    all = all && res.pass;
  };

  run("[1] theorem sweep s=4..7, k in {0,1}", criterion1);
  run("[2] hilbert oracle vs conjecture, n in {16,25}, m <= 9", [&] { return criterion2(log); });
  run("[3] generator counts vs (a, b), n=16, m in {1,2,5}", [&] { return criterion3(log); });
  run("[4] hand-traced reduction n=16 m=2 t=8 d=3 r=12", criterion4);
  run("[5] property suites", [&] { return criterion5(log); });
  run("[6] alpha oracle spot values", criterion6);
  run("[7] grid determinism and theorem cells", [&] { return criterion7(cli); });

  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
