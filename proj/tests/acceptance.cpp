// Acceptance gates for the verification engine.  Each criterion prints one
// [PASS]/[FAIL] line with its elapsed time; detail lines follow indented.
// Exit status is 0 only when every criterion holds.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mlv/combinatorics.hpp"
#include "mlv/exact.hpp"
#include "mlv/series.hpp"

using namespace mlv;

namespace {

int g_failures = 0;

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

struct Criterion {
  int number;
  std::string label;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::vector<std::string> notes;
  bool ok = true;

  Criterion(int num, std::string text) : number(num), label(std::move(text)) {}

  void require(bool cond, std::string what) {
    if (!cond) {
      ok = false;
      notes.push_back(std::move(what));
    }
  }

  void note(std::string what) { notes.push_back(std::move(what)); }

  void finish(double budget_seconds = 0.0) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0.0 && secs > budget_seconds)
      require(false, fmt("time budget exceeded: %.2fs > %.2fs", secs, budget_seconds));
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), secs);
    for (const std::string& n : notes) std::printf("        %s\n", n.c_str());
    if (!ok) ++g_failures;
    std::fflush(stdout);
  }
};

void require_all_exact(Criterion& c, const std::vector<IdentityCheckResult>& results,
                       const char* what) {
  c.require(!results.empty(), std::string(what) + ": empty result set");
  for (const IdentityCheckResult& r : results)
    if (!r.pass || !(r.lhs == r.rhs)) {
      std::string detail = std::string(what) + " failed:";
      for (const auto& [k, v] : r.params) detail += " " + k + "=" + v;
      detail += " lhs=" + r.lhs.str() + " rhs=" + r.rhs.str();
      c.require(false, detail);
      return;
    }
}

std::string run_cli(const std::string& args, int& exit_code) {
  const std::string cmd = std::string(MLV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    exit_code = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  exit_code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return out;
}

void criterion_1() {
  Criterion c{1, "fixed-m identity exact over the full box (n<=5, k-n<=6, m<=30)"};
  const auto results = run_fixed_m_suite(1, 5, 1, 6, 1, 30);
  require_all_exact(c, results, "fixed_m");
  c.require(results.size() == 900u,
            "expected 900 parameter points, got " + std::to_string(results.size()));
  c.finish(60.0);
}

void criterion_2() {
  Criterion c{2, "inclusion-exclusion closed form and chain partition facts (n<=6, m<=30)"};
  const auto results = run_inclusion_exclusion_suite(6, 30);
  require_all_exact(c, results, "inclusion_exclusion");
  bool saw_partitions = false;
  for (const IdentityCheckResult& r : results)
    for (const auto& [key, value] : r.params)
      if (key == "partitions") {
        saw_partitions = true;
        c.require(value == "ok", "partition facts violated at " + r.identity);
      }
  c.require(saw_partitions, "partition facts were not exercised");
  c.finish(30.0);
}

void criterion_3() {
  Criterion c{3, "random exact suites: shuffles, partial fractions, telescoping, block sums"};
  require_all_exact(c, run_shuffle_suite(7, 100, 20260818u), "shuffle");
  require_all_exact(c, run_partial_fraction_suite(20, 100, 20260819u), "partial_fraction");
  require_all_exact(c, run_telescoping_suite(5, 4, 6, 3, 20260820u), "telescoping");
  require_all_exact(c, run_block_sum_suite(5, 4, 6, 3, 20260821u), "block_sum");
  c.finish(60.0);
}

void criterion_4() {
  Criterion c{4, "fixed-m series: residuals decrease along 500/1000/2000/4000, <=2e-3 at 4000"};
  for (int k : {3, 4, 5})
    for (int m = 1; m <= 5; ++m) {
      double prev = std::numeric_limits<double>::infinity();
      double last = 0.0;
      for (long cap : {500L, 1000L, 2000L, 4000L}) {
        const NumericCheckResult r = check_fixed_m(2, k, m, TruncationSpec{cap}, 2e-3);
        c.require(r.residual < prev,
                  "residual not strictly decreasing at k=" + std::to_string(k) +
                      " m=" + std::to_string(m) + " cap=" + std::to_string(cap));
        prev = r.residual;
        last = r.residual;
      }
      c.require(last <= 2e-3, "raw residual above 2e-3 at cap 4000: k=" +
                                  std::to_string(k) + " m=" + std::to_string(m) +
                                  fmt(" residual=%.3e", last));
    }
  c.finish(120.0);
}

void criterion_5() {
  Criterion c{5, "sum formula vs single zeta at cap 5000 (raw residuals below)"};
  for (int n : {2, 3})
    for (int k = n + 1; k <= 7; ++k) {
      std::complex<double> lhs{0.0, 0.0};
      double allowance = 0.0;
      for (const Index& kvec : enumerate_index_set(k, n, 1)) {
        lhs += eval_multiple_zeta(kvec, TruncationSpec{5000}).value;
        allowance += tail_estimate(kvec, 0.0, 5000);
      }
      const NumericResult z = eval_zeta(k, TruncationSpec{5000});
      allowance += z.tail;
      const double raw = std::abs(lhs - z.value);
      c.note("n=" + std::to_string(n) + " k=" + std::to_string(k) +
             fmt(": raw residual %.3e (tail allowance %.3e)", raw, allowance));
      c.require(raw <= 2e-3 + allowance,
                "residual exceeds 2e-3 plus the tail allowance at n=" +
                    std::to_string(n) + " k=" + std::to_string(k));
    }
  c.finish();
}

void criterion_6() {
  Criterion c{6, "power-weight identity across the unit disk at cap 4000; t=1 vanishes"};
  const std::vector<std::pair<int, int>> shapes = {{2, 3}, {2, 4}, {3, 5}};
  const std::vector<std::complex<double>> ts = {
      {0.5, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}, {1.0, 0.0}};
  const std::complex<double> zero{0.0, 0.0};
  for (const auto& [n, k] : shapes) {
    for (const std::complex<double>& t : ts) {
      const NumericCheckResult r = check_power_weight(n, k, t, TruncationSpec{4000}, 2e-3);
      c.require(r.pass, "power weight failed at n=" + std::to_string(n) +
                            " k=" + std::to_string(k) +
                            fmt(" t=(%g,%g)", t.real(), t.imag()));
      if (t == std::complex<double>{1.0, 0.0})
        c.require(r.lhs == zero && r.rhs == zero && r.residual == 0.0,
                  "t=1 must vanish identically at cap 4000, n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
    }
    // second cap: exact vanishing must not depend on the truncation point
    const NumericCheckResult r100 =
        check_power_weight(n, k, {1.0, 0.0}, TruncationSpec{100}, 2e-3);
    c.require(r100.lhs == zero && r100.rhs == zero && r100.residual == 0.0,
              "t=1 must vanish identically at cap 100, n=" + std::to_string(n) +
                  " k=" + std::to_string(k));
  }
  c.finish();
}

void criterion_7() {
  Criterion c{7, "numerator alternating-sum identity over random rational points"};
  require_all_exact(c, run_numerator_suite(6, 100, 20260822u), "numerator");
  c.finish();
}

void criterion_8() {
  Criterion c{8, "CLI reports byte-identical across repeats and worker counts"};
  const std::string suite_cmd =
      "verify exact --suite shuffle --max-blocks 5 --samples 20 --seed 7 "
      "--format json";
  int ec1 = -1, ec2 = -1, ec3 = -1;
  const std::string a = run_cli(suite_cmd + " --jobs 1", ec1);
  const std::string b = run_cli(suite_cmd + " --jobs 1", ec2);
  const std::string d = run_cli(suite_cmd + " --jobs 3", ec3);
  c.require(ec1 == 0 && ec2 == 0 && ec3 == 0,
            "suite runs exited nonzero: " + std::to_string(ec1) + " " +
                std::to_string(ec2) + " " + std::to_string(ec3));
  c.require(!a.empty(), "suite run produced no output");
  c.require(a == b, "repeated suite run produced different bytes");
  c.require(a == d, "suite output depends on --jobs");

  const std::string numeric_cmd =
      "verify numeric --thm 2 --n 2 --k 4 --m 2 --cap 1500 --format json";
  int ne1 = -1, ne2 = -1;
  const std::string x = run_cli(numeric_cmd, ne1);
  const std::string y = run_cli(numeric_cmd, ne2);
  c.require(ne1 == 0 && ne2 == 0, "numeric runs exited nonzero");
  c.require(!x.empty() && x == y, "repeated numeric run produced different bytes");

  const std::string enum_cmd = "enum indices --k 7 --n 3 --format csv";
  int ee1 = -1, ee2 = -1;
  const std::string u = run_cli(enum_cmd, ee1);
  const std::string v = run_cli(enum_cmd, ee2);
  c.require(ee1 == 0 && ee2 == 0, "enum runs exited nonzero");
  c.require(!u.empty() && u == v, "repeated enum run produced different bytes");
  c.finish();
}

}  // namespace

int main() {
  std::printf("acceptance gates: multiple L-value verification engine\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures > 0) {
    std::printf("%d criterion%s failed\n", g_failures, g_failures == 1 ? "" : "s");
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
