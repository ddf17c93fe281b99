// mlv: command-line verifier for the nested-series identities implemented by
// the core library.
//
//   verify exact   — rational-arithmetic identity suites over parameter boxes
//   verify numeric — truncated-series comparisons with heuristic tail labels
//   enum           — listings of the combinatorial families with count checks
//
// Reports are deterministic: a fixed seed reproduces every sampled input, and
// the rendered bytes do not depend on the worker count.  Runtime knobs
// (--jobs, --out, --deadline-seconds) are therefore excluded from the command
// echo inside the report.
//
// Exit codes: 0 all checks pass, 1 any check failed, 2 usage error,
// 3 deadline exceeded.

#include <atomic>
#include <cctype>
#include <chrono>
#include <complex>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "mlv/combinatorics.hpp"
#include "mlv/exact.hpp"
#include "mlv/format.hpp"
#include "mlv/prng.hpp"
#include "mlv/rational.hpp"
#include "mlv/report.hpp"
#include "mlv/series.hpp"
#include "mlv/version.hpp"

namespace {

using namespace mlv;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DeadlineExceeded {};

class Deadline {
 public:
  void arm(double seconds) {
    if (seconds > 0) {
      enabled_ = true;
      end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds));
    }
  }
  bool expired() const { return enabled_ && std::chrono::steady_clock::now() >= end_; }

 private:
  bool enabled_ = false;
  std::chrono::steady_clock::time_point end_{};
};

// --- small parsers ---

long to_long(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer, got '" + s + "'");
  }
}

struct Range {
  long lo = 0;
  long hi = 0;
  long count() const { return hi - lo + 1; }
};

// "a..b" or a single "a".
Range parse_range(const std::string& s, const std::string& flag) {
  const auto pos = s.find("..");
  Range r;
  if (pos == std::string::npos) {
    r.lo = r.hi = to_long(s, flag);
  } else {
    r.lo = to_long(s.substr(0, pos), flag);
    r.hi = to_long(s.substr(pos + 2), flag);
  }
  if (r.lo > r.hi) throw UsageError(flag + ": empty range '" + s + "'");
  return r;
}

Range range_or(const std::string& given, Range fallback, const std::string& flag) {
  return given.empty() ? fallback : parse_range(given, flag);
}

std::string range_str(Range r) {
  return r.lo == r.hi ? std::to_string(r.lo)
                      : std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

double to_double_checked(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": expected a number, got '" + s + "'");
  }
}

// Accepts "0.5", "-1", "i", "-i", "0.6i", "a+bi", "a-bi" (whitespace ignored).
std::complex<double> parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw UsageError("--t: empty complex literal");
  if (s.back() != 'i' && s.back() != 'I') return {to_double_checked(s, "--t"), 0.0};
  s.pop_back();
  // Split real and imaginary at the last sign that is not an exponent sign.
  int split = -1;
  for (int i = static_cast<int>(s.size()) - 1; i > 0; --i) {
    const char c = s[static_cast<std::size_t>(i)];
    const char prev = s[static_cast<std::size_t>(i - 1)];
    if ((c == '+' || c == '-') && prev != 'e' && prev != 'E') {
      split = i;
      break;
    }
  }
  auto imag_of = [](const std::string& t) -> double {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return to_double_checked(t, "--t");
  };
  if (split < 0) return {0.0, imag_of(s)};
  return {to_double_checked(s.substr(0, static_cast<std::size_t>(split)), "--t"),
          imag_of(s.substr(static_cast<std::size_t>(split)))};
}

// Periodic weight file: first line P, then P lines "re im".
WeightFunction load_periodic(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--f periodic: cannot open '" + path + "'");
  long period = 0;
  if (!(in >> period) || period < 1)
    throw UsageError("--f periodic: first line of '" + path + "' must be a period >= 1");
  std::vector<std::complex<double>> values;
  values.reserve(static_cast<std::size_t>(period));
  for (long i = 0; i < period; ++i) {
    double re = 0, im = 0;
    if (!(in >> re >> im))
      throw UsageError("--f periodic: '" + path + "' must list " + std::to_string(period) +
                       " lines of 're im' pairs");
    values.emplace_back(re, im);
  }
  return WeightFunction::periodic(std::move(values));
}

WeightFunction make_weight(const std::string& fspec, const std::string& tstr) {
  if (fspec == "one") return WeightFunction::one();
  if (fspec == "power") return WeightFunction::power(parse_complex(tstr));
  const std::string prefix = "periodic:";
  if (fspec.rfind(prefix, 0) == 0) return load_periodic(fspec.substr(prefix.size()));
  throw UsageError("--f: expected one, power, or periodic:FILE; got '" + fspec + "'");
}

// --- deterministic point pool ---
//
// A command expands to an ordered list of parameter points; each point
// produces its report entries independently (seeded only by the point's own
// fixed index), so any worker count yields the same merged report.

using PointFn = std::function<std::vector<ReportEntry>()>;

std::vector<ReportEntry> run_points(const std::vector<PointFn>& points, int jobs,
                                    const Deadline& dl) {
  std::vector<std::vector<ReportEntry>> slots(points.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> timed_out{false};
  auto worker = [&]() {
    for (;;) {
      if (dl.expired()) {
        timed_out.store(true);
        return;
      }
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      slots[i] = points[i]();
    }
  };
  const int workers =
      std::min<long>(std::max(jobs, 1), std::max<long>(static_cast<long>(points.size()), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w]() {
        try {
          worker();
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
          next.store(points.size());  // stop the other workers promptly
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  if (timed_out.load()) throw DeadlineExceeded{};
  std::vector<ReportEntry> out;
  for (auto& s : slots)
    for (auto& e : s) out.push_back(std::move(e));
  return out;
}

// --- samplers (mirror the library suite drivers) ---

Rational rand_nonzero_rational(SplitMix64& g, long max_abs_num, long max_den) {
  long num = 0;
  while (num == 0) num = g.uniform(-max_abs_num, max_abs_num);
  return Rational(num, g.uniform(1, max_den));
}

Rational rand_positive_rational(SplitMix64& g, long max_num, long max_den) {
  const long num = g.uniform(1, max_num);
  return Rational(num, g.uniform(1, max_den));
}

void tag_sample(IdentityCheckResult& r, int sample, std::uint64_t seed) {
  r.params.emplace_back("sample", std::to_string(sample));
  r.params.emplace_back("seed", std::to_string(seed));
}

// --- exact suites ---

struct ExactBox {
  Range n, kx, m, K, r, l;
  int samples = 0;
  int max_blocks = 0;
  int cap = 0;  // sigma cross-check truncation
};

void add_pf_points(std::vector<PointFn>& pts, const ExactBox& box, std::uint64_t seed) {
  for (long K = box.K.lo; K <= box.K.hi; ++K) {
    if (K < 1) throw UsageError("--K: exponents must be >= 1");
    pts.push_back([K, samples = box.samples, seed]() {
      SplitMix64 g(derive_seed(seed, static_cast<std::uint64_t>(K)));
      std::vector<ReportEntry> out;
      for (int s = 0; s < samples; ++s) {
        const Rational x = rand_nonzero_rational(g, 9, 9);
        Rational y = rand_nonzero_rational(g, 9, 9);
        while ((x + y).is_zero()) y = rand_nonzero_rational(g, 9, 9);
        IdentityCheckResult r = check_partial_fraction(x, y, static_cast<int>(K));
        tag_sample(r, s, seed);
        out.push_back(ReportEntry::from(r));
      }
      return out;
    });
  }
}

void add_shuffle_points(std::vector<PointFn>& pts, const ExactBox& box, std::uint64_t seed) {
  std::uint64_t shape = 0;
  for (int s = 0; s <= box.max_blocks; ++s)
    for (int t = 0; s + t <= box.max_blocks; ++t) {
      const std::uint64_t idx = shape++;
      pts.push_back([s, t, idx, samples = box.samples, seed]() {
        SplitMix64 g(derive_seed(seed, idx));
        std::vector<ReportEntry> out;
        for (int i = 0; i < samples; ++i) {
          std::vector<Rational> xs, ys;
          for (int j = 0; j < s; ++j) xs.push_back(rand_positive_rational(g, 9, 9));
          for (int j = 0; j < t; ++j) ys.push_back(rand_positive_rational(g, 9, 9));
          IdentityCheckResult r = check_shuffle_identity(xs, ys);
          tag_sample(r, i, seed);
          out.push_back(ReportEntry::from(r));
        }
        return out;
      });
    }
}

void add_telescope_points(std::vector<PointFn>& pts, const ExactBox& box, std::uint64_t seed) {
  std::uint64_t point = 0;
  for (long n = std::max(box.n.lo, 2L); n <= box.n.hi; ++n)
    for (long l = 1; l <= n - 1; ++l)
      for (long t = l; t <= n - 1; ++t)
        for (long kx = box.kx.lo; kx <= box.kx.hi; ++kx) {
          const std::uint64_t idx = point++;
          pts.push_back([n, l, t, kx, idx, m = box.m, samples = box.samples, seed]() {
            SplitMix64 g(derive_seed(seed, idx));
            std::vector<ReportEntry> out;
            for (int i = 0; i < samples; ++i) {
              const int mv = static_cast<int>(g.uniform(m.lo, m.hi));
              std::vector<int> entries(static_cast<std::size_t>(n - l));
              for (int& e : entries) e = static_cast<int>(g.uniform(1, 8));
              IdentityCheckResult r =
                  check_telescoping(static_cast<int>(l), static_cast<int>(t),
                                    PVector(entries, static_cast<int>(l)),
                                    static_cast<int>(n + kx), static_cast<int>(n), mv);
              tag_sample(r, i, seed);
              out.push_back(ReportEntry::from(r));
            }
            return out;
          });
        }
}

void add_blocksum_points(std::vector<PointFn>& pts, const ExactBox& box, std::uint64_t seed) {
  std::uint64_t point = 0;
  for (long n = std::max(box.n.lo, 1L); n <= box.n.hi; ++n)
    for (long l = 1; l <= n; ++l)
      for (long kx = box.kx.lo; kx <= box.kx.hi; ++kx) {
        const std::uint64_t idx = point++;
        pts.push_back([n, l, kx, idx, m = box.m, samples = box.samples, seed]() {
          SplitMix64 g(derive_seed(seed, idx));
          std::vector<ReportEntry> out;
          for (int i = 0; i < samples; ++i) {
            const int mv = static_cast<int>(g.uniform(m.lo, m.hi));
            std::vector<int> entries(static_cast<std::size_t>(n - l));
            for (int& e : entries) e = static_cast<int>(g.uniform(1, 8));
            IdentityCheckResult r =
                check_block_sum(static_cast<int>(l), PVector(entries, static_cast<int>(l)),
                                static_cast<int>(n + kx), static_cast<int>(n), mv);
            tag_sample(r, i, seed);
            out.push_back(ReportEntry::from(r));
          }
          return out;
        });
      }
}

void add_fixed_m_points(std::vector<PointFn>& pts, const ExactBox& box) {
  for (long n = box.n.lo; n <= box.n.hi; ++n)
    for (long m = box.m.lo; m <= box.m.hi; ++m)
      pts.push_back([n, m, kx = box.kx]() {
        // One point per (n, m) so the k sweep reuses the hoisted chain sums.
        std::vector<ReportEntry> out;
        for (IdentityCheckResult& r :
             run_fixed_m_suite(static_cast<int>(n), static_cast<int>(n),
                               static_cast<int>(kx.lo), static_cast<int>(kx.hi),
                               static_cast<int>(m), static_cast<int>(m)))
          out.push_back(ReportEntry::from(r));
        return out;
      });
}

void add_inclexcl_points(std::vector<PointFn>& pts, const ExactBox& box) {
  for (long n = box.n.lo; n <= box.n.hi; ++n)
    for (long m = box.m.lo; m <= box.m.hi; ++m)
      pts.push_back([n, m]() {
        return std::vector<ReportEntry>{ReportEntry::from(
            check_inclusion_exclusion(static_cast<int>(n), static_cast<int>(m)))};
      });
}

void add_numerator_points(std::vector<PointFn>& pts, const ExactBox& box, std::uint64_t seed) {
  for (long r = box.r.lo; r <= box.r.hi; ++r) {
    if (r < 1) throw UsageError("--r: block counts must be >= 1");
    pts.push_back([r, samples = box.samples, seed]() {
      SplitMix64 g(derive_seed(seed, static_cast<std::uint64_t>(r)));
      std::vector<ReportEntry> out;
      for (int i = 0; i < samples; ++i) {
        std::vector<int> ms(static_cast<std::size_t>(r));
        for (int& v : ms) v = static_cast<int>(g.uniform(1, 10));
        const Rational t(g.uniform(-4, 4), g.uniform(1, 4));
        IdentityCheckResult res = check_numerator_identity(t, ms, static_cast<int>(r));
        tag_sample(res, i, seed);
        out.push_back(ReportEntry::from(res));
      }
      return out;
    });
  }
}

void add_prefix_points(std::vector<PointFn>& pts, const ExactBox& box) {
  for (long l = box.l.lo; l <= box.l.hi; ++l)
    for (long m = box.m.lo; m <= box.m.hi; ++m)
      pts.push_back([l, m]() {
        return std::vector<ReportEntry>{ReportEntry::from(
            check_prefix_weight_forms(static_cast<int>(l), static_cast<int>(m)))};
      });
}

void add_sigma_points(std::vector<PointFn>& pts, const ExactBox& box) {
  for (long n = box.n.lo; n <= box.n.hi; ++n)
    for (long kx = box.kx.lo; kx <= box.kx.hi; ++kx)
      for (long m = box.m.lo; m <= box.m.hi; ++m)
        pts.push_back([n, k = n + kx, m, cap = box.cap]() {
          std::vector<ReportEntry> out;
          for (const SubsetJ& J : enumerate_nonempty_subsets(static_cast<int>(n))) {
            // The constraint sum_{j in J} m_j = m is infeasible for m < |J|;
            // both parameterizations are empty sums there.
            if (m < J.cardinality()) continue;
            out.push_back(ReportEntry::from(check_sigma_parameterization(
                static_cast<int>(k), static_cast<int>(n), static_cast<int>(m), J, cap)));
          }
          return out;
        });
}

// --- numeric commands ---

// Default k sweep for a given depth when --k is not supplied.
Range default_k_range(long n) { return Range{n + 1, n + 3}; }

void require_convergent(long n, long k) {
  if (k < n + 1)
    throw UsageError("divergent parameters: depth n=" + std::to_string(n) +
                     " needs weight k >= " + std::to_string(n + 1) + " (got k=" +
                     std::to_string(k) + "); every series here converges only for k > n");
}

// --- enum helpers ---

std::string fmt_tuple(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += ")";
  return s;
}

std::string fmt_set(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += "}";
  return s;
}

constexpr std::uint64_t kMaxListing = 5'000'000;

void require_listable(std::uint64_t expected) {
  if (expected > kMaxListing)
    throw UsageError("listing would contain " + std::to_string(expected) +
                     " items (limit " + std::to_string(kMaxListing) +
                     "); narrow the parameters");
}

ReportEntry enum_entry(std::string name,
                       std::vector<std::pair<std::string, std::string>> params,
                       std::vector<std::string> items, std::uint64_t expected) {
  ReportEntry e;
  e.name = std::move(name);
  e.mode = "enum";
  e.params = std::move(params);
  e.lhs = std::to_string(items.size());
  e.rhs = std::to_string(expected);
  e.residual = 0.0;
  e.tail = 0.0;
  e.pass = (items.size() == expected);
  e.items = std::move(items);
  return e;
}

// --- command echo ---
//
// argv[0] is normalized and runtime knobs are dropped so that the same
// verification task always echoes the same command string.

std::string echo_command(int argc, char** argv) {
  static const char* hidden[] = {"--jobs", "--out", "--deadline-seconds"};
  std::string out = "mlv";
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    bool skip = false;
    for (const char* h : hidden) {
      if (a == h) {
        skip = true;
        if (i + 1 < argc) ++i;  // drop the flag's value as well
        break;
      }
      if (a.rfind(std::string(h) + "=", 0) == 0) {
        skip = true;
        break;
      }
    }
    if (!skip) {
      out += ' ';
      out += a;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numeric verifier for nested-series identities"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // Common options; subcommands fall through to them.
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 0;
  int jobs = 1;
  double deadline_s = 0.0;
  app.add_option("--format", format, "report format: text, json, or csv")
      ->default_str("text");
  app.add_option("--out", out_path, "write the report to FILE instead of stdout");
  app.add_option("--seed", seed, "seed for the sampled suites")->default_str("0");
  app.add_option("--jobs", jobs, "worker threads for independent parameter points")
      ->check(CLI::PositiveNumber)
      ->default_str("1");
  app.add_option("--deadline-seconds", deadline_s,
                 "abort with exit code 3 once the run exceeds this many seconds");

  // verify exact
  auto* verify = app.add_subcommand("verify", "run identity checks and report pass/fail");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* vex = verify->add_subcommand("exact", "exact rational-arithmetic identity suites");
  vex->fallthrough();
  std::string suite;
  vex->add_option("--suite", suite,
                  "thm2 | shuffle | pf | telescope | blocksum | inclexcl | numerator | "
                  "prefix | sigma | all")
      ->required()
      ->check(CLI::IsMember({"thm2", "shuffle", "pf", "telescope", "blocksum", "inclexcl",
                             "numerator", "prefix", "sigma", "all"}));
  std::string ex_n, ex_kx, ex_m, ex_K, ex_r, ex_l;
  int ex_samples = -1, ex_max_blocks = -1, ex_cap = -1;
  vex->add_option("--n", ex_n, "depth range, e.g. 2..5");
  vex->add_option("--k-extra", ex_kx, "weight-minus-depth range, e.g. 1..6");
  vex->add_option("--m", ex_m, "weight-argument range, e.g. 1..30");
  vex->add_option("--K", ex_K, "partial-fraction exponent range, e.g. 1..20");
  vex->add_option("--r", ex_r, "numerator block-count range, e.g. 1..6");
  vex->add_option("--l", ex_l, "prefix-weight order range, e.g. 1..6");
  vex->add_option("--samples", ex_samples, "random samples per parameter point");
  vex->add_option("--max-blocks", ex_max_blocks, "largest total block size for shuffles");
  vex->add_option("--cap", ex_cap, "free-coordinate cap for the sigma cross-check");

  // verify numeric
  auto* vnum =
      verify->add_subcommand("numeric", "truncated-series checks with tail estimates");
  vnum->fallthrough();
  int thm = 0;
  vnum->add_option("--thm", thm, "theorem family: 1 (weighted sum), 2 (fixed m), 3 (power)")
      ->required()
      ->check(CLI::Range(1, 3));
  std::string nu_n, nu_k, nu_m;
  long nu_cap = 1000;
  double nu_tol = 1e-3;
  std::string nu_f = "one", nu_t = "0.5";
  vnum->add_option("--n", nu_n, "depth range");
  vnum->add_option("--k", nu_k, "weight range (default n+1..n+3 per depth)");
  vnum->add_option("--m", nu_m, "fixed weight-argument range (thm 2 only)");
  vnum->add_option("--cap", nu_cap, "truncation cap on the cumulative index")
      ->check(CLI::PositiveNumber)
      ->default_str("1000");
  vnum->add_option("--tol", nu_tol, "base tolerance added to the tail estimate")
      ->check(CLI::PositiveNumber)
      ->default_str("0.001");
  vnum->add_option("--f", nu_f, "weight function: one | power | periodic:FILE (thm 1)")
      ->default_str("one");
  vnum->add_option("--t", nu_t, "complex parameter, |t| <= 1, e.g. 0.5, -1, i, 0.3+0.4i")
      ->default_str("0.5");

  // enum
  auto* en = app.add_subcommand("enum", "list combinatorial families and check counts");
  en->require_subcommand(1);
  en->fallthrough();
  int e_k = -1, e_n = -1, e_r = -1, e_m = -1, e_l = -1;
  bool e_prime = false;
  auto* en_idx = en->add_subcommand("indices", "admissible index vectors I(k,r)");
  en_idx->fallthrough();
  en_idx->add_option("--k", e_k, "weight")->required();
  en_idx->add_option("--n", e_n, "depth")->required();
  en_idx->add_option("--r", e_r, "leading-ones split (default 1)");
  en_idx->add_flag("--prime", e_prime, "restrict to vectors whose r-th part exceeds 1");
  auto* en_ch = en->add_subcommand("chains", "chain vectors Q_l");
  en_ch->fallthrough();
  en_ch->add_option("--m", e_m, "upper bound")->required();
  en_ch->add_option("--n", e_n, "depth")->required();
  en_ch->add_option("--l", e_l, "decreasing-prefix length")->required();
  auto* en_sh = en->add_subcommand("shuffles", "order-preserving shuffles of two blocks");
  en_sh->fallthrough();
  en_sh->add_option("--l", e_l, "split position")->required();
  en_sh->add_option("--r", e_r, "total size parameter")->required();
  auto* en_su = en->add_subcommand("subsets", "summand subsets of {1..n}");
  en_su->fallthrough();
  en_su->add_option("--n", e_n, "ambient depth")->required();
  en_su->add_option("--l", e_l, "cardinality (with --r)");
  en_su->add_option("--r", e_r, "maximum element (with --l)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Deadline dl;
  dl.arm(deadline_s);

  try {
    const ReportFormat fmt = [&] {
      try {
        return parse_format(format);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();

    Report rep;
    rep.command = echo_command(argc, argv);
    std::vector<PointFn> points;

    if (vex->parsed()) {
      // Per-suite default boxes; explicit flags override.
      auto box_for = [&](const std::string& s) {
        ExactBox b;
        if (s == "thm2") {
          b.n = range_or(ex_n, {1, 5}, "--n");
          b.kx = range_or(ex_kx, {1, 6}, "--k-extra");
          b.m = range_or(ex_m, {1, 30}, "--m");
        } else if (s == "shuffle") {
          b.max_blocks = ex_max_blocks < 0 ? 7 : ex_max_blocks;
          b.samples = ex_samples < 0 ? 100 : ex_samples;
        } else if (s == "pf") {
          b.K = range_or(ex_K, {1, 20}, "--K");
          b.samples = ex_samples < 0 ? 100 : ex_samples;
        } else if (s == "telescope") {
          b.n = range_or(ex_n, {2, 5}, "--n");
          b.kx = range_or(ex_kx, {1, 4}, "--k-extra");
          b.m = range_or(ex_m, {1, 6}, "--m");
          b.samples = ex_samples < 0 ? 3 : ex_samples;
        } else if (s == "blocksum") {
          b.n = range_or(ex_n, {1, 5}, "--n");
          b.kx = range_or(ex_kx, {1, 4}, "--k-extra");
          b.m = range_or(ex_m, {1, 6}, "--m");
          b.samples = ex_samples < 0 ? 3 : ex_samples;
        } else if (s == "inclexcl") {
          b.n = range_or(ex_n, {1, 6}, "--n");
          b.m = range_or(ex_m, {1, 30}, "--m");
        } else if (s == "numerator") {
          b.r = range_or(ex_r, {1, 6}, "--r");
          b.samples = ex_samples < 0 ? 100 : ex_samples;
        } else if (s == "prefix") {
          b.l = range_or(ex_l, {1, 6}, "--l");
          b.m = range_or(ex_m, {1, 30}, "--m");
        } else if (s == "sigma") {
          b.n = range_or(ex_n, {1, 3}, "--n");
          b.kx = range_or(ex_kx, {1, 2}, "--k-extra");
          b.m = range_or(ex_m, {2, 4}, "--m");
          b.cap = ex_cap < 0 ? 12 : ex_cap;
        }
        if (b.samples == 0) b.samples = 1;
        return b;
      };
      auto add_suite = [&](const std::string& s) {
        const ExactBox b = box_for(s);
        if ((b.n.lo != 0 && b.n.lo < 1) || (b.m.lo != 0 && b.m.lo < 1))
          throw UsageError("--n and --m must start at 1 or higher");
        if (s == "thm2") {
          if (b.kx.lo < 1) throw UsageError("--k-extra must start at 1 (k > n)");
          add_fixed_m_points(points, b);
        } else if (s == "shuffle") {
          add_shuffle_points(points, b, seed);
        } else if (s == "pf") {
          add_pf_points(points, b, seed);
        } else if (s == "telescope") {
          if (b.kx.lo < 1) throw UsageError("--k-extra must start at 1 (k > n)");
          add_telescope_points(points, b, seed);
        } else if (s == "blocksum") {
          if (b.kx.lo < 1) throw UsageError("--k-extra must start at 1 (k > n)");
          add_blocksum_points(points, b, seed);
        } else if (s == "inclexcl") {
          add_inclexcl_points(points, b);
        } else if (s == "numerator") {
          add_numerator_points(points, b, seed);
        } else if (s == "prefix") {
          if (b.l.lo < 1) throw UsageError("--l must start at 1");
          add_prefix_points(points, b);
        } else if (s == "sigma") {
          if (b.kx.lo < 1) throw UsageError("--k-extra must start at 1 (k > n)");
          if (b.cap < 1) throw UsageError("--cap must be >= 1");
          add_sigma_points(points, b);
        }
        // Echo the box that was actually used.
        auto put = [&](const char* key, const std::string& val) {
          rep.config.emplace_back(std::string(s) + "." + key, val);
        };
        if (b.n.lo != 0 || b.n.hi != 0) put("n", range_str(b.n));
        if (b.kx.lo != 0 || b.kx.hi != 0) put("k-extra", range_str(b.kx));
        if (b.m.lo != 0 || b.m.hi != 0) put("m", range_str(b.m));
        if (b.K.lo != 0 || b.K.hi != 0) put("K", range_str(b.K));
        if (b.r.lo != 0 || b.r.hi != 0) put("r", range_str(b.r));
        if (b.l.lo != 0 || b.l.hi != 0) put("l", range_str(b.l));
        if (b.samples > 0) put("samples", std::to_string(b.samples));
        if (b.max_blocks > 0) put("max-blocks", std::to_string(b.max_blocks));
        if (b.cap > 0) put("cap", std::to_string(b.cap));
      };
      rep.config.emplace_back("suite", suite);
      if (suite == "all") {
        for (const char* s : {"pf", "shuffle", "telescope", "blocksum", "thm2", "inclexcl",
                              "numerator", "prefix", "sigma"})
          add_suite(s);
      } else {
        add_suite(suite);
      }
      rep.config.emplace_back("seed", std::to_string(seed));
      rep.config.emplace_back("format", format);
    } else if (vnum->parsed()) {
      const Range nr = range_or(nu_n, {2, thm == 1 ? 3 : 2}, "--n");
      if (nr.lo < 1) throw UsageError("--n must start at 1 or higher");
      const TruncationSpec trunc{nu_cap};
      rep.config.emplace_back("thm", std::to_string(thm));
      rep.config.emplace_back("n", range_str(nr));
      if (!nu_k.empty()) rep.config.emplace_back("k", nu_k);
      WeightFunction f = WeightFunction::one();
      std::complex<double> t{0.5, 0.0};
      Range mr{1, 5};
      if (thm == 1) {
        f = [&] {
          try {
            return make_weight(nu_f, nu_t);
          } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
          }
        }();
        rep.config.emplace_back("f", f.describe());
      } else if (thm == 2) {
        mr = range_or(nu_m, {1, 5}, "--m");
        if (mr.lo < 1) throw UsageError("--m must start at 1 or higher");
        rep.config.emplace_back("m", range_str(mr));
      } else {
        t = [&] {
          try {
            const std::complex<double> tv = parse_complex(nu_t);
            if (std::abs(tv) > 1.0 + 1e-12)
              throw UsageError("--t: |t| must be <= 1 for convergence");
            return tv;
          } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
          }
        }();
        rep.config.emplace_back("t", format_complex(t));
      }
      rep.config.emplace_back("cap", std::to_string(nu_cap));
      rep.config.emplace_back("tol", format_double(nu_tol));
      rep.config.emplace_back("seed", std::to_string(seed));
      rep.config.emplace_back("format", format);

      for (long n = nr.lo; n <= nr.hi; ++n) {
        const Range kr = nu_k.empty() ? default_k_range(n) : parse_range(nu_k, "--k");
        for (long k = kr.lo; k <= kr.hi; ++k) {
          require_convergent(n, k);
          if (thm == 1) {
            points.push_back([n, k, f, trunc, tol = nu_tol]() {
              return std::vector<ReportEntry>{ReportEntry::from(check_sum_formula(
                  static_cast<int>(n), static_cast<int>(k), f, trunc, tol))};
            });
          } else if (thm == 2) {
            for (long m = mr.lo; m <= mr.hi; ++m)
              points.push_back([n, k, m, trunc, tol = nu_tol]() {
                return std::vector<ReportEntry>{ReportEntry::from(
                    check_fixed_m(static_cast<int>(n), static_cast<int>(k),
                                  static_cast<int>(m), trunc, tol))};
              });
          } else {
            points.push_back([n, k, t, trunc, tol = nu_tol]() {
              return std::vector<ReportEntry>{ReportEntry::from(check_power_weight(
                  static_cast<int>(n), static_cast<int>(k), t, trunc, tol))};
            });
          }
        }
      }
    } else if (en_idx->parsed()) {
      const int r = e_r < 0 ? 1 : e_r;
      if (e_k < 2 || e_n < 1 || e_n >= e_k)
        throw UsageError("enum indices: need k >= 2 and 1 <= n < k");
      if (r < 1 || r > e_n + 1) throw UsageError("enum indices: need 1 <= r <= n+1");
      const std::uint64_t base = binomial(e_k - r - 1, e_n - r);
      const std::uint64_t expected =
          e_prime ? base - (r < e_n ? binomial(e_k - r - 2, e_n - r - 1) : 0) : base;
      require_listable(expected);
      points.push_back([k = e_k, n = e_n, r, prime = e_prime, expected, &dl]() {
        const std::vector<Index> set =
            prime ? enumerate_index_set_prime(k, n, r) : enumerate_index_set(k, n, r);
        std::vector<std::string> items;
        items.reserve(set.size());
        for (const Index& v : set) {
          if ((items.size() & 8191u) == 0 && dl.expired()) throw DeadlineExceeded{};
          items.push_back(fmt_tuple(v.parts));
        }
        return std::vector<ReportEntry>{
            enum_entry(prime ? "index_set_prime" : "index_set",
                       {{"k", std::to_string(k)},
                        {"n", std::to_string(n)},
                        {"r", std::to_string(r)}},
                       std::move(items), expected)};
      });
      rep.config = {{"family", e_prime ? "indices-prime" : "indices"},
                    {"k", std::to_string(e_k)},
                    {"n", std::to_string(e_n)},
                    {"r", std::to_string(r)},
                    {"format", format}};
    } else if (en_ch->parsed()) {
      if (e_m < 1 || e_n < 1 || e_l < 1 || e_l > e_n)
        throw UsageError("enum chains: need m >= 1, n >= 1, 1 <= l <= n");
      const std::uint64_t expected =
          binomial(e_m - 1, e_l - 1) * binomial(e_m + e_n - e_l - 1, e_n - e_l);
      require_listable(expected);
      points.push_back([m = e_m, n = e_n, l = e_l, expected, &dl]() {
        std::vector<std::string> items;
        std::uint64_t seen = 0;
        for_each_chain(m, n, l, [&](const std::vector<int>& q) {
          if ((++seen & 8191u) == 0 && dl.expired()) throw DeadlineExceeded{};
          items.push_back(fmt_tuple(q));
        });
        return std::vector<ReportEntry>{enum_entry("chain_set",
                                                   {{"m", std::to_string(m)},
                                                    {"n", std::to_string(n)},
                                                    {"l", std::to_string(l)}},
                                                   std::move(items), expected)};
      });
      rep.config = {{"family", "chains"},
                    {"m", std::to_string(e_m)},
                    {"n", std::to_string(e_n)},
                    {"l", std::to_string(e_l)},
                    {"format", format}};
    } else if (en_sh->parsed()) {
      if (e_l < 1 || e_r < e_l) throw UsageError("enum shuffles: need 1 <= l <= r");
      const std::uint64_t expected = binomial(e_r - 1, e_l - 1);
      require_listable(expected);
      points.push_back([l = e_l, r = e_r, expected, &dl]() {
        std::vector<std::string> items;
        for (const Shuffle& s : enumerate_shuffles(l, r)) {
          if ((items.size() & 8191u) == 0 && dl.expired()) throw DeadlineExceeded{};
          items.push_back(fmt_tuple(s.mapping));
        }
        return std::vector<ReportEntry>{enum_entry(
            "shuffles", {{"l", std::to_string(l)}, {"r", std::to_string(r)}},
            std::move(items), expected)};
      });
      rep.config = {{"family", "shuffles"},
                    {"l", std::to_string(e_l)},
                    {"r", std::to_string(e_r)},
                    {"format", format}};
    } else if (en_su->parsed()) {
      if (e_n < 1) throw UsageError("enum subsets: need n >= 1");
      const bool constrained = (e_l >= 0 || e_r >= 0);
      if (constrained && (e_l < 1 || e_r < 1))
        throw UsageError("enum subsets: give both --l and --r, or neither");
      std::uint64_t expected;
      if (constrained) {
        if (e_r > e_n || e_l > e_r)
          throw UsageError("enum subsets: need l <= r <= n");
        expected = binomial(e_r - 1, e_l - 1);
      } else {
        if (e_n > 20) throw UsageError("enum subsets: full listing limited to n <= 20");
        expected = (std::uint64_t{1} << e_n) - 1;
      }
      require_listable(expected);
      points.push_back([n = e_n, l = e_l, r = e_r, constrained, expected, &dl]() {
        const std::vector<SubsetJ> sets =
            constrained ? enumerate_subsets(n, l, r) : enumerate_nonempty_subsets(n);
        std::vector<std::string> items;
        items.reserve(sets.size());
        for (const SubsetJ& J : sets) {
          if ((items.size() & 8191u) == 0 && dl.expired()) throw DeadlineExceeded{};
          items.push_back(fmt_set(J.members));
        }
        std::vector<std::pair<std::string, std::string>> params{{"n", std::to_string(n)}};
        if (constrained) {
          params.emplace_back("l", std::to_string(l));
          params.emplace_back("r", std::to_string(r));
        }
        return std::vector<ReportEntry>{
            enum_entry("subsets", std::move(params), std::move(items), expected)};
      });
      rep.config.emplace_back("family", "subsets");
      rep.config.emplace_back("n", std::to_string(e_n));
      if (constrained) {
        rep.config.emplace_back("l", std::to_string(e_l));
        rep.config.emplace_back("r", std::to_string(e_r));
      }
      rep.config.emplace_back("format", format);
    }

    if (points.empty()) throw UsageError("the requested parameter ranges contain no points");

    rep.entries = run_points(points, jobs, dl);
    const std::string rendered = rep.render(fmt);
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      out << rendered;
      if (!out) {
        std::cerr << "error: cannot write report to '" << out_path << "'\n";
        return 2;
      }
      std::cerr << "wrote " << out_path << " (" << rep.total() << " entries, "
                << rep.failed() << " failed)\n";
    } else {
      std::cout << rendered;
    }
    return rep.exit_code();
  } catch (const DeadlineExceeded&) {
    std::cerr << "error: deadline of " << deadline_s << " s exceeded\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
