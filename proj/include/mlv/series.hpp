#pragma once

// Truncated evaluation of the infinite series and the numeric verification
// of the three series-level theorems.
//
// All series here run over tuples (m_1, ..., m_n) of positive integers with
// partial sums s_j = m_1 + ... + m_j, summing
//     f(sum_{j in J} m_j) / (s_1^{k_1} ... s_n^{k_n}).
// Truncation is by the final partial sum: tuples with s_n <= cap are
// included.  Evaluation aggregates terms by prefix sums level by level
// (a regrouping of the tuple enumeration), accumulating in double-double
// so that rounding stays orders of magnitude below the truncation error.
// Every result carries a heuristic tail estimate for the discarded part.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mlv/combinatorics.hpp"

namespace mlv {

struct TruncationSpec {
  long cap = 1000;  // include tuples with final partial sum <= cap
};

struct NumericResult {
  std::complex<double> value{0.0, 0.0};
  double tail = 0.0;  // heuristic bound on the truncated remainder
  long cap = 0;
};

// Weight attached to the constrained sum of summands.  Four shapes:
//   one       f(m) = 1
//   power     f(m) = t^m for a fixed complex t with |t| <= 1
//   periodic  f(m) = values[(m-1) mod P]
//   table     f(m) = values[m-1] for m <= len, else 0
class WeightFunction {
 public:
  enum class Kind { one, power, periodic, table };

  static WeightFunction one() { return WeightFunction(Kind::one, {}, {}); }

  static WeightFunction power(std::complex<double> t) {
    if (std::abs(t) > 1.0 + 1e-12)
      throw std::invalid_argument("WeightFunction::power: need |t| <= 1");
    return WeightFunction(Kind::power, t, {});
  }

  static WeightFunction periodic(std::vector<std::complex<double>> values) {
    if (values.empty())
      throw std::invalid_argument("WeightFunction::periodic: empty value list");
    return WeightFunction(Kind::periodic, {}, std::move(values));
  }

  static WeightFunction table(std::vector<std::complex<double>> values) {
    if (values.empty())
      throw std::invalid_argument("WeightFunction::table: empty value list");
    return WeightFunction(Kind::table, {}, std::move(values));
  }

  Kind kind() const { return kind_; }
  std::complex<double> parameter() const { return t_; }
  const std::vector<std::complex<double>>& values() const { return values_; }

  std::complex<double> operator()(long m) const {
    switch (kind_) {
      case Kind::one:
        return {1.0, 0.0};
      case Kind::power: {
        std::complex<double> p{1.0, 0.0};
        for (long i = 0; i < m; ++i) p *= t_;
        return p;
      }
      case Kind::periodic:
        return values_[static_cast<std::size_t>((m - 1) % static_cast<long>(values_.size()))];
      case Kind::table:
        return (m >= 1 && m <= static_cast<long>(values_.size()))
                   ? values_[static_cast<std::size_t>(m - 1)]
                   : std::complex<double>{0.0, 0.0};
    }
    return {0.0, 0.0};
  }

  // sup over m >= 1 of |f(m)| (an upper bound; exact for these shapes).
  double sup_bound() const;

  std::string describe() const;

 private:
  WeightFunction(Kind k, std::complex<double> t, std::vector<std::complex<double>> v)
      : kind_(k), t_(t), values_(std::move(v)) {}

  Kind kind_;
  std::complex<double> t_{0.0, 0.0};
  std::vector<std::complex<double>> values_;
};

// Heuristic bound on the discarded remainder of a depth-n series truncated
// at final partial sum `cap`, for weights growing at most like m^growth.
// Requires growth < weight - depth.  Depth 1 uses the rigorous integral
// bound cap^-(k-1-growth) / (k-1-growth); deeper series use
//   2 * (log cap + 2)^(n-1) / (n-1)! * cap^-e / e,
// with e = min(k_n - 1, k - n - growth), which empirically dominates the
// true tails at desk scales while staying within a small constant of them.
double tail_estimate(const Index& kvec, double growth_exponent, long cap);

// Truncated single zeta value: sum_{m <= cap} m^-k, k >= 2.
NumericResult eval_zeta(int k, const TruncationSpec& trunc);

// Truncated depth-n zeta value for an admissible index vector.
NumericResult eval_multiple_zeta(const Index& kvec, const TruncationSpec& trunc);

// Truncated weighted series for admissible kvec, weight f, summand subset J
// (J.ambient_depth must equal kvec.depth()).
NumericResult eval_weighted_zeta(const Index& kvec, const WeightFunction& f,
                                 const SubsetJ& J, const TruncationSpec& trunc);

// Truncated subset series: sum over kvec in index_set(k, n, max J) and over
// tuples with sum_{j in J} m_j = m, free coordinates capped at trunc.cap.
NumericResult eval_subset_series(int k, int n, int m, const SubsetJ& J,
                                 const TruncationSpec& trunc);

struct NumericCheckResult {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  std::complex<double> lhs{0.0, 0.0};
  std::complex<double> rhs{0.0, 0.0};
  double residual = 0.0;
  double tol = 0.0;
  double tail_allowance = 0.0;
  long cap = 0;
  bool pass = false;  // residual <= tol + tail_allowance
};

// Alternating subset sum of weighted series against the weighted single
// series: sum over nonempty J, kvec in index_set(k, n, max J), of
// (-1)^(|J|-1) eval_weighted_zeta == sum_m f(m)/m^k.  Requires k > n.
NumericCheckResult check_sum_formula(int n, int k, const WeightFunction& f,
                                     const TruncationSpec& trunc, double tol);

// Alternating subset sum of eval_subset_series against 1/m^k.
NumericCheckResult check_fixed_m(int n, int k, int m, const TruncationSpec& trunc,
                                 double tol);

// Symmetric power-weight identity: for |t| <= 1,
//   sum_{r=1..n} sum_{index_set'(k,r)} sum (1-t^{m_1})...(1-t^{m_r}) / prod s^k
//     = sum_m (1-t^m)/m^k,
// together with its complement form (numerator 1 - prod) whose right side
// is sum_m t^m/m^k.  pass requires both residuals within tol + allowance.
NumericCheckResult check_power_weight(int n, int k, std::complex<double> t,
                                      const TruncationSpec& trunc, double tol);

// Depth-n tuple enumeration in the documented order: ascending final
// partial sum, lexicographic within it.  fn(m, s) receives the tuple and
// its partial sums; buffers are reused between calls.  This is the
// reference enumeration the aggregated evaluators are tested against, and
// the evaluation route for table weights.
template <typename Fn>
void for_each_simplex_tuple(int n, long cap, Fn&& fn) {
  if (n < 1) throw std::invalid_argument("for_each_simplex_tuple: need n >= 1");
  if (cap < 1) throw std::invalid_argument("for_each_simplex_tuple: need cap >= 1");
  std::vector<long> m(static_cast<std::size_t>(n), 0);
  std::vector<long> s(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, long remaining, long run) -> void {
    if (pos == n - 1) {
      m[static_cast<std::size_t>(pos)] = remaining;
      s[static_cast<std::size_t>(pos)] = run + remaining;
      fn(const_cast<const std::vector<long>&>(m), const_cast<const std::vector<long>&>(s));
      return;
    }
    for (long v = 1; v <= remaining - (n - 1 - pos); ++v) {
      m[static_cast<std::size_t>(pos)] = v;
      s[static_cast<std::size_t>(pos)] = run + v;
      self(self, pos + 1, remaining - v, run + v);
    }
  };
  for (long total = n; total <= cap; ++total) rec(rec, 0, total, 0);
}

}  // namespace mlv
