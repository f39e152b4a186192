#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gcdperm/records.hpp"

namespace gcdperm {

using BigInt = boost::multiprecision::cpp_int;

/// p_n# = p_1 * ... * p_n. primorial(1) == 2.
BigInt primorial(std::size_t n);

/// Primes p_1..p_{n_max+1} and primorials p_1#..p_{n_max}#. The extra prime
/// makes p_{n+1} available for every tabulated n.
class PrimorialTable {
 public:
  explicit PrimorialTable(std::size_t n_max);

  std::size_t size() const { return primorials_.size(); }
  std::uint64_t prime(std::size_t n) const;
  const BigInt& primorial(std::size_t n) const;
  /// Throws std::overflow_error past 64 bits.
  std::uint64_t primorial_u64(std::size_t n) const;

 private:
  std::vector<std::uint64_t> primes_;
  std::vector<BigInt> primorials_;
};

// ---------------------------------------------------------------------------
// Records at multiples of a primorial

struct PrimorialRecordReport {
  std::size_t n = 0;
  std::uint64_t r_max = 0;
  std::size_t checked = 0;
  std::vector<std::uint64_t> missing;  // values r*p_n# +- 1 that are not records

  bool passed() const { return checked > 0 && missing.empty(); }
};

/// Checks that r*p_n# - 1 and r*p_n# + 1 are f_3 records for r = 1..r_max
/// (r_max = 0 means p_{n+1} - 1). Throws ResourceLimitError when the largest
/// value exceeds `cap`, InsufficientRecordsError when `records` stop short.
PrimorialRecordReport verify_primorial_records(std::size_t n, const RecordSet& records,
                                               std::uint64_t r_max = 0,
                                               std::uint64_t cap = 50'000'000);

// ---------------------------------------------------------------------------
// Translation f(p_n# + k) == f(k) + p_n#

struct TranslationReport {
  std::size_t n = 0;
  std::uint64_t shift = 0;  // p_n#
  std::uint64_t lo = 0;     // checked range [lo, hi]
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> failures;
  // Largest interval [holds_lo, holds_hi] containing [lo, hi] on which the
  // identity holds; only meaningful when failures is empty.
  std::uint64_t holds_lo = 0;
  std::uint64_t holds_hi = 0;
  bool hi_saturated = false;  // holds_hi hit the end of the generated prefix

  bool passed() const { return failures.empty(); }
};

/// Range [p_{n+1}, (p_{n+1}-1) p_n#] by default; an explicit [lo, hi] can be
/// given instead. Runs on a simulated f_3 prefix.
TranslationReport verify_translation(std::size_t n, std::uint64_t lo = 0, std::uint64_t hi = 0,
                                     std::uint64_t cap = 50'000'000);

// ---------------------------------------------------------------------------
// Record counts between primes and up to primorials

/// The s/w ledger counts f_3(2) = 3 alongside the turning-point records.
inline constexpr std::uint64_t kSeedRecord = 3;

/// #{r : p_n <= r < p_{n+1}}
std::uint64_t s_count(std::size_t n, const RecordSet& records);
/// #{r : p_{n+1} <= r <= p_n# + 1}
std::uint64_t w_count(std::size_t n, const RecordSet& records);

struct DensityLedger {
  std::size_t n_max = 0;
  std::vector<std::uint64_t> s;  // s[n-1] = s_n
  std::vector<std::uint64_t> w;  // w[n-1] = w_n
  std::vector<double> w_ratio;   // w_n / p_n#
  std::vector<std::uint64_t> primes;  // p_1..p_{n_max+1}

  /// w_{n+1} == w_n * p_{n+1} - s_{n+1}, for 1 <= n < n_max.
  bool recurrence_holds(std::size_t n) const;
  bool ratio_non_increasing() const;
};

/// s_1..s_{n_max} and w_1..w_{n_max}; records must reach p_{n_max}# + 1.
DensityLedger build_density_ledger(std::size_t n_max, const RecordSet& records);

/// #{records <= N} / N (records start at 5).
double kappa_empirical(std::uint64_t N, const RecordSet& records);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  bool contains(double x) const { return lower <= x && x <= upper; }
};

/**
 * Truncations at K of
 *   3/10 - sum_{k>=4} (p_{k+1} - p_k) / (2 p_k#)  <=  kappa  <=  3/10 - sum_{k>=4} 1/p_k#.
 * Dropping the upper series' tail keeps the upper bound valid. The lower
 * series' tail is at most (1/2) sum_{j>=K} 1/p_j# (p_{k+1} < 2 p_k), which is
 * bounded geometrically by 1 / (2 p_K# (1 - 1/p_{K+1})).
 */
struct KappaBounds {
  std::size_t K = 0;
  double lower_partial = 0.0;
  double upper_partial = 0.0;
  double lower_tail = 0.0;

  Interval interval() const { return {lower_partial - lower_tail, upper_partial}; }
};

KappaBounds kappa_bounds(std::size_t K);

/// sum_{k=1}^{K} 1/p_k# and a bound on the omitted tail.
struct SeriesValue {
  double partial = 0.0;
  double tail = 0.0;
};
SeriesValue reciprocal_primorial_sum(std::size_t K);

/// Three-decimal enclosure [0.704, 0.706] of sum_{k>=1} 1/p_k# used for the
/// closed-form kappa estimates.
inline constexpr Interval kPublishedPrimorialSeriesEnclosure{0.704, 0.706};

/// Coarse bounds from an enclosure [lo, hi] of sum_{k>=1} 1/p_k#:
///   lower = 3/10 - (hi - 1/2 - 1/6)         (series from k = 3)
///   upper = 3/10 - (lo - 1/2 - 1/6 - 1/30)  (series from k = 4)
Interval coarse_kappa_bounds(Interval series_enclosure);

// ---------------------------------------------------------------------------
// Prime records

struct PrimeRatioPoint {
  std::uint64_t index = 0;         // record number i (1-based)
  std::uint64_t n = 0;             // the i-th record value
  std::uint64_t prime_records = 0; // prime records <= n
  double ratio_ln = 0.0;           // prime_records / i * ln(n)
};

/// Every stride-th record <= N.
std::vector<PrimeRatioPoint> prime_ratio_series(std::uint64_t N, std::uint64_t stride,
                                                const RecordSet& records);

// ---------------------------------------------------------------------------
// Derivative lower bound at k p_n# + 1

struct DerivativeBoundRow {
  std::uint64_t k = 0;
  std::uint64_t q = 0;
  bool tested = false;  // q prime and q > 5
  std::int64_t g = 0;   // f_3(q+1) - f_3(q)
  bool ok = true;
};

struct DerivativeBoundReport {
  std::size_t n = 0;
  std::uint64_t bound = 0;  // 2n + 1
  std::vector<DerivativeBoundRow> rows;

  std::size_t tested() const;
  bool passed() const;
};

/// For k = 1..k_max with q = k p_n# + 1 prime and q > 5, checks
/// f_3(q+1) - f_3(q) >= 2n + 1.
DerivativeBoundReport derivative_bound_check(std::size_t n, std::uint64_t k_max);

}  // namespace gcdperm
