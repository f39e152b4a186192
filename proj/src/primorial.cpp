#include "gcdperm/primorial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gcdperm/arith.hpp"
#include "gcdperm/errors.hpp"
#include "gcdperm/sequence.hpp"

namespace gcdperm {

namespace mp = boost::multiprecision;
using Rational = mp::cpp_rational;

BigInt primorial(std::size_t n) {
  if (n < 1) throw std::invalid_argument("primorial: n must be >= 1");
  BigInt out = 1;
  for (std::uint64_t p : first_primes(n)) out *= p;
  return out;
}

PrimorialTable::PrimorialTable(std::size_t n_max) : primes_(first_primes(n_max + 1)) {
  BigInt acc = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    acc *= primes_[n - 1];
    primorials_.push_back(acc);
  }
}

std::uint64_t PrimorialTable::prime(std::size_t n) const {
  if (n < 1 || n > primes_.size()) throw std::out_of_range("PrimorialTable::prime: n out of range");
  return primes_[n - 1];
}

const BigInt& PrimorialTable::primorial(std::size_t n) const {
  if (n < 1 || n > primorials_.size()) throw std::out_of_range("PrimorialTable::primorial: n out of range");
  return primorials_[n - 1];
}

std::uint64_t PrimorialTable::primorial_u64(std::size_t n) const {
  const BigInt& v = primorial(n);
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("p_" + std::to_string(n) + "# exceeds 64 bits");
  }
  return v.convert_to<std::uint64_t>();
}

namespace {

void require_records(const RecordSet& records, std::uint64_t upto, const char* who) {
  if (records.covered_upto() < upto) {
    throw InsufficientRecordsError(std::string(who) + ": records must reach " + std::to_string(upto) +
                                   " (have " + std::to_string(records.covered_upto()) + ")");
  }
}

}  // namespace

PrimorialRecordReport verify_primorial_records(std::size_t n, const RecordSet& records,
                                               std::uint64_t r_max, std::uint64_t cap) {
  if (n < 2) throw std::invalid_argument("verify_primorial_records: n must be >= 2");
  PrimorialTable table(n);
  const BigInt top_big = table.primorial(n) * (table.prime(n + 1) - 1) + 1;
  if (top_big > cap) throw ResourceLimitError("verify_primorial_records: range exceeds cap");
  const std::uint64_t shift = table.primorial_u64(n);
  if (r_max == 0) r_max = table.prime(n + 1) - 1;
  require_records(records, r_max * shift + 1, "verify_primorial_records");

  PrimorialRecordReport report{n, r_max, 0, {}};
  for (std::uint64_t r = 1; r <= r_max; ++r) {
    for (std::uint64_t v : {r * shift - 1, r * shift + 1}) {
      ++report.checked;
      if (!records.contains(v)) report.missing.push_back(v);
    }
  }
  return report;
}

TranslationReport verify_translation(std::size_t n, std::uint64_t lo, std::uint64_t hi,
                                     std::uint64_t cap) {
  if (n < 1) throw std::invalid_argument("verify_translation: n must be >= 1");
  PrimorialTable table(n);
  const std::uint64_t shift = table.primorial_u64(n);
  const std::uint64_t next_prime = table.prime(n + 1);
  if (lo == 0 && hi == 0) {
    lo = next_prime;
    hi = (next_prime - 1) * shift;
  }
  if (lo < 1 || lo > hi) throw std::invalid_argument("verify_translation: empty range");

  // room to probe one primorial past the stated range
  const std::uint64_t length = std::max(hi + 2 * shift, (next_prime + 1) * shift);
  if (length > cap) {
    throw ResourceLimitError("verify_translation: needs " + std::to_string(length) +
                             " terms, cap is " + std::to_string(cap));
  }
  const SequenceBuffer f = generate_prefix(3, length, cap);
  auto holds = [&](std::uint64_t k) { return f.at(shift + k) == f.at(k) + shift; };

  TranslationReport report;
  report.n = n;
  report.shift = shift;
  report.lo = lo;
  report.hi = hi;
  for (std::uint64_t k = lo; k <= hi; ++k) {
    if (!holds(k)) report.failures.push_back(k);
  }
  if (report.failures.empty()) {
    report.holds_lo = lo;
    while (report.holds_lo > 1 && holds(report.holds_lo - 1)) --report.holds_lo;
    report.holds_hi = hi;
    while (shift + report.holds_hi + 1 <= length && holds(report.holds_hi + 1)) ++report.holds_hi;
    report.hi_saturated = shift + report.holds_hi + 1 > length;
  }
  return report;
}

namespace {

std::uint64_t count_with_seed(const RecordSet& records, std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t c = records.count_in(lo, hi);
  if (lo <= kSeedRecord && kSeedRecord <= hi) ++c;
  return c;
}

}  // namespace

std::uint64_t s_count(std::size_t n, const RecordSet& records) {
  if (n < 1) throw std::invalid_argument("s_count: n must be >= 1");
  const auto primes = first_primes(n + 1);
  require_records(records, primes[n], "s_count");
  return count_with_seed(records, primes[n - 1], primes[n] - 1);
}

std::uint64_t w_count(std::size_t n, const RecordSet& records) {
  if (n < 1) throw std::invalid_argument("w_count: n must be >= 1");
  PrimorialTable table(n);
  const std::uint64_t q = table.primorial_u64(n) + 1;
  require_records(records, q, "w_count");
  return count_with_seed(records, table.prime(n + 1), q);
}

bool DensityLedger::recurrence_holds(std::size_t n) const {
  if (n < 1 || n >= n_max) throw std::out_of_range("recurrence_holds: need 1 <= n < n_max");
  return w[n] == w[n - 1] * primes[n] - s[n];
}

bool DensityLedger::ratio_non_increasing() const {
  for (std::size_t i = 1; i < w_ratio.size(); ++i) {
    if (w_ratio[i] > w_ratio[i - 1]) return false;
  }
  return true;
}

DensityLedger build_density_ledger(std::size_t n_max, const RecordSet& records) {
  if (n_max < 1) throw std::invalid_argument("build_density_ledger: n_max must be >= 1");
  PrimorialTable table(n_max);
  DensityLedger ledger;
  ledger.n_max = n_max;
  ledger.primes = first_primes(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    ledger.s.push_back(s_count(n, records));
    ledger.w.push_back(w_count(n, records));
    ledger.w_ratio.push_back(static_cast<double>(ledger.w.back()) /
                             table.primorial(n).convert_to<double>());
  }
  return ledger;
}

double kappa_empirical(std::uint64_t N, const RecordSet& records) {
  if (N == 0) throw std::invalid_argument("kappa_empirical: N must be >= 1");
  require_records(records, N, "kappa_empirical");
  return static_cast<double>(records.count_in(0, N)) / static_cast<double>(N);
}

KappaBounds kappa_bounds(std::size_t K) {
  if (K < 4) throw std::invalid_argument("kappa_bounds: K must be >= 4");
  PrimorialTable table(K + 1);
  Rational lower_sum = 0;
  Rational upper_sum = 0;
  for (std::size_t k = 4; k <= K; ++k) {
    const BigInt& pk = table.primorial(k);
    lower_sum += Rational(BigInt(table.prime(k + 1) - table.prime(k)), 2 * pk);
    upper_sum += Rational(BigInt(1), pk);
  }
  const Rational three_tenths(3, 10);
  const std::uint64_t p_next = table.prime(K + 1);
  const Rational tail(BigInt(p_next), 2 * table.primorial(K) * (p_next - 1));

  KappaBounds out;
  out.K = K;
  out.lower_partial = Rational(three_tenths - lower_sum).convert_to<double>();
  out.upper_partial = Rational(three_tenths - upper_sum).convert_to<double>();
  out.lower_tail = tail.convert_to<double>();
  return out;
}

SeriesValue reciprocal_primorial_sum(std::size_t K) {
  if (K < 1) throw std::invalid_argument("reciprocal_primorial_sum: K must be >= 1");
  PrimorialTable table(K);
  Rational sum = 0;
  for (std::size_t k = 1; k <= K; ++k) sum += Rational(BigInt(1), table.primorial(k));
  // sum_{k>K} 1/p_k# <= (1/p_K#) * sum_{j>=1} p_{K+1}^{-j}
  const Rational tail(BigInt(1), table.primorial(K) * (table.prime(K + 1) - 1));
  return {sum.convert_to<double>(), tail.convert_to<double>()};
}

Interval coarse_kappa_bounds(Interval series_enclosure) {
  const Rational lo = Rational(3, 10) - (Rational(series_enclosure.upper) - Rational(1, 2) - Rational(1, 6));
  const Rational hi = Rational(3, 10) -
                      (Rational(series_enclosure.lower) - Rational(1, 2) - Rational(1, 6) - Rational(1, 30));
  return {lo.convert_to<double>(), hi.convert_to<double>()};
}

std::vector<PrimeRatioPoint> prime_ratio_series(std::uint64_t N, std::uint64_t stride,
                                                const RecordSet& records) {
  if (stride == 0) throw std::invalid_argument("prime_ratio_series: stride must be >= 1");
  std::vector<PrimeRatioPoint> out;
  std::uint64_t primes = 0;
  std::uint64_t index = 0;
  for (const Record& r : records.range(0, N)) {
    ++index;
    if (!r.is_composite) ++primes;
    if (index % stride != 0) continue;
    const double ratio = static_cast<double>(primes) / static_cast<double>(index);
    out.push_back({index, r.value, primes, ratio * std::log(static_cast<double>(r.value))});
  }
  return out;
}

std::size_t DerivativeBoundReport::tested() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.tested; }));
}

bool DerivativeBoundReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok; });
}

DerivativeBoundReport derivative_bound_check(std::size_t n, std::uint64_t k_max) {
  if (n < 1) throw std::invalid_argument("derivative_bound_check: n must be >= 1");
  PrimorialTable table(n);
  const std::uint64_t shift = table.primorial_u64(n);
  // consecutive records differ by less than 53, so this reaches f(q_max + 1)
  const RecordSet records = record_stream_upto(k_max * shift + 1 + 64);

  DerivativeBoundReport report;
  report.n = n;
  report.bound = 2 * n + 1;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    DerivativeBoundRow row;
    row.k = k;
    row.q = k * shift + 1;
    row.tested = row.q > 5 && is_prime(row.q);
    if (row.tested) {
      row.g = static_cast<std::int64_t>(reconstruct_f3(row.q + 1, records)) -
              static_cast<std::int64_t>(reconstruct_f3(row.q, records));
      row.ok = row.g >= static_cast<std::int64_t>(report.bound);
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace gcdperm
