#include "gcdperm/classification.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "gcdperm/arith.hpp"
#include "gcdperm/errors.hpp"

namespace gcdperm {

namespace mp = boost::multiprecision;

std::string to_string(Verdict v) { return v == Verdict::Identity ? "Identity" : "C3"; }

std::size_t default_budget(std::uint64_t a) {
  return std::max<std::size_t>(10 * a, 10'000);
}

ClassLabel classify(std::uint64_t a, std::size_t budget, const RecordSet& f3_records) {
  if (a == 2) return {a, Verdict::Identity, 1, 2};
  if (f3_records.covered_upto() < budget) {
    throw std::invalid_argument("classify: f_3 records must reach the budget " + std::to_string(budget));
  }
  SequenceBuffer buffer{Params{a}};
  while (buffer.size() < budget) {
    const std::uint64_t v = buffer.extend();
    const std::uint64_t m = buffer.size();
    if ((v == m || v + 1 == m) && buffer.prefix_complete()) {
      if (v == m) return {a, Verdict::Identity, m, buffer.size()};
      if (f3_records.contains(m)) return {a, Verdict::C3, m + 1, buffer.size()};
    }
  }
  throw BudgetExhaustedError("classify: no certificate for a=" + std::to_string(a) + " within " +
                             std::to_string(budget) + " terms");
}

ClassLabel classify(std::uint64_t a, std::size_t budget) {
  return classify(a, budget, record_stream_upto(std::max<std::uint64_t>(budget, 5)));
}

ClassLabel classify_auto(std::uint64_t a, const RecordSet& f3_records, std::size_t hard_cap) {
  hard_cap = std::min<std::size_t>(hard_cap, f3_records.covered_upto());
  std::size_t budget = std::min(default_budget(a), hard_cap);
  for (;;) {
    try {
      return classify(a, budget, f3_records);
    } catch (const BudgetExhaustedError&) {
      if (budget >= hard_cap) throw;
      budget = std::min(budget * 2, hard_cap);
    }
  }
}

bool in_identity_set_by_records(std::uint64_t a, const RecordSet& f3_records) {
  if (a == 2 || a == 4) return true;
  if (a % 6 != 0) return false;
  if (f3_records.covered_upto() < a + 1) {
    throw InsufficientRecordsError("in_identity_set_by_records: need records up to " + std::to_string(a + 1));
  }
  return f3_records.contains(a - 1) || f3_records.contains(a + 1);
}

bool is_nice(std::uint64_t a) {
  if (a == 0 || a % 6 != 0) return false;
  const auto primes = small_primes();
  // p_n# for n = 1..15 fits in 64 bits
  std::uint64_t primorial = 1;
  for (std::size_t n = 1; n + 1 <= primes.size(); ++n) {
    primorial *= primes[n - 1];
    if (n < 4) continue;
    if (primorial >= a) break;
    const std::uint64_t t_max = (primes[n] - 2) / 6;
    const std::uint64_t rem = a % primorial;
    // 6t < p_n# here, so rem is the only candidate for 6t
    const std::uint64_t t = rem / 6;
    if (t >= 1 && t <= t_max) return false;
  }
  return true;
}

bool in_identity_set_by_primorials(std::uint64_t a) {
  return a == 2 || a == 4 || is_nice(a);
}

DensitySum not_nice_density(std::size_t K) {
  DensitySum out;
  if (K < 4) return out;
  const auto primes = first_primes(K + 1);
  mp::cpp_int primorial = 1;
  for (std::size_t k = 1; k <= K; ++k) {
    primorial *= primes[k - 1];
    if (k < 4) continue;
    const std::uint64_t count = (primes[k] - 2) / 6 - (primes[k - 1] - 2) / 6;
    out.exact += mp::cpp_rational(count, primorial);
  }
  out.value = out.exact.convert_to<double>();
  return out;
}

bool ScanRow::agree() const {
  return label.has_value() && by_records == by_primorials &&
         (label->verdict == Verdict::Identity) == by_records;
}

std::vector<ScanRow> scan_identity_set(std::uint64_t bound, unsigned threads) {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t a : {2, 4}) {
    if (a <= bound) seeds.push_back(a);
  }
  for (std::uint64_t a = 6; a <= bound; a += 6) seeds.push_back(a);

  const std::size_t hard_cap = std::max<std::size_t>(64 * bound, 1'000'000);
  const RecordSet records = record_stream_upto(hard_cap);

  std::vector<ScanRow> rows(seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      ScanRow& row = rows[i];
      row.a = seeds[i];
      try {
        row.label = classify_auto(row.a, records, hard_cap);
      } catch (const BudgetExhaustedError&) {
        row.label.reset();
      }
      row.by_records = in_identity_set_by_records(row.a, records);
      row.by_primorials = in_identity_set_by_primorials(row.a);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, seeds.size()));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();
  return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "a,simulation_verdict,M_a_or_merge,by_records,by_primorials,agree\n";
  for (const ScanRow& row : rows) {
    out << row.a << ',';
    if (row.label) {
      out << to_string(row.label->verdict) << ',' << row.label->witness;
    } else {
      out << "undecided,0";
    }
    out << ',' << int(row.by_records) << ',' << int(row.by_primorials) << ',' << int(row.agree())
        << '\n';
  }
}

}  // namespace gcdperm
