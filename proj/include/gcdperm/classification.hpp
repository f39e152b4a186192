#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gcdperm/records.hpp"

namespace gcdperm {

enum class Verdict { Identity, C3 };

std::string to_string(Verdict v);

/**
 * Eventual behaviour of f_a, with the index that certifies it.
 *
 * Identity: witness is M_a, the least m with f(n) = n for all n >= m. The
 *   certificate is {f(1..m)} == {1..m} with f(m) == m; gcd(m, m+1) == 1 then
 *   forces f(m+1) = m+1 and so on.
 * C3: witness is an index from which f_a and f_3 agree pointwise. The
 *   certificate is an index m with {f_a(1..m)} == {1..m}, f_a(m) == m-1 and m
 *   a record of f_3. f_3 is in the same state at m (the block of record m
 *   closes there), and the recursion only reads the used set and the last
 *   value, so both maps agree from m onward; witness = m+1, the shared ETP.
 */
struct ClassLabel {
  std::uint64_t a = 0;
  Verdict verdict = Verdict::Identity;
  std::uint64_t witness = 0;
  std::size_t simulated_terms = 0;
};

/// max(10a, 10^4)
std::size_t default_budget(std::uint64_t a);

/// Simulates at most `budget` terms of f_a. `f3_records` must reach budget.
/// Throws BudgetExhaustedError if neither certificate appears.
ClassLabel classify(std::uint64_t a, std::size_t budget, const RecordSet& f3_records);
ClassLabel classify(std::uint64_t a, std::size_t budget);

/// classify with the default budget, doubling on exhaustion up to hard_cap.
ClassLabel classify_auto(std::uint64_t a, const RecordSet& f3_records, std::size_t hard_cap);

/// a in {2, 4}, or 6 | a with an f_3 record r such that |r - a| <= 1.
/// Requires records up to a+1.
bool in_identity_set_by_records(std::uint64_t a, const RecordSet& f3_records);

/// 6 | a and a has no representation m * p_n# + 6t with n >= 4, m >= 1,
/// 1 <= t <= floor((p_{n+1} - 2) / 6).
bool is_nice(std::uint64_t a);

/// a in {2, 4}, or a is nice.
bool in_identity_set_by_primorials(std::uint64_t a);

/// One sub-sum of the not-nice density series.
struct DensitySum {
  boost::multiprecision::cpp_rational exact;
  double value = 0.0;
};

/// Sum over k = 4..K of (floor((p_{k+1}-2)/6) - floor((p_k-2)/6)) / p_k#.
DensitySum not_nice_density(std::size_t K);

struct ScanRow {
  std::uint64_t a = 0;
  std::optional<ClassLabel> label;  // empty when undecided within the cap
  bool by_records = false;
  bool by_primorials = false;

  bool agree() const;
};

/// Every a in {2, 4} and every multiple of 6 up to bound, ascending.
std::vector<ScanRow> scan_identity_set(std::uint64_t bound, unsigned threads = 0);

/// CSV: a,simulation_verdict,M_a_or_merge,by_records,by_primorials,agree
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

}  // namespace gcdperm
