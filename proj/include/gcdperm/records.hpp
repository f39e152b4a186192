#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "gcdperm/sequence.hpp"

namespace gcdperm {

/// Index t where f jumps: t > 3 with f(t) - f(t-1) > 1, or t == 3 with
/// f(3) != min(N \ {1, a}). An essential turning point (ETP) additionally has
/// t > a, f(t) != t, f(t-1) == t-2 and {f(1..t-1)} == {1..t-1}.
struct TurningPoint {
  std::uint64_t t = 0;
  bool is_etp = false;
  std::uint64_t record_value = 0;

  friend bool operator==(const TurningPoint&, const TurningPoint&) = default;
};

/// A record of f_3 with its turning point and jump r - f^{-1}(r).
struct Record {
  std::uint64_t value = 0;
  std::uint64_t turning_point = 0;
  std::uint64_t jump = 0;
  bool is_composite = false;

  friend bool operator==(const Record&, const Record&) = default;
};

std::vector<TurningPoint> find_turning_points(const SequenceBuffer& buffer);

/// Next ETP after the ETP t with record f_t: f_t + 1.
std::uint64_t next_etp(std::uint64_t t, std::uint64_t f_t);

/// Next record of f_3 after the record r >= 5: (r-1) + the smallest prime
/// not dividing r-1.
std::uint64_t next_record(std::uint64_t r);

/**
 * Emits the records of f_3 in increasing order, starting from 5 at turning
 * point 4. The record after r sits at turning point r+1. The value f_3(2) = 3
 * is not emitted: index 2 is not a turning point.
 */
class RecordStream {
 public:
  RecordStream() = default;

  Record next();
  std::uint64_t last_record() const { return last_; }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t last_ = 0;
  std::uint64_t count_ = 0;
};

/// Sorted record list with membership and counting helpers.
class RecordSet {
 public:
  RecordSet() = default;
  /// covered_upto: every record <= this value is present (defaults to the
  /// largest value held).
  explicit RecordSet(std::vector<Record> records, std::uint64_t covered_upto = 0);

  std::span<const Record> records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  /// Largest record value held (0 if empty).
  std::uint64_t max_value() const { return records_.empty() ? 0 : records_.back().value; }
  std::uint64_t covered_upto() const { return covered_upto_; }

  bool contains(std::uint64_t value) const;
  /// Number of records r with lo <= r <= hi.
  std::size_t count_in(std::uint64_t lo, std::uint64_t hi) const;
  const Record* find(std::uint64_t value) const;

  /// Records r with lo <= r <= hi.
  std::span<const Record> range(std::uint64_t lo, std::uint64_t hi) const;

 private:
  std::vector<Record> records_;
  std::uint64_t covered_upto_ = 0;
};

/// All f_3 records <= limit (limit >= 5).
RecordSet record_stream_upto(std::uint64_t limit);

/// f_3(n) from the record list alone: r_k at a turning point t_k, n-1
/// elsewhere (n >= 4), and the fixed head 1, 3, 2. Throws
/// InsufficientRecordsError when n lies beyond the last record's block.
std::uint64_t reconstruct_f3(std::uint64_t n, const RecordSet& records);

struct MultipleRecords {
  std::vector<std::uint64_t> values;
  std::vector<std::uint64_t> gaps;  // gaps[i] = values[i+1] - values[i]
};

/// Records <= limit divisible by the prime p >= 5.
MultipleRecords prime_multiple_records(std::uint64_t p, std::uint64_t limit,
                                       const RecordSet& records);

/// Pairs (r, r+2) of records with r+2 <= limit.
std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_records(std::uint64_t limit,
                                                                  const RecordSet& records);

// Record cache: "# a=3 records" then one decimal value per line, ascending.
void write_record_cache(std::ostream& out, const RecordSet& records);
RecordSet read_record_cache(std::istream& in);

// CSV: index,record,turning_point,jump,is_composite
void write_records_csv(std::ostream& out, const RecordSet& records);

}  // namespace gcdperm
