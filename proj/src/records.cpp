#include "gcdperm/records.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gcdperm/arith.hpp"
#include "gcdperm/errors.hpp"

namespace gcdperm {

std::vector<TurningPoint> find_turning_points(const SequenceBuffer& buffer) {
  std::vector<TurningPoint> out;
  const auto f = buffer.terms();
  const std::uint64_t a = buffer.a();
  if (f.size() < 3) return out;

  // min(N \ {1, a})
  const std::uint64_t least_free = (a == 2) ? 3 : 2;
  // running maximum of f(1..t-1); the prefix is complete iff it equals t-1
  std::uint64_t max_before = std::max(f[0], f[1]);

  for (std::size_t t = 3; t <= f.size(); ++t) {
    const std::uint64_t ft = f[t - 1];
    const std::uint64_t prev = f[t - 2];
    bool turning = (t == 3) ? (ft != least_free) : (ft > prev + 1);
    if (turning) {
      bool etp = t > a && ft != t && prev + 2 == t && max_before == t - 1;
      out.push_back({t, etp, ft});
    }
    max_before = std::max(max_before, ft);
  }
  return out;
}

std::uint64_t next_etp(std::uint64_t t, std::uint64_t f_t) {
  if (f_t <= t) throw std::invalid_argument("next_etp: an ETP has f(t) > t");
  return f_t + 1;
}

std::uint64_t next_record(std::uint64_t r) {
  if (r < 5) throw std::invalid_argument("next_record: r must be a record >= 5");
  return (r - 1) + smallest_prime_nondivisor(r - 1);
}

Record RecordStream::next() {
  Record rec;
  if (count_ == 0) {
    rec.value = 5;
    rec.turning_point = 4;
  } else {
    rec.value = next_record(last_);
    rec.turning_point = last_ + 1;
  }
  rec.jump = rec.value - rec.turning_point;
  rec.is_composite = !is_prime(rec.value);
  last_ = rec.value;
  ++count_;
  return rec;
}

RecordSet::RecordSet(std::vector<Record> records, std::uint64_t covered_upto)
    : records_(std::move(records)), covered_upto_(std::max(covered_upto, max_value())) {
  for (std::size_t i = 1; i < records_.size(); ++i) {
    if (records_[i].value <= records_[i - 1].value) {
      throw std::invalid_argument("RecordSet: values must be strictly increasing");
    }
  }
}

namespace {

auto value_less = [](const Record& r, std::uint64_t v) { return r.value < v; };

}  // namespace

const Record* RecordSet::find(std::uint64_t value) const {
  auto it = std::lower_bound(records_.begin(), records_.end(), value, value_less);
  if (it == records_.end() || it->value != value) return nullptr;
  return &*it;
}

bool RecordSet::contains(std::uint64_t value) const { return find(value) != nullptr; }

std::span<const Record> RecordSet::range(std::uint64_t lo, std::uint64_t hi) const {
  if (lo > hi) return {};
  auto first = std::lower_bound(records_.begin(), records_.end(), lo, value_less);
  auto last = std::lower_bound(first, records_.end(), hi + 1, value_less);
  return {first, last};
}

std::size_t RecordSet::count_in(std::uint64_t lo, std::uint64_t hi) const {
  return range(lo, hi).size();
}

RecordSet record_stream_upto(std::uint64_t limit) {
  if (limit < 5) throw std::invalid_argument("record_stream_upto: limit must be >= 5");
  std::vector<Record> out;
  RecordStream stream;
  for (;;) {
    Record rec = stream.next();
    if (rec.value > limit) break;
    out.push_back(rec);
  }
  return RecordSet(std::move(out), limit);
}

std::uint64_t reconstruct_f3(std::uint64_t n, const RecordSet& records) {
  static constexpr std::uint64_t kHead[] = {0, 1, 3, 2};
  if (n == 0) throw std::invalid_argument("reconstruct_f3: n must be >= 1");
  if (n <= 3) return kHead[n];
  if (records.empty() || n > records.max_value()) {
    throw InsufficientRecordsError("reconstruct_f3: records end at " +
                                   std::to_string(records.max_value()) + ", need n=" +
                                   std::to_string(n) + " inside a closed block");
  }
  const auto recs = records.records();
  // last record whose turning point is <= n
  auto it = std::upper_bound(recs.begin(), recs.end(), n,
                             [](std::uint64_t v, const Record& r) { return v < r.turning_point; });
  --it;
  return (it->turning_point == n) ? it->value : n - 1;
}

MultipleRecords prime_multiple_records(std::uint64_t p, std::uint64_t limit,
                                       const RecordSet& records) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("prime_multiple_records: p must be a prime >= 5");
  MultipleRecords out;
  for (const Record& r : records.range(0, limit)) {
    if (r.value % p == 0) {
      if (!out.values.empty()) out.gaps.push_back(r.value - out.values.back());
      out.values.push_back(r.value);
    }
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_records(std::uint64_t limit,
                                                                  const RecordSet& records) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  auto recs = records.range(0, limit);
  for (std::size_t i = 1; i < recs.size(); ++i) {
    if (recs[i].value == recs[i - 1].value + 2) out.emplace_back(recs[i - 1].value, recs[i].value);
  }
  return out;
}

void write_record_cache(std::ostream& out, const RecordSet& records) {
  out << "# a=3 records\n";
  for (const Record& r : records.records()) out << r.value << '\n';
}

RecordSet read_record_cache(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty record cache");
  ++line_no;
  if (line != "# a=3 records") throw ParseError(line_no, "expected header '# a=3 records'");

  std::vector<Record> out;
  std::uint64_t expected_t = 4;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::size_t pos = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(line, &pos);
    } catch (const std::exception&) {
      throw ParseError(line_no, "not a decimal record value: '" + line + "'");
    }
    if (pos != line.size()) throw ParseError(line_no, "trailing characters: '" + line + "'");
    if (!out.empty() && value <= out.back().value) throw ParseError(line_no, "values not increasing");
    if (value <= expected_t) throw ParseError(line_no, "record below its turning point");
    out.push_back({value, expected_t, value - expected_t, !is_prime(value)});
    expected_t = value + 1;
  }
  return RecordSet(std::move(out));
}

void write_records_csv(std::ostream& out, const RecordSet& records) {
  out << "index,record,turning_point,jump,is_composite\n";
  std::size_t index = 1;
  for (const Record& r : records.records()) {
    out << index++ << ',' << r.value << ',' << r.turning_point << ',' << r.jump << ','
        << (r.is_composite ? 1 : 0) << '\n';
  }
}

}  // namespace gcdperm
