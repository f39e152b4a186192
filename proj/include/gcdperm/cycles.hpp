#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcdperm/sequence.hpp"

namespace gcdperm {

/// A finite cycle c_1 -> c_2 -> ... -> c_m -> c_1 of f. Stored starting at its
/// largest element, which for f_3 is the record: (11, 10, 9, 8).
struct Cycle {
  std::vector<std::uint64_t> elements;
  std::uint64_t index = 0;  // 1-based among nontrivial cycles; 0 for fixed points

  std::uint64_t min_element() const;
  std::string to_string() const;
};

struct CycleDecomposition {
  std::uint64_t a = 0;
  std::uint64_t bound = 0;          // cycles with min element <= bound
  std::vector<Cycle> cycles;        // nontrivial, ordered by min element
  std::uint64_t fixed_points = 0;   // length-1 cycles with element <= bound

  std::string to_string() const;
};

/// Cycle decomposition of f_a over the cycles whose minimum is <= bound. The
/// prefix is extended as walks require; a walk that would need more than
/// max_terms terms throws IncompleteCycleError.
CycleDecomposition decompose(std::uint64_t a, std::uint64_t bound,
                             std::size_t max_terms = kDefaultMaxTerms);

/// Same, reusing (and extending) a caller-owned buffer.
CycleDecomposition decompose(SequenceBuffer& buffer, std::uint64_t bound,
                             std::size_t max_terms = kDefaultMaxTerms);

/// Cycle number C(v) of every element that lies in a nontrivial cycle.
class CycleIndexMap {
 public:
  explicit CycleIndexMap(const CycleDecomposition& decomposition);

  /// Throws UnknownValueError if v is not in a decomposed nontrivial cycle.
  std::uint64_t at(std::uint64_t v) const;
  bool contains(std::uint64_t v) const;

 private:
  std::vector<std::uint32_t> index_;  // 0 = absent
};

std::uint64_t cycle_index(const CycleIndexMap& map, std::uint64_t v);

/// Cycle-index gaps between consecutive twin prime pairs (m_j, M_j):
///   gap_a = C(m_{j+1}) - C(M_j),  gap_b = C(M_{j+1}) - C(m_j).
struct TwinCycleGap {
  std::uint64_t j = 0;
  std::uint64_t m = 0;
  std::uint64_t M = 0;
  std::int64_t gap_a = 0;
  std::int64_t gap_b = 0;
};

/// One row per consecutive pair of twin primes with M_{j+1} <= limit, for f_3.
std::vector<TwinCycleGap> twin_cycle_gaps(std::uint64_t limit);

}  // namespace gcdperm
