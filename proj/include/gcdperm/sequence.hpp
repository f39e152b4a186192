#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gcdperm {

// Default cap on the number of terms a single buffer may hold.
inline constexpr std::size_t kDefaultMaxTerms = 50'000'000;

/// Seed of the map f_a: f(1) = 1, f(2) = a.
class Params {
 public:
  explicit Params(std::uint64_t a);
  std::uint64_t a() const { return a_; }

 private:
  std::uint64_t a_;
};

/**
 * Materialized prefix f_a(1..N) of the permutation defined by
 *
 *   f(1) = 1, f(2) = a,
 *   f(n) = least value not among f(1..n-1) that is coprime to f(n-1).
 *
 * Unassigned values are tracked in two parts: every value >= frontier() is
 * unassigned except the few held in the "ahead" set (only the seed a can sit
 * there), and the values below frontier() that are still unassigned form the
 * pool, kept sorted. Between records the pool stays tiny, so extend() is close
 * to O(1) amortized.
 *
 * Indexing is 1-based throughout: at(1) == 1, at(2) == a.
 */
class SequenceBuffer {
 public:
  explicit SequenceBuffer(Params params);

  std::uint64_t a() const { return a_; }
  std::size_t size() const { return terms_.size(); }

  /// f(n) for 1 <= n <= size(); throws std::out_of_range otherwise.
  std::uint64_t at(std::size_t n) const;
  std::uint64_t back() const { return terms_.back(); }

  /// Terms as a 0-based span: terms()[n-1] == f(n).
  std::span<const std::uint64_t> terms() const { return terms_; }

  /// Appends and returns f(size()+1).
  std::uint64_t extend();

  /// Extends until size() >= n.
  void extend_to(std::size_t n);

  /// Index n with f(n) == v, if v is already assigned.
  std::optional<std::size_t> inverse(std::uint64_t v) const;

  /// Forward difference f(t+1) - f(t); requires t+1 <= size().
  std::int64_t discrete_derivative(std::size_t t) const;

  /// True iff {1..n} is contained in {f(1..size())}.
  bool prefix_surjective_upto(std::uint64_t n) const;

  /// True iff {f(1..size())} == {1..size()}.
  bool prefix_complete() const;

  std::uint64_t frontier() const { return frontier_; }
  std::span<const std::uint64_t> pool() const { return pool_; }
  std::size_t max_pool_size() const { return max_pool_size_; }

 private:
  void assign(std::uint64_t v);
  bool is_ahead(std::uint64_t v) const;

  std::uint64_t a_;
  std::vector<std::uint64_t> terms_;
  // position_[v] = n with f(n) == v, 0 if unassigned; covers v < frontier_.
  std::vector<std::uint64_t> position_;
  std::vector<std::uint64_t> pool_;
  // Assigned values >= frontier_, as (value, index) sorted by value.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ahead_;
  std::uint64_t frontier_ = 1;
  std::size_t max_pool_size_ = 0;
};

/// Buffer holding f_a(1..n). Requires a >= 2 and n >= 2; throws
/// ResourceLimitError when n exceeds max_terms.
SequenceBuffer generate_prefix(std::uint64_t a, std::size_t n,
                               std::size_t max_terms = kDefaultMaxTerms);

}  // namespace gcdperm
