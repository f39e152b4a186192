#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gcdperm {

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// The first sixteen primes. Their product exceeds 2^64, so every nonzero
// 64-bit value has a non-divisor among them.
std::span<const std::uint64_t> small_primes();

// Smallest prime that does not divide x. Requires x > 0.
std::uint64_t smallest_prime_nondivisor(std::uint64_t x);

/// Sieve of Eratosthenes over [0, limit], odd numbers only.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const;

  /// All primes p <= limit, ascending.
  std::vector<std::uint64_t> primes() const;
  std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const;

 private:
  std::uint64_t limit_;
  std::vector<bool> odd_composite_;  // index i <-> 2i+1
};

// Twin prime pairs (p, p+2) with p+2 <= limit, ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_primes(std::uint64_t limit);

// p_1 = 2, p_2 = 3, ... ; the first `count` primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

}  // namespace gcdperm
