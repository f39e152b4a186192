#include "gcdperm/arith.hpp"

#include <array>
#include <stdexcept>

namespace gcdperm {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr std::array<std::uint64_t, 16> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19,
                                                        23, 29, 31, 37, 41, 43, 47, 53};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                          31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::span<const std::uint64_t> small_primes() { return kSmallPrimes; }

std::uint64_t smallest_prime_nondivisor(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("smallest_prime_nondivisor: every prime divides 0");
  for (std::uint64_t p : kSmallPrimes) {
    if (x % p != 0) return p;
  }
  // Unreachable: the product of kSmallPrimes exceeds 2^64.
  throw std::logic_error("smallest_prime_nondivisor: small prime table exhausted");
}

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), odd_composite_(limit / 2 + 1, false) {
  odd_composite_[0] = true;  // 1
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (odd_composite_[p / 2]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) odd_composite_[m / 2] = true;
  }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("PrimeSieve::is_prime: beyond sieve limit");
  if (n == 2) return true;
  if (n < 2 || n % 2 == 0) return false;
  return !odd_composite_[n / 2];
}

std::vector<std::uint64_t> PrimeSieve::primes() const { return primes_in(0, limit_); }

std::vector<std::uint64_t> PrimeSieve::primes_in(std::uint64_t lo, std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  if (hi > limit_) hi = limit_;
  if (lo <= 2 && hi >= 2) out.push_back(2);
  std::uint64_t start = lo < 3 ? 3 : (lo | 1);
  for (std::uint64_t n = start; n <= hi; n += 2) {
    if (!odd_composite_[n / 2]) out.push_back(n);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_primes(std::uint64_t limit) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (limit < 5) return out;
  PrimeSieve sieve(limit);
  for (std::uint64_t p = 3; p + 2 <= limit; p += 2) {
    if (sieve.is_prime(p) && sieve.is_prime(p + 2)) out.emplace_back(p, p + 2);
  }
  return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t n = 2; out.size() < count; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

}  // namespace gcdperm
