#include "doctest.h"

#include <stdexcept>

#include "gcdperm/arith.hpp"
#include "oracles.hpp"

using namespace gcdperm;

TEST_CASE("is_prime agrees with trial division below 10^5") {
  for (std::uint64_t n = 0; n < 100'000; ++n) REQUIRE(is_prime(n) == oracle::trial_prime(n));
}

TEST_CASE("is_prime on large and adversarial inputs") {
  CHECK(is_prime(2305843009213693951ULL));       // 2^61 - 1
  CHECK(is_prime(18446744073709551557ULL));      // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551615ULL));
  CHECK_FALSE(is_prime(3215031751ULL));          // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL)); // strong pseudoprime to the first nine prime bases
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(4294967297ULL));          // 641 * 6700417
}

TEST_CASE("smallest_prime_nondivisor") {
  CHECK(smallest_prime_nondivisor(1) == 2);
  CHECK(smallest_prime_nondivisor(2) == 3);
  CHECK(smallest_prime_nondivisor(6) == 5);
  CHECK(smallest_prime_nondivisor(12) == 5);
  CHECK(smallest_prime_nondivisor(30) == 7);
  CHECK(smallest_prime_nondivisor(210) == 11);
  CHECK(smallest_prime_nondivisor(2310) == 13);
  CHECK(smallest_prime_nondivisor(614889782588491410ULL) == 53);  // p_15#
  CHECK_THROWS_AS(smallest_prime_nondivisor(0), std::invalid_argument);

  for (std::uint64_t x = 1; x < 5000; ++x) {
    std::uint64_t q = 2;
    while (x % q == 0 || !oracle::trial_prime(q)) ++q;
    REQUIRE(smallest_prime_nondivisor(x) == q);
  }
}

TEST_CASE("PrimeSieve matches trial division") {
  PrimeSieve sieve(20'000);
  for (std::uint64_t n = 0; n <= 20'000; ++n) REQUIRE(sieve.is_prime(n) == oracle::trial_prime(n));
  const auto all = sieve.primes();
  CHECK(all.size() == 2262);
  CHECK(all.front() == 2);
  CHECK(sieve.primes_in(90, 110) == std::vector<std::uint64_t>{97, 101, 103, 107, 109});
  CHECK(sieve.primes_in(24, 28).empty());
}

TEST_CASE("twin primes and first primes") {
  using P = std::pair<std::uint64_t, std::uint64_t>;
  CHECK(twin_primes(20) == std::vector<P>{{3, 5}, {5, 7}, {11, 13}, {17, 19}});
  CHECK(twin_primes(4).empty());
  CHECK(first_primes(8) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(first_primes(0).empty());
}
