#pragma once

// Independent reference computations for the unit and acceptance tests. None
// of these touch the library's generation or record machinery.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

// f_a(1..n) straight from the definition: scan upward from 2 for the least
// unused value coprime to the previous term. Returned 1-indexed (slot 0 unused).
inline std::vector<std::uint64_t> naive_prefix(std::uint64_t a, std::size_t n) {
  std::vector<std::uint64_t> f{0, 1, a};
  std::vector<bool> used(2 * n + a + 64, false);
  used[1] = used[a] = true;
  std::uint64_t lowest_free = 2;
  while (f.size() <= n) {
    while (used[lowest_free]) ++lowest_free;
    std::uint64_t v = lowest_free;
    while (used[v] || std::gcd(v, f.back()) != 1) ++v;
    if (v >= used.size()) used.resize(2 * v, false);
    used[v] = true;
    f.push_back(v);
  }
  f.resize(n + 1);
  return f;
}

// OEIS A085229: x_1 = 1, x_n the least unused x coprime to both n and x_{n-1}.
inline std::vector<std::uint64_t> intrinsic_a085229(std::size_t n) {
  std::vector<std::uint64_t> x{0, 1};
  std::vector<bool> used(4 * n + 64, false);
  used[1] = true;
  std::uint64_t lowest_free = 2;
  for (std::uint64_t i = 2; i <= n; ++i) {
    while (used[lowest_free]) ++lowest_free;
    std::uint64_t v = lowest_free;
    while (used[v] || std::gcd(v, i) != 1 || std::gcd(v, x.back()) != 1) ++v;
    used[v] = true;
    x.push_back(v);
  }
  return x;
}

// Records of f from the definition of a turning point, read off a naive prefix.
inline std::vector<std::uint64_t> naive_records(const std::vector<std::uint64_t>& f) {
  std::vector<std::uint64_t> out;
  for (std::size_t t = 4; t < f.size(); ++t) {
    if (f[t] > f[t - 1] + 1) out.push_back(f[t]);
  }
  return out;
}

inline bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Count of a <= X of the form m * p_n# + 6t with n >= 4, m >= 1 and
// 1 <= t <= floor((p_{n+1} - 2) / 6), by direct enumeration of (n, m, t).
inline std::uint64_t brute_not_nice_count(std::uint64_t X) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; primes.size() < 16; ++p) {
    if (trial_prime(p)) primes.push_back(p);
  }
  std::vector<bool> hit(X + 1, false);
  std::uint64_t primorial = 1;
  for (std::size_t n = 1; n + 1 < primes.size(); ++n) {
    primorial *= primes[n - 1];
    if (n < 4) continue;
    if (primorial > X) break;
    const std::uint64_t t_max = (primes[n] - 2) / 6;
    for (std::uint64_t m = 1; m * primorial <= X; ++m) {
      for (std::uint64_t t = 1; t <= t_max; ++t) {
        const std::uint64_t a = m * primorial + 6 * t;
        if (a <= X) hit[a] = true;
      }
    }
  }
  std::uint64_t count = 0;
  for (bool b : hit) count += b;
  return count;
}

}  // namespace oracle
