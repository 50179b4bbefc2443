#include <numeric>

#include "doctest.h"
#include "steiner4/number_theory.hpp"

using namespace steiner4;

namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_prime(n));
  CHECK(is_prime(1'000'000'007ull));
  CHECK_FALSE(is_prime(1'000'000'007ull * 3));
}

TEST_CASE("prime_power recovers p and e") {
  for (std::uint64_t n = 2; n < 3000; ++n) {
    std::optional<PrimePower> brute;
    for (std::uint64_t p = 2; p <= n && !brute; ++p) {
      if (!trial_prime(p)) continue;
      std::uint64_t x = 1;
      std::uint32_t e = 0;
      while (x < n) {
        x *= p;
        ++e;
      }
      if (x == n) brute = PrimePower{p, e};
    }
    const auto got = prime_power(n);
    REQUIRE(got.has_value() == brute.has_value());
    if (got) {
      CHECK(got->p == brute->p);
      CHECK(got->e == brute->e);
    }
  }
  CHECK_FALSE(prime_power(0));
  CHECK_FALSE(prime_power(1));
}

TEST_CASE("divisors and prime divisors") {
  for (std::uint64_t n = 1; n < 500; ++n) {
    std::vector<std::uint64_t> brute;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) brute.push_back(d);
    CHECK(divisors(n) == brute);
    std::vector<std::uint64_t> primes;
    for (auto d : brute)
      if (trial_prime(d)) primes.push_back(d);
    CHECK(prime_divisors(n) == primes);
  }
}

TEST_CASE("isqrt and ipow") {
  for (std::uint64_t n = 0; n < 100000; n += 7) {
    const auto s = isqrt(n);
    CHECK(s * s <= n);
    CHECK((s + 1) * (s + 1) > n);
  }
  CHECK(isqrt(std::numeric_limits<std::uint64_t>::max()) == 4294967295ull);
  CHECK(ipow(3, 13) == 1594323);
  CHECK(ipow(7, 0) == 1);
}

TEST_CASE("binomial matches Pascal's triangle") {
  std::vector<std::vector<BigInt>> pascal(61);
  for (std::size_t n = 0; n <= 60; ++n) {
    pascal[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (std::uint64_t n = 0; n <= 60; ++n)
    for (std::uint64_t k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("prime_powers_in is ascending and complete") {
  const auto pps = prime_powers_in(4, 130);
  std::vector<std::uint64_t> got;
  for (const auto& pp : pps) got.push_back(ipow(pp.p, pp.e));
  std::vector<std::uint64_t> brute;
  for (std::uint64_t n = 4; n <= 130; ++n)
    if (prime_power(n)) brute.push_back(n);
  CHECK(got == brute);
  CHECK(std::is_sorted(got.begin(), got.end()));
}
