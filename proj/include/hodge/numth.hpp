#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hodge::numth {

using BigInt = boost::multiprecision::cpp_int;

// nu_2(n!) by De Polignac: sum of floor(n / 2^i).
constexpr std::uint64_t factorial_two_adic(std::uint64_t n) {
  std::uint64_t v = 0;
  while (n > 0) {
    n >>= 1;
    v += n;
  }
  return v;
}

// nu_p(C(2z, z)) by Legendre; equals the number of carries when adding z + z in base p.
constexpr std::uint64_t central_binomial_valuation(std::uint64_t z, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::uint64_t pk = p; pk <= 2 * z; pk *= p) {
    v += (2 * z) / pk - 2 * (z / pk);
    if (pk > (2 * z) / p) break;
  }
  return v;
}

// Kummer: carries of z + z in base 2 = popcount(z).
constexpr unsigned central_binomial_two_adic(std::uint64_t z) {
  return static_cast<unsigned>(std::popcount(z));
}

// C(2z, z) mod 4 via the carry count. C(2z, z) is even for z >= 1, so the
// residue is 2 exactly when the 2-adic valuation is 1.
inline int central_binomial_mod4(std::uint64_t z) {
  if (z == 0) throw std::invalid_argument("central_binomial_mod4: z must be positive");
  return central_binomial_two_adic(z) == 1 ? 2 : 0;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt central_binomial_of_power(unsigned k) {
  return binomial(std::uint64_t{1} << k, std::uint64_t{1} << (k - 1));
}

// Least k in [3, k_max] with C(2^k, 2^(k-1)) == target. For k >= 7 the value
// exceeds 2^64, so only k <= 6 can match a 64-bit target.
inline std::optional<unsigned> central_binomial_solve(std::uint64_t target, unsigned k_max) {
  if (k_max < 3) throw std::invalid_argument("central_binomial_solve: k_max must be at least 3");
  const unsigned hi = k_max < 7 ? k_max : 7;
  for (unsigned k = 3; k <= hi; ++k) {
    BigInt c = central_binomial_of_power(k);
    if (c == target) return k;
    if (c > target) break;
  }
  return std::nullopt;
}

class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit) : composite_(limit + 1, false) {
    composite_[0] = true;
    if (limit >= 1) composite_[1] = true;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
      if (!composite_[i])
        for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
  }

  std::uint64_t limit() const { return composite_.size() - 1; }
  bool is_prime(std::uint64_t x) const { return !composite_.at(x); }

  std::uint64_t count_upto(std::uint64_t x) const {
    std::uint64_t c = 0;
    for (std::uint64_t i = 2; i <= x; ++i)
      if (!composite_[i]) ++c;
    return c;
  }

  std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = lo; i <= hi; ++i)
      if (i >= 2 && !composite_[i]) out.push_back(i);
    return out;
  }

 private:
  std::vector<bool> composite_;
};

// pi(2^k) - pi(2^(k-1)).
inline std::uint64_t prime_count_gap(unsigned k) {
  if (k < 1 || k > 40) throw std::invalid_argument("prime_count_gap: k out of range");
  const std::uint64_t hi = std::uint64_t{1} << k;
  PrimeSieve sieve(hi);
  return sieve.primes_in((hi >> 1) + 1, hi).size();
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Prime factorization as ordered prime -> exponent.
using Factorization = std::map<std::uint64_t, std::uint64_t>;

// Every prime factor of C(2z, z) is at most 2z, so Legendre over the primes
// up to 2z gives the full factorization without big-integer division.
inline Factorization central_binomial_factorization(std::uint64_t z, const PrimeSieve& sieve) {
  if (sieve.limit() < 2 * z) throw std::invalid_argument("sieve too small");
  Factorization f;
  for (std::uint64_t p : sieve.primes_in(2, 2 * z)) {
    auto v = central_binomial_valuation(z, p);
    if (v) f[p] = v;
  }
  return f;
}

inline BigInt expand(const Factorization& f) {
  BigInt r = 1;
  for (auto [p, e] : f)
    for (std::uint64_t i = 0; i < e; ++i) r *= p;
  return r;
}

inline std::uint64_t omega_total(const Factorization& f) {
  std::uint64_t s = 0;
  for (auto [p, e] : f) s += e;
  return s;
}

inline std::string format_factorization(const Factorization& f) {
  std::string s;
  for (auto [p, e] : f) {
    if (!s.empty()) s += "*";
    s += std::to_string(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

struct HalfBinomialWitness {
  unsigned k;
  Factorization factors;  // of C(2^k, 2^(k-1)) / 2
  bool composite;
  bool expansion_checked;  // product recomputed against the big-integer binomial
};

struct HalfBinomialReport {
  bool all_composite;
  std::vector<HalfBinomialWitness> witnesses;
};

// For every 3 <= k <= k_max, C(2^k, 2^(k-1))/2 is composite, so it is never
// twice a prime.
inline HalfBinomialReport no_prime_double_is_central_binomial(unsigned k_max) {
  if (k_max < 3 || k_max > 24) throw std::invalid_argument("k_max out of range");
  PrimeSieve sieve(std::uint64_t{1} << k_max);
  HalfBinomialReport rep{true, {}};
  for (unsigned k = 3; k <= k_max; ++k) {
    const std::uint64_t z = std::uint64_t{1} << (k - 1);
    auto f = central_binomial_factorization(z, sieve);
    if (--f[2] == 0) f.erase(2);
    HalfBinomialWitness w{k, f, omega_total(f) >= 2, false};
    if (k <= 8) {
      if (expand(f) * 2 != central_binomial_of_power(k))
        throw std::logic_error("central binomial factorization mismatch");
      w.expansion_checked = true;
    }
    rep.all_composite = rep.all_composite && w.composite;
    rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

inline bool is_power_of_two(std::uint64_t z) { return z != 0 && (z & (z - 1)) == 0; }

// Least r with 2^r >= x.
constexpr unsigned ceil_log2(std::uint64_t x) {
  unsigned r = 0;
  while ((std::uint64_t{1} << r) < x) ++r;
  return r;
}

}  // namespace hodge::numth
