/*
 * Copyright 2026 The charmean Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "charmean/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace charmean {

__extension__ using Wide = unsigned __int128;

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) {
    throw std::domain_error(std::string(what) + ": argument must be >= 1");
  }
}

}  // namespace

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % mod);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(mod);
  std::int64_t new_r = static_cast<std::int64_t>(a % mod);
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (r != 1) throw std::domain_error("inverse_mod: argument not invertible");
  if (t < 0) t += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
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

Factorization factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  Factorization f;
  f.modulus = n;
  std::uint64_t rest = n;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  };
  take(2);
  for (std::uint64_t p = 3; p <= rest / p; p += 2) {
    take(p);
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

int moebius(const Factorization& f) {
  for (const auto& pp : f.factors) {
    if (pp.exponent > 1) return 0;
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

int moebius(std::uint64_t n) { return moebius(factorize(n)); }

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& pp : f.factors) {
    phi *= (pp.prime - 1);
    for (unsigned i = 1; i < pp.exponent; ++i) phi *= pp.prime;
  }
  return phi;
}

std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : f.factors) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }

std::uint64_t primitive_count(std::uint64_t q) {
  require_positive(q, "primitive_count");
  std::int64_t total = 0;
  const auto f = factorize(q);
  for (std::uint64_t d : divisors(f)) {
    total += moebius(d) * static_cast<std::int64_t>(euler_phi(q / d));
  }
  return static_cast<std::uint64_t>(total);
}

std::int64_t primitive_char_sum(std::uint64_t q, std::int64_t r) {
  if (q < 2) throw std::domain_error("primitive_char_sum: q must be >= 2");
  const auto sq = static_cast<std::int64_t>(q);
  const std::int64_t r_mod = ((r % sq) + sq) % sq;
  if (std::gcd(static_cast<std::uint64_t>(r_mod), q) != 1) {
    throw std::domain_error("primitive_char_sum: r must be coprime to q");
  }
  const std::uint64_t shifted = static_cast<std::uint64_t>((r_mod - 1 + sq) % sq);
  const std::uint64_t g = std::gcd(q, shifted);
  std::int64_t total = 0;
  for (std::uint64_t d : divisors(g)) {
    total += moebius(q / d) * static_cast<std::int64_t>(euler_phi(d));
  }
  return total;
}

MNSplit split_mn(const Factorization& f) {
  MNSplit s;
  for (const auto& pp : f.factors) {
    if (pp.exponent == 1) {
      s.m_part *= pp.prime;
    } else {
      s.n_part *= pp.value();
    }
  }
  return s;
}

MNSplit split_mn(std::uint64_t q) {
  require_positive(q, "split_mn");
  return split_mn(factorize(q));
}

double harmonic(std::uint64_t t) {
  double sum = 0.0;
  for (std::uint64_t h = t; h >= 1; --h) sum += 1.0 / static_cast<double>(h);
  return sum;
}

}  // namespace charmean
