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

#ifndef CHARMEAN_CHARGROUP_HPP
#define CHARMEAN_CHARGROUP_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "charmean/arith.hpp"

namespace charmean {

class Character;

/// One cyclic factor of (Z/qZ)*. Odd prime powers and 2, 4 contribute one
/// component each; 2^alpha with alpha >= 3 contributes <-1> and <5>.
struct CyclicComponent {
  std::uint64_t prime = 0;
  unsigned alpha = 0;
  std::uint64_t factor_modulus = 1;  // p^alpha
  std::uint64_t generator = 1;       // residue mod p^alpha
  std::uint64_t order = 1;
  std::uint64_t lifted_generator = 1;  // generator mod p^alpha, 1 mod q / p^alpha
  // dlog[x] is the exponent of x on this generator for units x mod p^alpha,
  // -1 for non-units.
  std::vector<std::int64_t> dlog;
};

/// The dual group of (Z/qZ)*. Immutable after build and safe to share
/// across threads.
class CharacterGroup : public std::enable_shared_from_this<CharacterGroup> {
 public:
  /// Throws std::domain_error for q == 0.
  static std::shared_ptr<const CharacterGroup> build(std::uint64_t q);

  std::uint64_t modulus() const { return modulus_; }
  const Factorization& factorization() const { return factorization_; }
  std::span<const CyclicComponent> components() const { return components_; }

  /// phi(q), the number of characters.
  std::uint64_t size() const { return size_; }
  /// Least common multiple of the component orders; every character value
  /// is a power of e(1/exponent()).
  std::uint64_t exponent() const { return exponent_; }

  /// e(j / exponent()).
  std::complex<double> root(std::uint64_t j) const { return roots_[j % exponent_]; }
  /// e(a / q) for a in [0, q).
  std::span<const std::complex<double>> additive_roots() const { return additive_roots_; }

  /// Component-wise discrete logarithm of n, or nullopt when gcd(n, q) > 1.
  std::optional<std::vector<std::uint64_t>> dlog(std::int64_t n) const;
  /// Product of lifted generators raised to the given exponents, mod q.
  std::uint64_t exponentiate(std::span<const std::uint64_t> exponents) const;

  /// Characters are indexed by their exponent tuples read as mixed-radix
  /// numbers, first component most significant. Index 0 is principal.
  Character character(std::uint64_t index) const;
  Character character(std::vector<std::uint64_t> exponents) const;
  Character principal() const;
  /// All phi(q) characters in index order.
  std::vector<Character> enumerate() const;

  std::uint64_t index_of(std::span<const std::uint64_t> exponents) const;

  /// Phase index j with chi(n) = e(j / exponent()), or nullopt when
  /// gcd(n, q) > 1.
  std::optional<std::uint64_t> phase(std::span<const std::uint64_t> exponents, std::int64_t n) const;

  /// Conductor of the character with the given exponents.
  std::uint64_t conductor(std::span<const std::uint64_t> exponents) const;

  // Use build().
  explicit CharacterGroup(std::uint64_t q);

 private:
  std::uint64_t reduce(std::int64_t n) const;

  std::uint64_t modulus_;
  Factorization factorization_;
  std::vector<CyclicComponent> components_;
  std::uint64_t size_ = 1;
  std::uint64_t exponent_ = 1;
  std::vector<std::complex<double>> roots_;
  std::vector<std::complex<double>> additive_roots_;
};

/// One Dirichlet character, stored as exponents against the generators of
/// its group. Cheap to copy.
class Character {
 public:
  Character(std::shared_ptr<const CharacterGroup> group, std::vector<std::uint64_t> exponents);

  const CharacterGroup& group() const { return *group_; }
  const std::shared_ptr<const CharacterGroup>& group_ptr() const { return group_; }
  std::uint64_t modulus() const { return group_->modulus(); }
  std::span<const std::uint64_t> exponents() const { return exponents_; }
  std::uint64_t index() const { return group_->index_of(exponents_); }

  std::complex<double> operator()(std::int64_t n) const { return evaluate(n); }
  std::complex<double> evaluate(std::int64_t n) const;
  /// chi(n) for n = 0 .. q-1.
  std::vector<std::complex<double>> value_table() const;

  std::uint64_t conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == modulus(); }
  bool is_principal() const;
  /// Multiplicative order of the character.
  std::uint64_t order() const;

  bool operator==(const Character& other) const;

 private:
  std::shared_ptr<const CharacterGroup> group_;
  std::vector<std::uint64_t> exponents_;
  std::uint64_t conductor_ = 1;
};

Character multiply(const Character& a, const Character& b);
Character conjugate(const Character& chi);
inline bool is_principal(const Character& chi) { return chi.is_principal(); }

/// The character mod q induced by chi mod d (chi times the principal
/// character mod q). Throws std::domain_error unless d | q.
Character induce(const Character& chi, std::uint64_t q);
Character induce(const Character& chi, const std::shared_ptr<const CharacterGroup>& target);

/// The unique pair (chi_u, chi_v) with chi = chi_u * chi_v on units.
/// Requires q = u * v with gcd(u, v) = 1.
std::pair<Character, Character> crt_factor(const Character& chi, std::uint64_t u, std::uint64_t v);

}  // namespace charmean

#endif  // CHARMEAN_CHARGROUP_HPP
