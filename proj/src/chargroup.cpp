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

#include "charmean/chargroup.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace charmean {

__extension__ using Wide = unsigned __int128;

namespace {

std::complex<double> unit_root(std::uint64_t num, std::uint64_t den) {
  num %= den;
  if ((4 * num) % den == 0) {
    switch ((4 * num) / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

std::uint64_t smallest_primitive_root(std::uint64_t p, unsigned alpha) {
  const std::uint64_t pe = PrimePower{p, alpha}.value();
  const std::uint64_t order = (p - 1) * (pe / p);
  std::vector<std::uint64_t> ells;
  for (const auto& pp : factorize(p - 1).factors) ells.push_back(pp.prime);
  if (alpha >= 2) ells.push_back(p);
  for (std::uint64_t g = 2; g < pe; ++g) {
    if (g % p == 0) continue;
    bool primitive = true;
    for (std::uint64_t ell : ells) {
      if (pow_mod(g, order / ell, pe) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw std::logic_error("no primitive root found");
}

// x = g (mod u), x = 1 (mod v), for gcd(u, v) = 1.
std::uint64_t crt_lift(std::uint64_t g, std::uint64_t u, std::uint64_t v) {
  if (u == 1) return 1 % (u * v);
  if (v == 1) return g % u;
  const std::uint64_t t = mul_mod((g + u - 1) % u, inverse_mod(v % u, u), u);
  return 1 + v * t;
}

// Exponent k on a component of order `order` with e(k / order) = e(j / exponent).
std::uint64_t phase_to_exponent(std::uint64_t j, std::uint64_t exponent, std::uint64_t order) {
  const Wide scaled = static_cast<Wide>(j) * order;
  if (scaled % exponent != 0) throw std::logic_error("character value outside component roots");
  return static_cast<std::uint64_t>(scaled / exponent) % order;
}

}  // namespace

CharacterGroup::CharacterGroup(std::uint64_t q) : modulus_(q) {
  if (q == 0) throw std::domain_error("build_group: modulus must be >= 1");
  factorization_ = factorize(q);
  for (const auto& pp : factorization_.factors) {
    const std::uint64_t pe = pp.value();
    auto make = [&](std::uint64_t generator, std::uint64_t order) {
      CyclicComponent c;
      c.prime = pp.prime;
      c.alpha = pp.exponent;
      c.factor_modulus = pe;
      c.generator = generator % pe;
      c.order = order;
      c.lifted_generator = crt_lift(generator % pe, pe, q / pe);
      c.dlog.assign(pe, -1);
      return c;
    };
    if (pp.prime == 2 && pp.exponent >= 3) {
      CyclicComponent minus_one = make(pe - 1, 2);
      CyclicComponent five = make(5, pe / 4);
      std::uint64_t x = 1;
      for (std::uint64_t b = 0; b < five.order; ++b) {
        minus_one.dlog[x] = 0;
        five.dlog[x] = static_cast<std::int64_t>(b);
        minus_one.dlog[pe - x] = 1;
        five.dlog[pe - x] = static_cast<std::int64_t>(b);
        x = x * 5 % pe;
      }
      components_.push_back(std::move(minus_one));
      components_.push_back(std::move(five));
      continue;
    }
    std::uint64_t generator = 1;
    if (pp.prime == 2) {
      generator = pp.exponent == 1 ? 1 : 3;
    } else {
      generator = smallest_primitive_root(pp.prime, pp.exponent);
    }
    CyclicComponent c = make(generator, euler_phi(Factorization{pe, {pp}}));
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < c.order; ++k) {
      c.dlog[x] = static_cast<std::int64_t>(k);
      x = mul_mod(x, c.generator, pe);
    }
    components_.push_back(std::move(c));
  }
  for (const auto& c : components_) {
    size_ *= c.order;
    exponent_ = std::lcm(exponent_, c.order);
  }
  roots_.resize(exponent_);
  for (std::uint64_t j = 0; j < exponent_; ++j) roots_[j] = unit_root(j, exponent_);
  additive_roots_.resize(q);
  for (std::uint64_t a = 0; a < q; ++a) additive_roots_[a] = unit_root(a, q);
}

std::shared_ptr<const CharacterGroup> CharacterGroup::build(std::uint64_t q) {
  return std::make_shared<const CharacterGroup>(q);
}

std::uint64_t CharacterGroup::reduce(std::int64_t n) const {
  const auto q = static_cast<std::int64_t>(modulus_);
  return static_cast<std::uint64_t>(((n % q) + q) % q);
}

std::optional<std::vector<std::uint64_t>> CharacterGroup::dlog(std::int64_t n) const {
  const std::uint64_t r = reduce(n);
  if (std::gcd(r, modulus_) != 1) return std::nullopt;
  std::vector<std::uint64_t> out;
  out.reserve(components_.size());
  for (const auto& c : components_) {
    out.push_back(static_cast<std::uint64_t>(c.dlog[r % c.factor_modulus]));
  }
  return out;
}

std::uint64_t CharacterGroup::exponentiate(std::span<const std::uint64_t> exponents) const {
  std::uint64_t x = 1 % modulus_;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    x = mul_mod(x, pow_mod(components_[i].lifted_generator, exponents[i], modulus_), modulus_);
  }
  return x;
}

std::uint64_t CharacterGroup::index_of(std::span<const std::uint64_t> exponents) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    index = index * components_[i].order + exponents[i];
  }
  return index;
}

Character CharacterGroup::character(std::uint64_t index) const {
  if (index >= size_) {
    throw std::out_of_range("character index " + std::to_string(index) + " out of range");
  }
  std::vector<std::uint64_t> exps(components_.size());
  for (std::size_t i = components_.size(); i-- > 0;) {
    exps[i] = index % components_[i].order;
    index /= components_[i].order;
  }
  return Character(shared_from_this(), std::move(exps));
}

Character CharacterGroup::character(std::vector<std::uint64_t> exponents) const {
  return Character(shared_from_this(), std::move(exponents));
}

Character CharacterGroup::principal() const { return character(0); }

std::vector<Character> CharacterGroup::enumerate() const {
  std::vector<Character> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(character(i));
  return out;
}

std::optional<std::uint64_t> CharacterGroup::phase(std::span<const std::uint64_t> exponents,
                                                   std::int64_t n) const {
  const std::uint64_t r = reduce(n);
  std::uint64_t j = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    const std::int64_t log = c.dlog[r % c.factor_modulus];
    if (log < 0) return std::nullopt;
    const std::uint64_t k = mul_mod(exponents[i], static_cast<std::uint64_t>(log), c.order);
    j = (j + mul_mod(k, exponent_ / c.order, exponent_)) % exponent_;
  }
  return j;
}

std::uint64_t CharacterGroup::conductor(std::span<const std::uint64_t> exponents) const {
  std::uint64_t f = 1;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.prime == 2 && c.alpha >= 3) {
      // <-1> at i, <5> at i + 1. A character of order 2^j on <5> has
      // conductor 2^(j+2); otherwise only the sign can be nontrivial.
      const auto& five = components_[i + 1];
      if (exponents[i + 1] != 0) {
        f *= 4 * (five.order / std::gcd(exponents[i + 1], five.order));
      } else if (exponents[i] != 0) {
        f *= 4;
      }
      ++i;
      continue;
    }
    if (exponents[i] == 0) continue;
    // Order o = o' p^j with o' | p - 1 gives conductor p^(j+1).
    std::uint64_t o = c.order / std::gcd(exponents[i], c.order);
    std::uint64_t fp = c.prime;
    while (o % c.prime == 0) {
      o /= c.prime;
      fp *= c.prime;
    }
    f *= fp;
  }
  return f;
}

Character::Character(std::shared_ptr<const CharacterGroup> group, std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const auto comps = group_->components();
  if (exponents_.size() != comps.size()) {
    throw std::invalid_argument("character: exponent tuple has wrong length");
  }
  for (std::size_t i = 0; i < comps.size(); ++i) exponents_[i] %= comps[i].order;
  conductor_ = group_->conductor(exponents_);
}

std::complex<double> Character::evaluate(std::int64_t n) const {
  const auto j = group_->phase(exponents_, n);
  if (!j) return {0.0, 0.0};
  return group_->root(*j);
}

std::vector<std::complex<double>> Character::value_table() const {
  const std::uint64_t q = modulus();
  std::vector<std::complex<double>> table(q);
  for (std::uint64_t n = 0; n < q; ++n) table[n] = evaluate(static_cast<std::int64_t>(n));
  return table;
}

bool Character::is_principal() const {
  for (auto k : exponents_) {
    if (k != 0) return false;
  }
  return true;
}

std::uint64_t Character::order() const {
  std::uint64_t o = 1;
  const auto comps = group_->components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    o = std::lcm(o, comps[i].order / std::gcd(exponents_[i], comps[i].order));
  }
  return o;
}

bool Character::operator==(const Character& other) const {
  return modulus() == other.modulus() && exponents_ == other.exponents_;
}

Character multiply(const Character& a, const Character& b) {
  if (a.modulus() != b.modulus()) throw std::domain_error("multiply: characters have different moduli");
  const auto comps = a.group().components();
  std::vector<std::uint64_t> exps(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    exps[i] = (a.exponents()[i] + b.exponents()[i]) % comps[i].order;
  }
  return Character(a.group_ptr(), std::move(exps));
}

Character conjugate(const Character& chi) {
  const auto comps = chi.group().components();
  std::vector<std::uint64_t> exps(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    exps[i] = (comps[i].order - chi.exponents()[i]) % comps[i].order;
  }
  return Character(chi.group_ptr(), std::move(exps));
}

Character induce(const Character& chi, const std::shared_ptr<const CharacterGroup>& target) {
  const std::uint64_t d = chi.modulus();
  const std::uint64_t q = target->modulus();
  if (q % d != 0) {
    throw std::domain_error("induce: modulus " + std::to_string(d) + " does not divide " + std::to_string(q));
  }
  const auto& source = chi.group();
  const auto comps = target->components();
  std::vector<std::uint64_t> exps(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto j = source.phase(chi.exponents(), static_cast<std::int64_t>(comps[i].lifted_generator % d));
    exps[i] = phase_to_exponent(j.value(), source.exponent(), comps[i].order);
  }
  return Character(target, std::move(exps));
}

Character induce(const Character& chi, std::uint64_t q) {
  if (q == 0 || q % chi.modulus() != 0) {
    throw std::domain_error("induce: modulus " + std::to_string(chi.modulus()) + " does not divide " +
                            std::to_string(q));
  }
  return induce(chi, CharacterGroup::build(q));
}

std::pair<Character, Character> crt_factor(const Character& chi, std::uint64_t u, std::uint64_t v) {
  if (u == 0 || v == 0 || std::gcd(u, v) != 1) throw std::domain_error("crt_factor: u and v must be coprime");
  if (u * v != chi.modulus()) throw std::domain_error("crt_factor: u * v must equal the modulus");
  const auto& group = chi.group();
  auto restrict_to = [&](std::uint64_t part, std::uint64_t other) {
    auto sub = CharacterGroup::build(part);
    const auto comps = sub->components();
    std::vector<std::uint64_t> exps(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::uint64_t x = crt_lift(comps[i].lifted_generator, part, other);
      const auto j = group.phase(chi.exponents(), static_cast<std::int64_t>(x));
      exps[i] = phase_to_exponent(j.value(), group.exponent(), comps[i].order);
    }
    return Character(sub, std::move(exps));
  };
  return {restrict_to(u, v), restrict_to(v, u)};
}

}  // namespace charmean
