/*
   Copyright 2026 The maxmult Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAXMULT_RING_HPP
#define MAXMULT_RING_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace maxmult {

/// Hard cap on the number of ring variables, auxiliary elimination
/// variables included.
inline constexpr std::size_t kMaxVariables = 32;

using Exponent = std::uint16_t;

/// Exponent vector with cached total degree and support mask.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(const std::vector<unsigned>& exps) {
    if (exps.size() > kMaxVariables) throw Error("too many variables in monomial");
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  Exponent operator[](std::size_t i) const noexcept { return exp_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t support() const noexcept { return mask_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (i >= kMaxVariables) throw Error("variable index out of range");
    if (e > std::numeric_limits<Exponent>::max()) throw Error("exponent overflow");
    degree_ = degree_ - exp_[i] + e;
    exp_[i] = static_cast<Exponent>(e);
    if (e) mask_ |= (1u << i);
    else mask_ &= ~(1u << i);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = static_cast<unsigned>(a.exp_[i]) + b.exp_[i];
      if (e > std::numeric_limits<Exponent>::max()) throw Error("exponent overflow");
      r.exp_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  bool divides(const Monomial& other) const noexcept {
    if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  /// other / this; caller guarantees divisibility.
  Monomial quotient_of(const Monomial& other) const noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = static_cast<Exponent>(other.exp_[i] - exp_[i]);
      if (r.exp_[i]) r.mask_ |= (1u << i);
    }
    r.degree_ = other.degree_ - degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
      r.degree_ += r.exp_[i];
    }
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = a.exp_[i] < b.exp_[i] ? a.exp_[i] : b.exp_[i];
      r.degree_ += r.exp_[i];
      if (r.exp_[i]) r.mask_ |= (1u << i);
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    return (a.mask_ & b.mask_) == 0;
  }

  bool operator==(const Monomial& o) const noexcept {
    return degree_ == o.degree_ && mask_ == o.mask_ && exp_ == o.exp_;
  }

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint32_t mask_ = 0;
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

struct MonomialOrder {
  enum class Kind { grevlex, lex, elimination };

  Kind kind = Kind::grevlex;
  /// For elimination: the leading `block_size` variables form the block that
  /// dominates; both blocks are ordered by grevlex internally.
  std::size_t block_size = 0;

  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder elimination(std::size_t block) { return {Kind::elimination, block}; }

  bool operator==(const MonomialOrder&) const = default;
};

inline Cmp grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? Cmp::GT : Cmp::LT;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

inline Cmp order_compare(const Monomial& a, const Monomial& b, const MonomialOrder& order,
                         std::size_t nvars) {
  switch (order.kind) {
    case MonomialOrder::Kind::grevlex: {
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? Cmp::GT : Cmp::LT;
      for (std::size_t i = nvars; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? Cmp::GT : Cmp::LT;
      }
      return Cmp::EQ;
    }
    case MonomialOrder::Kind::lex: {
      for (std::size_t i = 0; i < nvars; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? Cmp::GT : Cmp::LT;
      }
      return Cmp::EQ;
    }
    case MonomialOrder::Kind::elimination: {
      Cmp c = grevlex_range(a, b, 0, order.block_size);
      if (c != Cmp::EQ) return c;
      return grevlex_range(a, b, order.block_size, nvars);
    }
  }
  return Cmp::EQ;
}

/// Budgets for the Groebner engine. Exceeding either raises ResourceError.
struct GBLimits {
  std::uint64_t max_pairs = 1'000'000;
  unsigned max_degree = 60;
};

/// k[x_1..x_n] over F_p with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(std::uint32_t characteristic, std::vector<std::string> names,
           MonomialOrder order = MonomialOrder::grevlex(), GBLimits limits = {})
      : field_(characteristic), names_(std::move(names)), order_(order), limits_(limits) {
    if (names_.size() > kMaxVariables)
      throw Error("at most " + std::to_string(kMaxVariables) + " variables are supported");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw ParseError("duplicate variable name '" + names_[i] + "'");
    if (order_.kind == MonomialOrder::Kind::elimination && order_.block_size > names_.size())
      throw Error("elimination block larger than the variable set");
  }

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const MonomialOrder& order() const noexcept { return order_; }
  const GBLimits& limits() const noexcept { return limits_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  Cmp compare(const Monomial& a, const Monomial& b) const {
    return order_compare(a, b, order_, names_.size());
  }

  /// Structural equality; budgets do not take part.
  bool same_as(const PolyRing& o) const {
    return field_ == o.field_ && names_ == o.names_ && order_ == o.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  GBLimits limits_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> names,
                         MonomialOrder order = MonomialOrder::grevlex(), GBLimits limits = {}) {
  return std::make_shared<const PolyRing>(characteristic, std::move(names), order, limits);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace maxmult

#endif  // MAXMULT_RING_HPP
