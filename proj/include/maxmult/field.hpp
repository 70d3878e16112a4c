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

#ifndef MAXMULT_FIELD_HPP
#define MAXMULT_FIELD_HPP

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace maxmult {

/// Field elements are canonical residues in [0, p).
using Coeff = std::uint32_t;

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// The prime field F_p with p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw ParseError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }

  Coeff inv(Coeff a) const {
    if (a == 0) throw Error("division by zero in F_p");
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1, r = p_, newr = a;
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Coeff>(t);
  }

  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  Coeff from_integer(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
  }

  /// Symmetric lift into (-p/2, p/2].
  std::int64_t to_signed(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace maxmult

#endif  // MAXMULT_FIELD_HPP
