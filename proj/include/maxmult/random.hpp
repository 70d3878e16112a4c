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

#ifndef MAXMULT_RANDOM_HPP
#define MAXMULT_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "polynomial.hpp"

namespace maxmult {

inline constexpr std::uint64_t kDefaultSeed = 0x2545F4914F6CDD1DULL;

/// How "general" choices are made: `replicas` independent seeds derived
/// from `seed`, each retried up to `retries` times on degenerate draws.
struct Genericity {
  std::uint64_t seed = kDefaultSeed;
  int replicas = 3;
  int retries = 8;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of replica `k`, attempt `attempt`.
inline std::uint64_t derive_seed(std::uint64_t seed, int k, int attempt = 0) {
  return splitmix64(splitmix64(seed ^ (0x1000003ULL * static_cast<std::uint64_t>(k + 1))) +
                    static_cast<std::uint64_t>(attempt));
}

using Rng = std::mt19937_64;

inline Coeff random_coeff(Rng& rng, const PrimeField& f) {
  return static_cast<Coeff>(std::uniform_int_distribution<std::uint32_t>(0, f.characteristic() - 1)(rng));
}

inline Coeff random_nonzero_coeff(Rng& rng, const PrimeField& f) {
  return static_cast<Coeff>(std::uniform_int_distribution<std::uint32_t>(1, f.characteristic() - 1)(rng));
}

/// All monomials of total degree `d` in the first `nvars` variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> e(nvars, 0);
  // enumerate compositions of d into nvars parts
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Linear form with uniformly random coefficients.
inline Polynomial random_linear_form(const RingPtr& ring, Rng& rng) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    terms.push_back({Monomial::variable(i), random_coeff(rng, ring->field())});
  return Polynomial(ring, std::move(terms));
}

/// Dense homogeneous form of degree d with uniformly random coefficients.
inline Polynomial random_form(const RingPtr& ring, unsigned d, Rng& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(ring->nvars(), d)) terms.push_back({m, random_coeff(rng, ring->field())});
  return Polynomial(ring, std::move(terms));
}

}  // namespace maxmult

#endif  // MAXMULT_RANDOM_HPP
