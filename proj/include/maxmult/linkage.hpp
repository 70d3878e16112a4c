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


// Links by complete intersections. G:(G:I) recovers the unmixed part of I
// whenever G ⊆ I is a complete intersection of the same height.

#ifndef MAXMULT_LINKAGE_HPP
#define MAXMULT_LINKAGE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "hilbert.hpp"
#include "ideal_ops.hpp"
#include "random.hpp"

namespace maxmult {

struct LinkRecord {
  Ideal G;
  Ideal L;  // G : I
  int height = 0;
  std::int64_t e_G = 0;
  std::int64_t e_I_un = 0;
  std::int64_t e_L = 0;  // 0 when L is the unit ideal
  bool identity_holds = false;  // e_I_un + e_L == e_G
};

namespace detail {

/// Multiplicity with the convention e(R/R) = 0.
inline std::int64_t multiplicity_or_zero(const Ideal& I) { return I.is_unit() ? 0 : profile(I).multiplicity; }

inline int height_of(const Ideal& I) {
  if (I.is_zero()) return 0;
  return profile(I).height;
}

/// Random homogeneous combination of degree `target` of the generators of
/// degree <= target.
inline Polynomial random_combination(const std::vector<Polynomial>& gens, unsigned target, Rng& rng) {
  const RingPtr& ring = gens.front().ring();
  Polynomial out(ring);
  for (const auto& g : gens) {
    if (g.degree() > static_cast<int>(target)) continue;
    out = out + random_form(ring, target - static_cast<unsigned>(g.degree()), rng) * g;
  }
  return out;
}

}  // namespace detail

/// A complete intersection G ⊆ I with ht G = ht I. The k-th element of G is
/// a random combination in degree d_k, the k-th smallest generator degree;
/// if that keeps failing every element is taken in the top generator degree.
inline Ideal find_ci_inside(const Ideal& I, std::uint64_t seed, int retries = 8) {
  if (!I.is_homogeneous()) throw PreconditionError("find_ci_inside", "ideal is not homogeneous");
  if (I.is_unit()) throw PreconditionError("find_ci_inside", "unit ideal");
  const RingPtr& ring = I.ring();
  if (I.is_zero()) return I;
  int g = detail::height_of(I);
  auto gens = minimal_generators(I);
  if (static_cast<int>(gens.size()) == g) return Ideal(ring, gens);

  std::vector<unsigned> low;
  for (int k = 0; k < g; ++k) low.push_back(static_cast<unsigned>(gens[static_cast<std::size_t>(k)].degree()));
  std::vector<unsigned> high(static_cast<std::size_t>(g), static_cast<unsigned>(gens.back().degree()));

  int attempt = 0;
  for (const auto& degrees : {low, high}) {
    for (int r = 0; r < std::max(1, retries); ++r, ++attempt) {
      Rng rng(derive_seed(seed, 0, attempt));
      std::vector<Polynomial> ci;
      for (unsigned d : degrees) ci.push_back(detail::random_combination(gens, d, rng));
      Ideal G(ring, ci);
      if (static_cast<int>(G.generators().size()) != g || G.is_unit()) continue;
      if (detail::height_of(G) == g) return G;
    }
  }
  throw RetriableError("find_ci_inside: no complete intersection of height " + std::to_string(g) + " found after " +
                       std::to_string(attempt) + " attempts");
}

/// L = G : I together with the multiplicity identity of the link.
inline LinkRecord link(const Ideal& G, const Ideal& I) {
  if (!same_ring(G.ring(), I.ring())) throw RingMismatch();
  if (!ideal_contains(I, G)) throw PreconditionError("link", "G is not contained in I");
  if (I.is_unit()) throw PreconditionError("link", "unit ideal");
  int g = detail::height_of(G);
  if (static_cast<int>(G.generators().size()) != g)
    throw PreconditionError("link", "G is not a complete intersection");
  if (detail::height_of(I) != g) throw PreconditionError("link", "ht G differs from ht I");

  LinkRecord rec{G, ideal_colon_ideal(G, I), g, 0, 0, 0, false};
  Ideal unmixed = ideal_colon_ideal(G, rec.L);
  rec.e_G = profile(G).multiplicity;
  rec.e_I_un = profile(unmixed).multiplicity;
  rec.e_L = detail::multiplicity_or_zero(rec.L);
  rec.identity_holds = rec.e_I_un + rec.e_L == rec.e_G;
  return rec;
}

/// Intersection of the primary components of minimal height, as G:(G:I).
inline Ideal unmixed_part(const Ideal& I, std::uint64_t seed = kDefaultSeed) {
  if (!I.is_homogeneous()) throw PreconditionError("unmixed_part", "ideal is not homogeneous");
  if (I.is_unit()) throw PreconditionError("unmixed_part", "unit ideal");
  if (I.is_zero()) return I;
  Ideal G = find_ci_inside(I, seed);
  return groebner_basis(ideal_colon_ideal(G, ideal_colon_ideal(G, I)));
}

inline bool is_unmixed(const Ideal& I, std::uint64_t seed = kDefaultSeed) {
  return ideal_equal(I, unmixed_part(I, seed));
}

}  // namespace maxmult

#endif  // MAXMULT_LINKAGE_HPP
