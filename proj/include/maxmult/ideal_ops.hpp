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

#ifndef MAXMULT_IDEAL_OPS_HPP
#define MAXMULT_IDEAL_OPS_HPP

#include <string>
#include <vector>

#include "groebner.hpp"

namespace maxmult {

namespace detail {

/// k[t, x_1..x_n] with t dominating: an elimination order for one variable.
inline RingPtr elimination_ring(const PolyRing& base) {
  std::string tname = "_t";
  while (base.index_of(tname)) tname += "_";
  std::vector<std::string> names{tname};
  names.insert(names.end(), base.names().begin(), base.names().end());
  return make_ring(base.characteristic(), std::move(names), MonomialOrder::elimination(1), base.limits());
}

}  // namespace detail

/// I ∩ K via elimination of t from t*I + (1 - t)*K.
inline Ideal ideal_intersect(const Ideal& I, const Ideal& K) {
  if (!same_ring(I.ring(), K.ring())) throw RingMismatch();
  const RingPtr& ring = I.ring();
  if (I.is_zero() || K.is_zero()) return Ideal(ring);
  if (I.is_unit()) return K;
  if (K.is_unit()) return I;

  RingPtr aux = detail::elimination_ring(*ring);
  Polynomial t = Polynomial::variable(aux, 0);
  Polynomial one_minus_t = Polynomial::constant(aux, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.groebner_basis()) gens.push_back(t * g.embed(aux, 1));
  for (const auto& g : K.groebner_basis()) gens.push_back(one_minus_t * g.embed(aux, 1));
  std::vector<Polynomial> out;
  for (const auto& g : buchberger(aux, std::move(gens)))
    if (!g.involves_variable(0)) out.push_back(g.restrict_to(ring, 1));
  Ideal result(ring, out);
  (void)result.groebner_basis();
  return result;
}

/// I : f, computed as (I ∩ (f)) / f.
inline Ideal ideal_colon(const Ideal& I, const Polynomial& f) {
  if (!same_ring(I.ring(), f.ring())) throw RingMismatch();
  if (f.is_zero()) throw PreconditionError("ideal_colon", "colon by the zero polynomial");
  const RingPtr& ring = I.ring();
  if (ideal_member(f, I)) return Ideal(ring, {Polynomial::constant(ring, 1)});
  Ideal inter = ideal_intersect(I, Ideal(ring, {f}));
  std::vector<Polynomial> q;
  for (const auto& g : inter.generators()) q.push_back(g.exact_divide(f));
  return Ideal(ring, std::move(q));
}

/// I : K, the intersection of I : k over the generators k of K.
inline Ideal ideal_colon_ideal(const Ideal& I, const Ideal& K) {
  if (!same_ring(I.ring(), K.ring())) throw RingMismatch();
  const RingPtr& ring = I.ring();
  Ideal result(ring, {Polynomial::constant(ring, 1)});
  bool first = true;
  for (const auto& k : K.generators()) {
    if (ideal_member(k, I)) continue;
    Ideal c = ideal_colon(I, k);
    result = first ? c : ideal_intersect(result, c);
    first = false;
  }
  return result;
}

/// Product ideal I*K from pairwise generator products.
inline Ideal ideal_product(const Ideal& I, const Ideal& K) {
  if (!same_ring(I.ring(), K.ring())) throw RingMismatch();
  std::vector<Polynomial> gens;
  for (const auto& a : I.generators())
    for (const auto& b : K.generators()) gens.push_back(a * b);
  return Ideal(I.ring(), std::move(gens));
}

/// A minimal homogeneous generating set, chosen greedily in order of
/// increasing degree (input order breaks ties).
inline std::vector<Polynomial> minimal_generators(const Ideal& I) {
  std::vector<std::size_t> order(I.generators().size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  const auto& gens = I.generators();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return gens[a].degree() < gens[b].degree(); });
  std::vector<Polynomial> kept;
  for (std::size_t k : order) {
    if (!kept.empty() && ideal_member(gens[k], Ideal(I.ring(), kept))) continue;
    kept.push_back(gens[k]);
  }
  return kept;
}

}  // namespace maxmult

#endif  // MAXMULT_IDEAL_OPS_HPP
