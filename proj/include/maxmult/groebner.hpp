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

#ifndef MAXMULT_GROEBNER_HPP
#define MAXMULT_GROEBNER_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace maxmult {

/// Observes a Buchberger run. Must not influence the computation.
class GBListener {
 public:
  virtual ~GBListener() = default;
  virtual void on_pair(std::uint64_t /*processed*/, std::size_t /*pending*/) {}
  virtual void on_basis_growth(std::size_t /*basis_size*/, unsigned /*sugar*/) {}
};

namespace detail {

/// Fully reduces `f` by the polynomials at `active` indices of `basis`.
/// Works on an increasing term vector so that dropping the lead is O(1).
inline Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                              std::span<const std::size_t> active) {
  if (f.is_zero()) return f;
  const RingPtr& ring = f.ring();
  const PolyRing& r = *ring;
  const PrimeField& field = r.field();
  std::vector<Term> work(f.terms().rbegin(), f.terms().rend());
  std::vector<Term> remainder;
  std::vector<Term> tmp;
  while (!work.empty()) {
    const Term lt = work.back();
    const Polynomial* divisor = nullptr;
    for (std::size_t idx : active) {
      if (basis[idx].lead_monomial().divides(lt.mono)) {
        divisor = &basis[idx];
        break;
      }
    }
    work.pop_back();
    if (!divisor) {
      remainder.push_back(lt);
      continue;
    }
    const Monomial q = divisor->lead_monomial().quotient_of(lt.mono);
    const Coeff c = field.neg(field.div(lt.coeff, divisor->lead_coeff()));
    auto g = divisor->terms();
    // work += c*q*(g - lead g), both sides increasing
    tmp.clear();
    tmp.reserve(work.size() + g.size());
    std::size_t i = 0;
    std::size_t j = g.size();
    while (i < work.size() && j > 1) {
      Monomial gm = g[j - 1].mono * q;
      Cmp cmp = r.compare(work[i].mono, gm);
      if (cmp == Cmp::LT) {
        tmp.push_back(work[i++]);
      } else if (cmp == Cmp::GT) {
        tmp.push_back({gm, field.mul(g[j - 1].coeff, c)});
        --j;
      } else {
        Coeff s = field.add(work[i].coeff, field.mul(g[j - 1].coeff, c));
        if (s) tmp.push_back({gm, s});
        ++i;
        --j;
      }
    }
    for (; i < work.size(); ++i) tmp.push_back(work[i]);
    for (; j > 1; --j) tmp.push_back({g[j - 1].mono * q, field.mul(g[j - 1].coeff, c)});
    work.swap(tmp);
  }
  return Polynomial::from_canonical(ring, std::move(remainder));
}

struct Pair {
  std::size_t i;  // basis index, or input index when `input` is set
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
  bool input = false;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, GBListener* listener) : ring_(std::move(ring)), listener_(listener) {}

  std::vector<Polynomial> run(std::vector<Polynomial> gens) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (!same_ring(g.ring(), ring_)) throw RingMismatch();
      inputs_.push_back(g.monic());
    }
    for (std::size_t k = 0; k < inputs_.size(); ++k)
      pairs_.push_back(Pair{k, 0, inputs_[k].lead_monomial(), static_cast<unsigned>(inputs_[k].degree()), true});

    const GBLimits& limits = ring_->limits();
    std::uint64_t processed = 0;
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return ring_->compare(a.lcm, b.lcm) == Cmp::LT;
      });
      Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();

      if (++processed > limits.max_pairs)
        throw ResourceError("Groebner pair budget of " + std::to_string(limits.max_pairs) + " exceeded");
      if (p.sugar > limits.max_degree)
        throw ResourceError("Groebner degree budget of " + std::to_string(limits.max_degree) + " exceeded");

      Polynomial h = p.input ? inputs_[p.i] : spoly(p);
      h = reduce_full(std::move(h), basis_, active_);
      if (listener_) listener_->on_pair(processed, pairs_.size());
      if (h.is_zero()) continue;
      h = h.monic();
      if (h.lead_monomial().is_one()) {
        // unit ideal
        basis_.assign(1, h);
        return basis_;
      }
      insert(std::move(h), p.sugar);
    }
    return finalize();
  }

 private:
  Polynomial spoly(const Pair& p) const {
    const Polynomial& f = basis_[p.i];
    const Polynomial& g = basis_[p.j];
    Monomial mf = f.lead_monomial().quotient_of(p.lcm);
    Monomial mg = g.lead_monomial().quotient_of(p.lcm);
    // both monic
    return f.times_term(mf, 1).minus_term_times(mg, 1, g);
  }

  // Gebauer-Moeller update.
  void insert(Polynomial h, unsigned sugar) {
    const std::size_t hi = basis_.size();
    const Monomial hl = h.lead_monomial();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);

    std::vector<Pair> candidates;
    for (std::size_t a : active_) {
      const Monomial& gl = basis_[a].lead_monomial();
      Monomial l = lcm(hl, gl);
      unsigned s = std::max(sugar_[a] + (l.degree() - gl.degree()), sugar + (l.degree() - hl.degree()));
      candidates.push_back(Pair{a, hi, l, s});
    }

    // criterion M/F: drop (h,g1) when some other (h,g2) has lcm dividing it
    std::vector<Pair> kept;
    std::vector<bool> dead(candidates.size(), false);
    for (std::size_t x = 0; x < candidates.size(); ++x) {
      const Pair& c = candidates[x];
      bool is_coprime = coprime(hl, basis_[c.i].lead_monomial());
      bool dominated = false;
      if (!is_coprime) {
        for (std::size_t y = 0; y < candidates.size() && !dominated; ++y) {
          if (y == x || dead[y]) continue;
          const Monomial& ly = candidates[y].lcm;
          if (ly.divides(c.lcm) && (!(ly == c.lcm) || y < x)) dominated = true;
        }
      }
      if (dominated) {
        dead[x] = true;
        continue;
      }
      kept.push_back(c);
    }
    // product criterion: coprime leads never need a pair
    std::vector<Pair> fresh;
    for (const Pair& c : kept)
      if (!coprime(hl, basis_[c.i].lead_monomial())) fresh.push_back(c);

    // criterion B on old pairs
    std::vector<Pair> old;
    old.reserve(pairs_.size() + fresh.size());
    for (const Pair& p : pairs_) {
      if (!p.input && hl.divides(p.lcm)) {
        Monomial l1 = lcm(basis_[p.i].lead_monomial(), hl);
        Monomial l2 = lcm(basis_[p.j].lead_monomial(), hl);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      old.push_back(p);
    }
    for (auto& c : fresh) old.push_back(c);
    pairs_ = std::move(old);

    std::vector<std::size_t> still;
    for (std::size_t a : active_)
      if (!hl.divides(basis_[a].lead_monomial())) still.push_back(a);
    still.push_back(hi);
    active_ = std::move(still);
    if (listener_) listener_->on_basis_growth(active_.size(), sugar);
  }

  std::vector<Polynomial> finalize() {
    std::vector<Polynomial> minimal;
    for (std::size_t a : active_) minimal.push_back(basis_[a]);
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.lead_monomial(), b.lead_monomial()) == Cmp::LT;
    });
    std::vector<std::size_t> all(minimal.size());
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<std::size_t> others;
      for (std::size_t m = 0; m < minimal.size(); ++m)
        if (m != k) others.push_back(m);
      const Term lt = minimal[k].lead();
      Polynomial tail = minimal[k].minus_term_times(Monomial{}, lt.coeff, Polynomial::monomial(ring_, lt.mono));
      tail = reduce_full(std::move(tail), minimal, others);
      reduced.push_back(Polynomial::monomial(ring_, lt.mono, lt.coeff) + tail);
    }
    return reduced;
  }

  RingPtr ring_;
  GBListener* listener_;
  std::vector<Polynomial> inputs_;
  std::vector<Polynomial> basis_;
  std::vector<unsigned> sugar_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens`, sorted by
/// increasing leading monomial. Zero polynomials are ignored; an empty
/// result is the zero ideal.
inline std::vector<Polynomial> buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                                          GBListener* listener = nullptr) {
  return detail::Buchberger(ring, listener).run(std::move(gens));
}

/// A finitely generated ideal with a lazily computed, shared reduced
/// Groebner basis. Copies share the cache.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {})
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (!same_ring(g.ring(), ring_)) throw RingMismatch();
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Computed at most once per shared cache; concurrent callers block on
  /// the first computation. A throwing computation leaves the cache empty.
  const std::vector<Polynomial>& groebner_basis(GBListener* listener = nullptr) const {
    std::call_once(cache_->once, [&] { cache_->basis = buchberger(ring_, gens_, listener); });
    return cache_->basis;
  }

  bool is_unit() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb.front().lead_monomial().is_one();
  }

  bool is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
  }

  Ideal operator+(const Ideal& other) const {
    if (!same_ring(ring_, other.ring_)) throw RingMismatch();
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(ring_, std::move(g));
  }

  Ideal plus(const Polynomial& f) const {
    std::vector<Polynomial> g = gens_;
    g.push_back(f);
    return Ideal(ring_, std::move(g));
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// The ideal generated by its own reduced Groebner basis, with the cache
/// already populated.
inline Ideal groebner_basis(const Ideal& I, GBListener* listener = nullptr) {
  const auto& gb = I.groebner_basis(listener);
  Ideal out(I.ring(), gb);
  (void)out.groebner_basis();  // reduced GB of a reduced GB is itself
  return out;
}

inline Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  if (!same_ring(f.ring(), I.ring())) throw RingMismatch();
  const auto& gb = I.groebner_basis();
  std::vector<std::size_t> all(gb.size());
  for (std::size_t k = 0; k < gb.size(); ++k) all[k] = k;
  return detail::reduce_full(f, gb, all);
}

inline bool ideal_member(const Polynomial& f, const Ideal& I) { return normal_form(f, I).is_zero(); }

/// K ⊆ I.
inline bool ideal_contains(const Ideal& I, const Ideal& K) {
  for (const auto& g : K.generators())
    if (!ideal_member(g, I)) return false;
  return true;
}

inline bool ideal_equal(const Ideal& I, const Ideal& K) {
  if (!same_ring(I.ring(), K.ring())) throw RingMismatch();
  return I.groebner_basis() == K.groebner_basis();
}

/// The homogeneous maximal ideal (x_1, ..., x_n).
inline Ideal maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

}  // namespace maxmult

#endif  // MAXMULT_GROEBNER_HPP
