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

#ifndef MAXMULT_POLYNOMIAL_HPP
#define MAXMULT_POLYNOMIAL_HPP

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace maxmult {

struct Term {
  Monomial mono;
  Coeff coeff;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial: terms strictly decreasing in the ring order, no zero
/// coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    canonicalize();
  }

  static Polynomial constant(const RingPtr& ring, std::int64_t c) {
    return Polynomial(ring, {Term{Monomial{}, ring->field().from_integer(c)}});
  }
  static Polynomial variable(const RingPtr& ring, std::size_t i) {
    if (i >= ring->nvars()) throw Error("variable index out of range");
    return Polynomial(ring, {Term{Monomial::variable(i), 1}});
  }
  static Polynomial monomial(const RingPtr& ring, const Monomial& m, Coeff c = 1) {
    return Polynomial(ring, {Term{m, c}});
  }
  /// Trusted constructor: `terms` must already be canonical.
  static Polynomial from_canonical(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || terms_.front().mono.is_one(); }

  const Term& lead() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead().mono; }
  Coeff lead_coeff() const { return lead().coeff; }

  /// Maximum total degree over all terms; -1 for zero.
  int degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }

  bool is_homogeneous() const noexcept {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(lead_coeff()));
  }

  Polynomial scaled(Coeff c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    const auto& f = ring_->field();
    for (const auto& t : terms_) r.terms_.push_back({t.mono, f.mul(t.coeff, c)});
    return r;
  }

  Polynomial times_term(const Monomial& m, Coeff c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    const auto& f = ring_->field();
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, f.mul(t.coeff, c)});
    return r;
  }

  Polynomial operator-() const { return scaled(ring_->field().neg(1)); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, a.ring_ ? a.ring_->field().neg(1) : 0);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    const auto& f = a.ring_->field();
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, f.mul(s.coeff, t.coeff)});
    return Polynomial(a.ring_, std::move(prod));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// this - c*m*g, the reduction step. Merge-based, linear in the operand sizes.
  Polynomial minus_term_times(const Monomial& m, Coeff c, const Polynomial& g) const {
    return merge_shifted(*this, g, m, ring_->field().neg(c));
  }

  /// Term-wise equality. Rings must agree structurally.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_ != b.terms_) return false;
    if (a.is_zero()) return true;
    return same_ring(a.ring_, b.ring_);
  }

  /// Exact quotient this / d; throws if d does not divide this.
  Polynomial exact_divide(const Polynomial& d) const {
    check_same(*this, d);
    if (d.is_zero()) throw Error("division by zero polynomial");
    const auto& f = ring_->field();
    Coeff inv = f.inv(d.lead_coeff());
    Polynomial rem = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
      const Term& lt = rem.lead();
      if (!d.lead_monomial().divides(lt.mono)) throw Error("polynomial division is not exact");
      Monomial m = d.lead_monomial().quotient_of(lt.mono);
      Coeff c = f.mul(lt.coeff, inv);
      quot.push_back({m, c});
      rem = rem.minus_term_times(m, c, d);
    }
    Polynomial q(ring_);
    q.terms_ = std::move(quot);  // produced in decreasing order
    return q;
  }

  /// Re-expresses the polynomial in a ring with the same variables in the
  /// same positions shifted by `offset` (used for elimination rings).
  Polynomial embed(const RingPtr& target, std::size_t offset = 0) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < ring_->nvars(); ++i)
        if (t.mono[i]) m.set(i + offset, t.mono[i]);
      out.push_back({m, t.coeff});
    }
    return Polynomial(target, std::move(out));
  }

  /// Inverse of embed: drops the first `offset` variables, which must not occur.
  Polynomial restrict_to(const RingPtr& target, std::size_t offset) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (!t.mono[i]) continue;
        if (i < offset) throw Error("restriction drops an occurring variable");
        m.set(i - offset, t.mono[i]);
      }
      out.push_back({m, t.coeff});
    }
    return Polynomial(target, std::move(out));
  }

  bool involves_variable(std::size_t i) const noexcept {
    for (const auto& t : terms_)
      if (t.mono[i]) return true;
    return false;
  }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
  }

  void canonicalize() {
    if (!ring_) throw Error("polynomial without ring");
    const PolyRing& r = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& s, const Term& t) { return r.compare(s.mono, t.mono) == Cmp::GT; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    const auto& f = r.field();
    for (auto& t : terms_) {
      Coeff c = t.coeff % r.characteristic();
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = f.add(out.back().coeff, c);
        if (out.back().coeff == 0) out.pop_back();
      } else if (c != 0) {
        out.push_back({t.mono, c});
      }
    }
    terms_ = std::move(out);
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, Coeff scale_b) {
    check_same(a, b);
    return merge_shifted(a, b, Monomial{}, scale_b);
  }

  // a + c*m*b
  static Polynomial merge_shifted(const Polynomial& a, const Polynomial& b, const Monomial& m, Coeff c) {
    if (c == 0 || b.is_zero()) return a;
    const PolyRing& r = *a.ring_;
    const auto& f = r.field();
    Polynomial out(a.ring_);
    out.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const bool shift = !m.is_one();
    while (i < a.size() && j < b.size()) {
      Monomial bm = shift ? b.terms_[j].mono * m : b.terms_[j].mono;
      Cmp cmp = r.compare(a.terms_[i].mono, bm);
      if (cmp == Cmp::GT) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (cmp == Cmp::LT) {
        out.terms_.push_back({bm, f.mul(b.terms_[j++].coeff, c)});
      } else {
        Coeff s = f.add(a.terms_[i].coeff, f.mul(b.terms_[j].coeff, c));
        if (s) out.terms_.push_back({bm, s});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.size(); ++j) {
      Monomial bm = shift ? b.terms_[j].mono * m : b.terms_[j].mono;
      out.terms_.push_back({bm, f.mul(b.terms_[j].coeff, c)});
    }
    return out;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace maxmult

#endif  // MAXMULT_POLYNOMIAL_HPP
