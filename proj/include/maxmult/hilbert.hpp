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

#ifndef MAXMULT_HILBERT_HPP
#define MAXMULT_HILBERT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "groebner.hpp"

namespace maxmult {

/// Integer polynomial in t, coefficient of t^i at index i.
using IntPoly = std::vector<std::int64_t>;

/// HS(t) = numerator(t) / (1 - t)^dimension with numerator(1) != 0.
struct HilbertSeries {
  IntPoly numerator;
  int dimension = 0;

  /// dim_k of the degree-i component of the quotient.
  std::int64_t hilbert_function(int i) const {
    if (i < 0) return 0;
    std::int64_t total = 0;
    for (int j = 0; j < static_cast<int>(numerator.size()) && j <= i; ++j) {
      if (dimension == 0) {
        if (j == i) total += numerator[j];
        continue;
      }
      total += numerator[j] * binomial(i - j + dimension - 1, dimension - 1);
    }
    return total;
  }

  std::int64_t multiplicity() const { return std::accumulate(numerator.begin(), numerator.end(), std::int64_t{0}); }

  bool operator==(const HilbertSeries&) const = default;

  static std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }
};

/// dim, height and multiplicity of R/I for homogeneous proper I.
struct IdealProfile {
  int dim = 0;
  int height = 0;
  std::int64_t multiplicity = 0;
  bool is_homogeneous = true;
};

namespace detail {

inline void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline void poly_add_shifted(IntPoly& acc, const IntPoly& b, std::size_t shift) {
  if (acc.size() < b.size() + shift) acc.resize(b.size() + shift, 0);
  for (std::size_t j = 0; j < b.size(); ++j) acc[j + shift] += b[j];
}

/// Numerator N(t) of HS(R/(gens)) = N(t)/(1-t)^n. `gens` must be minimal.
/// Pivot recursion: N(I) = N(I + (p)) + t^deg(p) * N(I : p).
inline IntPoly hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  if (gens.empty()) return {1};
  // base case: pairwise coprime generators
  std::uint32_t seen = 0;
  bool disjoint = true;
  for (const auto& m : gens) {
    if (seen & m.support()) {
      disjoint = false;
      break;
    }
    seen |= m.support();
  }
  if (disjoint) {
    IntPoly r{1};
    for (const auto& m : gens) {
      IntPoly f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] -= 1;
      r = poly_mul(r, f);
    }
    return r;
  }
  // pivot on the variable occurring in the most non-pure-power generators
  std::vector<int> count(nvars, 0);
  for (const auto& m : gens) {
    if (std::popcount(m.support()) < 2) continue;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) ++count[i];
  }
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<unsigned> exps;
  for (const auto& m : gens)
    if (m[var] && std::popcount(m.support()) >= 2) exps.push_back(m[var]);
  std::nth_element(exps.begin(), exps.begin() + exps.size() / 2, exps.end());
  unsigned e = exps[exps.size() / 2];
  Monomial pivot = Monomial::variable(var, e);

  std::vector<Monomial> with_pivot;
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    if (!pivot.divides(m)) with_pivot.push_back(m);
    Monomial q = m;
    q.set(var, m[var] > e ? m[var] - e : 0);
    colon.push_back(q);
  }
  with_pivot.push_back(pivot);
  minimalize(with_pivot);
  minimalize(colon);
  IntPoly result = hilbert_numerator(std::move(with_pivot), nvars);
  poly_add_shifted(result, hilbert_numerator(std::move(colon), nvars), e);
  while (result.size() > 1 && result.back() == 0) result.pop_back();
  return result;
}

}  // namespace detail

/// Minimal monomial generators of the ideal of leading monomials.
inline std::vector<Monomial> initial_ideal(const Ideal& I) {
  std::vector<Monomial> leads;
  for (const auto& g : I.groebner_basis()) leads.push_back(g.lead_monomial());
  detail::minimalize(leads);
  return leads;
}

/// Hilbert series of R/I in reduced form. The unit ideal yields an empty
/// numerator.
inline HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> gens, std::size_t nvars) {
  detail::minimalize(gens);
  IntPoly num = detail::hilbert_numerator(std::move(gens), nvars);
  while (!num.empty() && num.back() == 0) num.pop_back();
  HilbertSeries hs{num, static_cast<int>(nvars)};
  if (num.empty()) {
    hs.dimension = 0;
    return hs;
  }
  // divide by (1 - t) while N(1) = 0
  while (hs.dimension > 0 && hs.multiplicity() == 0) {
    IntPoly q(hs.numerator.size() - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t i = 0; i + 1 < hs.numerator.size(); ++i) {
      carry += hs.numerator[i];
      q[i] = carry;
    }
    hs.numerator = std::move(q);
    --hs.dimension;
  }
  return hs;
}

inline HilbertSeries hilbert_series(const Ideal& I) {
  if (!I.is_homogeneous()) throw PreconditionError("hilbert_series", "ideal is not homogeneous");
  return hilbert_series_of_monomials(initial_ideal(I), I.ring()->nvars());
}

inline IdealProfile profile(const Ideal& I) {
  if (!I.is_homogeneous()) throw PreconditionError("profile", "ideal is not homogeneous");
  if (I.is_unit()) throw PreconditionError("profile", "unit ideal");
  HilbertSeries hs = hilbert_series(I);
  IdealProfile p;
  p.dim = hs.dimension;
  p.height = static_cast<int>(I.ring()->nvars()) - hs.dimension;
  p.multiplicity = hs.multiplicity();
  p.is_homogeneous = true;
  return p;
}

}  // namespace maxmult

#endif  // MAXMULT_HILBERT_HPP
