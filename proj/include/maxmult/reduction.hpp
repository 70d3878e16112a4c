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

// General artinian reductions and what is read off them: socles, the
// s-invariant, the Cohen-Macaulay test by length comparison, socle type.
// Depth is measured separately by building regular sequences of general
// linear forms with colon tests.
//
// "General" means uniformly random over F_p. Every seeded quantity is
// computed on Genericity::replicas independent seeds; lengths and depths
// take the extremal value (generic forms minimize length and maximize
// regular sequences), socle data must agree across seeds.

#ifndef MAXMULT_REDUCTION_HPP
#define MAXMULT_REDUCTION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hilbert.hpp"
#include "ideal_ops.hpp"
#include "linalg.hpp"
#include "random.hpp"

namespace maxmult {

/// R/(I + (L_1..L_d)) presented by its standard monomials.
struct ArtinianAlgebra {
  Ideal presenting;
  std::vector<Polynomial> linear_forms;
  /// Standard monomials grouped by degree: basis_by_degree[i] spans A_i.
  std::vector<std::vector<Monomial>> basis_by_degree;
  std::vector<std::int64_t> hilbert_function;
  std::int64_t length = 0;
  std::uint64_t seed = 0;

  Polynomial normal_form(const Polynomial& f) const { return maxmult::normal_form(f, presenting); }
};

struct SocleProfile {
  std::map<int, int> per_degree;  // only nonzero entries
  int min_degree = -1;
  int total_dim = 0;
  Polynomial witness;  // nonzero socle element of degree min_degree
};

struct SInvariant {
  int value = 0;
  Polynomial witness;
  int seeds_tried = 0;
};

enum class SocleType { gorenstein, level, neither };

inline const char* to_string(SocleType t) {
  switch (t) {
    case SocleType::gorenstein: return "gorenstein";
    case SocleType::level: return "level";
    case SocleType::neither: return "neither";
  }
  return "?";
}

namespace detail {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < kMaxVariables; ++i) h = (h ^ m[i]) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

inline bool is_artinian_basis(const std::vector<Polynomial>& gb, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& g : gb) {
      const Monomial& m = g.lead_monomial();
      if (m.support() == (1u << v)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Standard monomials of an artinian initial ideal, degree by degree.
inline std::vector<std::vector<Monomial>> standard_monomials(const std::vector<Polynomial>& gb, std::size_t nvars) {
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.lead_monomial());
  auto standard = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return false;
    return true;
  };
  std::vector<std::vector<Monomial>> out;
  std::vector<Monomial> current;
  if (standard(Monomial{})) current.push_back(Monomial{});
  while (!current.empty()) {
    out.push_back(current);
    std::unordered_map<Monomial, bool, MonomialHash> seen;
    std::vector<Monomial> next;
    for (const auto& m : current) {
      for (std::size_t v = 0; v < nvars; ++v) {
        Monomial x = m * Monomial::variable(v);
        if (seen.emplace(x, true).second && standard(x)) next.push_back(x);
      }
    }
    current = std::move(next);
  }
  return out;
}

}  // namespace detail

/// Quotient of R/I by dim(R/I) random linear forms drawn from `seed`.
/// Throws RetriableError if the draw is degenerate (quotient not artinian).
inline ArtinianAlgebra artinian_reduction(const Ideal& I, std::uint64_t seed) {
  if (!I.is_homogeneous()) throw PreconditionError("artinian_reduction", "ideal is not homogeneous");
  IdealProfile prof = profile(I);
  const RingPtr& ring = I.ring();
  Rng rng(seed);
  std::vector<Polynomial> forms;
  for (int k = 0; k < prof.dim; ++k) forms.push_back(random_linear_form(ring, rng));

  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), forms.begin(), forms.end());
  Ideal presenting(ring, std::move(gens));
  const auto& gb = presenting.groebner_basis();
  if (presenting.is_unit())
    throw RetriableError("artinian_reduction: linear forms generate the unit ideal");
  if (!detail::is_artinian_basis(gb, ring->nvars()))
    throw RetriableError("artinian_reduction: degenerate linear forms, quotient is not artinian");

  ArtinianAlgebra A{presenting, forms, detail::standard_monomials(gb, ring->nvars()), {}, 0, seed};
  for (const auto& block : A.basis_by_degree) {
    A.hilbert_function.push_back(static_cast<std::int64_t>(block.size()));
    A.length += static_cast<std::int64_t>(block.size());
  }
  return A;
}

/// Reduction for replica `k`, retrying degenerate draws.
inline ArtinianAlgebra general_artinian_reduction(const Ideal& I, const Genericity& gen, int k) {
  std::string last;
  for (int attempt = 0; attempt < std::max(1, gen.retries); ++attempt) {
    try {
      return artinian_reduction(I, derive_seed(gen.seed, k, attempt));
    } catch (const RetriableError& e) {
      last = e.what();
    }
  }
  throw RetriableError("artinian reduction retries exhausted: " + last);
}

/// Per-degree dimensions of 0 :_A m_A by exact linear algebra.
inline SocleProfile socle_profile(const ArtinianAlgebra& A) {
  const RingPtr& ring = A.presenting.ring();
  const PrimeField& field = ring->field();
  const std::size_t n = ring->nvars();
  SocleProfile out;
  out.witness = Polynomial(ring);
  const auto& blocks = A.basis_by_degree;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& cur = blocks[i];
    if (cur.empty()) continue;
    static const std::vector<Monomial> kEmpty;
    const auto& next = i + 1 < blocks.size() ? blocks[i + 1] : kEmpty;
    std::unordered_map<Monomial, std::size_t, detail::MonomialHash> index;
    for (std::size_t c = 0; c < next.size(); ++c) index.emplace(next[c], c);

    FpMatrix M(n * next.size(), cur.size());
    for (std::size_t c = 0; c < cur.size(); ++c) {
      for (std::size_t v = 0; v < n && !next.empty(); ++v) {
        Polynomial image = A.normal_form(Polynomial::monomial(ring, cur[c] * Monomial::variable(v)));
        for (const auto& t : image.terms()) {
          auto it = index.find(t.mono);
          if (it == index.end()) throw Error("socle_profile: normal form left the standard basis");
          M.at(v * next.size() + it->second, c) = t.coeff;
        }
      }
    }
    auto kernel = kernel_basis(std::move(M), field);
    if (kernel.empty()) continue;
    out.per_degree[static_cast<int>(i)] = static_cast<int>(kernel.size());
    out.total_dim += static_cast<int>(kernel.size());
    if (out.min_degree < 0) {
      out.min_degree = static_cast<int>(i);
      std::vector<Term> terms;
      for (std::size_t c = 0; c < cur.size(); ++c)
        if (kernel.front()[c]) terms.push_back({cur[c], kernel.front()[c]});
      out.witness = Polynomial(ring, std::move(terms));
    }
  }
  return out;
}

/// Serre-criterion data: multiplicity against reduction lengths.
struct CMAnalysis {
  IdealProfile profile;
  std::vector<ArtinianAlgebra> reductions;
  std::vector<std::int64_t> lengths;
  std::int64_t min_length = 0;
  bool cohen_macaulay = false;
  bool seeds_agree = true;
};

inline CMAnalysis analyze_cohen_macaulay(const Ideal& I, const Genericity& gen = {}) {
  if (!I.is_homogeneous()) throw PreconditionError("is_cohen_macaulay", "ideal is not homogeneous");
  CMAnalysis out;
  out.profile = profile(I);
  for (int k = 0; k < std::max(1, gen.replicas); ++k) {
    out.reductions.push_back(general_artinian_reduction(I, gen, k));
    out.lengths.push_back(out.reductions.back().length);
  }
  out.min_length = *std::min_element(out.lengths.begin(), out.lengths.end());
  out.seeds_agree = std::all_of(out.lengths.begin(), out.lengths.end(),
                                [&](std::int64_t l) { return l == out.min_length; });
  out.cohen_macaulay = out.min_length == out.profile.multiplicity;
  return out;
}

inline bool is_cohen_macaulay(const Ideal& I, const Genericity& gen = {}) {
  return analyze_cohen_macaulay(I, gen).cohen_macaulay;
}

/// Socle profiles of every replica of a CM ideal (throws if not CM).
inline std::vector<SocleProfile> general_socle_profiles(const Ideal& J, const Genericity& gen,
                                                        const char* op) {
  CMAnalysis cm = analyze_cohen_macaulay(J, gen);
  if (!cm.cohen_macaulay) throw PreconditionError(op, "R/J is not Cohen-Macaulay");
  std::vector<SocleProfile> out;
  for (const auto& A : cm.reductions) {
    if (A.length != cm.profile.multiplicity) continue;  // non-generic replica
    out.push_back(socle_profile(A));
  }
  return out;
}

/// Smallest degree of a nonzero socle element of a general artinian
/// reduction of the Cohen-Macaulay ring R/J.
inline SInvariant s_invariant(const Ideal& J, const Genericity& gen = {}) {
  auto socles = general_socle_profiles(J, gen, "s_invariant");
  SInvariant out;
  out.value = socles.front().min_degree;
  out.witness = socles.front().witness;
  out.seeds_tried = static_cast<int>(socles.size());
  for (const auto& s : socles)
    if (s.min_degree != out.value)
      throw SeedDisagreement("s_invariant: replicas report socle degrees " + std::to_string(out.value) + " and " +
                             std::to_string(s.min_degree));
  return out;
}

inline SocleType classify_socle(const SocleProfile& s) {
  if (s.total_dim == 1) return SocleType::gorenstein;
  if (s.per_degree.size() == 1) return SocleType::level;
  return SocleType::neither;
}

inline SocleType socle_type(const Ideal& J, const Genericity& gen = {}) {
  auto socles = general_socle_profiles(J, gen, "socle_type");
  SocleType t = classify_socle(socles.front());
  for (const auto& s : socles)
    if (classify_socle(s) != t) throw SeedDisagreement("socle_type: replicas disagree on the socle type");
  return t;
}

struct DepthResult {
  int depth = 0;
  int dim = 0;
  std::vector<int> per_seed;
  bool seeds_agree = true;
};

/// Length of a maximal regular sequence of general linear forms on R/I,
/// maximized over replicas. Each form l is accepted when (I + prior) : l
/// equals I + prior.
inline DepthResult depth_analysis(const Ideal& I, const Genericity& gen = {}) {
  if (!I.is_homogeneous()) throw PreconditionError("depth_of", "ideal is not homogeneous");
  DepthResult out;
  out.dim = profile(I).dim;
  const RingPtr& ring = I.ring();
  for (int k = 0; k < std::max(1, gen.replicas); ++k) {
    Rng rng(derive_seed(gen.seed, k, 0x5eed));
    Ideal prior = I;
    int depth = 0;
    while (depth < out.dim) {
      Polynomial l = random_linear_form(ring, rng);
      if (l.is_zero()) continue;
      Ideal colon = ideal_colon(prior, l);
      if (!ideal_contains(prior, colon)) break;
      prior = prior.plus(l);
      ++depth;
    }
    out.per_seed.push_back(depth);
  }
  out.depth = *std::max_element(out.per_seed.begin(), out.per_seed.end());
  out.seeds_agree = std::all_of(out.per_seed.begin(), out.per_seed.end(), [&](int d) { return d == out.depth; });
  return out;
}

inline int depth_of(const Ideal& I, const Genericity& gen = {}) { return depth_analysis(I, gen).depth; }

}  // namespace maxmult

#endif  // MAXMULT_REDUCTION_HPP
