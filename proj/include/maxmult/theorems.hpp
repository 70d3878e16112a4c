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


// Executable forms of the multiplicity bound for I = J + (F), the depth
// classification of maximal decompositions, the colon structure J:F, the
// construction of a maximal decomposition from an almost linear complete
// intersection, m-primary decompositions and the quasi-Gorenstein bound.
//
// Preconditions are checked and raise PreconditionError. A violated
// assertion is not an exception: it is recorded in `findings` and clears
// `verified`.

#ifndef MAXMULT_THEOREMS_HPP
#define MAXMULT_THEOREMS_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "linkage.hpp"
#include "reduction.hpp"

namespace maxmult {

enum class DepthClass { cm, almost_cm, other };

inline const char* to_string(DepthClass c) {
  switch (c) {
    case DepthClass::cm: return "cm";
    case DepthClass::almost_cm: return "almost_cm";
    case DepthClass::other: return "other";
  }
  return "?";
}

struct DecompositionReport {
  Ideal J;
  Polynomial F;
  Ideal I;  // J + (F)
  int g = 0;
  int dim = 0;
  std::int64_t e_J = 0;
  std::int64_t e_I = 0;
  int s = 0;
  int delta = 0;
  std::int64_t bound_rhs = 0;  // e_J - max{1, s - delta + 1}
  bool bound_holds = true;
  bool is_maximal = false;
  SocleType j_socle_type = SocleType::neither;
  // filled by classify_decomposition
  std::optional<DepthClass> depth_class;
  std::optional<int> depth;
  std::optional<bool> i_cohen_macaulay;
  bool verified = true;
  std::vector<std::string> findings;

  void fail(std::string what) {
    verified = false;
    findings.push_back(std::move(what));
  }
};

namespace detail {

inline void require_homogeneous_form(const Polynomial& F, const char* op) {
  if (F.is_zero()) throw PreconditionError(op, "F is zero");
  if (!F.is_homogeneous()) throw PreconditionError(op, "F is not homogeneous");
}

struct SocleSummary {
  int s = 0;
  SocleType type = SocleType::neither;
  int total_dim = 0;
};

/// s-invariant and socle type from one set of reductions of a CM ideal.
inline SocleSummary socle_summary(const Ideal& J, const Genericity& gen, const char* op) {
  auto socles = general_socle_profiles(J, gen, op);
  SocleSummary out{socles.front().min_degree, classify_socle(socles.front()), socles.front().total_dim};
  for (const auto& s : socles) {
    if (s.min_degree != out.s || classify_socle(s) != out.type)
      throw SeedDisagreement(std::string(op) + ": replicas disagree on the socle of the artinian reduction");
  }
  return out;
}

inline DepthClass depth_class(int depth, int dim) {
  if (depth == dim) return DepthClass::cm;
  if (depth == dim - 1) return DepthClass::almost_cm;
  return DepthClass::other;
}

/// Linear elements of the reduced GB in decreasing order; they span I_1.
inline std::vector<Polynomial> linear_part(const Ideal& I) {
  std::vector<Polynomial> out;
  const auto& gb = I.groebner_basis();
  for (auto it = gb.rbegin(); it != gb.rend(); ++it)
    if (it->degree() == 1) out.push_back(*it);
  return out;
}

}  // namespace detail

/// The bound e(R/I) <= e(R/J) - max{1, s(R/J) - deg F + 1} for I = J + (F).
inline DecompositionReport check_bound(const Ideal& J, const Polynomial& F, const Genericity& gen = {}) {
  const char* op = "check_bound";
  if (!same_ring(J.ring(), F.ring())) throw RingMismatch();
  if (!J.is_homogeneous()) throw PreconditionError(op, "J is not homogeneous");
  detail::require_homogeneous_form(F, op);
  if (J.is_unit()) throw PreconditionError(op, "J is the unit ideal");
  if (ideal_member(F, J)) throw PreconditionError(op, "F lies in J");

  Ideal I = J.plus(F);
  IdealProfile pJ = profile(J);
  if (I.is_unit()) throw PreconditionError(op, "J + (F) is the unit ideal");
  IdealProfile pI = profile(I);
  if (pI.height != pJ.height) throw PreconditionError(op, "ht(J + (F)) differs from ht J");
  auto soc = detail::socle_summary(J, gen, op);  // throws unless R/J is CM

  DecompositionReport rep{J, F, I};
  rep.g = pJ.height;
  rep.dim = pJ.dim;
  rep.e_J = pJ.multiplicity;
  rep.e_I = pI.multiplicity;
  rep.s = soc.s;
  rep.delta = F.degree();
  rep.bound_rhs = rep.e_J - std::max<std::int64_t>(1, rep.s - rep.delta + 1);
  rep.j_socle_type = soc.type;
  rep.bound_holds = rep.e_I <= rep.bound_rhs;
  rep.is_maximal = rep.e_I == rep.bound_rhs;
  if (!rep.bound_holds)
    rep.fail("bound violated: e(R/I) = " + std::to_string(rep.e_I) + " > " + std::to_string(rep.bound_rhs));
  return rep;
}

/// For a maximal decomposition: CM when deg F <= s; not CM when deg F > s
/// and J is level; depth = dim - 1 when deg F > s and J is Gorenstein.
inline DecompositionReport classify_decomposition(const Ideal& J, const Polynomial& F, const Genericity& gen = {}) {
  DecompositionReport rep = check_bound(J, F, gen);
  if (!rep.is_maximal) throw PreconditionError("classify_decomposition", "(J, F) is not a maximal decomposition");

  CMAnalysis cm = analyze_cohen_macaulay(rep.I, gen);
  DepthResult d = depth_analysis(rep.I, gen);
  rep.depth = d.depth;
  rep.i_cohen_macaulay = cm.cohen_macaulay;
  rep.depth_class = detail::depth_class(d.depth, d.dim);
  if (cm.cohen_macaulay != (d.depth == d.dim)) rep.fail("length test and depth disagree on Cohen-Macaulayness of R/I");

  bool level = rep.j_socle_type != SocleType::neither;
  if (rep.delta <= rep.s && !cm.cohen_macaulay) rep.fail("deg F <= s but R/I is not Cohen-Macaulay");
  if (rep.delta > rep.s && level && cm.cohen_macaulay) rep.fail("deg F > s with J level but R/I is Cohen-Macaulay");
  if (rep.delta > rep.s && rep.j_socle_type == SocleType::gorenstein && d.depth != d.dim - 1)
    rep.fail("deg F > s with J Gorenstein but depth(R/I) = " + std::to_string(d.depth) +
             " instead of " + std::to_string(d.dim - 1));
  return rep;
}

/// prod d_i - max{1, sum(d_i - 1) - (f - 1)}.
inline std::int64_t aci_bound(const std::vector<int>& ci_degrees, int f_degree) {
  if (ci_degrees.empty()) throw PreconditionError("aci_bound", "empty degree list");
  if (f_degree < 1 || std::any_of(ci_degrees.begin(), ci_degrees.end(), [](int d) { return d < 1; }))
    throw PreconditionError("aci_bound", "degrees must be positive");
  std::int64_t prod = 1, s = 0;
  for (int d : ci_degrees) {
    prod *= d;
    s += d - 1;
  }
  return prod - std::max<std::int64_t>(1, s - (f_degree - 1));
}

struct ColonStructure {
  Ideal colon;
  bool matches = false;
  std::vector<Polynomial> linear_forms;  // g - 1 of them on a match
  std::optional<Polynomial> q;
  std::string detail;
};

/// J : F written as (l_1..l_{g-1}, q) with independent linear l_i and q
/// outside (l_1..l_{g-1}), when it has that shape.
inline ColonStructure colon_structure(const Ideal& J, const Polynomial& F) {
  const char* op = "colon_structure";
  if (!same_ring(J.ring(), F.ring())) throw RingMismatch();
  if (!J.is_homogeneous()) throw PreconditionError(op, "J is not homogeneous");
  detail::require_homogeneous_form(F, op);
  Ideal I = J.plus(F);
  if (J.is_unit() || I.is_unit()) throw PreconditionError(op, "unit ideal");
  int g = profile(J).height;
  if (profile(I).height != g) throw PreconditionError(op, "ht(J + (F)) differs from ht J");

  ColonStructure out{groebner_basis(ideal_colon(J, F))};
  if (out.colon.is_unit()) {
    out.detail = "F lies in J, the colon is the unit ideal";
    return out;
  }
  auto lin = detail::linear_part(out.colon);
  const int k = static_cast<int>(lin.size());
  if (k == g && g >= 1) {
    if (!ideal_equal(out.colon, Ideal(J.ring(), lin))) {
      out.detail = "colon has " + std::to_string(k) + " linear forms and further generators";
      return out;
    }
    out.linear_forms.assign(lin.begin(), lin.end() - 1);
    out.q = lin.back();
    out.matches = true;
    return out;
  }
  if (k != g - 1) {
    out.detail = "colon has " + std::to_string(k) + " independent linear forms, expected " + std::to_string(g - 1);
    return out;
  }
  Ideal linear(J.ring(), lin);
  std::optional<Polynomial> q;
  for (const auto& h : out.colon.groebner_basis()) {
    if (h.degree() == 1) continue;
    if (!q || h.degree() < q->degree()) q = h;
  }
  if (q && ideal_equal(out.colon, linear.plus(*q))) {
    out.linear_forms = lin;
    out.q = q;
    out.matches = true;
  } else {
    out.detail = "colon is not generated by its linear part and one further element";
  }
  return out;
}

struct CharConstruction {
  enum class Outcome { constructed, trivial };
  Outcome outcome = Outcome::trivial;
  Ideal Cprime;
  int g = 0;
  std::int64_t e_Cprime = 0;
  int s_I = 0;
  std::optional<Polynomial> F;
  int delta = 0;
  std::int64_t condition_rhs = 0;  // max{1, s(R/I) - delta + 1}
  std::optional<DecompositionReport> decomposition;
  bool verified = true;
  std::vector<std::string> findings;
};

/// Builds J = C' ∩ I and F with I = J + (F) from an almost linear complete
/// intersection C' for which (I + C')/C' is cyclic, and checks maximality.
inline CharConstruction char_construct(const Ideal& I, const Ideal& Cprime, const Genericity& gen = {}) {
  const char* op = "char_construct";
  if (!same_ring(I.ring(), Cprime.ring())) throw RingMismatch();
  if (!I.is_homogeneous() || !Cprime.is_homogeneous()) throw PreconditionError(op, "input is not homogeneous");
  if (I.is_unit() || Cprime.is_unit()) throw PreconditionError(op, "unit ideal");
  IdealProfile pI = profile(I);
  IdealProfile pC = profile(Cprime);
  const int g = pI.height;
  if (pC.height != g) throw PreconditionError(op, "ht C' differs from ht I");
  if (static_cast<int>(minimal_generators(Cprime).size()) != g)
    throw PreconditionError(op, "C' is not a complete intersection");
  if (static_cast<int>(detail::linear_part(Cprime).size()) < g - 1)
    throw PreconditionError(op, "C' does not contain g - 1 independent linear forms");
  auto soc = detail::socle_summary(I, gen, op);  // throws unless R/I is CM

  CharConstruction out{CharConstruction::Outcome::trivial, Cprime, g, pC.multiplicity, soc.s};
  if (ideal_contains(Cprime, I)) return out;

  for (const auto& cand : minimal_generators(I)) {
    if (ideal_member(cand, Cprime)) continue;
    if (ideal_contains(Cprime.plus(cand), I)) {
      out.F = cand;
      break;
    }
  }
  if (!out.F) throw PreconditionError(op, "(I + C')/C' is not cyclic by a single minimal generator of I");
  out.delta = out.F->degree();
  if (out.delta < 1) throw PreconditionError(op, "cyclic generator has degree 0");
  out.condition_rhs = std::max(1, out.s_I - out.delta + 1);
  if (out.e_Cprime > out.condition_rhs)
    throw PreconditionError(op, "e(R/C') = " + std::to_string(out.e_Cprime) + " exceeds max{1, s - deg F + 1} = " +
                                    std::to_string(out.condition_rhs));

  out.outcome = CharConstruction::Outcome::constructed;
  Ideal J(I.ring(), minimal_generators(ideal_intersect(Cprime, I)));
  try {
    out.decomposition = check_bound(J, *out.F, gen);
    for (const auto& f : out.decomposition->findings) out.findings.push_back(f);
    if (!out.decomposition->is_maximal) out.findings.push_back("constructed decomposition is not maximal");
    if (!ideal_equal(out.decomposition->I, I)) out.findings.push_back("J + (F) differs from I");
  } catch (const PreconditionError& e) {
    out.findings.push_back(std::string("constructed pair fails: ") + e.what());
  }
  out.verified = out.findings.empty();
  return out;
}

/// J = (other generators of I) + F*m for an m-primary I and a minimal
/// generator F; e(R/J) = e(R/I) + 1 and (J, F) is maximal.
inline DecompositionReport mprimary_decomposition(const Ideal& I, const Polynomial& F, const Genericity& gen = {}) {
  const char* op = "mprimary_decomposition";
  if (!same_ring(I.ring(), F.ring())) throw RingMismatch();
  if (!I.is_homogeneous()) throw PreconditionError(op, "I is not homogeneous");
  detail::require_homogeneous_form(F, op);
  if (I.is_unit()) throw PreconditionError(op, "unit ideal");
  if (profile(I).dim != 0) throw PreconditionError(op, "I is not m-primary");
  if (!ideal_member(F, I)) throw PreconditionError(op, "F is not in I");

  const RingPtr& ring = I.ring();
  Polynomial Fm = F.monic();
  std::vector<Polynomial> others;
  for (const auto& h : I.generators())
    if (h.monic() != Fm) others.push_back(h);
  std::vector<Polynomial> jgens = others;
  for (std::size_t v = 0; v < ring->nvars(); ++v) jgens.push_back(F * Polynomial::variable(ring, v));
  Ideal J(ring, jgens);
  if (ideal_member(F, J)) throw PreconditionError(op, "F is not a minimal generator of I");

  DecompositionReport rep = check_bound(J, F, gen);
  if (rep.e_J != rep.e_I + 1) rep.fail("e(R/J) = " + std::to_string(rep.e_J) + " is not e(R/I) + 1");
  if (!rep.is_maximal) rep.fail("decomposition is not maximal");
  return rep;
}

struct QGReport {
  Ideal G;
  Polynomial h;
  Ideal Q;  // G : (G + (h))
  int a_G = 0;
  int a_invariant = 0;  // a(R/Q) = a(R/G) - deg h
  int dim_Q = 0;
  std::int64_t e_Q = 0;
  std::int64_t bound_rhs = 0;  // max{1, a + dim + 1}
  bool bound_holds = true;
  bool equality = false;
  bool cohen_macaulay = false;
  int socle_dim = 0;
  bool gorenstein_verified = false;
  bool verified = true;
  std::vector<std::string> findings;
};

/// Q = G : (G + (h)) for a complete intersection G, with the
/// quasi-Gorenstein multiplicity bound and the Gorenstein test on equality.
inline QGReport qg_construct(const Ideal& G, const Polynomial& h, const Genericity& gen = {}) {
  const char* op = "qg_construct";
  if (!same_ring(G.ring(), h.ring())) throw RingMismatch();
  if (!G.is_homogeneous()) throw PreconditionError(op, "G is not homogeneous");
  detail::require_homogeneous_form(h, op);
  if (G.is_unit() || G.is_zero()) throw PreconditionError(op, "G must be a proper nonzero ideal");
  IdealProfile pG = profile(G);
  auto mingens = minimal_generators(G);
  if (static_cast<int>(mingens.size()) != pG.height) throw PreconditionError(op, "G is not a complete intersection");
  if (ideal_member(h, G)) throw PreconditionError(op, "h lies in G");
  Ideal Gh = G.plus(h);
  if (Gh.is_unit() || profile(Gh).height != pG.height) throw PreconditionError(op, "ht(G + (h)) differs from ht G");

  const RingPtr& ring = G.ring();
  QGReport rep{G, h, groebner_basis(ideal_colon(G, h))};
  int sum = 0;
  for (const auto& f : mingens) sum += f.degree();
  rep.a_G = sum - static_cast<int>(ring->nvars());
  rep.a_invariant = rep.a_G - h.degree();
  IdealProfile pQ = profile(rep.Q);
  rep.dim_Q = pQ.dim;
  rep.e_Q = pQ.multiplicity;
  rep.bound_rhs = std::max(1, rep.a_invariant + rep.dim_Q + 1);
  rep.bound_holds = rep.e_Q >= rep.bound_rhs;
  rep.equality = rep.e_Q == rep.bound_rhs;

  CMAnalysis cm = analyze_cohen_macaulay(rep.Q, gen);
  rep.cohen_macaulay = cm.cohen_macaulay;
  if (cm.cohen_macaulay) {
    auto soc = detail::socle_summary(rep.Q, gen, op);
    rep.socle_dim = soc.total_dim;
    rep.gorenstein_verified = soc.total_dim == 1;
  }
  auto fail = [&](std::string what) {
    rep.verified = false;
    rep.findings.push_back(std::move(what));
  };
  if (!rep.bound_holds)
    fail("bound violated: e(R/Q) = " + std::to_string(rep.e_Q) + " < " + std::to_string(rep.bound_rhs));
  if (rep.equality && !rep.gorenstein_verified) fail("equality holds but R/Q is not Gorenstein");
  return rep;
}

/// Monomial complete intersection (x_1^{d_1}, ..., x_g^{d_g}) as G.
inline QGReport qg_construct(const std::vector<int>& ci_degrees, const Polynomial& h, const Genericity& gen = {}) {
  const RingPtr& ring = h.ring();
  if (ci_degrees.empty() || ci_degrees.size() > ring->nvars())
    throw PreconditionError("qg_construct", "need between 1 and n degrees");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ci_degrees.size(); ++i) {
    if (ci_degrees[i] < 1) throw PreconditionError("qg_construct", "degrees must be positive");
    gens.push_back(Polynomial::monomial(ring, Monomial::variable(i, static_cast<unsigned>(ci_degrees[i]))));
  }
  return qg_construct(Ideal(ring, gens), h, gen);
}

struct DichotomyReport {
  Ideal J;
  Polynomial F;
  Ideal I;
  std::int64_t e_J = 0;
  std::int64_t e_I = 0;
  int s = 0;
  int delta = 0;
  bool maximal = false;
  bool unit_multiplicity = false;  // e(R/I) = 1
  bool unmixed = false;
  bool cohen_macaulay = false;
  int depth = 0;
  int dim = 0;
  bool verified = true;
  std::vector<std::string> findings;
};

/// For Gorenstein J with e(R/I) = 1 or (J, F) maximal:
/// unmixed <=> CM (<=> deg F <= s), not unmixed <=> depth = dim - 1 (<=> deg F > s).
inline DichotomyReport dichotomy_check(const Ideal& J, const Polynomial& F, const Genericity& gen = {}) {
  const char* op = "dichotomy_check";
  DecompositionReport b = check_bound(J, F, gen);
  if (b.j_socle_type != SocleType::gorenstein) throw PreconditionError(op, "J is not Gorenstein");
  DichotomyReport rep{J, F, b.I, b.e_J, b.e_I, b.s, b.delta, b.is_maximal, b.e_I == 1};
  if (!rep.maximal && !rep.unit_multiplicity)
    throw PreconditionError(op, "neither e(R/I) = 1 nor (J, F) maximal");

  rep.unmixed = is_unmixed(b.I, gen.seed);
  rep.cohen_macaulay = is_cohen_macaulay(b.I, gen);
  DepthResult d = depth_analysis(b.I, gen);
  rep.depth = d.depth;
  rep.dim = d.dim;
  auto fail = [&](std::string what) {
    rep.verified = false;
    rep.findings.push_back(std::move(what));
  };
  if (rep.unmixed != rep.cohen_macaulay) fail("unmixed and Cohen-Macaulay disagree");
  if (!rep.unmixed != (rep.depth == rep.dim - 1)) fail("not unmixed and depth = dim - 1 disagree");
  if (rep.maximal && rep.cohen_macaulay != (rep.delta <= rep.s)) fail("Cohen-Macaulay and deg F <= s disagree");
  for (const auto& f : b.findings) fail(f);
  return rep;
}

}  // namespace maxmult

#endif  // MAXMULT_THEOREMS_HPP
