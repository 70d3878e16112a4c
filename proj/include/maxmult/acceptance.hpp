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


// The acceptance criteria as runnable checks, shared by the `suite`
// subcommand and the acceptance test binary.

#ifndef MAXMULT_ACCEPTANCE_HPP
#define MAXMULT_ACCEPTANCE_HPP

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"

namespace maxmult {

struct AcceptanceConfig {
  Genericity gen;
  std::uint32_t characteristic = kDefaultCharacteristic;
  GBLimits limits;
  bool include_long_running = false;
};

struct CriterionResult {
  enum class Status { pass, fail, skipped, not_reproduced };
  int id = 0;
  std::string title;
  Status status = Status::pass;
  std::string detail;
  std::int64_t elapsed_ms = 0;
  std::int64_t limit_ms = 0;
};

inline const char* to_string(CriterionResult::Status s) {
  switch (s) {
    case CriterionResult::Status::pass: return "pass";
    case CriterionResult::Status::fail: return "fail";
    case CriterionResult::Status::skipped: return "skipped";
    case CriterionResult::Status::not_reproduced: return "not_reproduced";
  }
  return "?";
}

/// Failures recorded while a criterion runs.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  bool ok() const { return failed_ == 0; }
  int checks() const { return checks_; }
  std::string summary() const {
    std::string out = ok() ? std::to_string(checks_) + " checks"
                           : std::to_string(failed_) + "/" + std::to_string(checks_) + " checks failed";
    for (const auto& f : failures_) out += "; " + f;
    for (const auto& n : notes_) out += "; " + n;
    return out;
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

namespace acceptance {

inline std::string str(std::int64_t v) { return std::to_string(v); }

inline RingPtr ring(const AcceptanceConfig& cfg, std::vector<std::string> names) {
  return make_ring(cfg.characteristic, std::move(names), MonomialOrder::grevlex(), cfg.limits);
}

inline Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(parse_polynomial(r, s));
  return Ideal(r, std::move(g));
}

inline Polynomial random_monomial(const RingPtr& r, Rng& rng, unsigned degree, std::size_t nvars) {
  Monomial m;
  for (unsigned k = 0; k < degree; ++k) {
    std::size_t v = std::uniform_int_distribution<std::size_t>(0, nvars - 1)(rng);
    m.set(v, m[v] + 1u);
  }
  return Polynomial::monomial(r, m);
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rng criterion_rng(const AcceptanceConfig& cfg, int id) { return Rng(derive_seed(cfg.gen.seed, 1000 + id)); }

// 1
inline void four_quadrics_table(const AcceptanceConfig& cfg, Checker& c) {
  const std::int64_t e[] = {1, 2, 3, 4, 5, 6};
  const int pd[] = {4, 4, 6, 4, 4, 3};
  for (int i = 1; i <= 6; ++i) {
    auto entry = four_quadrics(i, cfg.characteristic, cfg.limits);
    auto p = profile(entry.ideal);
    int got_pd = 6 - depth_of(entry.ideal, cfg.gen);
    c.expect(p.multiplicity == e[i - 1] && got_pd == pd[i - 1],
             entry.name + ": (e, pd) = (" + str(p.multiplicity) + ", " + str(got_pd) + "), expected (" + str(e[i - 1]) +
                 ", " + str(pd[i - 1]) + ")");
  }
}

// 2
inline void non_cm_example(const AcceptanceConfig& cfg, Checker& c) {
  auto r = ring(cfg, {"x", "y", "z"});
  Ideal I = ideal(r, {"x^2", "x*y", "y^2", "x*z"});
  auto p = profile(I);
  c.expect(p.multiplicity == 2, "e(R/I) = " + str(p.multiplicity));
  c.expect(!is_unmixed(I, cfg.gen.seed), "I reported unmixed");
  c.expect(ideal_equal(unmixed_part(I, cfg.gen.seed), ideal(r, {"x", "y^2"})), "unmixed part is not (x, y^2)");
  int d = depth_of(I, cfg.gen);
  c.expect(d == 0 && d == p.dim - 1, "depth " + str(d) + ", dim " + str(p.dim));
  Ideal J = ideal(r, {"x^2", "x*y", "y^2"});
  Polynomial F = parse_polynomial(r, "x*z");
  auto b = check_bound(J, F, cfg.gen);
  c.expect(b.is_maximal, "check_bound not maximal");
  auto cl = classify_decomposition(J, F, cfg.gen);
  c.expect(cl.verified, "classification not verified");
  c.expect(cl.j_socle_type == SocleType::level, std::string("J socle type ") + to_string(cl.j_socle_type));
  c.expect(!*cl.i_cohen_macaulay && *cl.depth_class == DepthClass::almost_cm, "R/I not almost CM and non-CM");
}

// 3
inline void twisted_cubic(const AcceptanceConfig& cfg, Checker& c) {
  auto e = catalecticant(1, 2, 3, cfg.characteristic, cfg.limits);
  auto p = profile(e.ideal);
  c.expect(p.multiplicity == 3 && p.height == 2, "(e, ht) = (" + str(p.multiplicity) + ", " + str(p.height) + ")");
  c.expect(s_invariant(e.ideal, cfg.gen).value == 1, "s != 1");
  c.expect(is_cohen_macaulay(e.ideal, cfg.gen), "not CM");
  auto r = e.ideal.ring();
  auto cc = char_construct(e.ideal, ideal(r, {"x2", "x3"}), cfg.gen);
  c.expect(cc.outcome == CharConstruction::Outcome::constructed && cc.F &&
               cc.F->monic() == parse_polynomial(r, "x1*x4 - x2*x3").monic(),
           "F is not x1*x4 - x2*x3");
  c.expect(cc.decomposition &&
               ideal_equal(cc.decomposition->J, ideal(r, {"x1*x3 - x2^2", "x2*x4 - x3^2"})),
           "J is not the two-quadric complete intersection");
  c.expect(cc.decomposition && cc.decomposition->is_maximal && cc.verified, "decomposition not maximal");
  c.expect(aci_bound({2, 2}, 2) == 3 && p.multiplicity == aci_bound({2, 2}, 2), "aci bound (2,2;2) not achieved");
}

// 4
inline void catalecticant_grid(const AcceptanceConfig& cfg, Checker& c) {
  for (int d : {1, 2})
    for (int r : {2, 3})
      for (int N : {3, 4, 5}) {
        if (r > N - 1) continue;
        auto e = catalecticant(d, r, N, cfg.characteristic, cfg.limits);
        auto cc = char_construct(e.ideal, *e.Cprime, cfg.gen);
        bool ok = cc.outcome == CharConstruction::Outcome::constructed && cc.verified && cc.decomposition &&
                  cc.decomposition->is_maximal && cc.F->monic() == e.F->monic();
        c.expect(ok, e.name + " did not yield a maximal decomposition");
      }
}

// 5
inline void aci_bound_values(const AcceptanceConfig& cfg, Checker& c) {
  c.expect(aci_bound({2, 2, 2}, 2) == 6, "aci_bound(2,2,2;2) != 6");
  Rng rng = criterion_rng(cfg, 5);
  for (int k = 0; k < 20; ++k) {
    int d = uniform(rng, 2, 9), g = uniform(rng, 2, 6);
    std::int64_t pow = 1;
    for (int j = 0; j < g; ++j) pow *= d;
    c.expect(aci_bound(std::vector<int>(static_cast<std::size_t>(g), d), d) == pow - (d - 1) * (g - 1),
             "single-degree formula differs at d=" + str(d) + ", g=" + str(g));
  }
}

// 6
inline void ci_s_invariant(const AcceptanceConfig& cfg, Checker& c) {
  auto r = ring(cfg, {"x1", "x2", "x3", "x4"});
  Rng rng = criterion_rng(cfg, 6);
  for (int k = 0; k < 50; ++k) {
    int g = uniform(rng, 1, 4);
    std::vector<std::size_t> vars{0, 1, 2, 3};
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<Polynomial> gens;
    int expect = 0;
    for (int j = 0; j < g; ++j) {
      int d = uniform(rng, 2, 5);
      expect += d - 1;
      gens.push_back(Polynomial::monomial(r, Monomial::variable(vars[static_cast<std::size_t>(j)], static_cast<unsigned>(d))));
    }
    Ideal J(r, gens);
    int s = s_invariant(J, cfg.gen).value;
    c.expect(s == expect, "s = " + str(s) + " for a CI with sum(d - 1) = " + str(expect));
  }
}

// 7
inline void serre_consistency(const AcceptanceConfig& cfg, Checker& c) {
  for (const auto& name : corpus_names(false)) {
    auto e = corpus_entry(name, cfg.characteristic, cfg.limits);
    auto cm = analyze_cohen_macaulay(e.ideal, cfg.gen);
    auto d = depth_analysis(e.ideal, cfg.gen);
    c.expect(cm.cohen_macaulay == (d.depth == d.dim), name + ": length test and depth disagree");
    if (e.expected.cohen_macaulay)
      c.expect(cm.cohen_macaulay == *e.expected.cohen_macaulay, name + ": unexpected CM status");
  }
}

inline Ideal random_linkage_ideal(const RingPtr& r, Rng& rng) {
  auto lin = [&] { return random_linear_form(r, rng); };
  switch (uniform(rng, 0, 3)) {
    case 0: return Ideal(r, {lin() * lin(), lin() * lin()});
    case 1: return Ideal(r, {lin(), random_form(r, 2, rng) * lin(), random_form(r, 3, rng)});
    case 2: {
      Polynomial l = lin();
      return Ideal(r, {l * l, l * lin(), lin() * lin() * lin()});
    }
    default: {
      Polynomial l1 = lin(), l2 = lin();
      return Ideal(r, {l1 * l1, l1 * l2, l2 * l2, l1 * lin() * lin()});
    }
  }
}

// 8
inline void linkage_identity(const AcceptanceConfig& cfg, Checker& c) {
  auto r = ring(cfg, {"x", "y", "z", "w"});
  Ideal cubic = ideal(r, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  auto rec = link(ideal(r, {"x*z - y^2", "y*w - z^2"}), cubic);
  c.expect(rec.identity_holds && rec.e_I_un == 3 && rec.e_L == 1 && rec.e_G == 4, "twisted cubic link: 3 + 1 != 4");
  c.expect(ideal_equal(rec.L, ideal(r, {"y", "z"})), "twisted cubic link is not (y, z)");

  Rng rng = criterion_rng(cfg, 8);
  int pairs = 0;
  while (pairs < 25) {
    Ideal I = random_linkage_ideal(r, rng);
    if (I.is_unit() || I.is_zero()) continue;
    ++pairs;
    Ideal G = find_ci_inside(I, rng());
    auto lr = link(G, I);
    c.expect(lr.identity_holds, "pair " + str(pairs) + ": " + str(lr.e_I_un) + " + " + str(lr.e_L) +
                                    " != " + str(lr.e_G));
    Ideal U = unmixed_part(I, derive_seed(cfg.gen.seed, pairs, 1));
    Ideal U2 = unmixed_part(I, derive_seed(cfg.gen.seed, pairs, 2));
    c.expect(ideal_equal(U, U2), "pair " + str(pairs) + ": unmixed part depends on the CI");
    c.expect(ideal_equal(unmixed_part(U, cfg.gen.seed), U), "pair " + str(pairs) + ": unmixed part not idempotent");
  }
}

// 9
inline void quasi_gorenstein(const AcceptanceConfig& cfg, Checker& c) {
  auto r = ring(cfg, {"x", "y", "z"});
  struct Case {
    Ideal G;
    const char* h;
    std::int64_t bound, e;
    bool equality, gorenstein;
  };
  std::vector<Case> cases{{ideal(r, {"x^2", "y^2"}), "x", 2, 2, true, true},
                          {ideal(r, {"x^2", "y^2", "z^2"}), "x*y*z", 1, 1, true, true},
                          {ideal(r, {"x^3", "y^3"}), "x", 4, 6, false, true}};
  for (const auto& k : cases) {
    auto q = qg_construct(k.G, parse_polynomial(r, k.h), cfg.gen);
    c.expect(q.bound_rhs == k.bound && q.e_Q == k.e && q.equality == k.equality &&
                 q.gorenstein_verified == k.gorenstein && q.verified,
             std::string("example h = ") + k.h + ": (bound, e, equality, gorenstein) = (" + str(q.bound_rhs) + ", " +
                 str(q.e_Q) + ", " + str(q.equality) + ", " + str(q.gorenstein_verified) + ")");
  }
  auto r4 = ring(cfg, {"x1", "x2", "x3", "x4"});
  Rng rng = criterion_rng(cfg, 9);
  int made = 0;
  while (made < 25) {
    int n = 4, g = uniform(rng, 1, 3);
    std::vector<Polynomial> gens;
    for (int i = 0; i < g; ++i)
      gens.push_back(Polynomial::monomial(r4, Monomial::variable(static_cast<std::size_t>(i), static_cast<unsigned>(uniform(rng, 1, 4)))));
    Ideal G(r4, gens);
    std::size_t pivot = static_cast<std::size_t>(uniform(rng, 0, g - 1));
    Polynomial h = Polynomial::variable(r4, pivot) *
                   random_monomial(r4, rng, static_cast<unsigned>(uniform(rng, 0, 3)), static_cast<std::size_t>(n));
    if (ideal_member(h, G)) continue;
    ++made;
    auto q = qg_construct(G, h, cfg.gen);
    c.expect(q.bound_holds, "random instance " + str(made) + " violates the bound");
    if (q.equality) c.expect(q.gorenstein_verified, "random instance " + str(made) + ": equality without Gorenstein");
  }
}

// 10
inline void mprimary_property(const AcceptanceConfig& cfg, Checker& c) {
  Rng rng = criterion_rng(cfg, 10);
  for (int k = 0; k < 25; ++k) {
    int n = uniform(rng, 1, 3);
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(static_cast<std::size_t>(n));
    auto r = ring(cfg, names);
    std::vector<Polynomial> gens;
    for (int v = 0; v < n; ++v)
      gens.push_back(Polynomial::monomial(r, Monomial::variable(static_cast<std::size_t>(v), static_cast<unsigned>(uniform(rng, 1, 4)))));
    int extra = uniform(rng, 0, 2);
    for (int j = 0; j < extra; ++j) {
      unsigned d = static_cast<unsigned>(uniform(rng, 2, 3));
      gens.push_back(uniform(rng, 0, 1) ? random_form(r, d, rng) : random_monomial(r, rng, d, static_cast<std::size_t>(n)));
    }
    Ideal I(r, minimal_generators(Ideal(r, gens)));
    for (const auto& F : I.generators()) {
      auto rep = mprimary_decomposition(I, F, cfg.gen);
      c.expect(rep.e_J == rep.e_I + 1 && rep.is_maximal && rep.verified,
               "ideal " + str(k) + ", F = " + format_polynomial(F) + ": e_J = " + str(rep.e_J) + ", e_I = " + str(rep.e_I));
    }
  }
}

/// An admissible (J, F): J a complete intersection, F homogeneous outside
/// J with ht(J + (F)) = ht J.
struct AdmissiblePair {
  Ideal J;
  Polynomial F;
};

inline std::optional<AdmissiblePair> random_admissible(const RingPtr& r, Rng& rng) {
  const int n = static_cast<int>(r->nvars());
  const int g = uniform(rng, 1, n);
  std::vector<Polynomial> gens;
  Polynomial F(r);
  if (uniform(rng, 0, 1) == 0) {
    // monomial CI, F a monomial through one of its variables
    for (int i = 0; i < g; ++i)
      gens.push_back(Polynomial::monomial(r, Monomial::variable(static_cast<std::size_t>(i), static_cast<unsigned>(uniform(rng, 1, 4)))));
    F = Polynomial::variable(r, static_cast<std::size_t>(uniform(rng, 0, g - 1))) *
        random_monomial(r, rng, static_cast<unsigned>(uniform(rng, 0, 3)), static_cast<std::size_t>(n));
  } else {
    // f_i = l_i * p_i, F in (l_1..l_g)
    std::vector<Polynomial> ls;
    for (int i = 0; i < g; ++i) {
      ls.push_back(random_linear_form(r, rng));
      gens.push_back(ls.back() * random_form(r, static_cast<unsigned>(uniform(rng, 0, 3)), rng));
    }
    unsigned delta = static_cast<unsigned>(uniform(rng, 1, 4));
    for (const auto& l : ls) F = F + l * random_form(r, delta - 1, rng);
  }
  Ideal J(r, gens);
  if (F.is_zero() || J.is_unit() || static_cast<int>(J.generators().size()) != g) return std::nullopt;
  if (profile(J).height != g || ideal_member(F, J)) return std::nullopt;
  Ideal I = J.plus(F);
  if (I.is_unit() || profile(I).height != g) return std::nullopt;
  return AdmissiblePair{J, F};
}

// 11
inline void fuzzed_bound(const AcceptanceConfig& cfg, Checker& c) {
  Rng rng = criterion_rng(cfg, 11);
  int done = 0, maximal = 0, violations = 0;
  while (done < 200) {
    int n = uniform(rng, 1, 4);
    std::vector<std::string> names{"x1", "x2", "x3", "x4"};
    names.resize(static_cast<std::size_t>(n));
    auto r = ring(cfg, names);
    auto pair = random_admissible(r, rng);
    if (!pair) continue;
    ++done;
    auto rep = check_bound(pair->J, pair->F, cfg.gen);
    if (!rep.bound_holds) ++violations;
    c.expect(rep.bound_holds, "bound violated for J = (" + format_polynomial(pair->J.generators().front()) +
                                  ", ...), F = " + format_polynomial(pair->F));
    if (rep.is_maximal && rep.delta <= rep.s) {
      ++maximal;
      auto cl = classify_decomposition(pair->J, pair->F, cfg.gen);
      c.expect(cl.verified && *cl.i_cohen_macaulay, "maximal case with deg F <= s is not CM");
    }
  }
  c.expect(maximal > 0, "no maximal case with deg F <= s was generated");
  c.note(str(done) + " pairs, " + str(violations) + " violations, " + str(maximal) + " maximal with deg F <= s");
}

// 12
inline void aci_example(const AcceptanceConfig& cfg, Checker& c) {
  auto e = aci_family(1, cfg.characteristic, cfg.limits);
  std::vector<int> degs;
  for (const auto& g : e.ideal.generators()) degs.push_back(g.degree());
  c.expect(degs == e.expected.generator_degrees, "generator degrees differ from (4, 4, 6, 4)");
  c.expect(s_invariant(e.ideal, cfg.gen).value == 7, "s(R/I) != 7");
  c.expect(is_cohen_macaulay(e.ideal, cfg.gen), "R/I not CM");
  auto cc = char_construct(e.ideal, *e.Cprime, cfg.gen);
  c.expect(cc.outcome == CharConstruction::Outcome::constructed && cc.verified && cc.decomposition->is_maximal,
           "no maximal decomposition from C' = (x2, x4, g1)");
  c.expect(cc.F && cc.F->monic() == e.F->monic(), "cyclic generator is not h1*h2");
}

}  // namespace acceptance

struct CriterionSpec {
  int id;
  const char* title;
  std::int64_t limit_ms;
  bool optional;
  void (*run)(const AcceptanceConfig&, Checker&);
};

inline const std::vector<CriterionSpec>& acceptance_criteria() {
  using namespace acceptance;
  static const std::vector<CriterionSpec> specs{
      {1, "four quadrics (e, pd) table", 60'000, false, four_quadrics_table},
      {2, "non-CM maximal decomposition", 5'000, false, non_cm_example},
      {3, "twisted cubic pipeline", 5'000, false, twisted_cubic},
      {4, "catalecticant grid", 120'000, false, catalecticant_grid},
      {5, "almost complete intersection bound values", 1'000, false, aci_bound_values},
      {6, "CI s-invariant", 120'000, false, ci_s_invariant},
      {7, "Serre criterion vs depth", 120'000, false, serre_consistency},
      {8, "linkage identity", 180'000, false, linkage_identity},
      {9, "quasi-Gorenstein bound", 120'000, false, quasi_gorenstein},
      {10, "m-primary maximality", 120'000, false, mprimary_property},
      {11, "fuzzed multiplicity bound", 600'000, false, fuzzed_bound},
      {12, "aci example t=1", 0, true, aci_example},
  };
  return specs;
}

inline CriterionResult run_criterion(const CriterionSpec& spec, const AcceptanceConfig& cfg) {
  CriterionResult res{spec.id, spec.title};
  res.limit_ms = spec.limit_ms;
  if (spec.optional && !cfg.include_long_running) {
    res.status = CriterionResult::Status::skipped;
    res.detail = "long-running, enable with --include-long-running";
    return res;
  }
  auto t0 = std::chrono::steady_clock::now();
  Checker c;
  try {
    spec.run(cfg, c);
    res.status = c.ok() ? CriterionResult::Status::pass : CriterionResult::Status::fail;
    res.detail = c.summary();
  } catch (const ResourceError& e) {
    res.status = spec.optional ? CriterionResult::Status::not_reproduced : CriterionResult::Status::fail;
    res.detail = spec.optional ? std::string("not reproduced at desk scale: ") + e.what() : e.what();
  } catch (const Error& e) {
    res.status = CriterionResult::Status::fail;
    res.detail = e.what();
  }
  res.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  if (res.status == CriterionResult::Status::pass && res.limit_ms > 0 && res.elapsed_ms > res.limit_ms) {
    res.status = CriterionResult::Status::fail;
    res.detail += "; over the " + std::to_string(res.limit_ms) + " ms budget";
  }
  return res;
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg,
                                                   const std::function<void(const CriterionResult&)>& on_result = {}) {
  std::vector<CriterionResult> out;
  for (const auto& spec : acceptance_criteria()) {
    out.push_back(run_criterion(spec, cfg));
    if (on_result) on_result(out.back());
  }
  return out;
}

inline bool acceptance_passed(const std::vector<CriterionResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const CriterionResult& r) { return r.status == CriterionResult::Status::fail; });
}

}  // namespace maxmult

#endif  // MAXMULT_ACCEPTANCE_HPP
