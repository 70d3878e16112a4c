#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <thread>

#include "maxmult/hilbert.hpp"
#include "maxmult/ideal_ops.hpp"
#include "maxmult/linalg.hpp"
#include "test_support.hpp"

using namespace maxmult;
using namespace maxmult::testing;

namespace {

// Degreewise linear-algebra oracles. They only use polynomial products and
// Gaussian elimination, never a Groebner basis.

std::vector<std::vector<Coeff>> coords(const std::vector<Polynomial>& polys, const std::vector<Monomial>& monos) {
  std::vector<std::vector<Coeff>> out;
  for (const auto& p : polys) {
    std::vector<Coeff> v(monos.size(), 0);
    for (const auto& t : p.terms()) {
      auto it = std::find(monos.begin(), monos.end(), t.mono);
      REQUIRE(it != monos.end());
      v[static_cast<std::size_t>(it - monos.begin())] = t.coeff;
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// All products m*g of degree d.
std::vector<Polynomial> degree_piece(const RingPtr& r, const std::vector<Polynomial>& gens, unsigned d) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    int dg = g.degree();
    if (dg > static_cast<int>(d)) continue;
    for (const auto& m : monomials_of_degree(r->nvars(), d - static_cast<unsigned>(dg)))
      out.push_back(g.times_term(m, 1));
  }
  return out;
}

std::size_t rank_of(const std::vector<std::vector<Coeff>>& rows, std::size_t cols, const PrimeField& f) {
  FpMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return matrix_rank(std::move(m), f);
}

bool member_by_linear_algebra(const Polynomial& f, const std::vector<Polynomial>& gens, unsigned d) {
  const RingPtr& r = f.ring();
  auto monos = monomials_of_degree(r->nvars(), d);
  auto piece = coords(degree_piece(r, gens, d), monos);
  std::size_t base = rank_of(piece, monos.size(), r->field());
  piece.push_back(coords({f}, monos).front());
  return rank_of(piece, monos.size(), r->field()) == base;
}

/// dim_k (I : K)_d.
std::size_t colon_dim(const RingPtr& r, const std::vector<Polynomial>& I, const std::vector<Polynomial>& K, unsigned d) {
  const PrimeField& f = r->field();
  auto rd = monomials_of_degree(r->nvars(), d);
  // unknowns: b (coefficients on R_d), then for each k the coefficients on I_{d+deg k}
  std::vector<std::vector<std::vector<Coeff>>> pieces;
  std::vector<std::vector<Monomial>> targets;
  std::size_t unknowns = rd.size();
  for (const auto& k : K) {
    unsigned e = d + static_cast<unsigned>(k.degree());
    targets.push_back(monomials_of_degree(r->nvars(), e));
    pieces.push_back(coords(degree_piece(r, I, e), targets.back()));
    unknowns += pieces.back().size();
  }
  std::size_t rows = 0;
  for (auto& t : targets) rows += t.size();
  FpMatrix m(rows, unknowns);
  std::size_t row0 = 0, col0 = rd.size();
  for (std::size_t kk = 0; kk < K.size(); ++kk) {
    for (std::size_t j = 0; j < rd.size(); ++j) {
      auto img = coords({K[kk].times_term(rd[j], 1)}, targets[kk]).front();
      for (std::size_t i = 0; i < img.size(); ++i) m.at(row0 + i, j) = img[i];
    }
    for (std::size_t c = 0; c < pieces[kk].size(); ++c)
      for (std::size_t i = 0; i < targets[kk].size(); ++i) m.at(row0 + i, col0 + c) = pieces[kk][c][i];
    row0 += targets[kk].size();
    col0 += pieces[kk].size();
  }
  auto ker = kernel_basis(std::move(m), f);
  std::vector<std::vector<Coeff>> proj;
  for (auto& v : ker) proj.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(rd.size()));
  return proj.empty() ? 0 : rank_of(proj, rd.size(), f);
}

std::size_t ideal_dim_in_degree(const Ideal& I, unsigned d) {
  auto monos = monomials_of_degree(I.ring()->nvars(), d);
  return rank_of(coords(degree_piece(I.ring(), I.generators(), d), monos), monos.size(), I.ring()->field());
}

}  // namespace

TEST_CASE("reduced Groebner bases", "[groebner]") {
  auto r = ring_of({"x", "y"});
  auto gb = groebner_basis(ideal(r, {"x", "y"})).generators();
  CHECK(gb == std::vector<Polynomial>{P(r, "y"), P(r, "x")});

  auto I = ideal(r, {"x^2", "x*y + y^2"});
  auto basis = I.groebner_basis();
  CHECK(basis == std::vector<Polynomial>{P(r, "x*y + y^2"), P(r, "x^2"), P(r, "y^3")});
  // y^3 really lies in the ideal: independent degree-3 linear algebra
  CHECK(member_by_linear_algebra(P(r, "y^3"), I.generators(), 3));
  CHECK_FALSE(member_by_linear_algebra(P(r, "y^2"), I.generators(), 2));

  auto principal = ideal(r, {"3*x^2 - y^2"});
  CHECK(principal.groebner_basis() == std::vector<Polynomial>{P(r, "3*x^2 - y^2").monic()});

  // idempotent
  auto again = groebner_basis(groebner_basis(I));
  CHECK(again.generators() == basis);
}

TEST_CASE("normal form and membership", "[groebner]") {
  auto r = ring_of({"x", "y"});
  CHECK(normal_form(P(r, "y^3"), ideal(r, {"x^2", "x*y + y^2"})).is_zero());
  CHECK(normal_form(P(r, "x"), ideal(r, {"x - y"})) == P(r, "y"));
  CHECK(ideal_member(P(r, "1"), ideal(r, {"x", "x + 1"})));
  CHECK(ideal(r, {"x", "x + 1"}).is_unit());
}

TEST_CASE("colon ideals", "[groebner]") {
  auto r = ring_of({"x", "y"});
  CHECK(ideal_equal(ideal_colon(ideal(r, {"x^2", "x*y"}), P(r, "x")), ideal(r, {"x", "y"})));
  CHECK(ideal_equal(ideal_colon(ideal(r, {"x*y"}), P(r, "y")), ideal(r, {"x"})));

  auto G = ideal(r, {"x^2", "y^2"});
  auto K = ideal(r, {"x", "y^2"});
  auto C = ideal_colon_ideal(G, K);
  CHECK(ideal_equal(C, K));
  for (unsigned d = 0; d <= 5; ++d)
    CHECK(colon_dim(r, G.generators(), K.generators(), d) == ideal_dim_in_degree(C, d));

  CHECK_THROWS_AS(ideal_colon(G, Polynomial(r)), PreconditionError);
  CHECK(ideal_colon(G, P(r, "x^2")).is_unit());
}

TEST_CASE("intersections", "[groebner]") {
  auto r = ring_of({"x", "y", "z"});
  CHECK(ideal_equal(ideal_intersect(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x*y"})));
  CHECK(ideal_equal(ideal_intersect(ideal(r, {"x", "y"}), ideal(r, {"z"})), ideal(r, {"x*z", "y*z"})));

  auto s = ring_of({"x", "y", "z", "w"});
  auto cubic = ideal(s, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  auto inter = ideal_intersect(cubic, ideal(s, {"y", "z"}));
  CHECK(ideal_equal(inter, ideal(s, {"x*z - y^2", "y*w - z^2"})));
}

TEST_CASE("ideal equality", "[groebner]") {
  auto r = ring_of({"x", "y"});
  CHECK(ideal_equal(ideal(r, {"x", "y"}), ideal(r, {"y", "x + y"})));
  CHECK_FALSE(ideal_equal(ideal(r, {"x"}), ideal(r, {"x^2"})));
  auto I = ideal(r, {"x^2 + y^2", "x*y"});
  CHECK(ideal_equal(I, groebner_basis(I)));
}

TEST_CASE("Groebner basis is independent of generator order", "[groebner][property]") {
  auto r = ring_of({"x", "y", "z", "w"});
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens;
    int k = 2 + static_cast<int>(rng() % 3);
    for (int j = 0; j < k; ++j) gens.push_back(random_homogeneous(r, rng, 3, 2 + static_cast<unsigned>(rng() % 2)));
    auto gb = Ideal(r, gens).groebner_basis();
    std::shuffle(gens.begin(), gens.end(), rng);
    REQUIRE(Ideal(r, gens).groebner_basis() == gb);
    // GB elements are members, reduced, and their leads are pairwise non-divisible
    for (std::size_t a = 0; a < gb.size(); ++a) {
      REQUIRE(gb[a].lead_coeff() == 1);
      for (std::size_t b = 0; b < gb.size(); ++b) {
        if (a == b) continue;
        for (const auto& t : gb[b].terms()) REQUIRE_FALSE(gb[a].lead_monomial().divides(t.mono));
      }
    }
  }
}

TEST_CASE("ideal closure and colon/intersection laws", "[groebner][property]") {
  auto r = ring_of({"x", "y", "z"});
  Rng rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 2; ++j) gens.push_back(random_homogeneous(r, rng, 3, 2));
    Ideal I(r, gens);
    Polynomial f = gens[0] * random_poly(r, rng, 3, 2) + gens[1] * random_poly(r, rng, 2, 1);
    Polynomial g = random_poly(r, rng, 3, 2);
    REQUIRE(ideal_member(f, I));
    REQUIRE(ideal_member(f * g + f, I));

    Polynomial h = random_homogeneous(r, rng, 2, 1);
    if (h.is_zero()) continue;
    Ideal C = ideal_colon(I, h);
    for (const auto& c : C.generators()) REQUIRE(ideal_member(c * h, I));
    REQUIRE(ideal_contains(C, I));

    Ideal K(r, {random_homogeneous(r, rng, 2, 1), random_homogeneous(r, rng, 3, 2)});
    Ideal X = ideal_intersect(I, K);
    REQUIRE(ideal_contains(I, X));
    REQUIRE(ideal_contains(K, X));
    REQUIRE(ideal_equal(ideal_intersect(I, I), I));
  }
}

TEST_CASE("resource budgets fail loudly", "[groebner]") {
  auto r = make_ring(32003, {"x", "y", "z", "w"}, MonomialOrder::grevlex(), GBLimits{5, 60});
  auto I = ideal(r, {"x*z - y^2", "y*w - z^2", "x*w - y*z", "x^3 + w^3"});
  CHECK_THROWS_AS(I.groebner_basis(), ResourceError);

  auto r2 = make_ring(32003, {"x", "y"}, MonomialOrder::grevlex(), GBLimits{1000000, 3});
  CHECK_THROWS_AS(ideal(r2, {"x^2*y^2 + y^4", "x^4"}).groebner_basis(), ResourceError);
}

namespace {
struct CountingListener : GBListener {
  std::uint64_t pairs = 0;
  std::size_t growth = 0;
  void on_pair(std::uint64_t, std::size_t) override { ++pairs; }
  void on_basis_growth(std::size_t, unsigned) override { ++growth; }
};
}  // namespace

TEST_CASE("listener observes without altering", "[groebner]") {
  auto r = ring_of({"x", "y", "z", "w"});
  auto gens = ideal(r, {"x*z - y^2", "y*w - z^2", "x*w - y*z"}).generators();
  CountingListener listener;
  auto with = buchberger(r, gens, &listener);
  CHECK(with == buchberger(r, gens));
  CHECK(listener.pairs > 0);
  CHECK(listener.growth >= 3);
}

TEST_CASE("cached basis is computed once across copies and threads", "[groebner]") {
  auto r = ring_of({"x", "y", "z", "w"});
  Ideal I = ideal(r, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  std::vector<const std::vector<Polynomial>*> seen(4);
  std::vector<std::thread> threads;
  for (int k = 0; k < 4; ++k) {
    Ideal copy = I;
    threads.emplace_back([copy, &seen, k] { seen[static_cast<std::size_t>(k)] = &copy.groebner_basis(); });
  }
  for (auto& t : threads) t.join();
  for (auto* p : seen) CHECK(p == &I.groebner_basis());
}

TEST_CASE("minimal generators", "[groebner]") {
  auto r = ring_of({"x", "y"});
  auto gens = minimal_generators(ideal(r, {"x^2", "x*y", "x^2 + x*y", "x^3", "y^3"}));
  CHECK(gens == std::vector<Polynomial>{P(r, "x^2"), P(r, "x*y"), P(r, "y^3")});
}
