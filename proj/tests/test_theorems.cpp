#include <catch2/catch_amalgamated.hpp>

#include "maxmult/theorems.hpp"
#include "test_support.hpp"

using namespace maxmult;
using namespace maxmult::testing;

TEST_CASE("check_bound examples", "[theorems]") {
  auto r = ring_of({"x", "y", "z"});
  auto a = check_bound(ideal(r, {"x^2", "x*y", "y^2"}), P(r, "x*z"));
  CHECK(a.s == 1);
  CHECK(a.delta == 2);
  CHECK(a.e_J == 3);
  CHECK(a.bound_rhs == 2);
  CHECK(a.e_I == 2);
  CHECK(a.is_maximal);
  CHECK(a.j_socle_type == SocleType::level);

  auto b = check_bound(ideal(r, {"x^2", "y^2", "z^2"}), P(r, "x*y"));
  CHECK(b.s == 3);
  CHECK(b.bound_rhs == 6);
  CHECK(b.e_I == 6);
  CHECK(b.is_maximal);

  auto c = check_bound(ideal(r, {"x^2", "y^2", "z^2"}), P(r, "x + y"));
  CHECK(c.bound_rhs == 5);
  CHECK(c.e_I == 4);
  CHECK_FALSE(c.is_maximal);
  CHECK(c.bound_holds);
  CHECK(c.verified);
}

TEST_CASE("check_bound preconditions are named", "[theorems]") {
  auto r = ring_of({"x", "y", "z"});
  Ideal J = ideal(r, {"x^2", "y^2"});
  CHECK_THROWS_AS(check_bound(J, P(r, "x^2")), PreconditionError);        // F in J
  CHECK_THROWS_AS(check_bound(J, P(r, "z")), PreconditionError);          // height grows
  CHECK_THROWS_AS(check_bound(J, P(r, "x + y^2")), PreconditionError);    // not homogeneous
  CHECK_THROWS_AS(check_bound(ideal(r, {"x^2", "x*y"}), P(r, "y^2")), PreconditionError);  // J not CM
  try {
    check_bound(J, P(r, "z"));
  } catch (const PreconditionError& e) {
    CHECK(e.name() == "check_bound");
  }
}

TEST_CASE("classify_decomposition examples", "[theorems]") {
  auto r = ring_of({"x", "y", "z"});
  auto a = classify_decomposition(ideal(r, {"x^2", "y^2", "z^2"}), P(r, "x*y"));
  CHECK(a.verified);
  CHECK(*a.i_cohen_macaulay);
  CHECK(*a.depth_class == DepthClass::cm);

  auto b = classify_decomposition(ideal(r, {"x^2", "x*y", "y^2"}), P(r, "x*z"));
  CHECK(b.verified);
  CHECK_FALSE(*b.i_cohen_macaulay);
  CHECK(*b.depth == 0);
  CHECK(*b.depth_class == DepthClass::almost_cm);

  auto c = classify_decomposition(ideal(r, {"x^2", "y^2"}), P(r, "x*y*z"));
  CHECK(c.s == 2);
  CHECK(c.delta == 3);
  CHECK(c.e_I == 3);
  CHECK(c.j_socle_type == SocleType::gorenstein);
  CHECK(*c.depth == 0);
  CHECK(*c.depth_class == DepthClass::almost_cm);
  CHECK(c.verified);

  CHECK_THROWS_AS(classify_decomposition(ideal(r, {"x^2", "y^2", "z^2"}), P(r, "x + y")), PreconditionError);
}

TEST_CASE("aci_bound values", "[theorems]") {
  CHECK(aci_bound({2, 2, 2}, 2) == 6);
  CHECK(aci_bound({2, 2}, 2) == 3);
  CHECK(aci_bound({3, 3}, 3) == 7);
  CHECK_THROWS_AS(aci_bound({}, 2), PreconditionError);
  CHECK_THROWS_AS(aci_bound({2, 0}, 2), PreconditionError);
  for (int d = 2; d <= 6; ++d)
    for (int g = 2; g <= 5; ++g) {
      std::int64_t pow = 1;
      for (int k = 0; k < g; ++k) pow *= d;
      CHECK(aci_bound(std::vector<int>(static_cast<std::size_t>(g), d), d) == pow - (d - 1) * (g - 1));
    }
}

TEST_CASE("colon_structure examples", "[theorems]") {
  auto r4 = ring_of({"x", "y", "z", "w"});
  auto a = colon_structure(ideal(r4, {"x*z - y^2", "y*w - z^2"}), P(r4, "x*w - y*z"));
  REQUIRE(a.matches);
  REQUIRE(a.linear_forms.size() == 1);
  CHECK(a.linear_forms[0] == P(r4, "y"));
  CHECK(*a.q == P(r4, "z"));

  auto r = ring_of({"x", "y", "z"});
  Ideal J = ideal(r, {"x^2", "y^2", "z^2"});
  Polynomial F = P(r, "x*y");
  auto b = colon_structure(J, F);
  REQUIRE(b.matches);
  CHECK(b.linear_forms == std::vector<Polynomial>{P(r, "x"), P(r, "y")});
  CHECK(*b.q == P(r, "z^2"));
  // monomial oracle: m*xy in J exactly for monomials m in (x, y, z^2)
  for (unsigned d = 0; d <= 3; ++d)
    for (const auto& m : monomials_of_degree(3, d)) {
      bool in_colon = m[0] > 0 || m[1] > 0 || m[2] >= 2;
      CHECK(ideal_member(Polynomial::monomial(r, m) * F, J) == in_colon);
    }

  auto r2 = ring_of({"x", "y"});
  auto c = colon_structure(ideal(r2, {"x^2", "y^2"}), P(r2, "x*y"));
  REQUIRE(c.matches);
  CHECK(c.linear_forms == std::vector<Polynomial>{P(r2, "x")});
  CHECK(*c.q == P(r2, "y"));

  // a colon with no linear part at height 2 does not have the shape
  auto d = colon_structure(ideal(r, {"x^3", "y^3"}), P(r, "x*y"));
  CHECK_FALSE(d.matches);
}

TEST_CASE("char_construct examples", "[theorems]") {
  auto r4 = ring_of({"x", "y", "z", "w"});
  Ideal cubic = ideal(r4, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  auto a = char_construct(cubic, ideal(r4, {"y", "z"}));
  REQUIRE(a.outcome == CharConstruction::Outcome::constructed);
  CHECK(*a.F == P(r4, "x*w - y*z"));
  REQUIRE(a.decomposition);
  CHECK(ideal_equal(a.decomposition->J, ideal(r4, {"x*z - y^2", "y*w - z^2"})));
  CHECK(a.decomposition->e_J == 4);
  CHECK(a.decomposition->e_I == 3);
  CHECK(a.decomposition->is_maximal);
  CHECK(a.verified);

  auto r5 = ring_of({"x1", "x2", "x3", "x4", "x5"});
  Ideal quartic = ideal(r5, {"x1*x3 - x2^2", "x1*x4 - x2*x3", "x1*x5 - x2*x4", "x2*x4 - x3^2", "x2*x5 - x3*x4",
                             "x3*x5 - x4^2"});
  auto b = char_construct(quartic, ideal(r5, {"x2", "x3", "x4"}));
  REQUIRE(b.F);
  CHECK(*b.F == P(r5, "x1*x5 - x2*x4"));
  CHECK(b.verified);
  CHECK(b.decomposition->is_maximal);

  auto c = char_construct(ideal(r4, {"y^2", "z^2"}), ideal(r4, {"y", "z"}));
  CHECK(c.outcome == CharConstruction::Outcome::trivial);
  CHECK_FALSE(c.decomposition);

  // C' must be an almost linear complete intersection of the right height
  CHECK_THROWS_AS(char_construct(cubic, ideal(r4, {"y"})), PreconditionError);
  CHECK_THROWS_AS(char_construct(cubic, ideal(r4, {"y^2", "z^2"})), PreconditionError);
}

TEST_CASE("mprimary_decomposition examples", "[theorems]") {
  auto r2 = ring_of({"x", "y"});
  auto a = mprimary_decomposition(ideal(r2, {"x^2", "y^2"}), P(r2, "x^2"));
  CHECK(ideal_equal(a.J, ideal(r2, {"y^2", "x^3", "x^2*y"})));
  CHECK(a.e_J == 5);
  CHECK(a.e_I == 4);
  CHECK(a.s == 2);
  CHECK(a.is_maximal);
  CHECK(a.verified);
  // standard monomials of J: 1, x, y, xy, x^2
  CHECK(count_standard({Monomial({0, 2}), Monomial({3, 0}), Monomial({2, 1})}, 2, 0) +
            count_standard({Monomial({0, 2}), Monomial({3, 0}), Monomial({2, 1})}, 2, 1) +
            count_standard({Monomial({0, 2}), Monomial({3, 0}), Monomial({2, 1})}, 2, 2) ==
        5);

  auto r = ring_of({"x", "y", "z"});
  auto b = mprimary_decomposition(maximal_ideal(r), P(r, "x"));
  CHECK(ideal_equal(b.J, ideal(r, {"y", "z", "x^2"})));
  CHECK(b.e_J == 2);
  CHECK(b.e_I == 1);
  CHECK(b.is_maximal);

  auto c = mprimary_decomposition(ideal(r2, {"x^2", "x*y", "y^2"}), P(r2, "x*y"));
  CHECK(c.e_J == 4);
  CHECK(c.e_I == 3);
  CHECK(c.is_maximal);

  CHECK_THROWS_AS(mprimary_decomposition(ideal(r2, {"x^2"}), P(r2, "x^2")), PreconditionError);
  CHECK_THROWS_AS(mprimary_decomposition(ideal(r2, {"x", "y", "x*y"}), P(r2, "x*y")), PreconditionError);
  CHECK_THROWS_AS(mprimary_decomposition(ideal(r2, {"x^2", "y^2"}), P(r2, "x*y")), PreconditionError);
}

TEST_CASE("qg_construct examples", "[theorems]") {
  auto r = ring_of({"x", "y", "z"});
  auto a = qg_construct(ideal(r, {"x^2", "y^2"}), P(r, "x"));
  CHECK(ideal_equal(a.Q, ideal(r, {"x", "y^2"})));
  CHECK(a.a_invariant == 0);
  CHECK(a.dim_Q == 1);
  CHECK(a.bound_rhs == 2);
  CHECK(a.e_Q == 2);
  CHECK(a.equality);
  CHECK(a.gorenstein_verified);
  CHECK(a.verified);

  auto b = qg_construct(ideal(r, {"x^2", "y^2", "z^2"}), P(r, "x*y*z"));
  CHECK(ideal_equal(b.Q, maximal_ideal(r)));
  CHECK(b.a_invariant == 0);
  CHECK(b.dim_Q == 0);
  CHECK(b.bound_rhs == 1);
  CHECK(b.e_Q == 1);
  CHECK(b.equality);
  CHECK(b.gorenstein_verified);

  auto c = qg_construct(std::vector<int>{3, 3}, P(r, "x"));
  CHECK(ideal_equal(c.Q, ideal(r, {"x^2", "y^3"})));
  CHECK(c.a_invariant == 2);
  CHECK(c.dim_Q == 1);
  CHECK(c.bound_rhs == 4);
  CHECK(c.e_Q == 6);
  CHECK_FALSE(c.equality);
  CHECK(c.bound_holds);

  CHECK_THROWS_AS(qg_construct(ideal(r, {"x^2", "y^2"}), P(r, "x^2")), PreconditionError);
  CHECK_THROWS_AS(qg_construct(ideal(r, {"x^2", "y^2"}), P(r, "z")), PreconditionError);
  CHECK_THROWS_AS(qg_construct(ideal(r, {"x^2", "x*y"}), P(r, "y")), PreconditionError);
}

TEST_CASE("dichotomy_check examples", "[theorems]") {
  auto r6 = ring_of({"a", "b", "c", "x", "y", "z"});
  auto a = dichotomy_check(ideal(r6, {"a*x", "b*y", "c*z"}), P(r6, "x^2 + y^2 + z^2"));
  CHECK(a.unit_multiplicity);
  CHECK_FALSE(a.unmixed);
  CHECK(a.depth == 2);
  CHECK(a.dim == 3);
  CHECK(a.verified);

  auto r = ring_of({"x", "y", "z"});
  auto b = dichotomy_check(ideal(r, {"x^2", "y^2"}), P(r, "x*y*z"));
  CHECK(b.maximal);
  CHECK_FALSE(b.unmixed);
  CHECK(b.depth == 0);
  CHECK(b.delta == 3);
  CHECK(b.s == 2);
  CHECK(b.verified);

  auto r4 = ring_of({"x", "y", "z", "w"});
  auto c = dichotomy_check(ideal(r4, {"x*z - y^2", "y*w - z^2"}), P(r4, "x*w - y*z"));
  CHECK(c.maximal);
  CHECK(c.unmixed);
  CHECK(c.cohen_macaulay);
  CHECK(c.delta == 2);
  CHECK(c.s == 2);
  CHECK(c.verified);

  // level but not Gorenstein J is rejected
  CHECK_THROWS_AS(dichotomy_check(ideal(r, {"x^2", "x*y", "y^2"}), P(r, "x*z")), PreconditionError);
}

TEST_CASE("bound and Lemma-ci shape on random CI decompositions", "[theorems][property]") {
  auto r = ring_of({"x", "y", "z"});
  Rng rng(5150);
  int maximal_cm = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (std::size_t v = 0; v < 3; ++v)
      gens.push_back(Polynomial::monomial(r, Monomial::variable(v, 2 + static_cast<unsigned>(rng() % 2))));
    Ideal J(r, gens);
    Polynomial F = random_homogeneous(r, rng, 2, 1 + static_cast<unsigned>(rng() % 3));
    if (F.is_zero() || !F.is_homogeneous() || ideal_member(F, J)) continue;
    auto rep = check_bound(J, F);
    CHECK(rep.bound_holds);
    if (rep.is_maximal && rep.delta <= rep.s) {
      auto cl = classify_decomposition(J, F);
      CHECK(cl.verified);
      CHECK(*cl.i_cohen_macaulay);
      CHECK(colon_structure(J, F).matches);
      ++maximal_cm;
    }
  }
  CHECK(maximal_cm > 0);
}
