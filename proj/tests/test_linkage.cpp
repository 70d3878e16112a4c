#include <catch2/catch_amalgamated.hpp>

#include "maxmult/linkage.hpp"
#include "test_support.hpp"

using namespace maxmult;
using namespace maxmult::testing;

TEST_CASE("complete intersections inside an ideal", "[linkage]") {
  auto r = ring_of({"x", "y", "z", "w"});
  Ideal ci = ideal(r, {"x^2", "y^3"});
  CHECK(ideal_equal(find_ci_inside(ci, 1), ci));

  Ideal cubic = ideal(r, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  Ideal G = find_ci_inside(cubic, 7);
  CHECK(G.generators().size() == 2);
  CHECK(ideal_contains(cubic, G));
  CHECK(profile(G).height == 2);
  for (const auto& g : G.generators()) CHECK(g.degree() == 2);

  Ideal principal = ideal(r, {"x"});
  CHECK(ideal_equal(find_ci_inside(principal, 3), principal));

  // mixed degrees: height 2, one linear generator
  Ideal mixed = ideal(r, {"x", "y^2", "y*z"});
  Ideal H = find_ci_inside(mixed, 11);
  CHECK(H.generators().size() == 2);
  CHECK(ideal_contains(mixed, H));
  CHECK(profile(H).height == 2);
}

TEST_CASE("link examples", "[linkage]") {
  auto r = ring_of({"x", "y", "z", "w"});
  Ideal cubic = ideal(r, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  Ideal G = ideal(r, {"x*z - y^2", "y*w - z^2"});
  auto rec = link(G, cubic);
  CHECK(ideal_equal(rec.L, ideal(r, {"y", "z"})));
  CHECK(rec.e_I_un == 3);
  CHECK(rec.e_L == 1);
  CHECK(rec.e_G == 4);
  CHECK(rec.identity_holds);

  auto r2 = ring_of({"x", "y"});
  auto self = link(ideal(r2, {"x^2", "y^2"}), ideal(r2, {"x", "y^2"}));
  CHECK(ideal_equal(self.L, ideal(r2, {"x", "y^2"})));
  CHECK(self.e_I_un == 2);
  CHECK(self.e_L == 2);
  CHECK(self.identity_holds);

  auto trivial = link(G, G);
  CHECK(trivial.L.is_unit());
  CHECK(trivial.e_L == 0);
  CHECK(trivial.identity_holds);

  CHECK_THROWS_AS(link(ideal(r, {"x"}), ideal(r, {"y"})), PreconditionError);
  CHECK_THROWS_AS(link(ideal(r, {"x*y"}), ideal(r, {"x", "y"})), PreconditionError);
}

TEST_CASE("unmixed part examples", "[linkage]") {
  auto r2 = ring_of({"x", "y"});
  CHECK(ideal_equal(unmixed_part(ideal(r2, {"x^2", "x*y"})), ideal(r2, {"x"})));

  auto r = ring_of({"x", "y", "z"});
  Ideal noncm = ideal(r, {"x^2", "x*y", "y^2", "x*z"});
  CHECK(ideal_equal(unmixed_part(noncm), ideal(r, {"x", "y^2"})));
  CHECK_FALSE(is_unmixed(noncm));
  CHECK(ideal_equal(unmixed_part(ideal(r, {"x"})), ideal(r, {"x"})));

  auto r4 = ring_of({"x", "y", "z", "w"});
  CHECK(is_unmixed(ideal(r4, {"x*z - y^2", "y*w - z^2", "x*w - y*z"})));
  CHECK(is_unmixed(ideal(r, {"x^2", "y^3", "z^2", "x*y*z"})));
}

TEST_CASE("unmixed part is idempotent, choice-free and keeps e", "[linkage][property]") {
  auto r = ring_of({"x", "y", "z", "w"});
  std::vector<Ideal> cases{
      ideal(r, {"x^2", "x*y", "y^2", "x*z"}),
      ideal(r, {"x*y", "x*z"}),
      ideal(r, {"x^2", "x*y", "x*z*w"}),
      ideal(r, {"x*z - y^2", "y*w - z^2", "x*w - y*z", "x^2*w"}),
      ideal(r, {"x^2", "y^2", "x*y*z"}),
  };
  for (const auto& I : cases) {
    Ideal U = unmixed_part(I, 1);
    CHECK(ideal_equal(unmixed_part(U, 2), U));
    CHECK(ideal_equal(unmixed_part(I, 99), U));
    CHECK(ideal_contains(U, I));
    CHECK(profile(U).multiplicity == profile(I).multiplicity);
    CHECK(profile(U).height == profile(I).height);
  }
}

TEST_CASE("link multiplicity identity on random pairs", "[linkage][property]") {
  auto r = ring_of({"x", "y", "z", "w"});
  Rng rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    // I = (random linear form l1, l2 * random quadric, random cubics)
    std::vector<Polynomial> gens{random_linear_form(r, rng), random_form(r, 2, rng) * random_linear_form(r, rng),
                                 random_homogeneous(r, rng, 3, 3)};
    Ideal I(r, gens);
    Ideal G = find_ci_inside(I, rng());
    auto rec = link(G, I);
    CHECK(rec.identity_holds);
    // double link returns the unmixed part
    CHECK(ideal_equal(ideal_colon_ideal(G, rec.L), unmixed_part(I)));
  }
}
