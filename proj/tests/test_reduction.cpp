#include <catch2/catch_amalgamated.hpp>

#include "maxmult/reduction.hpp"
#include "test_support.hpp"

using namespace maxmult;
using namespace maxmult::testing;

namespace {

void check_witness(const ArtinianAlgebra& A, const SocleProfile& s) {
  REQUIRE(!s.witness.is_zero());
  CHECK(!ideal_member(s.witness, A.presenting));
  const RingPtr& r = A.presenting.ring();
  for (std::size_t v = 0; v < r->nvars(); ++v)
    CHECK(ideal_member(s.witness * Polynomial::variable(r, v), A.presenting));
}

}  // namespace

TEST_CASE("artinian reduction examples", "[reduction]") {
  auto r = ring_of({"x", "y", "z"});
  auto A = artinian_reduction(ideal(r, {"x^2", "x*y", "y^2"}), 1);
  CHECK(A.hilbert_function == std::vector<std::int64_t>{1, 2});
  CHECK(A.length == 3);

  auto B = artinian_reduction(ideal(r, {"x^2", "y^2", "z^2"}), 1);
  CHECK(B.linear_forms.empty());
  CHECK(B.length == 8);

  auto r4 = ring_of({"x", "y", "z", "w"});
  auto C = artinian_reduction(ideal(r4, {"x*z - y^2", "y*w - z^2", "x*w - y*z"}), 99);
  CHECK(C.hilbert_function == std::vector<std::int64_t>{1, 2});
  CHECK(C.length == 3);
}

TEST_CASE("socle profile examples", "[reduction]") {
  auto r = ring_of({"x", "y"});
  auto A = artinian_reduction(ideal(r, {"x^2", "x*y", "y^2"}), 1);
  auto s = socle_profile(A);
  CHECK(s.min_degree == 1);
  CHECK(s.total_dim == 2);
  CHECK(s.per_degree == std::map<int, int>{{1, 2}});
  check_witness(A, s);

  auto B = artinian_reduction(ideal(r, {"x^2", "y^2"}), 1);
  auto t = socle_profile(B);
  CHECK(t.total_dim == 1);
  CHECK(t.min_degree == 2);
  CHECK(t.witness.monic() == P(r, "x*y"));

  auto C = artinian_reduction(maximal_ideal(r), 1);
  auto u = socle_profile(C);
  CHECK(u.min_degree == 0);
  CHECK(u.total_dim == 1);
}

TEST_CASE("s-invariant examples", "[reduction]") {
  auto r = ring_of({"x", "y", "z"});
  CHECK(s_invariant(ideal(r, {"x^2", "y^2", "z^2"})).value == 3);
  CHECK(s_invariant(ideal(r, {"x^2", "x*y", "y^2"})).value == 1);
  auto r4 = ring_of({"x", "y", "z", "w"});
  auto s = s_invariant(ideal(r4, {"x*z - y^2", "y*w - z^2", "x*w - y*z"}));
  CHECK(s.value == 1);
  CHECK(s.seeds_tried == 3);
  CHECK_THROWS_AS(s_invariant(ideal(r, {"x^2", "x*y", "y^2", "x*z"})), PreconditionError);
}

TEST_CASE("Cohen-Macaulay examples", "[reduction]") {
  auto r = ring_of({"x", "y", "z"});
  CHECK(is_cohen_macaulay(ideal(r, {"x^2", "y^3"})));
  CHECK_FALSE(is_cohen_macaulay(ideal(r, {"x^2", "x*y", "y^2", "x*z"})));
  CHECK(is_cohen_macaulay(ideal(r, {"x^2", "y^2", "z^2", "x*y"})));
}

TEST_CASE("depth examples", "[reduction]") {
  auto r = ring_of({"a", "b", "c", "x", "y", "z"});
  CHECK(depth_of(ideal(r, {"a*x", "b*y", "c*z", "x^2 + y^2 + z^2"})) == 2);
  CHECK(depth_of(ideal(r, {"a*x + b*y + c*z", "x^2", "y^2", "z^2"})) == 0);
  auto r4 = ring_of({"x", "y", "z", "w"});
  Ideal cubic = ideal(r4, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  CHECK(depth_of(cubic) == 2);
  auto r3 = ring_of({"x", "y", "z"});
  CHECK(depth_of(ideal(r3, {"x^2", "x*y", "y^2", "x*z"})) == 0);
}

TEST_CASE("socle type examples", "[reduction]") {
  auto r = ring_of({"x", "y", "z"});
  CHECK(socle_type(ideal(r, {"x^2", "y^3", "z"})) == SocleType::gorenstein);
  CHECK(socle_type(ideal(r, {"x^2", "x*y", "y^2"})) == SocleType::level);
  auto r2 = ring_of({"x", "y"});
  CHECK(socle_type(ideal(r2, {"x^2", "x*y", "y^3"})) == SocleType::neither);
}

TEST_CASE("s-invariant of a complete intersection is the sum of degrees minus g", "[reduction][property]") {
  auto r = ring_of({"a", "b", "c", "d"});
  Rng rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    int g = 1 + static_cast<int>(rng() % 3);
    std::vector<Polynomial> gens;
    int expect = 0;
    for (int j = 0; j < g; ++j) {
      unsigned d = 1 + static_cast<unsigned>(rng() % 3);
      expect += static_cast<int>(d) - 1;
      gens.push_back(random_form(r, d, rng));
    }
    CHECK(s_invariant(Ideal(r, gens)).value == expect);
  }
}

TEST_CASE("Serre equality and depth agree", "[reduction][property]") {
  auto r = ring_of({"x", "y", "z"});
  std::vector<Ideal> cases{
      ideal(r, {"x^2", "y^2"}),          ideal(r, {"x^2", "x*y", "y^2", "x*z"}),
      ideal(r, {"x^2", "x*y"}),          ideal(r, {"x*y", "y*z", "x*z"}),
      ideal(r, {"x^2", "x*y", "y^2"}),   ideal(r, {"x^3", "y^2*z"}),
      ideal(r, {"x^2", "x*y*z"})};
  for (const auto& I : cases) {
    auto cm = analyze_cohen_macaulay(I);
    auto d = depth_analysis(I);
    CHECK(d.depth <= d.dim);
    CHECK(cm.cohen_macaulay == (d.depth == d.dim));
    for (auto len : cm.lengths) {
      if (cm.cohen_macaulay) CHECK(len == cm.profile.multiplicity);
      else CHECK(len > cm.profile.multiplicity);
    }
  }
}

TEST_CASE("socle witnesses annihilate the maximal ideal", "[reduction][property]") {
  auto r = ring_of({"x", "y", "z"});
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (std::size_t v = 0; v < 3; ++v)
      gens.push_back(Polynomial::monomial(r, Monomial::variable(v, 2 + static_cast<unsigned>(rng() % 3))));
    gens.push_back(random_homogeneous(r, rng, 2, 2 + static_cast<unsigned>(rng() % 2)));
    auto A = artinian_reduction(Ideal(r, gens), rng());
    check_witness(A, socle_profile(A));
  }
}
