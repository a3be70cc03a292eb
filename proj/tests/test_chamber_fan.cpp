#include <doctest.h>

#include "regcoh/chamber_fan.hpp"

using namespace regcoh;

namespace {

RatVector w(std::initializer_list<int> coords) {
  RatVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (int c : coords) v(i++) = Rat(c);
  return v;
}

RootDatum a2() { return build_root_datum(Series::A, 2, AdjointLattice{}); }

// Example-5 configuration: the blow-up of the wonderful compactification of
// PGL(3) along its closed orbit, with h = (beta - 2 alpha | alpha - 2 beta).
ChamberFan blowup_fan(const RootDatum& rd) {
  return build_chamber_fan(rd, {{w({1, 0}), w({1, 1})}, {w({1, 1}), w({0, 1})}});
}
PLFunction blowup_h(const RootDatum& rd) {
  return build_pl_function(blowup_fan(rd), {w({-5, 4}), w({4, -5})});
}

}  // namespace

TEST_CASE("wonderful fan is valid for every supported adjoint datum") {
  for (auto [s, r] : {std::pair{Series::A, 1}, {Series::A, 2}, {Series::A, 3},
                      {Series::B, 2}, {Series::B, 3}, {Series::D, 4}, {Series::F, 4},
                      {Series::G, 2}, {Series::A1xA1, 2}}) {
    RootDatum rd = build_root_datum(s, r, AdjointLattice{});
    ChamberFan fan = wonderful_fan(rd);
    CHECK(fan.max_cones.size() == 1);
  }
}

TEST_CASE("blow-up fan of example data is valid") {
  RootDatum rd = a2();
  ChamberFan fan = blowup_fan(rd);
  CHECK(fan.max_cones.size() == 2);
}

TEST_CASE("coverage gap is rejected") {
  RootDatum rd = a2();
  CHECK_THROWS_WITH_AS(build_chamber_fan(rd, {{w({1, 0}), w({1, 1})}}),
                       doctest::Contains("coverage gap"), ValidationError);
}

TEST_CASE("non-smooth and misplaced generators are rejected") {
  RootDatum rd = a2();
  CHECK_THROWS_WITH_AS(build_chamber_fan(rd, {{w({1, 0}), w({1, 2})}}),
                       doctest::Contains("non-smooth"), ValidationError);
  CHECK_THROWS_WITH_AS(build_chamber_fan(rd, {{w({1, 0}), w({-1, 2})}}),
                       doctest::Contains("outside the dominant chamber"), ValidationError);
}

TEST_CASE("overlapping cones are rejected") {
  RootDatum rd = a2();
  // trivial cone together with the blow-up pieces covers twice
  CHECK_THROWS_WITH_AS(
      build_chamber_fan(rd, {{w({1, 0}), w({0, 1})},
                             {w({1, 0}), w({1, 1})},
                             {w({1, 1}), w({0, 1})}}),
      doctest::Contains("overlap"), ValidationError);
}

TEST_CASE("complete fans: P1, P1xP1, P2") {
  CHECK(build_complete_fan(1, {{w({1})}, {w({-1})}}).max_cones.size() == 2);
  CHECK(build_complete_fan(2, {{w({1, 0}), w({0, 1})},
                               {w({0, 1}), w({-1, 0})},
                               {w({-1, 0}), w({0, -1})},
                               {w({0, -1}), w({1, 0})}})
            .max_cones.size() == 4);
  CHECK(build_complete_fan(2, {{w({1, 0}), w({0, 1})},
                               {w({0, 1}), w({-1, -1})},
                               {w({-1, -1}), w({1, 0})}})
            .max_cones.size() == 3);
  // half-plane only: not complete
  CHECK_THROWS_WITH_AS(build_complete_fan(2, {{w({1, 0}), w({0, 1})},
                                              {w({0, 1}), w({-1, 0})}}),
                       doctest::Contains("coverage gap"), ValidationError);
  // non-smooth toric cone
  CHECK_THROWS_WITH_AS(build_complete_fan(2, {{w({2, 0}), w({0, 1})},
                                              {w({0, 1}), w({-2, -1})},
                                              {w({-2, -1}), w({2, 0})}}),
                       doctest::Contains("non-smooth"), ValidationError);
  // determinant test: cone (1,0),(2,1) is smooth and admissible
  CHECK(build_complete_fan(2, {{w({1, 0}), w({2, 1})},
                               {w({2, 1}), w({1, 1})},
                               {w({1, 1}), w({0, 1})},
                               {w({0, 1}), w({-1, 0})},
                               {w({-1, 0}), w({0, -1})},
                               {w({0, -1}), w({1, 0})}})
            .max_cones.size() == 6);
}

TEST_CASE("pl function: wonderful cone accepts any integral weight") {
  RootDatum rd = a2();
  ChamberFan fan = wonderful_fan(rd);
  CHECK_NOTHROW(build_pl_function(fan, {w({1, 0})}));
  CHECK_NOTHROW(build_pl_function(fan, {w({-7, 3})}));
  RatVector half(2);
  half << Rat(Int(1), Int(2)), Rat(0);
  CHECK_THROWS_WITH_AS(build_pl_function(fan, {half}),
                       doctest::Contains("not integral"), ValidationError);
}

TEST_CASE("pl function: continuity across the shared ray") {
  RootDatum rd = a2();
  ChamberFan fan = blowup_fan(rd);
  PLFunction h = build_pl_function(fan, {w({-5, 4}), w({4, -5})});
  // shared value on omega_alpha^vee + omega_beta^vee is -1 from both sides
  CHECK(eval_h(h, w({1, 1})) == Rat(-1));
  CHECK_THROWS_WITH_AS(build_pl_function(fan, {w({-5, 4}), w({0, 0})}),
                       doctest::Contains("discontinuity"), ValidationError);
}

TEST_CASE("eval_h on the example-5 function") {
  RootDatum rd = a2();
  PLFunction h = blowup_h(rd);
  CHECK(eval_h(h, w({1, 0})) == Rat(-2));
  CHECK(eval_h(h, w({0, 1})) == Rat(-2));
  CHECK(eval_h(h, w({0, 0})) == Rat(0));
  CHECK_THROWS_AS(eval_h(h, w({-1, 0})), ValidationError);
  // positive homogeneity on rays of the support
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      if (a + b == 0) continue;
      RatVector n = w({a, b});
      for (int k = 0; k <= 4; ++k)
        CHECK(eval_h(h, RatVector(n * Rat(k))) == Rat(k) * eval_h(h, n));
    }
}

TEST_CASE("eval_h agrees across cones on shared faces") {
  RootDatum rd = a2();
  PLFunction h = blowup_h(rd);
  const ChamberFan& fan = h.fan;
  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b)
      for (const auto& g : fan.max_cones[a].gens)
        for (const auto& g2 : fan.max_cones[b].gens)
          if (g == g2)
            CHECK(fan.pair(h.values[a], g) == fan.pair(h.values[b], g));
}

TEST_CASE("in_h_plus_X on the example-5 configuration") {
  RootDatum rd = a2();
  PLFunction h = blowup_h(rd);
  CHECK(in_h_plus_X(rd, h, w({0, 0})));
  CHECK(!in_h_plus_X(rd, h, w({1, 0})));  // omega_alpha is not in Q
  // single cone: mu = h_sigma always works
  PLFunction lin = build_pl_function(wonderful_fan(rd), {w({2, -1})});
  CHECK(in_h_plus_X(rd, lin, w({2, -1})));
}

TEST_CASE("generators are primitivized canonically") {
  RootDatum rd = a2();
  ChamberFan doubled =
      build_chamber_fan(rd, {{w({2, 0}), w({2, 2})}, {w({3, 3}), w({0, 5})}});
  ChamberFan plain = blowup_fan(rd);
  REQUIRE(doubled.max_cones.size() == plain.max_cones.size());
  for (std::size_t c = 0; c < plain.max_cones.size(); ++c)
    CHECK(doubled.max_cones[c] == plain.max_cones[c]);
}

TEST_CASE("wonderful fan rejects a simply connected datum") {
  // the trivial subdivision is smooth only for the adjoint one-parameter lattice
  RootDatum sc = build_root_datum(Series::A, 2, SimplyConnectedLattice{});
  CHECK_THROWS_AS(wonderful_fan(sc), ValidationError);
}
