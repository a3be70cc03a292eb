#include <doctest.h>

#include <random>

#include "regcoh/linalg.hpp"
#include "regcoh/refiner.hpp"
#include "regcoh/weyl.hpp"

using namespace regcoh;

namespace {

RatVector w(std::initializer_list<int> coords) {
  RatVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (int c : coords) v(i++) = Rat(c);
  return v;
}

RootDatum a2() { return build_root_datum(Series::A, 2, AdjointLattice{}); }

PLFunction blowup_h(const RootDatum& rd) {
  ChamberFan fan =
      build_chamber_fan(rd, {{w({1, 0}), w({1, 1})}, {w({1, 1}), w({0, 1})}});
  return build_pl_function(fan, {w({-5, 4}), w({4, -5})});
}

const LabeledCell* find_cell(const LabeledComplex& lc,
                             const std::vector<RatVector>& rays) {
  for (const auto& cell : lc.cells) {
    if (cell.rays.size() != rays.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (cell.rays[i] != rays[i]) same = false;
    if (same) return &cell;
  }
  return nullptr;
}

std::string serialize(const LabeledComplex& lc) {
  std::string out;
  for (const auto& cell : lc.cells) {
    for (const auto& r : cell.rays)
      for (Eigen::Index i = 0; i < r.size(); ++i) out += r(i).str() + ",";
    out += "|" + std::to_string(cell.sign) + "/" + std::to_string(cell.walls) + ";";
  }
  return out;
}

// Rescales each ray of a piece onto the affine hyperplane through the source
// cone's generators; the piece volumes then add up to the cone volume.
void check_volume_preservation(const PLFunction& h, const LabeledComplex& lc) {
  const ChamberFan& fan = h.fan;
  const int r = fan.rank;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    RatMatrix gens(r, r);
    for (int j = 0; j < r; ++j) gens.col(j) = fan.max_cones[c].gens[j];
    const RatMatrix inv = inverse(gens);
    RatVector u = inv.transpose() * RatVector::Constant(r, Rat(1));
    Rat total(0);
    for (const auto& cell : lc.cells) {
      if (cell.dim != r) continue;
      bool inside = true;
      for (const auto& ray : cell.rays) {
        RatVector coords = inv * ray;
        for (int i = 0; i < r; ++i)
          if (coords(i) < Rat(0)) inside = false;
      }
      if (!inside) continue;
      RatMatrix scaled(r, r);
      for (int j = 0; j < r; ++j) {
        Rat level(0);
        for (int i = 0; i < r; ++i) level += u(i) * cell.rays[j](i);
        scaled.col(j) = RatVector(cell.rays[j] / level);
      }
      total += abs(determinant(scaled));
    }
    CHECK(total == abs(determinant(gens)));
  }
}

void check_complex_invariants(const LabeledComplex& lc) {
  const int r = lc.rank;
  // codimension-1 cells: at most two maximal cells, exactly two when interior
  for (std::size_t i = 0; i < lc.cells.size(); ++i) {
    if (lc.cells[i].dim != r - 1) continue;
    int maximal = 0;
    for (int j : lc.above[i])
      if (lc.cells[j].dim == r) ++maximal;
    CHECK(maximal <= 2);
    const bool interior =
        lc.ambient == ChamberFan::Ambient::FullSpace || lc.cells[i].walls == 0;
    CHECK(maximal == (interior ? 2 : 1));
  }
  // label closure and wall monotonicity under taking faces
  for (std::size_t i = 0; i < lc.cells.size(); ++i)
    for (int j : lc.above[i]) {
      if (lc.cells[j].sign <= 0) CHECK(lc.cells[i].sign <= 0);
      CHECK((lc.cells[i].walls & lc.cells[j].walls) == lc.cells[j].walls);
    }
}

void check_sign_soundness(const PLFunction& h, const RatVector& nu,
                          const LabeledComplex& lc, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(1, 7);
  std::uniform_int_distribution<std::size_t> pick(0, lc.cells.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const LabeledCell& cell = lc.cells[pick(rng)];
    RatVector n = RatVector::Zero(lc.rank);
    for (const auto& ray : cell.rays) n += ray * Rat(coeff(rng));
    const Rat g = h.fan.pair(nu, n) - eval_h(h, n);
    CHECK(g.sign() == cell.sign);
  }
}

void check_all(const PLFunction& h, const RatVector& nu, std::mt19937& rng) {
  LabeledComplex lc = graph_refinement(h, nu);
  check_volume_preservation(h, lc);
  check_complex_invariants(lc);
  check_sign_soundness(h, nu, lc, rng);
  CHECK(serialize(lc) == serialize(graph_refinement(h, nu)));
}

}  // namespace

TEST_CASE("no split when g has one sign: wonderful A2, nu = rho") {
  RootDatum rd = a2();
  PLFunction h = build_pl_function(wonderful_fan(rd), {w({0, 0})});
  LabeledComplex lc = graph_refinement(h, rd.rho);
  CHECK(lc.cells.size() == 3);  // the chamber and its two rays
  for (const auto& cell : lc.cells) CHECK(cell.sign == 1);
}

TEST_CASE("blow-up data, nu = 0: everything positive") {
  RootDatum rd = a2();
  PLFunction h = blowup_h(rd);
  LabeledComplex lc = graph_refinement(h, w({0, 0}));
  CHECK(lc.cells.size() == 5);
  for (const auto& cell : lc.cells) CHECK(cell.sign == 1);
}

TEST_CASE("blow-up data, nu = s_alpha * 0: the diagonal ray vanishes") {
  RootDatum rd = a2();
  PLFunction h = blowup_h(rd);
  LabeledComplex lc = graph_refinement(h, dot_action(rd, rd.weyl[1], w({0, 0})));
  const LabeledCell* diag = find_cell(lc, {w({1, 1})});
  REQUIRE(diag);
  CHECK(diag->sign == 0);
  for (const auto& cell : lc.cells)
    if (&cell != diag) CHECK(cell.sign == 1);
  // wall labels: boundary rays lie in one wall each, the diagonal in none
  CHECK(find_cell(lc, {w({1, 0})})->walls == 2u);  // beta-wall
  CHECK(find_cell(lc, {w({0, 1})})->walls == 1u);  // alpha-wall
  CHECK(diag->walls == 0u);
}

TEST_CASE("a genuine split produces matching halves") {
  RootDatum rd = a2();
  PLFunction h = build_pl_function(wonderful_fan(rd), {w({0, 0})});
  // g = <alpha - beta, .> changes sign inside the chamber
  LabeledComplex lc = graph_refinement(h, w({2, -1}) - w({-1, 2}));
  const LabeledCell* mid = find_cell(lc, {w({1, 1})});
  REQUIRE(mid);
  CHECK(mid->sign == 0);
  CHECK(find_cell(lc, {w({1, 0})})->sign == 1);
  CHECK(find_cell(lc, {w({0, 1})})->sign == -1);
  CHECK(lc.cells.size() == 5);
}

TEST_CASE("refinement invariants across representative configurations") {
  std::mt19937 rng(2024);
  RootDatum rd = a2();
  PLFunction blowup = blowup_h(rd);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) check_all(blowup, w({a, b}), rng);

  PLFunction linear = build_pl_function(wonderful_fan(rd), {w({1, -2})});
  for (const auto& t : rd.weyl)
    check_all(linear, dot_action(rd, t, w({1, 0})), rng);

  // complete fan of P2 with the canonical-bundle values
  ChamberFan p2 = build_complete_fan(2, {{w({1, 0}), w({0, 1})},
                                         {w({0, 1}), w({-1, -1})},
                                         {w({-1, -1}), w({1, 0})}});
  PLFunction hp2 = build_pl_function(p2, {w({-1, -1}), w({2, -1}), w({-1, 2})});
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) check_all(hp2, w({a, b}), rng);

  // B3: rank-3 splits exercising the pulling triangulation
  RootDatum b3 = build_root_datum(Series::B, 3, AdjointLattice{});
  PLFunction hb3 = build_pl_function(wonderful_fan(b3), {w({0, 0, 0})});
  for (const auto& t : b3.weyl)
    if (t.length <= 2) check_all(hb3, dot_action(b3, t, w({1, 0, 1})), rng);
}

TEST_CASE("D4 wonderful refinement at rank 4 stays consistent") {
  std::mt19937 rng(77);
  RootDatum d4 = build_root_datum(Series::D, 4, AdjointLattice{});
  PLFunction h = build_pl_function(wonderful_fan(d4), {w({-1, 0, 1, -2})});
  int exercised = 0;
  for (const auto& t : d4.weyl) {
    if (t.length > 2) continue;
    check_all(h, dot_action(d4, t, w({0, 1, 0, 0})), rng);
    ++exercised;
  }
  CHECK(exercised > 5);
}
