#include <doctest.h>

#include <random>

#include "coneproj/circle_map.hpp"
#include "coneproj/structure.hpp"
#include "test_util.hpp"

using namespace coneproj;
using namespace coneproj::testutil;

namespace {

const CirclePiece* piece_at(const PiecewiseCircleMap& map, Angle t) {
  for (const CirclePiece& p : map.pieces)
    if (p.arc.contains(t, 0.0)) return &p;
  return nullptr;
}

// Connected components of the true domain (the kernel directions removed,
// including zero-width ones that the closure representation merges over).
std::vector<Arc> domain_components(const PiecewiseCircleMap& map) {
  if (map.kernel_arcs.empty()) return {Arc{Angle(0.0), kTwoPi}};
  if (map.kernel_arcs.is_full_circle()) return {};
  const auto& ks = map.kernel_arcs.arcs();
  std::vector<Arc> comps;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    Angle s = ks[i].end();
    double w = ks[(i + 1) % ks.size()].start.ccw_from(s);
    if (ks.size() == 1 && w <= kAngleTol) w = kTwoPi - ks[i].width;
    if (w > 1e-6) comps.push_back({s, w});
  }
  return comps;
}

// Checks, for many random points away from breakpoints, that the map piece
// reproduces the operator: direction via eval, magnitude via the piece
// semantics (identity, rotation with |cos| scaling, projection onto the
// target line, annihilation).
void check_map_against_operator(const ConePair& pair, std::mt19937& rng, int samples) {
  PiecewiseCircleMap map = build_circle_map(pair);
  for (int i = 0; i < samples; ++i) {
    Vec2 x = random_point(rng);
    Angle t = arg_of(x);
    double dmin = kTwoPi;
    for (const CirclePiece& p : map.pieces) dmin = std::min(dmin, t.distance_to(p.arc.start));
    if (dmin < 1e-6) continue;

    const CirclePiece* piece = piece_at(map, t);
    REQUIRE(piece != nullptr);
    std::optional<Angle> ev = eval_circle_map(map, t);
    Vec2 tx = dr_op(pair, x);
    double nx = x.norm();

    switch (piece->kind) {
      case PieceKind::Identity:
        REQUIRE(ev.has_value());
        CHECK(ev->approx(t, 1e-9));
        CHECK((tx - x).norm() <= 1e-9 * nx);
        break;
      case PieceKind::Rotation: {
        REQUIRE(ev.has_value());
        CHECK(arg_of(tx).approx(*ev, 1e-9));
        CHECK(std::fabs(tx.norm() / nx - piece->scale) <= 1e-9);
        CHECK(std::fabs(piece->scale - std::fabs(std::cos(piece->rotation))) <= 1e-12);
        break;
      }
      case PieceKind::ConstantTo: {
        REQUIRE(ev.has_value());
        CHECK(ev->approx(piece->target, 1e-9));
        Vec2 u = piece->target.unit();
        CHECK((tx - x.dot(u) * u).norm() <= 1e-9 * nx);  // projection onto the line
        CHECK(x.dot(u) > 0.0);                           // onto the stated direction
        break;
      }
      case PieceKind::ToZero:
        CHECK_FALSE(ev.has_value());
        CHECK(tx.norm() <= 1e-9 * nx);
        break;
    }
  }
}

}  // namespace

TEST_CASE("two lines induce a single full-circle rotation piece") {
  ConePair pair{parse_cone("line:0"), PlanarCone::line(Angle(kPi / 3.0))};
  PiecewiseCircleMap map = build_circle_map(pair);
  REQUIRE(map.pieces.size() == 1);
  const CirclePiece& p = map.pieces.front();
  CHECK(p.kind == PieceKind::Rotation);
  CHECK(p.arc.full());
  CHECK(p.scale == doctest::Approx(0.5).epsilon(1e-12));  // |cos(pi/3)|

  // The rotation angle is fixed by the operator itself.
  for (int i = 0; i < 720; ++i) {
    Angle t(i * kTwoPi / 720.0);
    Vec2 u = t.unit();
    Angle expected = arg_of(dr_op(pair, u));
    CHECK(expected.approx(t + p.rotation, 1e-9));
  }
  CHECK(std::fabs(std::fabs(p.rotation) - kPi / 3.0) <= 1e-12);
}

TEST_CASE("full planes induce the identity map") {
  PiecewiseCircleMap map = build_circle_map({PlanarCone::plane(), PlanarCone::plane()});
  REQUIRE(map.pieces.size() == 1);
  CHECK(map.pieces.front().kind == PieceKind::Identity);
  CHECK(map.pieces.front().arc.full());
  CHECK(map.domain.is_full_circle());
  CHECK(eval_circle_map(map, Angle(1.234))->radians() == doctest::Approx(1.234));
}

TEST_CASE("perpendicular lines annihilate the whole circle") {
  PiecewiseCircleMap map = build_circle_map({parse_cone("line:0"), parse_cone("line:0.5pi")});
  REQUIRE(map.pieces.size() == 1);
  CHECK(map.pieces.front().kind == PieceKind::ToZero);
  CHECK(map.kernel_arcs.is_full_circle());
  CHECK(map.domain.empty());
  CHECK_FALSE(eval_circle_map(map, Angle(2.0)).has_value());
}

TEST_CASE("pieces cover the circle and agree at non-kernel junctions") {
  std::mt19937 rng(89);
  for (int trial = 0; trial < 120; ++trial) {
    ConePair pair{random_cone(rng), random_cone(rng)};
    PiecewiseCircleMap map = build_circle_map(pair);

    double total = 0.0;
    for (const CirclePiece& p : map.pieces) total += p.arc.width;
    CHECK(total == doctest::Approx(kTwoPi).epsilon(1e-9));

    for (std::size_t i = 0; i < map.pieces.size(); ++i) {
      const CirclePiece& cur = map.pieces[i];
      const CirclePiece& nxt = map.pieces[(i + 1) % map.pieces.size()];
      if (map.pieces.size() > 1) CHECK(cur.arc.end().approx(nxt.arc.start, 1e-9));

      Angle e = cur.arc.end();
      if (map.kernel_arcs.contains(e)) continue;  // the map is undefined there
      if (cur.kind == PieceKind::ToZero || nxt.kind == PieceKind::ToZero) continue;
      auto value = [&](const CirclePiece& p) -> Angle {
        switch (p.kind) {
          case PieceKind::Rotation: return e + p.rotation;
          case PieceKind::ConstantTo: return p.target;
          default: return e;
        }
      };
      CHECK(value(cur).approx(value(nxt), 1e-9));
    }
  }
}

TEST_CASE("to-zero arcs are exactly the kernel arcs of positive width") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 150; ++trial) {
    ConePair pair{random_quantized_cone(rng), random_quantized_cone(rng)};
    PiecewiseCircleMap map = build_circle_map(pair);
    ArcSet to_zero;
    for (const CirclePiece& p : map.pieces)
      if (p.kind == PieceKind::ToZero) to_zero.add(p.arc);
    ArcSet wide_kernel;
    for (const Arc& k : map.kernel_arcs.arcs())
      if (k.width > kAngleTol) wide_kernel.add(k);
    CHECK(to_zero.approx(wide_kernel, 1e-9));
  }
}

TEST_CASE("map evaluation matches the operator away from breakpoints") {
  std::mt19937 rng(101);
  std::vector<ConePair> pairs = {
      {parse_cone("sector:0,0.75pi"), parse_cone("sector:0.5pi,0.5pi")},
      {parse_cone("ray:0"), parse_cone("ray:0")},
      {PlanarCone::zero(), parse_cone("line:0")},
      {parse_cone("halfplane:0"), parse_cone("ray:1.5pi")},
  };
  for (const ConePair& pair : pairs) check_map_against_operator(pair, rng, 800);
  for (int trial = 0; trial < 60; ++trial) {
    ConePair pair{random_cone(rng), random_cone(rng)};
    check_map_against_operator(pair, rng, 120);
  }
}

TEST_CASE("evaluation is invariant under scaling of the representative") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    ConePair pair{random_cone(rng), random_cone(rng)};
    for (int i = 0; i < 10; ++i) {
      Vec2 u = unit_dir(std::uniform_real_distribution<double>(0.0, kTwoPi)(rng));
      Vec2 t1 = dr_op(pair, 0.1 * u), t2 = dr_op(pair, u), t3 = dr_op(pair, 10.0 * u);
      if (t2.norm() <= 1e-12) {
        CHECK(t1.norm() <= 1e-12);
        CHECK(t3.norm() <= 1e-10);
        continue;
      }
      CHECK(arg_of(t1).approx(arg_of(t2), 1e-9));
      CHECK(arg_of(t3).approx(arg_of(t2), 1e-9));
    }
  }
}

TEST_CASE("fixed directions of the map") {
  SUBCASE("first stock pair: exactly the fixed-set sector") {
    ConePair pair{parse_cone("sector:0,0.75pi"), parse_cone("sector:0.5pi,0.5pi")};
    ArcSet fix = fixed_arcs(build_circle_map(pair));
    ArcSet expected = parse_cone("sector:0.5pi,0.25pi").support_arcs();
    CHECK(fix.approx(expected, 1e-9));
  }
  SUBCASE("two lines at pi/3: no fixed direction") {
    ConePair pair{parse_cone("line:0"), PlanarCone::line(Angle(kPi / 3.0))};
    CHECK(fixed_arcs(build_circle_map(pair)).empty());
  }
  SUBCASE("full planes: the whole circle") {
    CHECK(fixed_arcs(build_circle_map({PlanarCone::plane(), PlanarCone::plane()}))
              .is_full_circle());
  }
}

TEST_CASE("fixed directions coincide with the analytic fixed set") {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    ConePair pair{random_quantized_cone(rng), random_quantized_cone(rng)};
    ArcSet from_map = fixed_arcs(build_circle_map(pair));
    ArcSet analytic = fixed_set_dr(pair).support_arcs();
    CHECK(from_map.approx(analytic, 1e-9));
  }
}

TEST_CASE("the circle map is arc-length nonexpansive on each component") {
  std::mt19937 rng(109);
  int checked = 0;
  while (checked < 1000) {
    ConePair pair{random_cone(rng), random_cone(rng)};
    PiecewiseCircleMap map = build_circle_map(pair);
    std::vector<Arc> comps = domain_components(map);
    if (comps.empty()) continue;
    const Arc& comp = comps[static_cast<std::size_t>(rng()) % comps.size()];
    // The circular metric only applies when there is no puncture at all; a
    // width-2*pi component around a single kernel direction is still a line
    // segment metrically.
    bool full = map.kernel_arcs.empty();
    std::uniform_real_distribution<double> off(0.0, comp.width);
    for (int i = 0; i < 10; ++i) {
      double o1 = off(rng), o2 = off(rng);
      Angle t = comp.start + o1, s = comp.start + o2;
      auto ft = eval_circle_map(map, t), fs = eval_circle_map(map, s);
      if (!ft || !fs) continue;  // landed on a puncture; measure zero
      double d_in = full ? t.distance_to(s) : std::fabs(o1 - o2);
      double d_out = full ? ft->distance_to(*fs)
                          : std::fabs(ft->ccw_from(comp.start) - fs->ccw_from(comp.start));
      CHECK(d_out <= d_in + 1e-9);
      ++checked;
    }
  }
}
