#include <doctest.h>

#include <cmath>
#include <random>

#include <json.hpp>

#include "coneproj/certificate.hpp"
#include "test_util.hpp"

using namespace coneproj;
using namespace coneproj::testutil;

namespace {

// Iterates the Douglas-Rachford operator directly and reports the first
// step whose point lies in the fixed set, or -1.
int steps_to_fix(const ConePair& pair, const PlanarCone& fix, Vec2 x0, std::int64_t limit) {
  Vec2 x = x0;
  for (std::int64_t n = 0; n <= limit; ++n) {
    if ((x - project(fix, x)).norm() <= 1e-9 * (1.0 + x.norm())) return static_cast<int>(n);
    x = dr_op(pair, x);
  }
  return -1;
}

}  // namespace

TEST_CASE("certificate regimes on the canonical pairs") {
  SUBCASE("overlapping sectors certify finite with a uniform bound") {
    ConePair pair{parse_cone("sector:0,0.75pi"), parse_cone("halfplane:0.5pi")};
    ConvergenceCertificate cert = certify(pair);
    CHECK(cert.finite);
    CHECK(cert.regime == Regime::DichotomyFixNontrivial);
    REQUIRE(cert.bound_n.has_value());
    REQUIRE(cert.epsilon.has_value());
    CHECK(*cert.bound_n == static_cast<std::int64_t>(std::ceil(kTwoPi / *cert.epsilon)));
    for (int i = 0; i < 360; ++i) {
      Vec2 u = unit_dir(i * kTwoPi / 360.0);
      int steps = steps_to_fix(pair, cert.fixed_set, u, *cert.bound_n);
      CHECK(steps >= 0);  // reached within the certified bound
    }
  }

  SUBCASE("two lines at pi/3 never converge finitely off the kernel") {
    ConePair pair{parse_cone("line:0"), PlanarCone::line(Angle(kPi / 3.0))};
    ConvergenceCertificate cert = certify(pair);
    CHECK_FALSE(cert.finite);
    CHECK(cert.regime == Regime::DichotomyFixTrivial);
    CHECK_FALSE(cert.bound_n.has_value());
  }

  SUBCASE("zero against a line lands in one step") {
    ConvergenceCertificate cert = certify({PlanarCone::zero(), parse_cone("line:0")});
    CHECK(cert.finite);
    CHECK(cert.regime == Regime::KernelLine);
    CHECK(cert.bound_n == 1);
  }

  SUBCASE("perpendicular lines: the zero operator lands in one step") {
    ConvergenceCertificate cert = certify({parse_cone("line:0"), parse_cone("line:0.5pi")});
    CHECK(cert.finite);
    CHECK(cert.regime == Regime::KernelPlane);
    CHECK(cert.bound_n == 1);
  }

  SUBCASE("identity operators need zero steps") {
    ConvergenceCertificate planes = certify({PlanarCone::plane(), PlanarCone::plane()});
    CHECK(planes.finite);
    CHECK(planes.bound_n == 0);
    // Two zero cones also give the identity: reflecting twice through the
    // origin returns every point, so the fixed set is the whole plane.
    ConvergenceCertificate zeros = certify({PlanarCone::zero(), PlanarCone::zero()});
    CHECK(zeros.finite);
    CHECK(zeros.regime == Regime::DichotomyFixNontrivial);
    CHECK(zeros.fixed_set.kind() == ConeKind::Plane);
    CHECK(zeros.bound_n == 0);
  }
}

TEST_CASE("certificates are sound on random pairs") {
  std::mt19937 rng(113);
  int finite_seen = 0, infinite_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    ConePair pair{random_quantized_cone(rng), random_quantized_cone(rng)};
    ConvergenceCertificate cert = certify(pair);
    CHECK(cert.finite == (cert.regime != Regime::DichotomyFixTrivial));

    if (cert.finite) {
      ++finite_seen;
      REQUIRE(cert.bound_n.has_value());
      for (int i = 0; i < 90; ++i) {
        Vec2 u = unit_dir(i * kTwoPi / 90.0);
        for (double r : {0.1, 1.0, 10.0})
          CHECK(steps_to_fix(pair, cert.fixed_set, r * u, *cert.bound_n) >= 0);
      }
    } else {
      ++infinite_seen;
      // Theorem branch two: away from the kernel the iterates never reach
      // the fixed set (here exactly the origin) and shrink strictly.
      for (int i = 0; i < 45; ++i) {
        Vec2 x = unit_dir(i * kTwoPi / 45.0 + 0.013);
        if (contains(cert.kernel, x)) continue;
        for (int n = 0; n < 60; ++n) {
          Vec2 next = dr_op(pair, x);
          CHECK(next.norm() > 0.0);
          CHECK(next.norm() < x.norm());
          x = next;
        }
      }
    }
  }
  CHECK(finite_seen > 0);
  CHECK(infinite_seen > 0);
}

TEST_CASE("certificate JSON carries the full schema") {
  ConePair pair{parse_cone("sector:0,0.75pi"), parse_cone("sector:0.5pi,0.5pi")};
  ConvergenceCertificate cert = certify(pair);
  nlohmann::json doc = nlohmann::json::parse(certificate_to_json(cert));

  CHECK(doc["finite"].is_boolean());
  CHECK(doc["bound_n"].is_number_integer());
  CHECK(doc["epsilon"].is_number());
  CHECK(doc["regime"] == "Dichotomy_FixNontrivial");
  CHECK(parse_cone(doc["kernel"].get<std::string>())
            .approx(PlanarCone::sector(Angle(3.0 * kHalfPi), kHalfPi)));
  CHECK(parse_cone(doc["fixed_set"].get<std::string>())
            .approx(PlanarCone::sector(Angle(kHalfPi), 0.25 * kPi)));
  REQUIRE(doc["pieces"].is_array());
  REQUIRE(doc["pieces"].size() == cert.map.pieces.size());
  double total = 0.0;
  for (const auto& piece : doc["pieces"]) {
    CHECK(piece.contains("arc_start"));
    CHECK(piece.contains("arc_width"));
    CHECK(piece.contains("kind"));
    CHECK(piece.contains("angle"));
    CHECK(piece.contains("scale"));
    CHECK(piece.contains("target"));
    if (piece["kind"] == "rotation") {
      CHECK(piece["angle"].is_number());
      CHECK(piece["scale"].is_number());
    } else {
      CHECK(piece["angle"].is_null());
    }
    if (piece["kind"] == "constant_to") CHECK(piece["target"].is_number());
    total += piece["arc_width"].get<double>();
  }
  CHECK(total == doctest::Approx(kTwoPi));

  nlohmann::json trivial = nlohmann::json::parse(
      certificate_to_json(certify({parse_cone("line:0"), parse_cone("line:1")})));
  CHECK(trivial["finite"] == false);
  CHECK(trivial["bound_n"].is_null());
  CHECK(trivial["epsilon"].is_null());
}
