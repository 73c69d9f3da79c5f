#include "coneproj/certificate.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

namespace coneproj {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::KernelLine: return "KernelLine";
    case Regime::DichotomyFixNontrivial: return "Dichotomy_FixNontrivial";
    case Regime::DichotomyFixTrivial: return "Dichotomy_FixTrivial";
    case Regime::KernelPlane: return "KernelPlane";
  }
  return "?";
}

namespace {

// Arc length from p to the far end of the piece on the given side
// (+1 counterclockwise, -1 clockwise), for a piece whose interior extends
// that way from p. Negative when it does not.
double reach_within(const CirclePiece& piece, Angle p, int side) {
  double off = p.ccw_from(piece.arc.start);
  if (off >= kTwoPi - kAngleTol) off = 0.0;
  if (off > piece.arc.width + kAngleTol) return -1.0;  // p not on this piece
  off = std::min(off, piece.arc.width);
  return side > 0 ? piece.arc.width - off : off;
}

// Smallest absorbing arc over all boundary directions of the fixed set of
// the circle map. Returns nullopt when every side abuts the domain
// boundary (flagged by the caller).
std::optional<double> absorbing_epsilon(const PiecewiseCircleMap& map, const ArcSet& fix,
                                        bool& domain_endpoint) {
  std::optional<double> eps;
  for (const Arc& arc : fix.arcs()) {
    struct Side {
      Angle p;
      int dir;
    } sides[2] = {{arc.start, -1}, {arc.end(), +1}};
    for (const Side& s : sides) {
      if (map.kernel_arcs.contains(s.p)) {
        domain_endpoint = true;  // fixed direction touching the kernel closure
        continue;
      }
      bool found = false;
      for (const CirclePiece& piece : map.pieces) {
        double reach = reach_within(piece, s.p, s.dir);
        if (reach <= kAngleTol) continue;
        found = true;
        switch (piece.kind) {
          case PieceKind::Identity:
            break;  // interior of the fixed set, no constraint
          case PieceKind::ConstantTo:
            if (!fix.contains(piece.target, 1e-6))
              throw InternalConsistencyError(
                  "constant piece adjacent to the fixed set targets a non-fixed "
                  "direction");
            if (!eps || reach < *eps) eps = reach;
            break;
          case PieceKind::ToZero:
            domain_endpoint = true;
            break;
          case PieceKind::Rotation:
            throw InternalConsistencyError(
                "rotation piece adjacent to the fixed set; no absorbing "
                "neighborhood exists");
        }
      }
      if (!found) domain_endpoint = true;
    }
  }
  return eps;
}

}  // namespace

ConvergenceCertificate certify(const ConePair& pair) {
  ConvergenceCertificate cert;
  StructureReport report = structure_report(pair);
  cert.kernel = report.kernel;
  cert.fixed_set = report.fixed_set;
  cert.kernel_arcs = report.kernel.support_arcs();
  cert.fix_arcs = report.fixed_set.support_arcs();
  cert.map = build_circle_map(pair);

  if (report.kernel_is_line) {
    // One application maps the whole plane into Fix.
    cert.regime = Regime::KernelLine;
    cert.finite = true;
    cert.bound_n = 1;
    return cert;
  }
  if (report.kernel.kind() == ConeKind::Plane) {
    // T == 0 and the origin is fixed.
    cert.regime = Regime::KernelPlane;
    cert.finite = true;
    cert.bound_n = 1;
    return cert;
  }
  if (report.fix_trivial) {
    cert.regime = Regime::DichotomyFixTrivial;
    cert.finite = false;
    return cert;
  }

  cert.regime = Regime::DichotomyFixNontrivial;
  cert.finite = true;

  ArcSet fix_phi = fixed_arcs(cert.map);
  if (fix_phi.empty())
    throw InternalConsistencyError(
        "nontrivial fixed set but the circle map has no fixed directions");
  if (fix_phi.is_full_circle()) {
    cert.bound_n = cert.kernel_arcs.empty() ? 0 : 1;  // identity map away from 0
    return cert;
  }

  std::optional<double> eps =
      absorbing_epsilon(cert.map, fix_phi, cert.domain_endpoint_absorbing);
  if (!eps) {
    // Every boundary side abuts the domain boundary; nothing remains to
    // absorb, one application suffices.
    cert.bound_n = 1;
    return cert;
  }
  cert.epsilon = *eps;
  cert.bound_n = static_cast<std::int64_t>(std::ceil(kTwoPi / *eps));
  return cert;
}

std::string certificate_to_json(const ConvergenceCertificate& cert, int indent) {
  nlohmann::json doc;
  doc["finite"] = cert.finite;
  doc["bound_n"] = cert.bound_n ? nlohmann::json(*cert.bound_n) : nlohmann::json(nullptr);
  doc["epsilon"] = cert.epsilon ? nlohmann::json(*cert.epsilon) : nlohmann::json(nullptr);
  doc["regime"] = to_string(cert.regime);
  doc["kernel"] = format_cone(cert.kernel);
  doc["fixed_set"] = format_cone(cert.fixed_set);
  if (cert.domain_endpoint_absorbing) doc["domain_endpoint_absorbing"] = true;

  nlohmann::json pieces = nlohmann::json::array();
  for (const CirclePiece& p : cert.map.pieces) {
    nlohmann::json item;
    item["arc_start"] = p.arc.start.radians();
    item["arc_width"] = p.arc.width;
    item["kind"] = to_string(p.kind);
    item["angle"] = p.kind == PieceKind::Rotation ? nlohmann::json(p.rotation)
                                                  : nlohmann::json(nullptr);
    item["scale"] =
        p.kind == PieceKind::Rotation ? nlohmann::json(p.scale) : nlohmann::json(nullptr);
    item["target"] = p.kind == PieceKind::ConstantTo ? nlohmann::json(p.target.radians())
                                                     : nlohmann::json(nullptr);
    pieces.push_back(item);
  }
  doc["pieces"] = pieces;
  return doc.dump(indent);
}

}  // namespace coneproj
