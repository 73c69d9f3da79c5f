#include "coneproj/trace_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "coneproj/structure.hpp"

namespace coneproj {

std::vector<TraceRow> make_trace(const ConePair& pair, const OperatorParams& params,
                                 const Trajectory& traj) {
  std::optional<PlanarCone> fix;
  if (params.is_douglas_rachford()) fix = fixed_set_dr(pair);

  std::vector<TraceRow> rows;
  rows.reserve(traj.points.size());
  for (std::size_t i = 0; i < traj.points.size(); ++i) {
    TraceRow row;
    row.iter = i;
    row.point = traj.points[i];
    if (i > 0) row.step_norm = traj.step_distances[i - 1];
    if (fix) row.dist_to_fix = (row.point - project(*fix, row.point)).norm();
    row.in_fix = is_fixed(pair, params, row.point);
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double_cell(const std::string& cell, std::size_t row) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (cell.empty() || end != begin + cell.size())
    throw std::invalid_argument("malformed trajectory row " + std::to_string(row) +
                                ": bad number '" + cell + "'");
  return v;
}

}  // namespace

std::string trace_to_csv(const std::vector<TraceRow>& rows) {
  std::string out = "iter,x,y,step_norm,dist_to_fix,in_fix\n";
  for (const TraceRow& r : rows) {
    out += std::to_string(r.iter);
    out += ',';
    out += fmt(r.point.x);
    out += ',';
    out += fmt(r.point.y);
    out += ',';
    if (r.step_norm) out += fmt(*r.step_norm);
    out += ',';
    if (r.dist_to_fix) out += fmt(*r.dist_to_fix);
    out += ',';
    out += r.in_fix ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string trace_to_json(const std::vector<TraceRow>& rows, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TraceRow& r : rows) {
    nlohmann::json item;
    item["iter"] = r.iter;
    item["x"] = r.point.x;
    item["y"] = r.point.y;
    item["step_norm"] = r.step_norm ? nlohmann::json(*r.step_norm) : nlohmann::json(nullptr);
    item["dist_to_fix"] =
        r.dist_to_fix ? nlohmann::json(*r.dist_to_fix) : nlohmann::json(nullptr);
    item["in_fix"] = r.in_fix;
    arr.push_back(item);
  }
  return arr.dump(indent);
}

std::vector<TraceRow> parse_trace_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<TraceRow> rows;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1) {
      if (line != "iter,x,y,step_norm,dist_to_fix,in_fix")
        throw std::invalid_argument("malformed trajectory row 1: unexpected header");
      continue;
    }
    if (line.empty()) continue;

    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma == std::string::npos ? comma : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (cells.size() != 6)
      throw std::invalid_argument("malformed trajectory row " + std::to_string(lineno) +
                                  ": expected 6 columns, got " +
                                  std::to_string(cells.size()));
    TraceRow row;
    row.iter = static_cast<std::size_t>(parse_double_cell(cells[0], lineno));
    row.point.x = parse_double_cell(cells[1], lineno);
    row.point.y = parse_double_cell(cells[2], lineno);
    if (!cells[3].empty()) row.step_norm = parse_double_cell(cells[3], lineno);
    if (!cells[4].empty()) row.dist_to_fix = parse_double_cell(cells[4], lineno);
    if (cells[5] == "true")
      row.in_fix = true;
    else if (cells[5] == "false")
      row.in_fix = false;
    else
      throw std::invalid_argument("malformed trajectory row " + std::to_string(lineno) +
                                  ": bad in_fix '" + cells[5] + "'");
    rows.push_back(row);
  }
  return rows;
}

Vec2 parse_point(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("start point must be 'x,y', got '" + text + "'");
  auto num = [](const std::string& cell) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (cell.empty() || end != begin + cell.size() || !std::isfinite(v))
      throw std::invalid_argument("bad coordinate '" + cell + "' in start point");
    return v;
  };
  return {num(text.substr(0, comma)), num(text.substr(comma + 1))};
}

}  // namespace coneproj
