// coneproj: projection methods on planar convex cones.
//
// Subcommands:
//   example   reproduce one of the six stock non-finite-convergence setups
//   certify   finite-convergence certificate for a cone pair (JSON)
//   trace     dump an iterate trajectory as CSV or JSON
//   sweep     verdict grid over (lambda, mu, kappa)
//   render    draw a traced trajectory as a standalone SVG
//
// Exit codes: 0 success, 1 usage or parse error, 2 internal-consistency
// failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coneproj/certificate.hpp"
#include "coneproj/examples.hpp"
#include "coneproj/svg.hpp"
#include "coneproj/sweep.hpp"
#include "coneproj/trace_io.hpp"

namespace {

using namespace coneproj;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  out << text;
}

// Grid axis: either a comma list "0.5,1,2" or a linspace "lo:hi:count".
std::vector<double> parse_axis(const std::string& spec) {
  std::vector<double> values;
  if (spec.empty()) return values;
  if (spec.find(':') != std::string::npos) {
    double lo, hi;
    int count;
    char c1, c2;
    std::istringstream in(spec);
    if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || count < 1 ||
        !in.eof())
      throw std::invalid_argument("bad grid spec '" + spec + "' (want lo:hi:count)");
    for (int i = 0; i < count; ++i)
      values.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    return values;
  }
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string cell = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    const char* begin = cell.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (cell.empty() || end != begin + cell.size())
      throw std::invalid_argument("bad grid value '" + cell + "' in '" + spec + "'");
    values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

int run(int argc, char** argv) {
  CLI::App app{"Projection methods on planar convex cones"};
  app.require_subcommand(1);

  std::string cone_a_expr, cone_b_expr, start_text = "1,1", format = "csv", out_path;
  double lambda = 2.0, mu = 2.0, kappa = 0.5;
  std::size_t max_iters = 100;

  // --- example ---------------------------------------------------------
  auto* cmd_example = app.add_subcommand("example", "run a stock example against its closed form");
  int example_id = 1;
  std::string ex_lambda, ex_mu, ex_kappa, ex_start;
  cmd_example->add_option("id", example_id, "example id (1..6)")->required();
  cmd_example->add_option("--max-iters", max_iters, "iterations to check")->capture_default_str();
  cmd_example->add_option("--lambda", ex_lambda, "override lambda");
  cmd_example->add_option("--mu", ex_mu, "override mu");
  cmd_example->add_option("--kappa", ex_kappa, "override kappa");
  cmd_example->add_option("--start", ex_start, "override start point \"x,y\"");
  cmd_example->add_option("--out", out_path, "write the report here instead of stdout");

  // --- certify ---------------------------------------------------------
  auto* cmd_certify = app.add_subcommand("certify", "finite-convergence certificate (JSON)");
  cmd_certify->add_option("--cone-a", cone_a_expr, "first cone expression")->required();
  cmd_certify->add_option("--cone-b", cone_b_expr, "second cone expression")->required();
  cmd_certify->add_option("--out", out_path, "write JSON here instead of stdout");

  // --- trace -----------------------------------------------------------
  auto* cmd_trace = app.add_subcommand("trace", "dump an iterate trajectory");
  cmd_trace->add_option("--cone-a", cone_a_expr)->required();
  cmd_trace->add_option("--cone-b", cone_b_expr)->required();
  cmd_trace->add_option("--lambda", lambda)->capture_default_str();
  cmd_trace->add_option("--mu", mu)->capture_default_str();
  cmd_trace->add_option("--kappa", kappa)->capture_default_str();
  cmd_trace->add_option("--start", start_text, "start point \"x,y\"")->capture_default_str();
  cmd_trace->add_option("--max-iters", max_iters)->capture_default_str();
  cmd_trace->add_option("--format", format, "csv or json")->capture_default_str();
  cmd_trace->add_option("--out", out_path);

  // --- sweep -----------------------------------------------------------
  auto* cmd_sweep = app.add_subcommand("sweep", "parameter-grid verdicts (CSV)");
  std::string lambdas_spec, mus_spec, kappas_spec;
  std::size_t budget = 0;
  bool serial = false;
  cmd_sweep->add_option("--cone-a", cone_a_expr)->required();
  cmd_sweep->add_option("--cone-b", cone_b_expr)->required();
  cmd_sweep->add_option("--lambdas", lambdas_spec, "comma list or lo:hi:count");
  cmd_sweep->add_option("--mus", mus_spec, "comma list or lo:hi:count");
  cmd_sweep->add_option("--kappas", kappas_spec, "comma list or lo:hi:count");
  cmd_sweep->add_option("--start", start_text)->capture_default_str();
  cmd_sweep->add_option("--budget", budget, "iteration budget per grid point (0 = default)");
  cmd_sweep->add_flag("--serial", serial, "use the serial reference kernel");
  cmd_sweep->add_option("--out", out_path);

  // --- render ----------------------------------------------------------
  auto* cmd_render = app.add_subcommand("render", "render a traced trajectory as SVG");
  std::string trace_path;
  cmd_render->add_option("trajectory", trace_path, "trace CSV file")->required();
  cmd_render->add_option("--cone-a", cone_a_expr, "cone to shade");
  cmd_render->add_option("--cone-b", cone_b_expr, "cone to shade");
  cmd_render->add_option("--out", out_path, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*cmd_example) {
      std::optional<OperatorParams> params;
      if (!ex_lambda.empty() || !ex_mu.empty() || !ex_kappa.empty()) {
        const ExampleSpec& ex = example_by_id(example_id);
        params = OperatorParams(
            ex_lambda.empty() ? ex.canonical_params.lambda : std::stod(ex_lambda),
            ex_mu.empty() ? ex.canonical_params.mu : std::stod(ex_mu),
            ex_kappa.empty() ? ex.canonical_params.kappa : std::stod(ex_kappa));
      }
      std::optional<Vec2> start;
      if (!ex_start.empty()) start = parse_point(ex_start);

      ExampleRunReport report = run_example(example_id, static_cast<int>(max_iters), params, start);
      std::ostringstream os;
      os << "example " << report.id << ": (lambda, mu, kappa) = (" << report.params.lambda
         << ", " << report.params.mu << ", " << report.params.kappa << ")\n"
         << "start (" << report.start.x << ", " << report.start.y << "), " << report.steps
         << " iterations\n"
         << "max deviation from the closed form: " << report.max_deviation << "\n"
         << "no iterate entered the fixed set\n";
      write_output(os.str(), out_path);
      return 0;
    }

    if (*cmd_certify) {
      ConePair pair{parse_cone(cone_a_expr), parse_cone(cone_b_expr)};
      ConvergenceCertificate cert = certify(pair);
      write_output(certificate_to_json(cert) + "\n", out_path);
      return 0;
    }

    if (*cmd_trace) {
      if (format != "csv" && format != "json")
        throw std::invalid_argument("--format must be csv or json, got '" + format + "'");
      ConePair pair{parse_cone(cone_a_expr), parse_cone(cone_b_expr)};
      OperatorParams params(lambda, mu, kappa);
      Vec2 start = parse_point(start_text);
      Trajectory traj = iterate(pair, params, start, max_iters);
      auto rows = make_trace(pair, params, traj);
      write_output(format == "csv" ? trace_to_csv(rows) : trace_to_json(rows) + "\n",
                   out_path);
      return 0;
    }

    if (*cmd_sweep) {
      ConePair pair{parse_cone(cone_a_expr), parse_cone(cone_b_expr)};
      SweepGrid grid{parse_axis(lambdas_spec), parse_axis(mus_spec), parse_axis(kappas_spec)};
      Vec2 start = parse_point(start_text);
      if (budget == 0) budget = default_sweep_budget(pair, grid);
      auto rows = serial ? run_sweep_serial(pair, grid, start, budget)
                         : run_sweep(pair, grid, start, budget);
      write_output(sweep_to_csv(rows), out_path);
      return 0;
    }

    if (*cmd_render) {
      std::ifstream in(trace_path, std::ios::binary);
      if (!in) throw std::invalid_argument("cannot open trajectory file '" + trace_path + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      auto rows = parse_trace_csv(buf.str());
      if (rows.empty()) throw std::invalid_argument("trajectory file has no rows");
      std::optional<PlanarCone> ca, cb;
      if (!cone_a_expr.empty()) ca = parse_cone(cone_a_expr);
      if (!cone_b_expr.empty()) cb = parse_cone(cone_b_expr);
      write_output(render_trajectory_svg(rows, ca, cb), out_path);
      return 0;
    }
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
