#include "mjt/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mjt/curved.hpp"
#include "mjt/error.hpp"
#include "mjt/export.hpp"
#include "mjt/jerk_oracle.hpp"
#include "mjt/straight.hpp"
#include "mjt/tau1_solver.hpp"

namespace mjt::cli {

namespace {

struct Options {
  double x0 = 0.0;
  double y0 = 0.0;
  double xf = 0.0;
  double yf = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;
  double tf = 1.0;
  int samples = 101;
  std::string format = "csv";
  std::string out_path;

  MotionSpec motion() const { return {{x0, y0}, {xf, yf}, tf}; }
  ViaMotionSpec via_motion() const { return {motion(), {x1, y1}}; }
};

void add_motion_flags(CLI::App& cmd, Options& o, bool with_via) {
  cmd.add_option("--x0", o.x0, "start x [m]")->capture_default_str();
  cmd.add_option("--y0", o.y0, "start y [m]")->capture_default_str();
  cmd.add_option("--xf", o.xf, "end x [m]")->required();
  cmd.add_option("--yf", o.yf, "end y [m]")->required();
  cmd.add_option("--tf", o.tf, "movement duration [s]")->required();
  if (with_via) {
    cmd.add_option("--x1", o.x1, "via x [m]")->required();
    cmd.add_option("--y1", o.y1, "via y [m]")->required();
  }
}

void add_export_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--samples", o.samples, "uniform samples over [0, tf]")->capture_default_str();
  cmd.add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd.add_option("--out", o.out_path, "output file (default: standard output)");
}

std::string render(const std::vector<TrajectorySample>& samples, const Options& o,
                   const ExportMetadata& meta) {
  std::ostringstream buf;
  if (o.format == "json") {
    write_json(samples, meta, buf);
  } else {
    write_csv(samples, buf);
  }
  return buf.str();
}

void emit(const std::string& data, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot open '" + o.out_path + "' for writing");
  file << data;
  file.flush();
  if (!file) throw Error(ErrorCode::Io, "failed writing '" + o.out_path + "'");
}

void print_solution(const ViaSolution& sol, std::ostream& out) {
  out << std::setprecision(17);
  out << "tau1 = " << sol.tau1 << '\n';
  out << "c1 = " << sol.constants.c1 << '\n';
  out << "c2 = " << sol.constants.c2 << '\n';
  out << "pi1 = " << sol.constants.pi1 << '\n';
  out << "pi2 = " << sol.constants.pi2 << '\n';
  out << "hamiltonian_residual = " << sol.hamiltonian_residual << '\n';
  if (sol.candidates.size() > 1) {
    out << "candidates =";
    for (const RootCandidate& c : sol.candidates) {
      out << ' ' << c.tau1 << (c.ill_conditioned ? "(ill-conditioned)" : "");
    }
    out << '\n';
  }
}

int run_verify(std::ostream& out) {
  bool all = true;
  int passed = 0;
  const auto results = run_verification_suite();
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
    passed += r.passed ? 1 : 0;
  }
  out << passed << '/' << results.size() << " checks passed\n";
  return all ? kSuccess : kSolverError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-jerk trajectory planner", "mjt"};
  app.require_subcommand(1);
  Options o;

  auto* straight = app.add_subcommand("straight", "plan a straight rest-to-rest movement");
  add_motion_flags(*straight, o, false);
  add_export_flags(*straight, o);

  auto* curved = app.add_subcommand("curved", "plan a movement through a via point");
  add_motion_flags(*curved, o, true);
  add_export_flags(*curved, o);

  auto* solve = app.add_subcommand("solve-tau1", "print the via time and constants");
  add_motion_flags(*solve, o, true);

  auto* verify = app.add_subcommand("verify", "run the numerical oracle suite");

  std::vector<const char*> argv{"mjt"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kSuccess;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kValidationError;
  }

  try {
    if (straight->parsed()) {
      const MotionSpec spec = validate_motion_spec(o.motion());
      emit(render(sample_straight(spec, o.samples), o, {spec, std::nullopt}), o, out);
    } else if (curved->parsed()) {
      const ViaSolution sol = solve_via(validate_via_spec(o.via_motion()));
      emit(render(sample_curved(sol, o.samples), o, {sol.spec.base, sol}), o, out);
    } else if (solve->parsed()) {
      print_solution(solve_via(validate_via_spec(o.via_motion())), out);
    } else if (verify->parsed()) {
      return run_verify(out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::Io) return kIoError;
    return is_solver_error(e.code()) ? kSolverError : kValidationError;
  }
  return kSuccess;
}

}  // namespace mjt::cli
