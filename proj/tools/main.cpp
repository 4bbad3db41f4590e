// su2holo command-line front end: spectra, connection checks, holonomies,
// figure data, Schrodinger-level simulation, and single-loop gate design.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "su2holo/connection.hpp"
#include "su2holo/dynamics.hpp"
#include "su2holo/gatedesign.hpp"
#include "su2holo/hamiltonian.hpp"
#include "su2holo/holonomy.hpp"
#include "su2holo/output.hpp"
#include "su2holo/spectrum.hpp"
#include "su2holo/types.hpp"

namespace {

using namespace su2holo;
using nlohmann::json;

constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitNumerical = 4;

/// Values shared by most subcommands. Defaults may come from a JSON config
/// file (--config); explicit flags always win because CLI11 only writes the
/// variables it actually parsed.
struct CommonParams {
  double g = 1.0;
  double j = 0.5;
  std::string format = "csv";
  std::string output;
  std::string config;  // consumed before parsing, kept for --help only
};

json load_config(int argc, char** argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) path = argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) path = arg.substr(9);
  }
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json cfg = json::parse(in);
  if (!cfg.is_object())
    throw std::invalid_argument("config file must hold a JSON object");
  return cfg;
}

template <typename T>
void from_config(const json& cfg, const char* key, T& var) {
  if (cfg.contains(key)) var = cfg.at(key).get<T>();
}

/// Opens the requested output file, or hands back stdout.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_)
        throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit_json(std::ostream& os, const json& doc) {
  os << dump_canonical(doc) << "\n";
}

void require_format(const std::string& format, const char* command) {
  if (format != "csv" && format != "json")
    throw std::invalid_argument(std::string(command) +
                                ": --format must be csv or json");
}

std::vector<double> grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");
  if (hi < lo) throw std::invalid_argument("grid upper bound below lower");
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double x = lo + i * step;
    if (x > hi + 1e-9 * std::max(1.0, std::abs(hi))) break;
    out.push_back(x);
  }
  return out;
}

json rotation_to_json(const RotationDecomposition& dec) {
  return json{{"angle", round_sig(dec.angle)},
              {"axis",
               {round_sig(dec.axis.x()), round_sig(dec.axis.y()),
                round_sig(dec.axis.z())}},
              {"axis_defined", dec.axis_defined},
              {"global_phase", round_sig(dec.global_phase)}};
}

ControlPath make_loop(double b0, double b1, double g, double j, int n,
                      double phi0) {
  ControlPath path;
  path.g = g;
  path.j = j;
  if (std::abs(b0 - b1) > 1e-12)
    path.segments.push_back(RadialSegment{b0, b1, phi0});
  path.segments.push_back(PrecessionSegment{b1, phi0, n});
  if (std::abs(b0 - b1) > 1e-12)
    path.segments.push_back(RadialSegment{b1, b0, phi0});
  return path;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const CommonParams& common, double b, double phi,
                 std::optional<double> b_min, std::optional<double> b_max,
                 double b_step) {
  require_format(common.format, "spectrum");
  std::vector<double> bs;
  if (b_min || b_max) {
    if (!(b_min && b_max))
      throw std::invalid_argument(
          "spectrum: --b-min and --b-max must be given together");
    bs = grid(*b_min, *b_max, b_step);
  } else {
    bs.push_back(b);
  }

  struct Row {
    SystemParams p;
    std::array<double, 8> energies;
    double deviation;
  };
  std::vector<Row> rows;
  for (double bv : bs) {
    SystemParams p{common.g, common.j, bv, phi};
    p.validate();
    const ClosedFormSpectrum closed = closed_form_eigenvalues(p);
    const EigenFrame frame = numeric_eigendecomposition(build_hamiltonian(p));
    double dev = 0.0;
    for (int i = 0; i < 8; ++i)
      dev = std::max(dev, std::abs(closed.sorted[i] - frame.energies(i)));
    rows.push_back({p, closed.sorted, dev});
  }

  OutputSink sink(common.output);
  if (common.format == "csv") {
    sink.stream() << "g,J,B,phi,E1,E2,E3,E4,E5,E6,E7,E8,max_deviation\n";
    for (const Row& r : rows) {
      sink.stream() << format_sci(r.p.g) << "," << format_sci(r.p.j) << ","
                    << format_sci(r.p.b) << "," << format_sci(r.p.phi);
      for (double e : r.energies) sink.stream() << "," << format_sci(e);
      sink.stream() << "," << format_sci(r.deviation) << "\n";
    }
  } else {
    json out;
    out["rows"] = json::array();
    for (const Row& r : rows) {
      json jr{{"B", round_sig(r.p.b)},
              {"J", round_sig(r.p.j)},
              {"g", round_sig(r.p.g)},
              {"max_deviation", round_sig(r.deviation)},
              {"phi", round_sig(r.p.phi)}};
      json energies = json::array();
      for (double e : r.energies) energies.push_back(round_sig(e));
      jr["energies"] = energies;
      out["rows"].push_back(jr);
    }
    emit_json(sink.stream(), out);
  }
  return 0;
}

// -------------------------------------------------------------- connection

int cmd_connection(const CommonParams& common, double b, double phi) {
  SystemParams p{common.g, common.j, b, phi};
  p.validate();
  if (p.at_forbidden_field())
    throw std::invalid_argument("connection: B = 2g is excluded (L = 0)");

  const ConnectionOneForm analytic = analytic_connection(b, phi, common.g);
  const ConnectionOneForm numeric = numeric_connection(b, phi, common.g);
  const double dev =
      std::max((analytic.a_phi - numeric.a_phi).cwiseAbs().maxCoeff(),
               (analytic.a_b - numeric.a_b).cwiseAbs().maxCoeff());

  json out{{"B", round_sig(b)},
           {"a_B", matrix_to_json(analytic.a_b)},
           {"a_phi", matrix_to_json(analytic.a_phi)},
           {"g", round_sig(common.g)},
           {"numeric_deviation", round_sig(dev)},
           {"phi", round_sig(phi)}};
  OutputSink sink(common.output);
  emit_json(sink.stream(), out);
  return 0;
}

// ---------------------------------------------------------------- holonomy

int cmd_holonomy(const CommonParams& common, double b0, double b1, int n,
                 double phi0, double steps_per_unit) {
  const ControlPath path = make_loop(b0, b1, common.g, common.j, n, phi0);
  path.validate();

  const HolonomyResult closed = closed_form_path_holonomy(path);
  const HolonomyResult po = path_ordered_exponential(path, steps_per_unit);
  const double dev = (closed.u - po.u).cwiseAbs().maxCoeff();
  const RotationDecomposition dec = rotation_decomposition(closed.u);

  json out{{"B0", round_sig(b0)},
           {"B1", round_sig(b1)},
           {"deviation", round_sig(dev)},
           {"g", round_sig(common.g)},
           {"n", n},
           {"phi0", round_sig(phi0)},
           {"rotation", rotation_to_json(dec)},
           {"steps_per_unit", round_sig(steps_per_unit)},
           {"u_closed", matrix_to_json(closed.u)},
           {"u_path_ordered", matrix_to_json(po.u)}};
  OutputSink sink(common.output);
  emit_json(sink.stream(), out);
  return 0;
}

// -------------------------------------------------------------------- fig1

int cmd_fig1(const CommonParams& common, double b_min, double b_max,
             double b_step) {
  const std::vector<double> bs = grid(b_min, b_max, b_step);
  OutputSink sink(common.output);
  sink.stream() << "B_over_g,alpha_1_canonical,axis_angle_from_z\n";
  for (double b : bs) {
    SystemParams p{common.g, common.j, b, 0.0};
    if (b <= 0.0 || p.at_forbidden_field(1e-6)) {
      std::cerr << "fig1: skipping B/g = " << b / common.g
                << " (axis undefined where L = 0)\n";
      continue;
    }
    const Matrix2 u = precession_holonomy_u_xz(b, common.g, 1);
    const RotationDecomposition dec = rotation_decomposition(u);
    // the axis lies in the (x, z) plane; angle measured from +z toward +x
    const double axis_angle = std::atan2(dec.axis.x(), dec.axis.z());
    sink.stream() << format_sci(b / common.g) << "," << format_sci(dec.angle)
                  << "," << format_sci(axis_angle) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const CommonParams& common, double b0, double b1, int n,
                 std::vector<double> t_list, double tol, double g_mhz) {
  if (t_list.empty())
    throw std::invalid_argument("simulate: at least one --T value is needed");
  require_format("json", "simulate");

  const ControlPath path = make_loop(b0, b1, common.g, common.j, n, 0.0);
  path.validate();
  const Matrix2 closed = closed_form_path_holonomy(path).u;

  PropagationOptions opt;
  opt.tol = tol;

  json rows = json::array();
  for (double t : t_list) {
    if (!(t > 0.0))
      throw std::invalid_argument("simulate: T values must be > 0");
    const auto start = std::chrono::steady_clock::now();
    const ExtractedHolonomy ex = extract_geometric_unitary(path, t, opt);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    json row{{"T", round_sig(t)},
             {"infidelity", round_sig(1.0 - gate_overlap(closed, ex.u_geo))},
             {"leakage", round_sig(ex.leakage)},
             {"wall_clock_s", round_sig(wall)}};
    // T is in 1/g units; with g in MHz the physical duration is T/g
    if (g_mhz > 0.0) row["duration_ns"] = round_sig(t / g_mhz * 1e3);
    rows.push_back(row);
  }

  json out{{"B0", round_sig(b0)},
           {"B1", round_sig(b1)},
           {"J", round_sig(common.j)},
           {"g", round_sig(common.g)},
           {"n", n},
           {"rows", rows},
           {"u_closed", matrix_to_json(closed)}};
  if (g_mhz > 0.0) out["g_mhz"] = round_sig(g_mhz);
  OutputSink sink(common.output);
  emit_json(sink.stream(), out);
  return 0;
}

// ------------------------------------------------------------------ design

GateTarget parse_target(const std::string& name) {
  if (name == "hadamard") return GateTarget::Hadamard;
  if (name == "not") return GateTarget::Not;
  if (name == "sqrt-inot" || name == "sqrtinot") return GateTarget::SqrtINot;
  if (name == "phase") return GateTarget::Phase;
  throw std::invalid_argument(
      "design: --target must be hadamard, not, sqrt-inot or phase");
}

const char* target_name(GateTarget t) {
  switch (t) {
    case GateTarget::Hadamard:
      return "hadamard";
    case GateTarget::Not:
      return "not";
    case GateTarget::SqrtINot:
      return "sqrt-inot";
    case GateTarget::Phase:
      return "phase";
  }
  return "?";
}

int cmd_design(const CommonParams& common, const std::string& target_str,
               int m1, int m2, double theta, bool verify, double t_verify) {
  const GateTarget target = parse_target(target_str);
  const GateDesign d = design_gate(target, m1, common.g, theta, m2);

  json out{{"B_over_g", round_sig(d.b_over_g)},
           {"beta", round_sig(d.beta)},
           {"feasible", d.feasible},
           {"fidelity", round_sig(d.achieved_fidelity)},
           {"m1", d.m1},
           {"m2", d.m2},
           {"n", d.n},
           {"target", target_name(d.target)}};
  if (target == GateTarget::Phase) out["theta"] = round_sig(d.theta);
  if (!d.message.empty()) out["message"] = d.message;
  if (d.feasible) {
    out["u_closed"] = matrix_to_json(d.u_closed);
    out["u_target"] = matrix_to_json(d.u_target);
  }

  if (!d.feasible) {
    OutputSink sink(common.output);
    emit_json(sink.stream(), out);
    std::cerr << "design: infeasible: " << d.message << "\n";
    return kExitInfeasible;
  }

  const bool fidelity_pass = d.achieved_fidelity >= 1.0 - 1e-8;
  std::cerr << "design: " << target_name(d.target) << " at B/g = " << d.b_over_g
            << ", beta = " << d.beta << ", n = " << d.n
            << ", closed-form fidelity = " << d.achieved_fidelity << " ("
            << (fidelity_pass ? "pass" : "FAIL") << " at 1e-8)\n";

  if (verify) {
    ControlPath loop;
    loop.g = common.g;
    loop.j = common.j;
    loop.segments.push_back(
        PrecessionSegment{d.b_over_g * common.g, 0.0, d.n});
    const ExtractedHolonomy ex = extract_geometric_unitary(loop, t_verify);
    Matrix2 r;
    r << std::cos(d.beta), -std::sin(d.beta), std::sin(d.beta),
        std::cos(d.beta);
    const Matrix2 u_dyn = r.adjoint() * ex.u_geo * r;
    const double infid = 1.0 - gate_fidelity(d.u_target, u_dyn);
    out["verify"] = json{{"T", round_sig(t_verify)},
                         {"dynamics_infidelity", round_sig(infid)},
                         {"leakage", round_sig(ex.leakage)}};
    std::cerr << "design: dynamics check at T = " << t_verify
              << "/g: infidelity = " << infid << ", leakage = " << ex.leakage
              << "\n";
  }

  OutputSink sink(common.output);
  emit_json(sink.stream(), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "SU(2) adiabatic holonomies of three coupled qubits: spectra, "
      "connection checks, holonomy evaluation, Schrodinger-level "
      "verification, and single-loop gate design. All inputs are in units "
      "of the coupling g. The sqrt-inot target is the square root of "
      "i*sigma_x on the positive-real-trace branch."};
  app.require_subcommand(1);

  json cfg;
  try {
    cfg = load_config(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  CommonParams common;
  from_config(cfg, "g", common.g);
  from_config(cfg, "J", common.j);
  from_config(cfg, "format", common.format);
  from_config(cfg, "output", common.output);

  std::vector<std::pair<CLI::App*, std::string>> format_defaults;
  auto add_common = [&](CLI::App* sub, const char* default_format) {
    format_defaults.emplace_back(sub, default_format);
    sub->add_option("--g", common.g, "coupling g (sets the energy unit)");
    sub->add_option("--J", common.j, "qubit 1-2 coupling J, in units of g");
    sub->add_option("--format", common.format, "output format: csv or json");
    sub->add_option("--output", common.output,
                    "output file (default: stdout)");
    sub->add_option("--config", common.config,
                    "JSON file with flag defaults; explicit flags override");
  };

  // spectrum
  double b = cfg.value("B", 1.0);
  double phi = cfg.value("phi", 0.0);
  std::optional<double> b_min, b_max;
  if (cfg.contains("b-min")) b_min = cfg["b-min"].get<double>();
  if (cfg.contains("b-max")) b_max = cfg["b-max"].get<double>();
  double b_step = cfg.value("b-step", 0.1);
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "closed-form vs numeric energy levels");
  add_common(spectrum, "csv");
  spectrum->add_option("--B", b, "field magnitude, units of g");
  spectrum->add_option("--phi", phi, "drive angle, radians");
  spectrum->add_option_function<double>(
      "--b-min", [&](double v) { b_min = v; }, "sweep start");
  spectrum->add_option_function<double>(
      "--b-max", [&](double v) { b_max = v; }, "sweep end (inclusive)");
  spectrum->add_option("--b-step", b_step, "sweep step");

  // connection
  CLI::App* connection = app.add_subcommand(
      "connection", "adiabatic connection in the protected subspace");
  add_common(connection, "json");
  connection->add_option("--B", b, "field magnitude, units of g");
  connection->add_option("--phi", phi, "drive angle, radians");

  // holonomy
  double b0 = cfg.value("b0", 1.0);
  double b1 = cfg.value("b1", 1.0);
  int n_turns = cfg.value("n", 1);
  double phi0 = cfg.value("phi0", 0.0);
  double steps_per_unit = cfg.value("steps-per-unit", 2000.0);
  CLI::App* holonomy = app.add_subcommand(
      "holonomy", "loop holonomy: radial leg b0 -> b1, n precessions, back");
  add_common(holonomy, "json");
  holonomy->add_option("--b0", b0, "loop base field");
  holonomy->add_option("--b1", b1, "precession field");
  holonomy->add_option("--n", n_turns, "number of full precessions");
  holonomy->add_option("--phi0", phi0, "starting drive angle");
  holonomy->add_option("--steps-per-unit", steps_per_unit,
                       "path-ordered integration resolution");

  // fig1
  double f_min = cfg.value("b-min", 0.1);
  double f_max = cfg.value("b-max", 4.0);
  double f_step = cfg.value("b-step", 0.05);
  CLI::App* fig1 = app.add_subcommand(
      "fig1", "rotation angle and axis of one precession over a B sweep");
  add_common(fig1, "csv");
  fig1->add_option("--b-min", f_min, "sweep start");
  fig1->add_option("--b-max", f_max, "sweep end (inclusive)");
  fig1->add_option("--b-step", f_step, "sweep step");

  // simulate
  std::vector<double> t_list = cfg.value("T", std::vector<double>{});
  double tol = cfg.value("tol", 1e-8);
  double g_mhz = cfg.value("g-mhz", 0.0);
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Schrodinger evolution of the loop vs the closed form");
  add_common(simulate, "json");
  simulate->add_option("--b0", b0, "loop base field");
  simulate->add_option("--b1", b1, "precession field");
  simulate->add_option("--n", n_turns, "number of full precessions");
  simulate->add_option("--T", t_list, "total durations, units of 1/g");
  simulate->add_option("--tol", tol, "allowed norm drift");
  simulate->add_option("--g-mhz", g_mhz,
                       "report physical durations in ns for this g in MHz");

  // design
  std::string target_str = cfg.value("target", std::string{});
  int m1 = cfg.value("m1", 0);
  int m2 = cfg.value("m2", 0);
  double theta = cfg.value("theta", 0.0);
  bool verify = cfg.value("verify", false);
  double t_verify = cfg.value("T-verify", 400.0);
  CLI::App* design =
      app.add_subcommand("design", "single-precession holonomic gate design");
  add_common(design, "json");
  design->add_option("--target", target_str,
                     "hadamard, not, sqrt-inot or phase");
  design->add_option("--m1", m1, "field-root index, 0..2");
  design->add_option("--m2", m2, "basis-angle branch index");
  design->add_option("--theta", theta, "phase-gate rotation angle, radians");
  design->add_flag("--verify", verify, "run the end-to-end dynamics check");
  design->add_option("--T-verify", t_verify,
                     "duration of the dynamics check, units of 1/g");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  for (const auto& [sub, fmt] : format_defaults)
    if (sub->parsed() && !cfg.contains("format") &&
        sub->count("--format") == 0)
      common.format = fmt;

  try {
    if (spectrum->parsed())
      return cmd_spectrum(common, b, phi, b_min, b_max, b_step);
    if (connection->parsed()) return cmd_connection(common, b, phi);
    if (holonomy->parsed())
      return cmd_holonomy(common, b0, b1, n_turns, phi0, steps_per_unit);
    if (fig1->parsed()) return cmd_fig1(common, f_min, f_max, f_step);
    if (simulate->parsed())
      return cmd_simulate(common, b0, b1, n_turns, t_list, tol, g_mhz);
    if (design->parsed())
      return cmd_design(common, target_str, m1, m2, theta, verify, t_verify);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
