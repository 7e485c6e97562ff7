// Command-line surface: sampling, kernel estimation, oracle evaluation,
// measure checks, set-theory helpers, and the acceptance suite.
// Exit codes: 0 success, 2 gated check failed, 1 error.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fkwalk/acceptance.hpp"
#include "fkwalk/feynman_kac.hpp"
#include "fkwalk/hfset.hpp"
#include "fkwalk/io.hpp"
#include "fkwalk/loeb.hpp"
#include "fkwalk/oracle.hpp"
#include "fkwalk/walk.hpp"

namespace {

using namespace fkwalk;

Point parse_point(const std::string& text) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(std::stod(item));
  if (coords.empty()) throw ConfigError("empty point");
  return Point(std::move(coords));
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

// "time:lo,hi[,lo,hi];time:lo,hi" -> one LatticeBin per semicolon group.
std::vector<LatticeBin> parse_bins(const std::string& text) {
  std::vector<LatticeBin> bins;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    const std::size_t colon = group.find(':');
    if (colon == std::string::npos) throw ConfigError("bin needs time:lo,hi");
    LatticeBin bin;
    bin.time = std::stod(group.substr(0, colon));
    std::vector<double> vals;
    std::stringstream ss(group.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    if (vals.empty() || vals.size() % 2) throw ConfigError("bin box needs lo,hi pairs");
    std::vector<std::pair<double, double>> parts;
    for (std::size_t i = 0; i < vals.size(); i += 2) parts.emplace_back(vals[i], vals[i + 1]);
    bin.box = IntervalUnion::of(std::move(parts));
    bins.push_back(std::move(bin));
  }
  if (bins.empty()) throw ConfigError("no bins given");
  return bins;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file " + path);
  f << text;
}

HFSet hfs_operand(const std::string& text) {
  bool digits = !text.empty();
  for (char ch : text) digits = digits && std::isdigit(static_cast<unsigned char>(ch));
  if (digits) return von_neumann_natural(std::stoi(text));
  return parse(text);
}

struct Opts {
  std::string manifold = "line";
  std::string potential = "zero";
  double c = 0;
  double t = 1;
  long n = 256;
  std::string n_sweep;
  long samples = 10000;
  std::uint64_t seed = 0;
  int workers = 1;
  double bin_radius = 0;  // 0 picks the default rule
  bool snap = false;
  std::string out;
  std::string format = "json";
  std::string q1 = "0";
  std::string q2 = "0";
  std::string func = "one";
  double t2 = 0.5;
  double tol = 1e-6;
  long quad_points = 512;
  double quad_lo = -10, quad_hi = 10;
  std::string oracle = "free";
  double a = -8, b = 8;
  double radius = 1;
  bool periodic = false;
  long grid_size = 512;
  long slices = 64;
  std::string bins;
  double cyl_tol = 1e-8;
  std::string arg1, arg2;
  int accept_workers = 8;
};

void add_common(CLI::App* cmd, Opts& o, bool manifold = true) {
  if (manifold) cmd->add_option("--manifold", o.manifold, "manifold name or JSON");
  cmd->add_option("--V", o.potential, "potential name[:params]");
  cmd->add_option("--c", o.c, "scalar-curvature coupling");
  cmd->add_option("--t", o.t, "time horizon");
  cmd->add_option("--n", o.n, "time slices");
  cmd->add_option("--samples", o.samples, "Monte Carlo sample count");
  cmd->add_option("--seed", o.seed, "master seed");
  cmd->add_option("--workers", o.workers, "worker threads");
  cmd->add_option("--out", o.out, "output file (stdout when omitted)");
  cmd->add_option("--format", o.format, "csv|json");
}

std::string sweep_token(const Opts& o) {
  return " t=" + std::to_string(o.t) + " samples=" + std::to_string(o.samples) +
         " seed=" + std::to_string(o.seed);
}

// Nearest endpoint the free walk can reach: right parity, same lattice.
double snap_free_endpoint(double q1, double q2, long n, double step) {
  long j = std::llround((q2 - q1) / step);
  if (((n - j) % 2 + 2) % 2 != 0) j += (q2 - q1) / step > static_cast<double>(j) ? 1 : -1;
  return q1 + static_cast<double>(j) * step;
}

EstimatorOptions estimator_options(const Opts& o) {
  EstimatorOptions eo;
  eo.samples = o.samples;
  eo.master_seed = o.seed;
  eo.workers = o.workers;
  return eo;
}

int cmd_walk_sample(const Opts& o) {
  const Manifold m = parse_manifold(o.manifold);
  const WalkPath path =
      sample_manifold_walk(m, parse_point(o.q1), HyperfiniteGrid::make(o.t, o.n), {o.seed, 0});
  std::ostringstream text;
  write_walk_csv(text, path, {o.seed, 0});
  emit(o.out, text.str());
  return 0;
}

int cmd_kernel_bridge(const Opts& o) {
  const Potential V = parse_potential(o.potential, o.c);
  const double q1 = parse_point(o.q1)[0];
  double q2 = parse_point(o.q2)[0];
  const EstimatorOptions eo = estimator_options(o);
  const bool free_oracle = V.describe() == "zero";

  if (!o.n_sweep.empty()) {
    std::vector<long> ns = parse_longs(o.n_sweep);
    std::vector<KernelEstimate> ests;
    std::vector<double> oracles;
    for (long n : ns) {
      const HyperfiniteGrid grid = HyperfiniteGrid::make(o.t, n);
      double target = q2;
      if (o.snap) target = snap_free_endpoint(q1, q2, n, grid.step_scale());
      ests.push_back(estimate_kernel_line_bridge(q1, target, grid, V, eo));
      oracles.push_back(free_oracle ? free_line_kernel(q1, target, o.t)
                                    : std::numeric_limits<double>::quiet_NaN());
    }
    std::ostringstream text;
    write_sweep_csv(text, ns, ests, oracles,
                    "bridge q1=" + o.q1 + " q2=" + o.q2 + sweep_token(o));
    emit(o.out, text.str());
    return 0;
  }

  const HyperfiniteGrid grid = HyperfiniteGrid::make(o.t, o.n);
  std::string echo = "bridge q1=" + o.q1 + " q2=" + o.q2 + " n=" + std::to_string(o.n) +
                     sweep_token(o);
  try {
    PinnedLineWalkSampler probe(q1, q2, grid);
  } catch (const ReachabilityError& e) {
    if (!o.snap) throw;
    const double below = e.nearest_below, above = e.nearest_above;
    const double snapped = std::abs(q2 - below) <= std::abs(above - q2) ? below : above;
    echo += " q2_requested=" + std::to_string(q2) + " q2_snapped=" + std::to_string(snapped);
    q2 = snapped;
  }
  const KernelEstimate est = estimate_kernel_line_bridge(q1, q2, grid, V, eo);
  emit(o.out, estimate_json(est, Manifold::euclidean_line(), V, echo));
  return 0;
}

int cmd_kernel_binned(const Opts& o) {
  const Manifold m = parse_manifold(o.manifold);
  const Potential V = parse_potential(o.potential, o.c);
  const Point q1 = parse_point(o.q1);
  Point q2 = parse_point(o.q2);
  const EstimatorOptions eo = estimator_options(o);

  if (!o.n_sweep.empty()) {
    std::vector<long> ns = parse_longs(o.n_sweep);
    std::vector<KernelEstimate> ests;
    std::vector<double> oracles;
    const bool free_line =
        m.kind() == ManifoldKind::EuclideanLine && V.describe() == "zero";
    for (long n : ns) {
      const HyperfiniteGrid grid = HyperfiniteGrid::make(o.t, n);
      const double rho = o.bin_radius > 0 ? o.bin_radius : default_bin_radius(grid, o.samples);
      ests.push_back(estimate_kernel_binned(m, q1, q2, grid, V, rho, eo));
      oracles.push_back(free_line ? free_line_kernel(q1[0], q2[0], o.t)
                                  : std::numeric_limits<double>::quiet_NaN());
    }
    std::ostringstream text;
    write_sweep_csv(text, ns, ests, oracles,
                    "binned q1=" + o.q1 + " q2=" + o.q2 + sweep_token(o));
    emit(o.out, text.str());
    return 0;
  }

  const HyperfiniteGrid grid = HyperfiniteGrid::make(o.t, o.n);
  std::string echo = "binned q1=" + o.q1 + " q2=" + o.q2 + " n=" + std::to_string(o.n) +
                     sweep_token(o);
  if (o.snap &&
      (m.kind() == ManifoldKind::EuclideanLine || m.kind() == ManifoldKind::Circle)) {
    const double step = grid.step_scale() / (m.kind() == ManifoldKind::Circle ? m.radius() : 1.0);
    const double snapped = snap_free_endpoint(q1[0], q2[0], o.n, step);
    if (snapped != q2[0])
      echo += " q2_requested=" + std::to_string(q2[0]) +
              " q2_snapped=" + std::to_string(snapped);
    q2 = Point(snapped);
  }
  const double rho = o.bin_radius > 0 ? o.bin_radius : default_bin_radius(grid, o.samples);
  const KernelEstimate est = estimate_kernel_binned(m, q1, q2, grid, V, rho, eo);
  emit(o.out, estimate_json(est, m, V, echo));
  return 0;
}

int cmd_kernel_semigroup(const Opts& o) {
  const Manifold m = parse_manifold(o.manifold);
  const Potential V = parse_potential(o.potential, o.c);
  std::function<double(const Point&)> f;
  if (o.func == "one")
    f = [](const Point&) { return 1.0; };
  else if (o.func == "coord")
    f = [](const Point& p) { return p[0]; };
  else if (o.func == "cos")
    f = [](const Point& p) { return std::cos(p[0]); };
  else
    throw ConfigError("--f must be one|coord|cos");
  const KernelEstimate est = estimate_semigroup_apply(
      m, V, f, parse_point(o.q1), HyperfiniteGrid::make(o.t, o.n), estimator_options(o));
  emit(o.out, estimate_json(est, m, V,
                            "semigroup f=" + o.func + " q1=" + o.q1 +
                                " n=" + std::to_string(o.n) + sweep_token(o)));
  return 0;
}

int cmd_kernel_verify(const Opts& o) {
  const Manifold m = parse_manifold(o.manifold);
  KernelFn kernel;
  switch (m.kind()) {
    case ManifoldKind::EuclideanLine:
      kernel = [](const Point& p, const Point& q, double t) {
        return free_line_kernel(p[0], q[0], t);
      };
      break;
    case ManifoldKind::Circle:
      kernel = [r = m.radius()](const Point& p, const Point& q, double t) {
        return circle_kernel(p[0], q[0], t, r);
      };
      break;
    case ManifoldKind::Sphere2:
      kernel = [&m, r = m.radius()](const Point& p, const Point& q, double t) {
        return sphere_kernel(m.geodesic_distance(p, q) / r, t, r);
      };
      break;
    default:
      throw ConfigError("kernel verify supports line, circle, and sphere");
  }
  QuadratureSpec quad{o.quad_points, o.quad_lo, o.quad_hi};
  const KernelPropertyReport report =
      verify_kernel_properties(kernel, m, o.t, o.t2, quad, o.tol);
  emit(o.out, property_report_json(report, o.t, o.t2, o.tol,
                                   "verify manifold=" + o.manifold));
  return report.pass() ? 0 : 2;
}

int cmd_oracle_eval(const Opts& o) {
  const double q1 = parse_point(o.q1)[0];
  const double q2 = parse_point(o.q2)[0];
  if (o.oracle == "free" || o.oracle == "circle" || o.oracle == "sphere") {
    double value = 0;
    if (o.oracle == "free") value = free_line_kernel(q1, q2, o.t);
    if (o.oracle == "circle") value = circle_kernel(q1, q2, o.t, o.radius);
    if (o.oracle == "sphere") value = sphere_kernel(std::abs(q2 - q1), o.t, o.radius);
    std::ostringstream text;
    text << "{\n  \"oracle\": \"" << o.oracle << "\",\n  \"t\": " << o.t
         << ",\n  \"value\": " << std::setprecision(17) << value
         << ",\n  \"library_version\": \"" << kLibraryVersion << "\"\n}\n";
    emit(o.out, text.str());
    return 0;
  }
  const Potential V = parse_potential(o.potential, o.c);
  GridPropagator prop;
  if (o.oracle == "spectral")
    prop = spectral_kernel(o.a, o.b, o.periodic, V, o.t,
                           static_cast<std::size_t>(o.grid_size));
  else if (o.oracle == "trotter")
    prop = grid_trotter_kernel(o.a, o.b, o.periodic, V, o.t, static_cast<int>(o.slices),
                               static_cast<std::size_t>(o.grid_size));
  else
    throw ConfigError("--oracle must be free|circle|sphere|spectral|trotter");
  if (o.format == "csv") {
    std::ostringstream text;
    write_propagator_csv(text, prop, "oracle " + o.oracle + sweep_token(o));
    emit(o.out, text.str());
  } else {
    std::ostringstream text;
    text << "{\n  \"oracle\": \"" << o.oracle << "\",\n  \"t\": " << o.t
         << ",\n  \"value\": " << std::setprecision(17) << prop.value(q1, q2)
         << ",\n  \"library_version\": \"" << kLibraryVersion << "\"\n}\n";
    emit(o.out, text.str());
  }
  return 0;
}

int cmd_cylinder(const Opts& o) {
  const double q1 = parse_point(o.q1)[0];
  const double q2 = parse_point(o.q2)[0];
  std::vector<double> times;
  std::vector<IntervalUnion> boxes;
  for (LatticeBin& bin : parse_bins(o.bins)) {
    times.push_back(bin.time);
    boxes.push_back(std::move(bin.box));
  }
  const CylinderSpec spec = CylinderSpec::make(q1, q2, o.t, times, boxes);
  const double measure = cylinder_measure(spec, o.cyl_tol);
  std::ostringstream text;
  text << "{\n  \"measure\": " << std::setprecision(17) << measure
       << ",\n  \"normalized\": " << measure / free_line_kernel(q1, q2, o.t)
       << ",\n  \"tolerance\": " << o.cyl_tol << ",\n  \"library_version\": \""
       << kLibraryVersion << "\"\n}\n";
  emit(o.out, text.str());
  return 0;
}

int cmd_anderson(const Opts& o) {
  AndersonOptions ao;
  ao.samples = o.samples;
  ao.master_seed = o.seed;
  ao.workers = o.workers;
  if (!o.n_sweep.empty()) ao.convergence_ns = parse_longs(o.n_sweep);
  const AndersonReport report = anderson_check(parse_point(o.q1)[0], parse_point(o.q2)[0],
                                               o.t, o.n, parse_bins(o.bins), ao);
  const std::string echo = "anderson q1=" + o.q1 + " q2=" + o.q2 + " n=" +
                           std::to_string(o.n) + " bins=" + o.bins + sweep_token(o);
  if (o.format == "csv") {
    std::ostringstream text;
    write_anderson_csv(text, report, echo);
    emit(o.out, text.str());
  } else {
    emit(o.out, anderson_report_json(report, echo));
  }
  return report.pass ? 0 : 2;
}

int cmd_accept(const Opts& o) {
  AcceptanceOptions ao;
  ao.workers = o.accept_workers;
  const std::vector<CriterionResult> results = run_acceptance_suite(ao);
  std::ostringstream text;
  bool all = true;
  for (const CriterionResult& r : results) {
    text << format_criterion_line(r) << "\n";
    all = all && r.pass;
  }
  text << (all ? "all criteria passed" : "criteria FAILED") << "\n";
  std::cout << text.str();
  if (!o.out.empty()) emit(o.out, text.str());
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  Opts o;
  CLI::App app{"random-walk heat kernel toolkit"};
  app.require_subcommand(1);

  CLI::App* walk = app.add_subcommand("walk", "path sampling");
  walk->require_subcommand(1);
  CLI::App* walk_sample = walk->add_subcommand("sample", "sample one walk path as CSV");
  add_common(walk_sample, o);
  walk_sample->add_option("--q1", o.q1, "start point (comma-separated coords)");

  CLI::App* kernel = app.add_subcommand("kernel", "kernel estimation and checks");
  kernel->require_subcommand(1);
  CLI::App* bridge = kernel->add_subcommand("bridge", "pinned-bridge estimate on the line");
  add_common(bridge, o, false);
  bridge->add_option("--q1", o.q1, "start coordinate");
  bridge->add_option("--q2", o.q2, "end coordinate");
  bridge->add_option("--n-sweep", o.n_sweep, "comma list of n for a convergence table");
  bridge->add_flag("--snap", o.snap, "snap q2 to the nearest reachable lattice value");

  CLI::App* binned = kernel->add_subcommand("binned", "endpoint-binned estimate");
  add_common(binned, o);
  binned->add_option("--q1", o.q1, "start point");
  binned->add_option("--q2", o.q2, "target point");
  binned->add_option("--n-sweep", o.n_sweep, "comma list of n for a convergence table");
  binned->add_option("--bin-radius", o.bin_radius, "geodesic bin radius");
  binned->add_flag("--snap", o.snap, "snap q2 to the nearest reachable lattice value");

  CLI::App* semigroup = kernel->add_subcommand("semigroup", "semigroup applied to an observable");
  add_common(semigroup, o);
  semigroup->add_option("--q1", o.q1, "start point");
  semigroup->add_option("--f", o.func, "observable: one|coord|cos");

  CLI::App* verify = kernel->add_subcommand("verify", "kernel axioms for the closed forms");
  add_common(verify, o);
  verify->add_option("--t2", o.t2, "second time for the composition identity");
  verify->add_option("--tol", o.tol, "acceptance tolerance");
  verify->add_option("--quad-points", o.quad_points, "quadrature points");
  verify->add_option("--quad-lo", o.quad_lo, "line quadrature lower bound");
  verify->add_option("--quad-hi", o.quad_hi, "line quadrature upper bound");

  CLI::App* oracle = app.add_subcommand("oracle", "reference kernels");
  oracle->require_subcommand(1);
  CLI::App* oracle_eval = oracle->add_subcommand("eval", "evaluate a reference kernel");
  add_common(oracle_eval, o, false);
  oracle_eval->add_option("--oracle", o.oracle, "free|circle|sphere|spectral|trotter");
  oracle_eval->add_option("--q1", o.q1, "first coordinate");
  oracle_eval->add_option("--q2", o.q2, "second coordinate");
  oracle_eval->add_option("--radius", o.radius, "circle/sphere radius");
  oracle_eval->add_option("--a", o.a, "grid lower bound");
  oracle_eval->add_option("--b", o.b, "grid upper bound");
  oracle_eval->add_flag("--periodic", o.periodic, "periodic grid");
  oracle_eval->add_option("--grid-size", o.grid_size, "grid points");
  oracle_eval->add_option("--slices", o.slices, "splitting slices (trotter)");

  CLI::App* cylinder = app.add_subcommand("cylinder", "bridge cylinder-set quadrature");
  add_common(cylinder, o, false);
  cylinder->add_option("--q1", o.q1, "start coordinate");
  cylinder->add_option("--q2", o.q2, "end coordinate");
  cylinder->add_option("--bins", o.bins, "time:lo,hi[,lo,hi];... interior constraints")
      ->required();
  cylinder->add_option("--tol", o.cyl_tol, "absolute quadrature tolerance");

  CLI::App* anderson = app.add_subcommand("anderson", "walk measure vs cylinder quadrature");
  add_common(anderson, o, false);
  anderson->add_option("--q1", o.q1, "start coordinate");
  anderson->add_option("--q2", o.q2, "end coordinate");
  anderson->add_option("--bins", o.bins, "time:lo,hi[,lo,hi];... constraints")->required();
  anderson->add_option("--n-sweep", o.n_sweep, "extra Monte Carlo rows");

  CLI::App* hfs = app.add_subcommand("hfs", "hereditarily finite sets");
  hfs->require_subcommand(1);
  CLI::App* hfs_nat = hfs->add_subcommand("nat", "render the k-th natural");
  hfs_nat->add_option("k", o.arg1, "natural number index")->required();
  CLI::App* hfs_cps = hfs->add_subcommand("cps", "render the depth-k cumulative power set");
  hfs_cps->add_option("k", o.arg1, "depth")->required();
  CLI::App* hfs_add = hfs->add_subcommand("add", "natural addition");
  hfs_add->add_option("a", o.arg1, "first operand (digits or braces)")->required();
  hfs_add->add_option("b", o.arg2, "second operand")->required();
  CLI::App* hfs_ord = hfs->add_subcommand("ord", "ordinal predicate");
  hfs_ord->add_option("s", o.arg1, "set literal")->required();
  CLI::App* hfs_parse = hfs->add_subcommand("parse", "canonicalize a set literal");
  hfs_parse->add_option("s", o.arg1, "set literal")->required();

  CLI::App* accept = app.add_subcommand("accept", "run the acceptance suite");
  accept->add_option("--workers", o.accept_workers, "worker threads");
  accept->add_option("--out", o.out, "also write the summary to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (walk_sample->parsed()) return cmd_walk_sample(o);
    if (bridge->parsed()) return cmd_kernel_bridge(o);
    if (binned->parsed()) return cmd_kernel_binned(o);
    if (semigroup->parsed()) return cmd_kernel_semigroup(o);
    if (verify->parsed()) return cmd_kernel_verify(o);
    if (oracle_eval->parsed()) return cmd_oracle_eval(o);
    if (cylinder->parsed()) return cmd_cylinder(o);
    if (anderson->parsed()) return cmd_anderson(o);
    if (hfs_nat->parsed()) {
      std::cout << render(von_neumann_natural(std::stoi(o.arg1))) << "\n";
      return 0;
    }
    if (hfs_cps->parsed()) {
      std::cout << render(cumulative_power_set(HFSet(), std::stoi(o.arg1))) << "\n";
      return 0;
    }
    if (hfs_add->parsed()) {
      std::cout << render(nat_add(hfs_operand(o.arg1), hfs_operand(o.arg2))) << "\n";
      return 0;
    }
    if (hfs_ord->parsed()) {
      std::cout << (is_ordinal(hfs_operand(o.arg1)) ? "true" : "false") << "\n";
      return 0;
    }
    if (hfs_parse->parsed()) {
      std::cout << render(parse(o.arg1)) << "\n";
      return 0;
    }
    if (accept->parsed()) return cmd_accept(o);
  } catch (const ReachabilityError& e) {
    std::cerr << "error: " << e.what() << " (nearest reachable: " << e.nearest_below << ", "
              << e.nearest_above << "; rerun with --snap)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
