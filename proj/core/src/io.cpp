#include "fkwalk/io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <sstream>

namespace fkwalk {

namespace {

using nlohmann::json;

std::vector<double> split_params(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ParseError("bad numeric parameter '" + item + "'", pos);
    }
    pos = comma + 1;
  }
  return out;
}

Manifold manifold_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad manifold JSON: ") + e.what(),
                     static_cast<std::size_t>(e.byte));
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "line") return Manifold::euclidean_line();
  if (kind == "euclidean") return Manifold::euclidean_space(j.at("dimension").get<int>());
  if (kind == "circle") return Manifold::circle(j.at("radius").get<double>());
  if (kind == "sphere") return Manifold::sphere2(j.at("radius").get<double>());
  if (kind == "hyperbolic") return Manifold::hyperbolic_plane(j.at("radius").get<double>());
  if (kind == "chart") {
    ChartSpec spec;
    spec.metric_name = j.at("metric").get<std::string>();
    if (j.contains("params")) spec.params = j["params"].get<std::vector<double>>();
    spec.box_lo = j.at("box_lo").get<std::vector<double>>();
    spec.box_hi = j.at("box_hi").get<std::vector<double>>();
    return Manifold::chart(spec);
  }
  throw ParseError("unknown manifold kind '" + kind + "'", 0);
}

// Shortest-roundtrip decimal text; deterministic for a given double.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json manifold_to_json_obj(const Manifold& m) {
  json j;
  switch (m.kind()) {
    case ManifoldKind::EuclideanLine:
      j["kind"] = "line";
      break;
    case ManifoldKind::EuclideanSpace:
      j["kind"] = "euclidean";
      j["dimension"] = m.dimension();
      break;
    case ManifoldKind::Circle:
      j["kind"] = "circle";
      j["radius"] = m.radius();
      break;
    case ManifoldKind::Sphere2:
      j["kind"] = "sphere";
      j["radius"] = m.radius();
      break;
    case ManifoldKind::HyperbolicPlane:
      j["kind"] = "hyperbolic";
      j["radius"] = m.radius();
      break;
    case ManifoldKind::Chart: {
      const ChartSpec& spec = m.chart_spec();
      j["kind"] = "chart";
      j["metric"] = spec.metric_name;
      j["params"] = spec.params;
      j["box_lo"] = spec.box_lo;
      j["box_hi"] = spec.box_hi;
      break;
    }
  }
  return j;
}

json estimate_to_json_obj(const KernelEstimate& est) {
  json j;
  j["value"] = est.value;
  j["std_error"] = est.std_error;
  j["samples"] = est.samples;
  j["method"] = est.method;
  j["t"] = est.grid.horizon;
  j["n"] = est.grid.slices;
  if (est.bin_radius) j["bin_radius"] = *est.bin_radius;
  return j;
}

json with_provenance(json j, const std::string& config_echo) {
  j["library_version"] = kLibraryVersion;
  if (!config_echo.empty()) j["config"] = config_echo;
  return j;
}

}  // namespace

Manifold parse_manifold(const std::string& text) {
  if (!text.empty() && text.front() == '{') return manifold_from_json(text);
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string::npos) params = split_params(text.substr(colon + 1));
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw ParseError("manifold '" + name + "' takes " + std::to_string(k) + " parameter(s)",
                       colon == std::string::npos ? text.size() : colon);
  };
  if (name == "line") {
    need(0);
    return Manifold::euclidean_line();
  }
  if (name == "euclidean") {
    need(1);
    return Manifold::euclidean_space(static_cast<int>(params[0]));
  }
  if (name == "circle") {
    need(1);
    return Manifold::circle(params[0]);
  }
  if (name == "sphere") {
    need(1);
    return Manifold::sphere2(params[0]);
  }
  if (name == "hyperbolic") {
    need(1);
    return Manifold::hyperbolic_plane(params[0]);
  }
  throw ParseError("unknown manifold '" + name + "'", 0);
}

std::string manifold_json(const Manifold& m) { return manifold_to_json_obj(m).dump(); }

Potential parse_potential(const std::string& text, double curvature_coupling) {
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string::npos) params = split_params(text.substr(colon + 1));
  Potential base = Potential::zero();
  if (name == "zero") {
    if (!params.empty()) throw ParseError("zero potential takes no parameters", colon);
  } else if (name == "constant") {
    if (params.size() != 1) throw ParseError("constant potential takes one parameter", colon);
    base = Potential::constant(params[0]);
  } else if (name == "harmonic") {
    if (params.empty()) throw ParseError("harmonic potential needs omega_sq[,center...]", colon);
    Point center(std::vector<double>(params.begin() + 1, params.end()));
    base = Potential::harmonic(params[0], center);
  } else if (name == "well") {
    if (params.size() < 2) throw ParseError("well potential needs depth,width[,center...]", colon);
    Point center(std::vector<double>(params.begin() + 2, params.end()));
    base = Potential::gaussian_well(params[0], params[1], center);
  } else {
    throw ParseError("unknown potential '" + name + "'", 0);
  }
  return base.with_coupling(curvature_coupling);
}

std::string estimate_json(const KernelEstimate& est, const Manifold& m, const Potential& V,
                          const std::string& config_echo) {
  json j = estimate_to_json_obj(est);
  j["manifold"] = manifold_to_json_obj(m);
  j["potential"] = V.describe();
  return with_provenance(std::move(j), config_echo).dump(2) + "\n";
}

std::string property_report_json(const KernelPropertyReport& report, double t1, double t2,
                                 double tolerance, const std::string& config_echo) {
  json j;
  j["t1"] = t1;
  j["t2"] = t2;
  j["tolerance"] = tolerance;
  j["positive"] = report.positive;
  j["normalized"] = report.normalized;
  j["semigroup"] = report.semigroup;
  j["min_value"] = report.min_value;
  j["normalization_residual"] = report.normalization_residual;
  j["semigroup_residual"] = report.semigroup_residual;
  j["pass"] = report.pass();
  return with_provenance(std::move(j), config_echo).dump(2) + "\n";
}

std::string anderson_report_json(const AndersonReport& report, const std::string& config_echo) {
  json j;
  j["p_wiener"] = report.p_wiener;
  j["snap_distance"] = report.snap_distance;
  j["pass_margin"] = report.pass_margin;
  j["pass"] = report.pass;
  auto row = [](const AndersonRow& r) {
    json o;
    o["n"] = r.n;
    o["p_walk"] = r.p_walk;
    o["std_error"] = r.std_error;
    o["discrepancy"] = r.discrepancy;
    o["exact"] = r.exact;
    return o;
  };
  j["main"] = row(report.main);
  j["convergence"] = json::array();
  for (const auto& r : report.convergence) j["convergence"].push_back(row(r));
  return with_provenance(std::move(j), config_echo).dump(2) + "\n";
}

void write_walk_csv(std::ostream& out, const WalkPath& path, SeedSpec seed) {
  json header;
  header["t"] = path.grid.horizon;
  header["n"] = path.grid.slices;
  header["step_length"] = path.step_length;
  header["master_seed"] = seed.master_seed;
  header["sample_index"] = seed.sample_index;
  header["manifold"] = manifold_to_json_obj(path.manifold);
  header["library_version"] = kLibraryVersion;
  out << "# " << header.dump() << "\n";
  out << "k,t_k";
  for (int d = 0; d < path.manifold.dimension(); ++d) out << ",x" << d;
  out << "\n";
  for (std::size_t k = 0; k < path.points.size(); ++k) {
    out << k << "," << fmt(path.grid.time(static_cast<long>(k)));
    for (double c : path.points[k].coords) out << "," << fmt(c);
    out << "\n";
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<long>& ns,
                     const std::vector<KernelEstimate>& estimates,
                     const std::vector<double>& oracle_values,
                     const std::string& config_echo) {
  json header;
  header["library_version"] = kLibraryVersion;
  if (!config_echo.empty()) header["config"] = config_echo;
  out << "# " << header.dump() << "\n";
  out << "n,estimate,std_error,oracle,rel_error\n";
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const double oracle = i < oracle_values.size() ? oracle_values[i]
                                                   : std::numeric_limits<double>::quiet_NaN();
    out << ns[i] << "," << fmt(estimates[i].value) << "," << fmt(estimates[i].std_error) << ","
        << fmt(oracle) << ","
        << fmt(std::isnan(oracle) ? oracle : estimates[i].value / oracle - 1) << "\n";
  }
}

void write_anderson_csv(std::ostream& out, const AndersonReport& report,
                        const std::string& config_echo) {
  json header;
  header["library_version"] = kLibraryVersion;
  header["p_wiener"] = report.p_wiener;
  if (!config_echo.empty()) header["config"] = config_echo;
  out << "# " << header.dump() << "\n";
  out << "n,p_walk,std_error,p_wiener,discrepancy\n";
  auto line = [&](const AndersonRow& r) {
    out << r.n << "," << fmt(r.p_walk) << "," << fmt(r.std_error) << ","
        << fmt(report.p_wiener) << "," << fmt(r.discrepancy) << "\n";
  };
  line(report.main);
  for (const auto& r : report.convergence) line(r);
}

void write_propagator_csv(std::ostream& out, const GridPropagator& prop,
                          const std::string& config_echo) {
  json header;
  header["a"] = prop.a;
  header["b"] = prop.b;
  header["periodic"] = prop.periodic;
  header["t"] = prop.t;
  header["size"] = prop.size;
  header["spacing"] = prop.spacing;
  header["library_version"] = kLibraryVersion;
  if (!config_echo.empty()) header["config"] = config_echo;
  out << "# " << header.dump() << "\n";
  for (std::size_t i = 0; i < prop.size; ++i) {
    for (std::size_t j = 0; j < prop.size; ++j)
      out << (j ? "," : "") << fmt(prop.at(i, j));
    out << "\n";
  }
}

}  // namespace fkwalk
