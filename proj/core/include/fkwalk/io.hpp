#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fkwalk/feynman_kac.hpp"
#include "fkwalk/loeb.hpp"
#include "fkwalk/manifold.hpp"
#include "fkwalk/oracle.hpp"
#include "fkwalk/potential.hpp"
#include "fkwalk/walk.hpp"

namespace fkwalk {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// Accepts a short name with optional colon parameters ("line",
/// "euclidean:3", "circle:1", "sphere:1", "hyperbolic:1.5") or a JSON object
/// ({"kind": "chart", "metric": "half_plane", "params": [1.5],
///   "box_lo": [-3, 0.05], "box_hi": [3, 5]}).
Manifold parse_manifold(const std::string& text);
std::string manifold_json(const Manifold& m);

/// "zero", "constant:0.5", "harmonic:1,0", "well:1,0.5,0"; centers take one
/// coordinate per dimension after the leading parameters.
Potential parse_potential(const std::string& text, double curvature_coupling = 0.0);

/// Result documents. All serialization is deterministic for fixed inputs;
/// run configuration is embedded for provenance.
std::string estimate_json(const KernelEstimate& est, const Manifold& m, const Potential& V,
                          const std::string& config_echo);
std::string property_report_json(const KernelPropertyReport& report, double t1, double t2,
                                 double tolerance, const std::string& config_echo);
std::string anderson_report_json(const AndersonReport& report, const std::string& config_echo);

/// CSV with a leading '#'-prefixed JSON header block.
void write_walk_csv(std::ostream& out, const WalkPath& path, SeedSpec seed);
void write_sweep_csv(std::ostream& out, const std::vector<long>& ns,
                     const std::vector<KernelEstimate>& estimates,
                     const std::vector<double>& oracle_values,
                     const std::string& config_echo);
void write_anderson_csv(std::ostream& out, const AndersonReport& report,
                        const std::string& config_echo);
void write_propagator_csv(std::ostream& out, const GridPropagator& prop,
                          const std::string& config_echo);

}  // namespace fkwalk
