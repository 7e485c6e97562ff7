#pragma once

// Internal composite Gauss-Legendre helpers shared by the oracle and
// verification code. Not installed.

#include <vector>

namespace fkwalk::detail {

// 16-point Gauss-Legendre rule on [-1, 1], positive half (mirror for the rest).
constexpr double kGl16Node[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double kGl16Weight[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

inline void gl16_composite(double a, double b, int segments, std::vector<double>& xs,
                           std::vector<double>& ws) {
  const double h = (b - a) / segments;
  for (int s = 0; s < segments; ++s) {
    const double mid = a + (s + 0.5) * h;
    const double half = 0.5 * h;
    for (int i = 0; i < 8; ++i) {
      xs.push_back(mid - half * kGl16Node[i]);
      ws.push_back(half * kGl16Weight[i]);
      xs.push_back(mid + half * kGl16Node[i]);
      ws.push_back(half * kGl16Weight[i]);
    }
  }
}

}  // namespace fkwalk::detail
