// Numeric loop tracking: vary one coordinate of p around a root of a
// hyperplane form (or of Delta), follow the sixteen tropes / thirty-two
// conics of a node along the loop by nearest-neighbour matching, and read
// off the induced permutation.
#pragma once

#include "quartic/monodromy.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace quartic {

using cplx = std::complex<double>;
using CPoint = std::array<cplx, 5>;

struct TrackOptions {
  int steps = 512;          // per path segment
  int max_steps = 1 << 16;  // doubling stops here
  double ratio = 10.0;      // second-nearest / nearest must exceed this
};

// The loop: leave the base along `approach`, go once round the circle
// |v - center| = rho counter-clockwise, and come back the same way.
struct LoopPath {
  LoopTarget target;
  int coordinate = 0;            // which of A..E varies
  CPoint base{};                 // where the loop starts (after any shift)
  cplx center;
  double rho = 0;
  std::optional<double> printed_bound;
  double clearance = 0;          // distance from center to the nearest other bad value
  std::vector<cplx> approach;    // v0, optional waypoint, center + rho e^{i theta}
  std::optional<double> epsilon; // A-shift applied first when B' = 0
};
LoopPath plan_loop(const SurfaceParams& p, const LoopTarget& target, int node = 1);

struct TrackResult {
  LoopPath path;
  Perm perm;                // on the node's 16 planes or 32 conic labels
  int steps_used = 0;
  bool ok = false;
  std::string error;
  std::optional<SignedGamma> as_gamma;  // if perm is a (signed) Gamma translation
};

// Planes labelled by Gamma mask; conics by 2 mask + (branch < 0), as in conics_for_node.
TrackResult numeric_track_planes(const SurfaceParams& p, const LoopTarget& target, const TrackOptions& opts = {},
                                 int node = 1);
TrackResult numeric_track_conics(const SurfaceParams& p, const LoopTarget& target, const TrackOptions& opts = {},
                                 int node = 1);

// Roots of a polynomial given by its coefficients (constant first).
std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs);

}  // namespace quartic
