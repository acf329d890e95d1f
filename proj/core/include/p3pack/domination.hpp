#pragma once

#include <optional>
#include <set>
#include <vector>

#include "p3pack/graph.hpp"
#include "p3pack/oracle.hpp"

namespace p3pack {

/// Spanning forest of stars K_{1,s} (s >= 0). Centers dominate the host.
struct StarFactor {
  struct Star {
    VertexId center;
    std::set<VertexId> leaves;
  };
  std::vector<Star> stars;

  int components() const { return static_cast<int>(stars.size()); }
  std::set<VertexId> centers() const;
};

/// Extends a path packing to a spanning star factor: each 3-vertex path
/// becomes a star centered at its middle vertex; uncovered vertices attach
/// to an adjacent center when possible and become centers otherwise.
StarFactor packing_to_star_factor(const Graph& g, const Packing& p);

/// Validated star factor: spans, stars are stars, centers dominate.
std::optional<std::string> validate_star_factor(const Graph& g, const StarFactor& f);

struct GammaBoundsReport {
  int gamma = 0;
  int gamma_independent = 0;
  int ceil_v3 = 0;
  int floor_v3 = 0;
  bool is_cycle = false;
  bool bound_holds = false;       // gamma <= ceil(v/3)
  bool equality_holds = false;    // gamma == gamma_i
  bool strict_bound_applies = false;  // not a cycle and v = 1 mod 3
  bool strict_bound_holds = false;    // gamma <= floor(v/3) when it applies
};

/// Exact domination checks for a 2-connected claw-free graph.
GammaBoundsReport check_gamma_bounds(const Graph& g, const OracleLimits& lim = {});

struct HamClawReport {
  bool hypotheses_ok = false;
  bool found = false;
  VertexId claw_center = -1;
  std::array<VertexId, 3> claw_leaves{};
  std::string detail;
};

/// Cubic Hamiltonian graph with v = 1 mod 3 and a caller-certified
/// Hamiltonian cycle: finds a claw whose removal leaves a spanning path
/// factor.
HamClawReport check_ham_claw(const Graph& g, const std::vector<VertexId>& cycle,
                             const OracleLimits& lim = {});

/// Arithmetic replay of the domination counterexample family: order 20k,
/// domination number (1/3 + 1/60) of the order, packing number at most
/// (13/40) of the order via gamma <= v - 2*lambda.
struct ReedArithmetic {
  long order;
  long gamma;
  long lambda_upper;   // (order - gamma) / 2
  bool matches_13_40;  // lambda_upper * 40 == 13 * order
};
ReedArithmetic reed_counterexample_arithmetic(long k);

}  // namespace p3pack
