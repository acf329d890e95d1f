#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p3pack/decomposition.hpp"
#include "p3pack/graph.hpp"
#include "p3pack/oracle.hpp"

namespace p3pack {

/// Raised when a structural guarantee the algorithms rely on fails at run
/// time; it indicates an implementation bug (or a falsified theorem) and is
/// surfaced loudly rather than degraded.
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Result of the ear-assembly procedure on a 2-connected graph: a longest
/// base cycle and a maximal sequence of longest attachable ears (paths with
/// at least two edges meeting the current subgraph exactly at their ends).
struct EarAssembly {
  std::vector<VertexId> base_cycle;
  std::vector<std::vector<VertexId>> ears;  // endpoint-to-endpoint
  Graph frame;                              // the union of cycle and ears

  int r() const { return static_cast<int>(ears.size()); }
};

/// Ear assembly by exact longest-cycle / longest-ear search. With an anchor
/// edge, the base cycle is the longest cycle containing the anchor or having
/// it as a chord. Requires a 2-connected input.
EarAssembly ear_assembly(const Graph& g, std::optional<Edge> anchor = std::nullopt);

/// The frame of a 2-connected claw-free non-cycle graph together with the
/// unique matching M that restores claw-freeness at maximum degree three.
struct ClawFreeFrame {
  EarAssembly assembly;
  std::vector<Edge> matching;
  Graph frame_c;  // frame ∪ matching
};

ClawFreeFrame clawfree_frame(const Graph& g);

/// Maximum packing (⌊v/3⌋ paths) of a 2-connected claw-free graph. The
/// uncovered remainder is one vertex (v ≡ 1) or two adjacent vertices
/// (v ≡ 2). Structural invariants are re-checked at every recursion step.
Packing pack_two_connected(const Graph& g);

/// Maximum packing (⌊v/3⌋ paths) of a connected claw-free graph with at
/// most two end-blocks.
Packing pack_chain(const Graph& g);

/// Trims an end-chain C with boundary b down to ⌊C⌋ (vertex count divisible
/// by three) and returns ⌊C⌋'s vertex set with a path factor of it. For
/// v(C) ≡ 2 mod 3 the removed companion edge is found by trying edges at b.
struct TrimResult {
  std::set<VertexId> removed;  // V(⌊C⌋)
  Packing factor;
  bool oracle_assisted = false;
};
TrimResult trim_end_chain(const Graph& chain, VertexId boundary,
                          const OracleLimits& lim = {});

/// One trimming step of the reduction and the overall trace.
struct ReductionStep {
  std::set<VertexId> removed;
  Packing factor;
  bool oracle_assisted = false;
};

enum class ResidualKind { chain, cactus };

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Graph residual;
  ResidualKind kind = ResidualKind::chain;

  int trimmed_paths() const {
    int s = 0;
    for (const auto& st : steps) s += st.factor.size();
    return s;
  }
};

/// Repeatedly trims end-chains with at least three vertices until the
/// residual is a chain or a cactus.
ReductionTrace reduce(const Graph& g, const OracleLimits& lim = {});

/// Certificate accompanying a pack_clawfree result.
struct PackCertificate {
  int size = 0;
  int floor_v3 = 0;        // ⌊v/3⌋ ceiling
  int lower_bound = 0;     // ⌊(v - eb + 2)/3⌋ when eb >= 2, else ⌊v/3⌋
  bool exact = false;      // guaranteed maximum
  bool oracle_assisted = false;
  ResidualKind residual = ResidualKind::chain;
  std::string method;
};

/// Packs a connected claw-free graph: reduction, then an exact chain finish
/// or a cactus finish (exact within the oracle cap, certified lower bound
/// beyond it).
std::pair<Packing, PackCertificate> pack_clawfree(const Graph& g,
                                                  const OracleLimits& lim = {});

/// Complete spanning-factor finder for connected claw-free graphs with
/// v ≡ 0 mod 3: constructive path first, oracle backstop within the cap.
std::optional<Packing> clawfree_factor(const Graph& g, const OracleLimits& lim = {});

/// Splits a cycle (given in cyclic order) into consecutive vertex triples
/// starting at offset; the leftover (< 3 vertices) is dropped.
Packing split_cycle(const std::vector<VertexId>& cycle, int offset = 0);

/// Consecutive triples along a path sequence, from the front.
Packing split_path_sequence(const std::vector<VertexId>& path);

}  // namespace p3pack
