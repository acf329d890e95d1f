#pragma once

#include <set>
#include <vector>

#include "p3pack/graph.hpp"

namespace p3pack {

/// A block of a connected graph: maximal subgraph with no cut vertex of its
/// own, i.e. either 2-connected or a single edge ("match").
struct Block {
  std::set<VertexId> vertices;
  bool is_match = false;
  /// Cut vertices of the host graph lying in this block (these are exactly
  /// the block's boundary vertices).
  std::set<VertexId> boundary;
};

/// An end-chain: a maximal pendant chain of blocks hanging off the block
/// tree, together with its unique boundary vertex.
struct EndChain {
  std::set<VertexId> vertices;  // includes the boundary vertex
  VertexId boundary;
  std::vector<int> block_path;  // indices into ChainDecomposition::blocks,
                                // from the end-block inward
};

struct ChainDecomposition {
  std::vector<Block> blocks;
  std::set<VertexId> cut_vertices;
  /// block_tree[b] = cut vertices of block b (same as blocks[b].boundary);
  /// blocks_of_cut[c] = indices of blocks containing cut vertex c.
  std::map<VertexId, std::vector<int>> blocks_of_cut;
  std::vector<int> end_blocks;  // indices of blocks with at most 1 boundary

  int eb() const { return static_cast<int>(end_blocks.size()); }
};

/// Standard DFS lowpoint block decomposition.
/// Requires a connected graph with at least 2 vertices.
ChainDecomposition block_decomposition(const Graph& g);

/// Number of end-blocks; a single vertex counts as 0.
int end_block_count(const Graph& g);

/// The end-chains of g (empty iff eb(g) <= 2). Each is the maximal union of
/// blocks walked inward from an end-block while every block has at most two
/// boundary vertices and every crossed cut vertex lies in exactly two
/// blocks; the boundary vertex is the cut vertex where the walk stopped.
std::vector<EndChain> end_chains(const Graph& g);

/// Connected with at most two end-blocks.
bool is_chain(const Graph& g);
/// Connected, at least three end-blocks, every end-chain a match.
bool is_cactus(const Graph& g);

/// Leaf-stripped core decomposes into edge-2-connected pieces joined
/// consecutively by single bridges.
bool is_edge_chain(const Graph& g);

/// Cut vertices via the block decomposition (empty for 2-connected graphs).
std::set<VertexId> cut_vertices(const Graph& g);

}  // namespace p3pack
