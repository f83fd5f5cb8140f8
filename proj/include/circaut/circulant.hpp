#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circaut/zmod.hpp"

namespace circaut {

using Vertex = int;

/// Generating data of Circ(n; S). Elements are sorted, distinct and in
/// [1, n-1]; undirected sets are closed under negation.
class ConnectionSet {
 public:
  /// Validates and canonicalizes. Throws InvalidInput on 0, out-of-range
  /// elements, duplicates, an empty set, n < 2, or (undirected) a set that
  /// is not inverse-closed.
  ConnectionSet(Residue n, std::vector<Residue> elements, Mode mode);

  /// Same as the constructor, but first adds n - s for every s when the
  /// mode is undirected.
  static ConnectionSet closed_under_inverse(Residue n, std::vector<Residue> elements,
                                            Mode mode);

  Residue n() const { return n_; }
  const std::vector<Residue>& elements() const { return elements_; }
  Mode mode() const { return mode_; }
  bool contains(Residue s) const;

  /// `n:s1,s2,...:d|u`
  std::string to_string() const;

  bool operator==(const ConnectionSet&) const = default;

 private:
  Residue n_;
  std::vector<Residue> elements_;
  Mode mode_;
};

/// Parses `n:s1,s2,...` with an optional `:d` or `:u` suffix (default
/// directed). Whitespace is ignored and elements may come in any order.
/// With close_inverse the undirected set is completed under negation.
ConnectionSet parse_instance(std::string_view text, bool close_inverse = false);

char mode_letter(Mode mode);

/// Directed: one arc (tail, tail + generator). Undirected: an edge stored
/// as (min, max) with every generator in S that produces it (s and n - s).
struct Arc {
  Vertex tail;
  Vertex head;
  std::vector<Residue> generators;

  bool operator==(const Arc&) const = default;
};

class CirculantGraph {
 public:
  CirculantGraph(ConnectionSet cs);

  const ConnectionSet& connection_set() const { return cs_; }
  int n() const { return n_; }
  Mode mode() const { return cs_.mode(); }
  bool directed() const { return cs_.mode() == Mode::Directed; }

  /// Sorted by (tail, head); arc ids are indices into this vector.
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Id of the arc u -> v (directed) or edge {u, v} (undirected), or -1.
  int arc_id(Vertex u, Vertex v) const {
    return ids_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool adjacent(Vertex u, Vertex v) const { return arc_id(u, v) >= 0; }

  /// Successors of v in ascending generator order (neighbors when undirected).
  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
  /// Predecessors of v in ascending generator order (neighbors when undirected).
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }

 private:
  ConnectionSet cs_;
  int n_;
  std::vector<Arc> arcs_;
  std::vector<int> ids_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

CirculantGraph build(Residue n, std::vector<Residue> elements, Mode mode);

/// <S> = Z_n, i.e. gcd(n, S) = 1.
bool is_connected(const CirculantGraph& graph);

/// Weak reachability of every vertex from 0 by BFS.
bool is_connected_bfs(const CirculantGraph& graph);

enum class PartitionKind { B, C };

char kind_letter(PartitionKind kind);

struct Part {
  std::vector<int> arcs;  // sorted arc ids
  std::vector<Residue> generators;
  std::optional<Residue> coset_rep;  // least element of the coset of <s> (kind C)

  /// Parts are identified by their arc sets alone.
  bool operator==(const Part& other) const { return arcs == other.arcs; }
};

class ArcPartition {
 public:
  ArcPartition(PartitionKind kind, std::vector<Part> parts,
               std::vector<std::pair<Vertex, Vertex>> endpoints);

  PartitionKind kind() const { return kind_; }
  const std::vector<Part>& parts() const { return parts_; }
  int part_of(int arc) const { return part_of_[arc]; }
  /// (tail, head) of every arc of the underlying graph, by arc id.
  const std::vector<std::pair<Vertex, Vertex>>& endpoints() const { return endpoints_; }

 private:
  PartitionKind kind_;
  std::vector<Part> parts_;
  std::vector<int> part_of_;
  std::vector<std::pair<Vertex, Vertex>> endpoints_;
};

/// True iff `partition` was built over exactly the arcs of `graph`.
bool belongs_to(const ArcPartition& partition, const CirculantGraph& graph);

ArcPartition partition_B(const CirculantGraph& graph);
ArcPartition partition_C(const CirculantGraph& graph);
ArcPartition make_partition(const CirculantGraph& graph, PartitionKind kind);

/// True iff every part of `fine` lies inside some part of `coarse`.
/// Throws InvalidInput when the two partitions cover different arc sets.
bool refines(const ArcPartition& fine, const ArcPartition& coarse);

}  // namespace circaut
