#pragma once

#include "gcomm/graph.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace gcomm {

using RoleMap = std::map<Vertex, std::string>;

// Edge-list format, bit-exact: line 1 "n m"; then m lines "u v" with u < v,
// ascending lexicographic. Partition files carry a third column A|B|AB
// (AB = held by both). Directed variants list ordered pairs and permit
// self-loops.

void write_graph(std::ostream& os, const Graph& g);
void write_digraph(std::ostream& os, const DiGraph& d);
void write_partition(std::ostream& os, const EdgePartition& p);
void write_arc_partition(std::ostream& os, const ArcPartition& p);

Graph read_graph(std::istream& is);
DiGraph read_digraph(std::istream& is);
EdgePartition read_partition(std::istream& is);
ArcPartition read_arc_partition(std::istream& is);

std::string to_string(const Graph& g);
std::string to_string(const EdgePartition& p);

void save_graph(const std::string& path, const Graph& g);
void save_digraph(const std::string& path, const DiGraph& d);
void save_partition(const std::string& path, const EdgePartition& p);
void save_arc_partition(const std::string& path, const ArcPartition& p);

Graph load_graph(const std::string& path);
DiGraph load_digraph(const std::string& path);
EdgePartition load_partition(const std::string& path);
ArcPartition load_arc_partition(const std::string& path);

// DOT export; role labels become node label attributes, partition ownership
// becomes an edge label.
void write_dot(std::ostream& os, const Graph& g, const RoleMap& roles = {});
void write_dot(std::ostream& os, const DiGraph& d, const RoleMap& roles = {});
void write_dot(std::ostream& os, const EdgePartition& p, const RoleMap& roles = {});
void write_dot(std::ostream& os, const ArcPartition& p, const RoleMap& roles = {});

}  // namespace gcomm
