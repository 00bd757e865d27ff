#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "domchrom/coloring.hpp"
#include "domchrom/tree.hpp"

namespace domchrom {

// Tree file: "n <count>" then one "<tail> <head>" line per arc; lines
// starting with '#' are comments. Throws ParseError or any build error.
OrientedTree read_tree(std::istream& in);
OrientedTree read_tree_file(const std::string& path);
void write_tree(std::ostream& out, const OrientedTree& t);

// Coloring file: one "<vertex> <color>" line per vertex, colors >= 1.
// Throws ParseError or SizeMismatch when a vertex is missing.
Coloring read_coloring(std::istream& in, int n);
Coloring read_coloring_file(const std::string& path, int n);
void write_coloring(std::ostream& out, const Coloring& c);

// digraph with the color id as each node's label (vertex id when uncolored).
std::string to_dot(const OrientedTree& t, const Coloring* coloring = nullptr);

nlohmann::json to_json(const DominatorCertificate& cert);
DominatorCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Violation& v);

} // namespace domchrom
