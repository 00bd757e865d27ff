#include "domchrom/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "domchrom/error.hpp"

namespace domchrom {

namespace {

bool skip_line(const std::string& line)
{
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    return in;
}

} // namespace

OrientedTree read_tree(std::istream& in)
{
    std::string line;
    std::optional<int> n;
    std::vector<Arc> arcs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line))
            continue;
        std::istringstream fields(line);
        if (!n) {
            std::string tag;
            int count = 0;
            if (!(fields >> tag >> count) || tag != "n")
                throw Error(ErrorKind::ParseError,
                            "line " + std::to_string(lineno) + ": expected 'n <count>'");
            n = count;
        } else {
            Arc a;
            if (!(fields >> a.tail >> a.head))
                throw Error(ErrorKind::ParseError,
                            "line " + std::to_string(lineno) + ": expected '<tail> <head>'");
            arcs.push_back(a);
        }
        std::string extra;
        if (fields >> extra)
            throw Error(ErrorKind::ParseError,
                        "line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    }
    if (!n)
        throw Error(ErrorKind::ParseError, "missing 'n <count>' header");
    return OrientedTree::build(*n, arcs);
}

OrientedTree read_tree_file(const std::string& path)
{
    auto in = open(path);
    return read_tree(in);
}

void write_tree(std::ostream& out, const OrientedTree& t)
{
    out << "n " << t.size() << '\n';
    for (const Arc& a : t.arcs())
        out << a.tail << ' ' << a.head << '\n';
}

Coloring read_coloring(std::istream& in, int n)
{
    std::map<int, int> colors;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line))
            continue;
        std::istringstream fields(line);
        int v = 0, c = 0;
        std::string extra;
        if (!(fields >> v >> c) || (fields >> extra))
            throw Error(ErrorKind::ParseError,
                        "line " + std::to_string(lineno) + ": expected '<vertex> <color>'");
        if (v < 0 || v >= n)
            throw Error(ErrorKind::BadVertexId, "vertex " + std::to_string(v));
        if (c < 1)
            throw Error(ErrorKind::ParseError, "colors are 1-based, got " + std::to_string(c));
        if (!colors.emplace(v, c).second)
            throw Error(ErrorKind::ParseError, "vertex " + std::to_string(v) + " colored twice");
    }
    if (static_cast<int>(colors.size()) != n)
        throw Error(ErrorKind::SizeMismatch, "coloring covers " + std::to_string(colors.size()) +
                                                 " of " + std::to_string(n) + " vertices");
    std::vector<int> labels;
    labels.reserve(n);
    for (auto [v, c] : colors)
        labels.push_back(c);
    return Coloring::from_labels(labels);
}

Coloring read_coloring_file(const std::string& path, int n)
{
    auto in = open(path);
    return read_coloring(in, n);
}

void write_coloring(std::ostream& out, const Coloring& c)
{
    for (Vertex v = 0; v < c.size(); ++v)
        out << v << ' ' << c[v] << '\n';
}

std::string to_dot(const OrientedTree& t, const Coloring* coloring)
{
    std::ostringstream out;
    out << "digraph T {\n";
    for (Vertex v = 0; v < t.size(); ++v) {
        out << "  " << v << " [label=\"" << (coloring ? (*coloring)[v] : v) << "\"];\n";
    }
    for (const Arc& a : t.arcs())
        out << "  " << a.tail << " -> " << a.head << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json to_json(const DominatorCertificate& cert)
{
    nlohmann::json witness = nlohmann::json::array();
    for (const Witness& w : cert.witness) {
        if (w.kind == Witness::Kind::SinkExempt)
            witness.push_back("sink");
        else
            witness.push_back(w.color);
    }
    return {{"colors", std::vector<int>(cert.coloring.colors().begin(),
                                        cert.coloring.colors().end())},
            {"witness", witness}};
}

DominatorCertificate certificate_from_json(const nlohmann::json& j)
{
    DominatorCertificate cert;
    const auto labels = j.at("colors").get<std::vector<int>>();
    cert.coloring = Coloring::from_labels(labels);
    for (const auto& w : j.at("witness")) {
        if (w.is_string())
            cert.witness.push_back({Witness::Kind::SinkExempt, 0});
        else
            cert.witness.push_back({Witness::Kind::DominatedClass, w.get<int>()});
    }
    return cert;
}

nlohmann::json to_json(const Violation& v)
{
    if (v.kind == Violation::Kind::ImproperEdge)
        return {{"kind", "ImproperEdge"}, {"tail", v.arc.tail}, {"head", v.arc.head}};
    return {{"kind", "NoDominatedClass"}, {"vertex", v.vertex}};
}

} // namespace domchrom
