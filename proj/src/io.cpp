#include "vdec/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace vdec {

namespace {

std::vector<std::string> tokens_of(std::istream& in) {
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
    }
    return toks;
}

long long to_int(const std::string& tok) {
    size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (...) {
        fail(Errc::ParseError, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) fail(Errc::ParseError, "expected an integer, got '" + tok + "'");
    return value;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(Errc::ParseError, "cannot write '" + path + "'");
    return out;
}

} // namespace

SimpleGraph read_edge_list(std::istream& in) {
    auto toks = tokens_of(in);
    if (toks.size() < 2) fail(Errc::ParseError, "missing 'p q' header");
    long long p = to_int(toks[0]), q = to_int(toks[1]);
    if (p < 0 || q < 0) fail(Errc::ParseError, "negative header values");
    if (static_cast<long long>(toks.size()) != 2 + 2 * q)
        fail(Errc::ParseError, "expected " + std::to_string(2 * q) + " endpoint tokens, got " +
                                   std::to_string(toks.size() - 2));
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < q; ++i)
        edges.emplace_back(static_cast<int>(to_int(toks[2 + 2 * i])),
                           static_cast<int>(to_int(toks[3 + 2 * i])));
    return SimpleGraph::build(static_cast<int>(p), edges);
}

SimpleGraph read_edge_list_file(const std::string& path) {
    auto in = open_in(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

void write_edge_list_file(const std::string& path, const SimpleGraph& g) {
    auto out = open_out(path);
    write_edge_list(out, g);
}

EdgeColoring read_coloring(std::istream& in) {
    auto toks = tokens_of(in);
    if (toks.size() < 2 || toks[0] != "palette")
        fail(Errc::ParseError, "missing 'palette k' header");
    EdgeColoring c;
    c.palette = static_cast<int>(to_int(toks[1]));
    if ((toks.size() - 2) % 3 != 0) fail(Errc::ParseError, "expected 'u v c' triples");
    for (size_t i = 2; i + 3 <= toks.size(); i += 3) {
        int u = static_cast<int>(to_int(toks[i]));
        int v = static_cast<int>(to_int(toks[i + 1]));
        int color = static_cast<int>(to_int(toks[i + 2]));
        if (u == v) fail(Errc::ParseError, "self loop in coloring");
        if (color < 1) fail(Errc::ParseError, "colors are positive");
        c.assignment[Edge(u, v)] = color;
    }
    return c;
}

EdgeColoring read_coloring_file(const std::string& path) {
    auto in = open_in(path);
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
    out << "palette " << c.palette << "\n";
    for (const auto& [e, color] : c.assignment) out << e.u << " " << e.v << " " << color << "\n";
}

void write_coloring_file(const std::string& path, const EdgeColoring& c) {
    auto out = open_out(path);
    write_coloring(out, c);
}

void write_dot(std::ostream& out, const SimpleGraph& g, const EdgeColoring* c) {
    out << "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (c) out << " [label=\"" << c->at(e) << "\"]";
        out << ";\n";
    }
    out << "}\n";
}

} // namespace vdec
