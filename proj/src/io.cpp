#include "subt/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "subt/errors.hpp"

namespace subt {

namespace {

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

TextInstance read_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    long declared_m = -1;
    long seen_edges = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> terminals;

    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n != -1) throw ParseError(lineno, "duplicate 'p' line");
            if (!(ls >> n >> declared_m) || n < 0 || declared_m < 0) {
                throw ParseError(lineno, "expected 'p <n> <m>'");
            }
            continue;
        }
        if (n == -1) throw ParseError(lineno, "'" + tag + "' line before 'p' line");
        if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError(lineno, "edge endpoint out of range 1.." + std::to_string(n));
            }
            if (u == v) {
                throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            }
            edges.emplace_back(u - 1, v - 1);
            ++seen_edges;
            continue;
        }
        if (tag == "t") {
            int v;
            if (!(ls >> v)) throw ParseError(lineno, "expected 't <v>'");
            if (v < 1 || v > n) {
                throw ParseError(lineno, "terminal out of range 1.." + std::to_string(n));
            }
            terminals.push_back(v - 1);
            continue;
        }
        throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
    if (n == -1) throw ParseError(lineno, "missing 'p' line");
    if (seen_edges != declared_m) {
        throw ParseError(lineno, "expected " + std::to_string(declared_m) + " edge lines, saw " +
                                     std::to_string(seen_edges));
    }
    TextInstance out{Graph::from_edges(n, edges), VertexSet(n)};
    for (int t : terminals) out.terminals.insert(t);
    return out;
}

TextInstance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file: " + path);
    return read_instance(in);
}

void write_instance(std::ostream& out, const Graph& g, const VertexSet& terminals) {
    out << "p " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
    terminals.for_each([&out](int v) { out << "t " << (v + 1) << "\n"; });
}

VertexSet read_solution(std::istream& in, int n) {
    VertexSet s(n);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "c") continue;
        int v;
        try {
            v = std::stoi(tok);
        } catch (const std::exception&) {
            throw ParseError(lineno, "expected a vertex id, got '" + tok + "'");
        }
        if (v < 1 || v > n) {
            throw ParseError(lineno, "vertex out of range 1.." + std::to_string(n));
        }
        s.insert(v - 1);
    }
    return s;
}

void write_solution(std::ostream& out, const VertexSet& s) {
    s.for_each([&out](int v) { out << (v + 1) << "\n"; });
}

}  // namespace subt
