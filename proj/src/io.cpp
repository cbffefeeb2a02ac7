#include "gcomm/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gcomm {

namespace {

[[noreturn]] void bad_line(std::size_t line_no, const std::string& why) {
    throw std::runtime_error("parse error at line " + std::to_string(line_no) + ": " + why);
}

struct LineScanner {
    std::istream& is;
    std::size_t line_no = 0;

    std::istringstream next_line() {
        std::string line;
        if (!std::getline(is, line)) bad_line(line_no + 1, "unexpected end of file");
        ++line_no;
        return std::istringstream(line);
    }
};

std::pair<std::size_t, std::size_t> read_header(LineScanner& sc) {
    auto ls = sc.next_line();
    long long n = -1, m = -1;
    if (!(ls >> n >> m) || n < 0 || m < 0) bad_line(sc.line_no, "expected header \"n m\"");
    std::string rest;
    if (ls >> rest) bad_line(sc.line_no, "trailing tokens after header");
    return {static_cast<std::size_t>(n), static_cast<std::size_t>(m)};
}

template <typename OnRow>
void read_rows(LineScanner& sc, std::size_t m, bool want_tag, OnRow&& on_row) {
    for (std::size_t i = 0; i < m; ++i) {
        auto ls = sc.next_line();
        long long u = -1, v = -1;
        std::string tag;
        if (!(ls >> u >> v) || u < 0 || v < 0) bad_line(sc.line_no, "expected \"u v\"");
        if (want_tag) {
            if (!(ls >> tag)) bad_line(sc.line_no, "expected ownership tag A|B|AB");
            if (tag != "A" && tag != "B" && tag != "AB") bad_line(sc.line_no, "bad ownership tag \"" + tag + "\"");
        }
        std::string rest;
        if (ls >> rest) bad_line(sc.line_no, "trailing tokens");
        on_row(static_cast<Vertex>(u), static_cast<Vertex>(v), tag, sc.line_no);
    }
}

void require_ascending(const Arc& prev, const Arc& cur, bool have_prev, std::size_t line_no) {
    if (have_prev && !(prev < cur)) bad_line(line_no, "rows not in ascending order (or duplicate)");
}

}  // namespace

void write_graph(std::ostream& os, const Graph& g) {
    os << g.n_vertices() << ' ' << g.n_edges() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

void write_digraph(std::ostream& os, const DiGraph& d) {
    os << d.n_vertices() << ' ' << d.n_arcs() << '\n';
    for (const auto& [u, v] : d.arcs()) os << u << ' ' << v << '\n';
}

namespace {

template <typename SetT>
std::map<typename SetT::value_type, std::string> ownership(const SetT& a, const SetT& b) {
    std::map<typename SetT::value_type, std::string> rows;
    for (const auto& e : a) rows[e] = "A";
    for (const auto& e : b) {
        auto it = rows.find(e);
        if (it == rows.end()) rows[e] = "B";
        else it->second = "AB";
    }
    return rows;
}

}  // namespace

void write_partition(std::ostream& os, const EdgePartition& p) {
    const auto rows = ownership(p.edges_a(), p.edges_b());
    os << p.n_vertices() << ' ' << rows.size() << '\n';
    for (const auto& [e, tag] : rows) os << e.first << ' ' << e.second << ' ' << tag << '\n';
}

void write_arc_partition(std::ostream& os, const ArcPartition& p) {
    const auto rows = ownership(p.arcs_a(), p.arcs_b());
    os << p.n_vertices() << ' ' << rows.size() << '\n';
    for (const auto& [a, tag] : rows) os << a.first << ' ' << a.second << ' ' << tag << '\n';
}

Graph read_graph(std::istream& is) {
    LineScanner sc{is};
    auto [n, m] = read_header(sc);
    Graph g(n);
    Arc prev{};
    bool have_prev = false;
    read_rows(sc, m, false, [&](Vertex u, Vertex v, const std::string&, std::size_t line_no) {
        if (u >= v) bad_line(line_no, "undirected edge must satisfy u < v");
        if (v >= n) bad_line(line_no, "endpoint out of range");
        require_ascending(prev, {u, v}, have_prev, line_no);
        prev = {u, v};
        have_prev = true;
        g.add_edge(u, v);
    });
    return g;
}

DiGraph read_digraph(std::istream& is) {
    LineScanner sc{is};
    auto [n, m] = read_header(sc);
    DiGraph d(n);
    Arc prev{};
    bool have_prev = false;
    read_rows(sc, m, false, [&](Vertex u, Vertex v, const std::string&, std::size_t line_no) {
        if (u >= n || v >= n) bad_line(line_no, "endpoint out of range");
        require_ascending(prev, {u, v}, have_prev, line_no);
        prev = {u, v};
        have_prev = true;
        d.add_arc(u, v);
    });
    return d;
}

EdgePartition read_partition(std::istream& is) {
    LineScanner sc{is};
    auto [n, m] = read_header(sc);
    EdgeSet a, b;
    Arc prev{};
    bool have_prev = false;
    read_rows(sc, m, true, [&](Vertex u, Vertex v, const std::string& tag, std::size_t line_no) {
        if (u >= v) bad_line(line_no, "undirected edge must satisfy u < v");
        if (v >= n) bad_line(line_no, "endpoint out of range");
        require_ascending(prev, {u, v}, have_prev, line_no);
        prev = {u, v};
        have_prev = true;
        if (tag == "A" || tag == "AB") a.insert({u, v});
        if (tag == "B" || tag == "AB") b.insert({u, v});
    });
    return EdgePartition(n, std::move(a), std::move(b));
}

ArcPartition read_arc_partition(std::istream& is) {
    LineScanner sc{is};
    auto [n, m] = read_header(sc);
    ArcSet a, b;
    Arc prev{};
    bool have_prev = false;
    read_rows(sc, m, true, [&](Vertex u, Vertex v, const std::string& tag, std::size_t line_no) {
        if (u >= n || v >= n) bad_line(line_no, "endpoint out of range");
        require_ascending(prev, {u, v}, have_prev, line_no);
        prev = {u, v};
        have_prev = true;
        if (tag == "A" || tag == "AB") a.insert({u, v});
        if (tag == "B" || tag == "AB") b.insert({u, v});
    });
    return ArcPartition(n, std::move(a), std::move(b));
}

std::string to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

std::string to_string(const EdgePartition& p) {
    std::ostringstream os;
    write_partition(os, p);
    return os.str();
}

namespace {

void save(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << body;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return f;
}

}  // namespace

void save_graph(const std::string& path, const Graph& g) { save(path, to_string(g)); }

void save_digraph(const std::string& path, const DiGraph& d) {
    std::ostringstream os;
    write_digraph(os, d);
    save(path, os.str());
}

void save_partition(const std::string& path, const EdgePartition& p) { save(path, to_string(p)); }

void save_arc_partition(const std::string& path, const ArcPartition& p) {
    std::ostringstream os;
    write_arc_partition(os, p);
    save(path, os.str());
}

Graph load_graph(const std::string& path) {
    auto f = open_in(path);
    return read_graph(f);
}

DiGraph load_digraph(const std::string& path) {
    auto f = open_in(path);
    return read_digraph(f);
}

EdgePartition load_partition(const std::string& path) {
    auto f = open_in(path);
    return read_partition(f);
}

ArcPartition load_arc_partition(const std::string& path) {
    auto f = open_in(path);
    return read_arc_partition(f);
}

namespace {

void write_nodes(std::ostream& os, std::size_t n, const RoleMap& roles) {
    for (Vertex v = 0; v < n; ++v) {
        auto it = roles.find(v);
        if (it != roles.end())
            os << "  " << v << " [label=\"" << it->second << "\"];\n";
        else
            os << "  " << v << ";\n";
    }
}

}  // namespace

void write_dot(std::ostream& os, const Graph& g, const RoleMap& roles) {
    os << "graph G {\n";
    write_nodes(os, g.n_vertices(), roles);
    for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
}

void write_dot(std::ostream& os, const DiGraph& d, const RoleMap& roles) {
    os << "digraph G {\n";
    write_nodes(os, d.n_vertices(), roles);
    for (const auto& [u, v] : d.arcs()) os << "  " << u << " -> " << v << ";\n";
    os << "}\n";
}

void write_dot(std::ostream& os, const EdgePartition& p, const RoleMap& roles) {
    os << "graph G {\n";
    write_nodes(os, p.n_vertices(), roles);
    for (const auto& [e, tag] : ownership(p.edges_a(), p.edges_b()))
        os << "  " << e.first << " -- " << e.second << " [label=\"" << tag << "\"];\n";
    os << "}\n";
}

void write_dot(std::ostream& os, const ArcPartition& p, const RoleMap& roles) {
    os << "digraph G {\n";
    write_nodes(os, p.n_vertices(), roles);
    for (const auto& [a, tag] : ownership(p.arcs_a(), p.arcs_b()))
        os << "  " << a.first << " -> " << a.second << " [label=\"" << tag << "\"];\n";
    os << "}\n";
}

}  // namespace gcomm
