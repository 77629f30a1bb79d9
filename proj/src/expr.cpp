#include "wdom/expr.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wdom {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("graph expression error at offset " + std::to_string(pos) + ": " + what +
                                    " in \"" + text + "\"");
    }

    bool eat(char c) {
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string ident() {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        if (pos == start) fail("expected a graph constructor name");
        return text.substr(start, pos - start);
    }

    int integer() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoi(text.substr(start, pos - start));
    }

    Graph expr() {
        std::string name = ident();
        if (name == "fig1") return figure1_graph();
        if (name == "fig2_1") return figure2_graph(1);
        if (name == "fig2_2") return figure2_graph(2);
        if (name == "fig2_3") return figure2_graph(3);
        if (name == "union" || name == "lex") {
            if (!eat('(')) fail("expected '('");
            Graph a = expr();
            if (!eat(',')) fail("expected ','");
            Graph b = expr();
            if (!eat(')')) fail("expected ')'");
            return name == "union" ? disjoint_union(a, b) : lexicographic_product(a, b);
        }
        if (!eat(':')) fail("expected ':' after '" + name + "'");
        if (name == "file") {
            std::size_t start = pos;
            int depth = 0;
            while (pos < text.size() && !(depth == 0 && (text[pos] == ',' || text[pos] == ')'))) {
                if (text[pos] == '(') ++depth;
                if (text[pos] == ')') --depth;
                ++pos;
            }
            return read_edge_list_file(text.substr(start, pos - start));
        }
        if (name == "path") return path_graph(integer());
        if (name == "cycle") return cycle_graph(integer());
        if (name == "complete") return complete_graph(integer());
        if (name == "star") return star_graph(integer());
        if (name == "kbip") {
            int a = integer();
            if (!eat(',')) fail("expected ',' between kbip sizes");
            int b = integer();
            return complete_bipartite_graph(a, b);
        }
        fail("unknown constructor '" + name + "'");
    }
};

}  // namespace

Graph parse_graph_expression(const std::string& text) {
    Parser p{text};
    Graph g = p.expr();
    if (p.pos != text.size()) p.fail("trailing input");
    return g;
}

std::optional<std::pair<Graph, Graph>> parse_product_expression(const std::string& text) {
    if (text.rfind("lex(", 0) != 0 || text.empty() || text.back() != ')') return std::nullopt;
    Parser p{text};
    p.pos = 4;
    Graph a = p.expr();
    if (!p.eat(',')) p.fail("expected ','");
    Graph b = p.expr();
    if (!p.eat(')') || p.pos != text.size()) return std::nullopt;
    return std::make_pair(std::move(a), std::move(b));
}

Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(std::max(m, 0)));
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated after " + std::to_string(i) + " edges");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace wdom
