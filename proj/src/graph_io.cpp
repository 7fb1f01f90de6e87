#include "signed_spectra/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace signed_spectra {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + (column > 0 ? ", column " + std::to_string(column) : "") +
                         ": " + message),
      line_(line),
      column_(column) {}

std::string to_sg1(const SignedGraph& g) {
    std::ostringstream os;
    os << "sg1 " << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
    return os.str();
}

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_int(const Token& t, int line) {
    int value = 0;
    const auto* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < 0) {
        throw ParseError("expected a non-negative integer, got '" + std::string(t.text) + "'", line, t.column);
    }
    return value;
}

}  // namespace

SignedGraph parse_sg1(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    while (!lines.empty() && split(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError("empty input", 1);

    const auto header = split(lines[0]);
    if (header.size() != 3 || header[0].text != "sg1") throw ParseError("expected header 'sg1 <n> <m>'", 1, 1);
    const int n = parse_int(header[1], 1);
    const int m = parse_int(header[2], 1);
    if (static_cast<int>(lines.size()) - 1 != m) {
        throw ParseError("header declares " + std::to_string(m) + " edges but " +
                             std::to_string(lines.size() - 1) + " edge lines follow",
                         static_cast<int>(lines.size()));
    }

    std::vector<SignedEdge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const auto tokens = split(lines[i]);
        if (tokens.size() != 3) throw ParseError("expected '<u> <v> <+|->'", line_no, 1);
        SignedEdge e{parse_int(tokens[0], line_no), parse_int(tokens[1], line_no), 0};
        if (tokens[2].text == "+") {
            e.sign = 1;
        } else if (tokens[2].text == "-") {
            e.sign = -1;
        } else {
            throw ParseError("invalid sign token '" + std::string(tokens[2].text) + "'", line_no, tokens[2].column);
        }
        if (e.u >= e.v) throw ParseError("edge endpoints must satisfy u < v", line_no, tokens[0].column);
        if (!edges.empty() && !(std::pair{edges.back().u, edges.back().v} < std::pair{e.u, e.v})) {
            throw ParseError("edges must be sorted and distinct", line_no, 1);
        }
        if (e.v >= n) throw ParseError("vertex out of range", line_no, tokens[1].column);
        edges.push_back(e);
    }
    return build(n, std::move(edges));
}

std::string to_graph6(const SimpleGraph& g) {
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3F) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3F) + 63));
        out.push_back(static_cast<char>((n & 0x3F) + 63));
    }
    int acc = 0, bits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

SimpleGraph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string", 1);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < 63 || text[i] > 126) {
            throw ParseError("graph6 character out of range", 1, static_cast<int>(i) + 1);
        }
    }
    std::size_t pos = 0;
    int n = 0;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == '~') throw ParseError("unsupported graph6 order encoding", 1, 1);
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        pos = 4;
    }
    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t need = (pairs + 5) / 6;
    if (text.size() - pos != need) {
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " characters, expected " +
                             std::to_string(need),
                         1, static_cast<int>(pos) + 1);
    }
    SimpleGraph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int chunk = text[pos + k / 6] - 63;
            if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

SignedGraph from_graph6(std::string_view graph6, std::string_view signature) {
    const auto g = parse_graph6(graph6);
    const auto edges = g.edges();
    if (signature.size() != edges.size()) {
        throw ParseError("signature has " + std::to_string(signature.size()) + " entries for " +
                             std::to_string(edges.size()) + " edges",
                         1);
    }
    std::vector<SignedEdge> signed_edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const char c = signature[i];
        int sign = 0;
        if (c == '+' || c == '0') sign = 1;
        if (c == '-' || c == '1') sign = -1;
        if (sign == 0) throw ParseError("invalid signature character", 1, static_cast<int>(i) + 1);
        signed_edges.push_back({edges[i].first, edges[i].second, sign});
    }
    return build(g.order(), std::move(signed_edges));
}

std::vector<SimpleGraph> read_graph6_lines(std::istream& in) {
    std::vector<SimpleGraph> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
        while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) view.remove_suffix(1);
        if (view.empty()) continue;
        try {
            out.push_back(parse_graph6(view));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), line_no,
                             e.column());
        }
    }
    return out;
}

}  // namespace signed_spectra
