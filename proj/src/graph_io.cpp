#include "powerdom/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "powerdom/json_io.hpp"

namespace powerdom {

namespace {

bool parse_int(const std::string& tok, long& out) {
    const char* b = tok.data();
    const char* e = b + tok.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc{} && p == e;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    long header_n = -1;
    long max_seen = -1;
    bool first_meaningful = true;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (first_meaningful && toks[0] == "n") {
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": header needs exactly one count");
            if (!parse_int(toks[1], header_n) || header_n < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad vertex count '" + toks[1] + "'");
            first_meaningful = false;
            continue;
        }
        first_meaningful = false;
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'u v', got " +
                             std::to_string(toks.size()) + " tokens");
        long u, v;
        if (!parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw ParseError("line " + std::to_string(lineno) + ": non-integer vertex token");
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative vertex index");
        if (u == v)
            throw ParseError("line " + std::to_string(lineno) + ": self-loop at vertex " + std::to_string(u));
        if (header_n >= 0 && (u >= header_n || v >= header_n))
            throw ParseError("line " + std::to_string(lineno) + ": vertex exceeds declared count " +
                             std::to_string(header_n));
        edges.emplace_back(int(u), int(v));
        max_seen = std::max({max_seen, u, v});
    }
    int n = int(header_n >= 0 ? header_n : max_seen + 1);
    return Graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph6(const std::string& raw) {
    std::string line = raw;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) throw ParseError("empty graph6 string");
    for (char c : line)
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range: " + std::to_string(int(c)));
    size_t pos = 0;
    long n;
    if (line[0] == 126) {
        if (line.size() >= 2 && line[1] == 126)
            throw ParseError("graph6 order beyond supported range");
        if (line.size() < 4) throw ParseError("truncated graph6 size header");
        n = (long(line[1] - 63) << 12) | (long(line[2] - 63) << 6) | long(line[3] - 63);
        if (n < 63) throw ParseError("non-canonical graph6 size header");
        pos = 4;
    } else {
        n = line[0] - 63;
        pos = 1;
    }
    long bits = n * (n - 1) / 2;
    size_t need = size_t((bits + 5) / 6);
    if (line.size() - pos != need)
        throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                         std::to_string(need));
    std::vector<Edge> edges;
    long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((line[pos + size_t(bit / 6)] - 63) >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
    for (long b = bits; b < long(need) * 6; ++b)
        if ((line[pos + size_t(b / 6)] - 63) >> (5 - b % 6) & 1)
            throw ParseError("graph6 padding bits must be zero");
    return Graph(int(n), edges);
}

std::string write_graph6(const Graph& g) {
    long n = g.order();
    if (n > 258047) throw std::length_error("graph too large for 3-byte graph6 header");
    std::string out;
    if (n <= 62) {
        out += char(63 + n);
    } else {
        out += char(126);
        out += char(63 + ((n >> 12) & 63));
        out += char(63 + ((n >> 6) & 63));
        out += char(63 + (n & 63));
    }
    long bits = n * (n - 1) / 2;
    std::string body(size_t((bits + 5) / 6), 0);
    long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.adjacent(u, v)) body[size_t(bit / 6)] |= char(1 << (5 - bit % 6));
    for (char& c : body) c += 63;
    return out + body;
}

namespace {

std::string extension_of(const std::string& path) {
    auto dot = path.rfind('.');
    if (dot == std::string::npos) return "";
    return path.substr(dot + 1);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

Graph read_graph_file(const std::string& path, std::string format) {
    if (format.empty()) format = extension_of(path);
    std::string text = slurp(path);
    if (format == "el") return parse_edge_list(text);
    if (format == "g6") {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::string t = line;
            if (t.rfind(">>graph6<<", 0) == 0) t.erase(0, 10);
            if (!t.empty() && t.find_first_not_of(" \r") != std::string::npos) return parse_graph6(line);
        }
        throw ParseError(path + " has no graph6 line");
    }
    if (format == "json") return graph_from_json_text(text);
    throw ParseError("unknown graph format '" + format + "' for " + path);
}

void write_graph_file(const Graph& g, const std::string& path, std::string format) {
    if (format.empty()) format = extension_of(path);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    if (format == "el")
        out << format_edge_list(g);
    else if (format == "g6")
        out << write_graph6(g) << "\n";
    else if (format == "json")
        out << graph_to_json_text(g) << "\n";
    else
        throw ParseError("unknown graph format '" + format + "' for " + path);
}

}  // namespace powerdom
