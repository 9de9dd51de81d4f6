#include "eil/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace eil {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
        throw ParseError("graph6: byte outside 63..126 at offset " + std::to_string(pos), pos);
    }
    return c - 63;
}

void put_sextet(std::string& out, int value) { out.push_back(static_cast<char>(value + 63)); }

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

    long long n = 0;
    if (text[pos] != '~') {
        n = sextet(text, pos++);
    } else {
        ++pos;
        int width = 3;
        if (pos < text.size() && text[pos] == '~') {
            ++pos;
            width = 6;
        }
        if (pos + width > text.size()) throw ParseError("graph6: truncated size header", text.size());
        for (int k = 0; k < width; ++k) n = (n << 6) | sextet(text, pos++);
    }
    if (n > kMaxVertices) {
        throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds the 64-vertex limit", 0);
    }

    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos < body) throw ParseError("graph6: truncated edge data", text.size());
    if (text.size() - pos > body) throw ParseError("graph6: trailing bytes", pos + body);

    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t at = pos + static_cast<std::size_t>(k / 6);
            if ((sextet(text, at) >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    }
    for (; k < static_cast<long long>(body) * 6; ++k) {
        const std::size_t at = pos + static_cast<std::size_t>(k / 6);
        if ((sextet(text, at) >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits", at);
    }
    return Graph(Graph(static_cast<int>(n)).labels(), edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.size();
    std::string out;
    if (n <= 62) {
        put_sextet(out, n);
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) put_sextet(out, (n >> shift) & 63);
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                put_sextet(out, acc);
                acc = filled = 0;
            }
        }
    }
    if (filled) put_sextet(out, acc << (6 - filled));
    return out;
}

bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
            auto ta = a.substr(i, ei - i);
            auto tb = b.substr(j, ej - j);
            while (ta.size() > 1 && ta.front() == '0') ta.remove_prefix(1);
            while (tb.size() > 1 && tb.front() == '0') tb.remove_prefix(1);
            if (ta.size() != tb.size()) return ta.size() < tb.size();
            if (ta != tb) return ta < tb;
            i = ei;
            j = ej;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
    return a < b;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> names;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> tok;
        for (std::string t; tokens >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() > 2) {
            throw ParseError("edge list: more than two tokens on line " + std::to_string(line_no), line_no);
        }
        names.push_back(tok[0]);
        if (tok.size() == 2) {
            if (tok[0] == tok[1]) {
                throw ParseError("edge list: loop at " + tok[0] + " on line " + std::to_string(line_no), line_no);
            }
            names.push_back(tok[1]);
            pairs.emplace_back(tok[0], tok[1]);
        }
    }
    std::sort(names.begin(), names.end(), natural_less);
    names.erase(std::unique(names.begin(), names.end()), names.end());
    if (names.size() > static_cast<std::size_t>(kMaxVertices)) {
        throw ParseError("edge list: more than 64 vertices", line_no);
    }
    std::map<std::string, int> index;
    for (std::size_t k = 0; k < names.size(); ++k) index[names[k]] = static_cast<int>(k);
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) edges.push_back({index[u], index[v]});
    return Graph(std::move(names), edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    VertexSet touched = 0;
    for (const auto& e : g.edges()) {
        out += g.label(e.u) + " " + g.label(e.v) + "\n";
        touched |= bit(e.u) | bit(e.v);
    }
    for (int v : members(g.all() & ~touched)) out += g.label(v) + "\n";
    return out;
}

}  // namespace eil
