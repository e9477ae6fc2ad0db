#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cikit/gaussian.hpp"
#include "cikit/graph.hpp"
#include "cikit/relation.hpp"

namespace cikit {

// Parse failure carrying source location; the message names file, line and
// offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& file, int line, const std::string& message)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + message) {}
};

namespace textio {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// Significant lines of a stream: comments stripped, blanks dropped.
inline std::vector<std::pair<int, std::string>> significant_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        std::string s = trim(strip_comment(line));
        if (!s.empty()) out.emplace_back(n, s);
    }
    return out;
}

inline std::string expect_prefix(const std::string& s, const std::string& prefix,
                                 const std::string& file, int line) {
    if (s.rfind(prefix, 0) != 0)
        throw ParseError(file, line, "expected '" + prefix + "', got '" + tokenize(s).front() + "'");
    return trim(s.substr(prefix.size()));
}

}  // namespace textio

// ---- relation format ----
// ground: a b c d
// a ; b ;
// a ; b c ; d

inline Relation parse_relation(std::istream& in, const std::string& file = "<input>") {
    auto lines = textio::significant_lines(in);
    if (lines.empty()) throw ParseError(file, 1, "empty relation file, expected 'ground:' line");

    auto [gline, gtext] = lines.front();
    auto labels = textio::tokenize(textio::expect_prefix(gtext, "ground:", file, gline));
    if (labels.empty()) throw ParseError(file, gline, "ground set needs at least one label");
    GroundSet ground = [&] {
        try {
            return GroundSet(labels);
        } catch (const std::invalid_argument& e) {
            throw ParseError(file, gline, e.what());
        }
    }();

    std::vector<Triple> triples;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [ln, text] = lines[i];
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : text) {
            if (ch == ';') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        fields.push_back(cur);
        if (fields.size() != 3)
            throw ParseError(file, ln, "expected 'A ; B ; C', got '" + text + "'");
        try {
            VertexSet a = vertex_set_of(ground, textio::tokenize(fields[0]));
            VertexSet b = vertex_set_of(ground, textio::tokenize(fields[1]));
            VertexSet c = vertex_set_of(ground, textio::tokenize(fields[2]));
            triples.push_back(make_triple(ground, a, b, c));
        } catch (const std::invalid_argument& e) {
            throw ParseError(file, ln, e.what());
        }
    }
    return Relation(std::move(ground), std::move(triples));
}

inline std::string format_relation(const Relation& L) {
    std::string out = "ground:";
    for (const auto& l : L.ground().labels()) out += " " + l;
    out += "\n";
    for (const auto& t : L.triples()) out += format_triple(t, L.ground()) + "\n";
    return out;
}

// ---- graph format ----
// vertices: a b c d
// edge: a b

inline Graph parse_graph(std::istream& in, const std::string& file = "<input>") {
    auto lines = textio::significant_lines(in);
    if (lines.empty()) throw ParseError(file, 1, "empty graph file, expected 'vertices:' line");

    auto [gline, gtext] = lines.front();
    auto labels = textio::tokenize(textio::expect_prefix(gtext, "vertices:", file, gline));
    if (labels.empty()) throw ParseError(file, gline, "graph needs at least one vertex");
    Graph g = [&] {
        try {
            return Graph(GroundSet(labels));
        } catch (const std::invalid_argument& e) {
            throw ParseError(file, gline, e.what());
        }
    }();

    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [ln, text] = lines[i];
        auto ends = textio::tokenize(textio::expect_prefix(text, "edge:", file, ln));
        if (ends.size() != 2)
            throw ParseError(file, ln, "expected 'edge: u v', got '" + text + "'");
        try {
            g.add_edge(g.ground().index_of(ends[0]), g.ground().index_of(ends[1]));
        } catch (const std::invalid_argument& e) {
            throw ParseError(file, ln, e.what());
        }
    }
    return g;
}

inline std::string format_graph(const Graph& g, bool adjacency_dump = false) {
    std::string out = "vertices:";
    for (const auto& l : g.ground().labels()) out += " " + l;
    out += "\n";
    for (auto [u, v] : g.edges())
        out += "edge: " + g.ground().label(u) + " " + g.ground().label(v) + "\n";
    if (adjacency_dump) {
        for (int u = 0; u < g.size(); ++u) {
            out += "# adj " + g.ground().label(u) + ":";
            for (int v = 0; v < g.size(); ++v) out += g.has_edge(u, v) ? " 1" : " 0";
            out += "\n";
        }
    }
    return out;
}

// ---- covariance format ----
// dim: 3
// labels: a b c
// 1.0 0.5 0.25
// ...

inline GaussianModel parse_covariance(std::istream& in, const std::string& file = "<input>",
                                      double eps = GaussianModel::kDefaultEps) {
    auto lines = textio::significant_lines(in);
    if (lines.empty()) throw ParseError(file, 1, "empty covariance file, expected 'dim:' line");

    auto [dline, dtext] = lines.front();
    auto dtok = textio::tokenize(textio::expect_prefix(dtext, "dim:", file, dline));
    if (dtok.size() != 1) throw ParseError(file, dline, "expected 'dim: p'");
    int p = 0;
    try {
        p = std::stoi(dtok[0]);
    } catch (...) {
        throw ParseError(file, dline, "bad dimension '" + dtok[0] + "'");
    }
    if (p < 1 || p > kMaxGroundSize) throw ParseError(file, dline, "dimension out of range");

    if (lines.size() < 2) throw ParseError(file, dline, "missing 'labels:' line");
    auto [lline, ltext] = lines[1];
    auto labels = textio::tokenize(textio::expect_prefix(ltext, "labels:", file, lline));
    if (static_cast<int>(labels.size()) != p)
        throw ParseError(file, lline, "expected " + std::to_string(p) + " labels");

    if (lines.size() != static_cast<std::size_t>(p) + 2)
        throw ParseError(file, lines.back().first,
                         "expected " + std::to_string(p) + " matrix rows");
    std::vector<double> sigma;
    for (int r = 0; r < p; ++r) {
        auto [ln, text] = lines[static_cast<std::size_t>(r) + 2];
        auto toks = textio::tokenize(text);
        if (static_cast<int>(toks.size()) != p)
            throw ParseError(file, ln, "expected " + std::to_string(p) + " entries in row");
        for (const auto& tok : toks) {
            try {
                std::size_t used = 0;
                double v = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                sigma.push_back(v);
            } catch (...) {
                throw ParseError(file, ln, "bad number '" + tok + "'");
            }
        }
    }
    try {
        return GaussianModel(GroundSet(labels), std::move(sigma), eps);
    } catch (const std::invalid_argument& e) {
        throw ParseError(file, dline, e.what());
    }
}

inline std::string format_covariance(const GaussianModel& m) {
    const int p = m.size();
    std::string out = "dim: " + std::to_string(p) + "\nlabels:";
    for (const auto& l : m.ground().labels()) out += " " + l;
    out += "\n";
    char buf[64];
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", m.at(i, j));
            out += buf;
            out += (j + 1 == p) ? "\n" : " ";
        }
    }
    return out;
}

// File variants; "-" is not special, callers handle stdin themselves.
inline Relation load_relation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_relation(in, path);
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_graph(in, path);
}

inline GaussianModel load_covariance(const std::string& path,
                                     double eps = GaussianModel::kDefaultEps) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_covariance(in, path, eps);
}

}  // namespace cikit
