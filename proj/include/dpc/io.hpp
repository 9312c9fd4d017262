#pragma once

#include "dpc/cover.hpp"
#include "dpc/errors.hpp"
#include "dpc/graph.hpp"
#include "dpc/plane_graph.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dpc {

// On-disk graph document: rotation system plus an optional name.
struct GraphDocument {
    std::optional<std::string> name;
    int vertices = 0;
    std::vector<std::vector<int>> rotations;
};

inline GraphDocument parse_graph_document(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    if (!j.is_object())
        throw Error(Errc::ParseError, "document is not an object");
    GraphDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw Error(Errc::ParseError, "\"name\" must be a string");
        doc.name = j["name"].get<std::string>();
    }
    if (!j.contains("vertices") || !j["vertices"].is_number_integer())
        throw Error(Errc::ParseError, "\"vertices\" must be an integer");
    long long n = j["vertices"].get<long long>();
    if (n < 0 || n > 1'000'000)
        throw Error(Errc::ParseError, "\"vertices\" out of range");
    doc.vertices = static_cast<int>(n);
    if (!j.contains("rotations") || !j["rotations"].is_array())
        throw Error(Errc::ParseError, "\"rotations\" must be an array");
    if (static_cast<long long>(j["rotations"].size()) != n)
        throw Error(Errc::ParseError, "\"rotations\" must list every vertex");
    for (const auto& row : j["rotations"]) {
        if (!row.is_array())
            throw Error(Errc::ParseError, "rotation rows must be arrays");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw Error(Errc::ParseError, "rotation entries must be integers");
            r.push_back(x.get<int>());
        }
        doc.rotations.push_back(std::move(r));
    }
    return doc;
}

namespace detail {
inline void json_escape(std::ostream& os, const std::string& s)
{
    for (char c : s) {
        switch (c) {
        case '"': os << "\\\""; break;
        case '\\': os << "\\\\"; break;
        case '\n': os << "\\n"; break;
        case '\t': os << "\\t"; break;
        case '\r': os << "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                os << buf;
            } else {
                os << c;
            }
        }
    }
}
} // namespace detail

// Canonical rendering: fixed key order, one rotation row per line.  Feeding
// the output back through parse and format reproduces it byte for byte.
inline std::string format_graph_document(const GraphDocument& doc)
{
    std::ostringstream os;
    os << "{\n";
    if (doc.name) {
        os << "  \"name\": \"";
        detail::json_escape(os, *doc.name);
        os << "\",\n";
    }
    os << "  \"rotations\": [";
    for (std::size_t v = 0; v < doc.rotations.size(); ++v) {
        os << (v ? ",\n    [" : "\n    [");
        for (std::size_t i = 0; i < doc.rotations[v].size(); ++i)
            os << (i ? ", " : "") << doc.rotations[v][i];
        os << "]";
    }
    os << (doc.rotations.empty() ? "],\n" : "\n  ],\n");
    os << "  \"vertices\": " << doc.vertices << "\n";
    os << "}\n";
    return os.str();
}

inline PlaneGraph to_plane_graph(const GraphDocument& doc)
{
    return PlaneGraph(doc.vertices, doc.rotations);
}

inline GraphDocument from_plane_graph(const PlaneGraph& g,
                                      std::optional<std::string> name = std::nullopt)
{
    GraphDocument doc;
    doc.name = std::move(name);
    doc.vertices = g.vertex_count();
    doc.rotations = g.rotations;
    return doc;
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::ParseError, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::ParseError, "cannot write " + path);
    out << text;
}

// Cover file: a "k <int>" line, then one "u v : cu>cv ..." line per edge.
// Lists are 1..k everywhere; unlisted edges carry the empty matching.
inline Cover parse_cover_file(const std::string& text, const Graph& base)
{
    std::istringstream in(text);
    std::string line;
    int k = -1;
    EdgeMatchingSpec spec;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        if (k < 0) {
            if (first != "k")
                throw Error(Errc::ParseError,
                            "line " + std::to_string(lineno) + ": expected k line");
            if (!(ls >> k) || k < 1)
                throw Error(Errc::ParseError,
                            "line " + std::to_string(lineno) + ": bad k value");
            continue;
        }
        int u = 0, v = 0;
        std::string colon;
        try {
            u = std::stoi(first);
        } catch (...) {
            throw Error(Errc::ParseError,
                        "line " + std::to_string(lineno) + ": bad vertex");
        }
        if (!(ls >> v >> colon) || colon != ":")
            throw Error(Errc::ParseError,
                        "line " + std::to_string(lineno) + ": expected 'u v : pairs'");
        std::vector<std::pair<int, int>> pairs;
        std::string tok;
        while (ls >> tok) {
            auto gt = tok.find('>');
            if (gt == std::string::npos)
                throw Error(Errc::ParseError,
                            "line " + std::to_string(lineno) + ": pair needs '>'");
            try {
                pairs.emplace_back(std::stoi(tok.substr(0, gt)),
                                   std::stoi(tok.substr(gt + 1)));
            } catch (...) {
                throw Error(Errc::ParseError,
                            "line " + std::to_string(lineno) + ": bad pair " + tok);
            }
        }
        spec.push_back({{u, v}, std::move(pairs)});
    }
    if (k < 0)
        throw Error(Errc::ParseError, "missing k line");
    std::vector<std::vector<int>> lists(base.n);
    for (int v = 0; v < base.n; ++v)
        for (int c = 1; c <= k; ++c)
            lists[v].push_back(c);
    return build_cover(base, std::move(lists), spec);
}

inline std::string format_cover_file(const Cover& c)
{
    int k = 0;
    if (!c.uniform_k(k))
        throw Error(Errc::InvalidArgument, "cover lists are not uniform");
    std::ostringstream os;
    os << "k " << k << "\n";
    for (int e = 0; e < c.base.edge_count(); ++e) {
        auto [u, v] = c.base.edges[e];
        os << u << " " << v << " :";
        for (auto [cu, cv] : c.matchings[e])
            os << " " << cu << ">" << cv;
        os << "\n";
    }
    return os.str();
}

} // namespace dpc
