/*
Copyright 2026 The kssparse Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "kssparse/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

namespace kss {

namespace {

std::string locate(std::size_t line, const std::string& detail, const std::string& source) {
    std::string prefix = source.empty() ? std::string{} : source + ": ";
    if (line != 0) prefix += "line " + std::to_string(line) + ": ";
    return prefix + detail;
}

}  // namespace

GraphFormatError::GraphFormatError(std::size_t line, const std::string& detail, const std::string& source)
    : std::runtime_error(locate(line, detail, source)), line_(line), detail_(detail) {}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool is_skippable(std::string_view line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return true;
}

std::size_t parse_index(std::string_view token, std::size_t line, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw GraphFormatError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
    return value;
}

double parse_weight(std::string_view token, std::size_t line) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw GraphFormatError(line, "invalid weight '" + std::string(token) + "'");
    return value;
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
    std::string text;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, text)) {
        ++line_no;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (is_skippable(text)) continue;
        const auto tokens = tokenize(text);
        if (!have_header) {
            if (tokens.size() != 2) throw GraphFormatError(line_no, "malformed header, expected 'n m'");
            n = parse_index(tokens[0], line_no, "vertex count");
            m = parse_index(tokens[1], line_no, "edge count");
            if (n == 0) throw GraphFormatError(line_no, "vertex count must be positive");
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (tokens.size() != 3) throw GraphFormatError(line_no, "malformed edge, expected 'u v w'");
        if (edges.size() == m)
            throw GraphFormatError(line_no, "more edge records than the declared m = " + std::to_string(m));
        const std::size_t u = parse_index(tokens[0], line_no, "vertex");
        const std::size_t v = parse_index(tokens[1], line_no, "vertex");
        const double w = parse_weight(tokens[2], line_no);
        if (u >= n || v >= n) throw GraphFormatError(line_no, "vertex out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw GraphFormatError(line_no, "self-loop at vertex " + std::to_string(u));
        if (!std::isfinite(w) || w <= 0.0) throw GraphFormatError(line_no, "weight must be positive and finite");
        edges.push_back({u, v, w, edges.size()});
    }
    if (!have_header) throw GraphFormatError(0, "missing header 'n m'");
    if (edges.size() != m)
        throw GraphFormatError(0, "declared m = " + std::to_string(m) + " but found " + std::to_string(edges.size()) +
                                      " edge records");
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph read_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path.string() + "'");
    try {
        return parse_graph(in);
    } catch (const GraphFormatError& e) {
        throw GraphFormatError(e.line(), e.detail(), path.string());
    }
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("cannot format number");
    return std::string(buf, ptr);
}

void format_graph(const WeightedGraph& g, std::ostream& out) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_double(e.weight) << '\n';
}

std::string format_graph(const WeightedGraph& g) {
    std::ostringstream out;
    format_graph(g, out);
    return out.str();
}

void write_graph(const WeightedGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write graph file '" + path.string() + "'");
    format_graph(g, out);
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace kss
