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

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kssparse/graph.hpp"

namespace kss {

/// Malformed graph text. `line()` is 1-based; 0 means end of input.
class GraphFormatError : public std::runtime_error {
public:
    GraphFormatError(std::size_t line, const std::string& detail, const std::string& source = {});
    std::size_t line() const { return line_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

// Edge-list text format:
//   first non-comment line: "n m"
//   then m lines "u v w", whitespace separated, 0-based vertices
//   lines whose first non-blank character is '#' are comments; blank lines are skipped
// Weights are written in shortest round-trip decimal form.

WeightedGraph parse_graph(std::istream& in);
WeightedGraph read_graph(const std::filesystem::path& path);

void format_graph(const WeightedGraph& g, std::ostream& out);
std::string format_graph(const WeightedGraph& g);
void write_graph(const WeightedGraph& g, const std::filesystem::path& path);

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

}  // namespace kss
