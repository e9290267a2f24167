#pragma once

#include <string>

#include "posmat/graph.hpp"
#include "posmat/matrix.hpp"
#include "posmat/partition.hpp"

namespace posmat {

// Integer, "a/b", or decimal such as "0.125"; exact.
Rational parse_rational(const std::string& token);
std::string format_rational(const Rational& q);

// "ROWS COLS" header then one line per row; '#' starts a comment.
NonnegMatrix parse_matrix(const std::string& text);
std::string emit_matrix(const NonnegMatrix& m);

// Lines of '*' and '0'; an optional "ROWS COLS" header line is checked.
PatternMatrix parse_pattern_grid(const std::string& text);
std::string emit_pattern_grid(const PatternMatrix& p);

// "n" then one "u v" line per edge (1-based; "u u" is a loop).
Graph parse_graph(const std::string& text);
std::string emit_graph(const Graph& g);

// "{1,3,4}" over 1..universe.
IndexSet parse_index_set(const std::string& text, std::size_t universe);
// "{1,2}{3}", "singletons" or "full".
Partition parse_partition(const std::string& text, std::size_t universe);

std::string read_text_file(const std::string& path);

}  // namespace posmat
