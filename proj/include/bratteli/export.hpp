#pragma once

// Serializations of graphs and dimension tables. Output is deterministic:
// vertices appear in canonical order and big integers as decimal strings.

#include "bratteli/arrays.hpp"
#include "bratteli/graph.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace bratteli {

/// {"name", "level_cap", "levels": [[{"id", "payload", "dim"}, ...], ...],
///  "edges": [[u, v, mult], ...]} with ids numbering vertices level by level.
nlohmann::json graph_to_json(const BranchingGraph& g);

/// One node per vertex labeled "level:payload" with its dimension in a `dim`
/// attribute; edges of multiplicity other than 1 carry it as their label.
std::string graph_to_dot(const BranchingGraph& g);

/// Columns level, payload, dim.
std::string graph_dims_csv(const BranchingGraph& g);

/// Columns n, l, M.
std::string m_table_csv(const MArray& m);

/// Columns n, k, l, K.
std::string k_table_csv(const KArray& k);

/// Quotes a CSV field when needed.
std::string csv_field(const std::string& s);

/// Writes through a temporary file in the same directory and renames it into
/// place, so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Reads and parses a JSON file; parse errors are reported as path:line:col.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace bratteli
