#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace jacobi_walk {

/// Empty cell, integer index, or a value already rendered as text
/// ("p/q" fraction or shortest round-trip decimal).
using Cell = std::variant<std::monostate, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Header row always, comma separated, LF line endings; an empty cell renders as nothing.
void write_csv(const Table& table, std::ostream& out);

/// {"command": ..., <meta>..., "columns": [...], "rows": [{col: value}, ...]}.
/// Integer cells become JSON integers, text cells JSON strings, empty cells null.
void write_json(const Table& table, const nlohmann::ordered_json& meta, std::ostream& out);

}  // namespace jacobi_walk
