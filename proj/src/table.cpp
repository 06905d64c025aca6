#include "jacobi_walk/table.hpp"

#include <ostream>

namespace jacobi_walk {

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      if (const auto* i = std::get_if<std::int64_t>(&row[c])) {
        out << *i;
      } else if (const auto* s = std::get_if<std::string>(&row[c])) {
        out << *s;
      }
    }
    out << '\n';
  }
}

void write_json(const Table& table, const nlohmann::ordered_json& meta, std::ostream& out) {
  nlohmann::ordered_json doc = meta;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto& name = table.columns[c];
      if (const auto* i = std::get_if<std::int64_t>(&row[c])) {
        obj[name] = *i;
      } else if (const auto* s = std::get_if<std::string>(&row[c])) {
        obj[name] = *s;
      } else {
        obj[name] = nullptr;
      }
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace jacobi_walk
