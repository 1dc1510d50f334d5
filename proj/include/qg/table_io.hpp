#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qg/errors.hpp"
#include "qg/table.hpp"

namespace qg {

/// Text table format: first line n, then n lines of n space-separated
/// 0-based integers. Validation errors propagate from Table.
inline Table parse_table_text(std::istream& in) {
  long n = 0;
  if (!(in >> n)) fail(errc::parse_error, "missing order line");
  if (n <= 0) fail(errc::parse_error, "order must be positive");
  std::vector<std::vector<int>> cells(n, std::vector<int>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (!(in >> cells[i][j]))
        fail(errc::parse_error,
             "short table: expected " + std::to_string(n * n) + " entries");
  return Table(cells);
}

/// JSON table format: {"n": n, "cells": [[...], ...]}.
inline Table parse_table_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("cells"))
    fail(errc::parse_error, "expected object with \"n\" and \"cells\"");
  std::vector<std::vector<int>> cells;
  try {
    cells = doc["cells"].get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  if (!doc["n"].is_number_integer() ||
      doc["n"].get<long>() != static_cast<long>(cells.size()))
    fail(errc::parse_error, "\"n\" does not match cells");
  return Table(cells);
}

/// Accepts either format; JSON when the first non-space byte is '{'.
inline Table parse_table(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '{') return parse_table_json(text);
    break;
  }
  std::istringstream in(text);
  return parse_table_text(in);
}

/// `base` shifts displayed indices (0 for internal form, 1 to match
/// one-based listings).
inline void write_table_text(std::ostream& out, const Table& Q, int base = 0) {
  out << Q.n() << '\n';
  for (int i = 0; i < Q.n(); ++i) {
    for (int j = 0; j < Q.n(); ++j) {
      if (j) out << ' ';
      out << Q.mul(i, j) + base;
    }
    out << '\n';
  }
}

inline nlohmann::ordered_json table_to_json(const Table& Q, int base = 0) {
  nlohmann::ordered_json doc;
  doc["n"] = Q.n();
  auto rows = Q.rows();
  if (base != 0)
    for (auto& row : rows)
      for (int& v : row) v += base;
  doc["cells"] = rows;
  return doc;
}

}  // namespace qg
