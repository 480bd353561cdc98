#include "klc/render.hpp"

#include <iomanip>
#include <sstream>

namespace klc {

namespace {

// Code points, so that the radical sign counts as one column.
std::size_t display_width(const std::string& s) {
  std::size_t width = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++width;
  }
  return width;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, display_width(s)), ' ');
}

std::string render_grid(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      widths[j] = std::max(widths[j], display_width(row[j]));
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      const bool last = j + 1 == cells[i].size();
      out << (j ? " | " : "") << (last ? cells[i][j] : pad(cells[i][j], widths[j]));
    }
    out << "\n";
    if (i == 0) {
      for (std::size_t j = 0; j < widths.size(); ++j) {
        out << (j ? "-+-" : "") << std::string(widths[j], '-');
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string format_value(const CharacterRow& row, int b) {
  if (row.exact) return row.values[b].to_string();
  std::ostringstream out;
  out << "~" << std::setprecision(10) << row.approx[b];
  return out.str();
}

std::string cell_members(const BasedRing& ring, const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    out += (i ? ", " : "") + ring.labels[members[i]];
  }
  return out + "}";
}

void render_order(std::ostringstream& out, const BasedRing& ring, const CellOrder& order,
                  const std::string& kind, const std::string& prefix) {
  out << kind << " cells:\n";
  for (std::size_t i = 0; i < order.cells.size(); ++i) {
    out << "  " << prefix << i + 1 << " = " << cell_members(ring, order.cells[i]) << "\n";
  }
  out << kind << " order:";
  bool any = false;
  for (std::size_t a = 0; a < order.cells.size(); ++a) {
    for (std::size_t b = 0; b < order.cells.size(); ++b) {
      if (a != b && order.less_equal(static_cast<int>(a), static_cast<int>(b))) {
        out << (any ? ", " : " ") << prefix << a + 1 << " < " << prefix << b + 1;
        any = true;
      }
    }
  }
  out << (any ? "" : " (trivial)") << "\n";
}

nlohmann::json order_to_json(const BasedRing& ring, const CellOrder& order) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : order.cells) {
    nlohmann::json members = nlohmann::json::array();
    for (int i : c) members.push_back(ring.labels[i]);
    cells.push_back(members);
  }
  nlohmann::json relations = nlohmann::json::array();
  for (std::size_t a = 0; a < order.cells.size(); ++a)
    for (std::size_t b = 0; b < order.cells.size(); ++b)
      if (a != b && order.less_equal(static_cast<int>(a), static_cast<int>(b)))
        relations.push_back({a, b});
  return {{"cells", cells}, {"less", relations}};
}

}  // namespace

std::string format_product(const BasedRing& ring, int x, int y) {
  std::string out;
  for (int z = 0; z < ring.size(); ++z) {
    const auto k = ring.c(x, y, z);
    if (k == 0) continue;
    if (!out.empty()) out += "+";
    if (k != 1) out += std::to_string(k);
    out += ring.labels[z];
  }
  return out.empty() ? "0" : out;
}

std::string render_multiplication_table(const BasedRing& ring) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"x\\y"};
  for (const auto& l : ring.labels) header.push_back(l);
  cells.push_back(header);
  for (int x = 0; x < ring.size(); ++x) {
    std::vector<std::string> row{ring.labels[x]};
    for (int y = 0; y < ring.size(); ++y) row.push_back(format_product(ring, x, y));
    cells.push_back(row);
  }
  return render_grid(cells);
}

std::string render_character_table(const CharacterTable& table) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (std::size_t i = 0; i < table.rows.size(); ++i) header.push_back("V_" + std::to_string(i + 1));
  cells.push_back(header);
  for (int b = 0; b < table.ring.size(); ++b) {
    std::vector<std::string> row{table.ring.labels[b]};
    for (const auto& r : table.rows) row.push_back(format_value(r, b));
    cells.push_back(row);
  }
  std::vector<std::string> exactness{"exact"};
  for (const auto& r : table.rows) exactness.push_back(r.exact ? "yes" : "no");
  cells.push_back(exactness);
  std::string out = render_grid(cells);
  try {
    out += "special: V_" + std::to_string(special_character(table) + 1) + "\n";
  } catch (const std::domain_error&) {
    out += "special: none (maximum not unique)\n";
  }
  return out;
}

std::string render_cells(const BasedRing& ring, const CellPartition& cells) {
  std::ostringstream out;
  render_order(out, ring, cells.left, "left", "L");
  render_order(out, ring, cells.right, "right", "R");
  render_order(out, ring, cells.two_sided, "two-sided", "J");
  return out.str();
}

std::string render_classification(const ClassificationReport& report) {
  std::ostringstream out;
  out << "ring " << report.ring_id << ", basis";
  for (const auto& l : report.ring.labels) out << " " << l;
  out << "\nfilters:";
  for (const auto& f : report.filters) out << " " << f;
  out << "\ncandidates:\n";
  int index = 0;
  for (const auto& c : report.candidates) {
    out << "  [" << ++index << "] rank " << c.module.rank << (c.faithful ? " faithful" : "")
        << ":";
    for (int b = 0; b < report.ring.size(); ++b) {
      if (b == report.ring.identity_index) continue;
      out << " M_" << report.ring.labels[b] << " = " << format_matrix(c.module.matrices[b]);
    }
    out << "\n      character:";
    for (std::size_t i = 0; i < c.decomposition.multiplicities.size(); ++i) {
      const auto m = c.decomposition.multiplicities[i];
      if (m == 0) continue;
      out << " V_" << i + 1 << (m > 1 ? "^" + std::to_string(m) : "");
    }
    out << "\n      " << to_string(c.status) << ": " << c.citation << "\n";
  }
  out << "realized classes: " << report.realized_count() << "\n";
  if (report.bound > 0) {
    out << "entry bound: " << report.bound
        << (report.bound_exhausted ? " (reached; search may be incomplete)" : " (not reached)")
        << "\n";
  }
  for (const auto& m : report.mismatches) out << "MISMATCH: " << m << "\n";
  return out.str();
}

nlohmann::json value_to_json(const QuadNum& value) {
  return {{"text", value.to_string()},
          {"a", rational_to_string(value.rational_part())},
          {"b", rational_to_string(value.surd_part())},
          {"d", value.radicand()}};
}

nlohmann::json characters_to_json(const CharacterTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows) {
    nlohmann::json values = nlohmann::json::array();
    for (int b = 0; b < table.ring.size(); ++b) {
      if (r.exact) {
        values.push_back(value_to_json(r.values[b]));
      } else {
        values.push_back({{"text", format_value(r, b)}, {"approx", r.approx[b]}});
      }
    }
    rows.push_back({{"exact", r.exact}, {"values", values}});
  }
  nlohmann::json out{{"labels", table.ring.labels}, {"rows", rows}};
  try {
    out["special"] = special_character(table);
  } catch (const std::domain_error&) {
    out["special"] = nullptr;
  }
  return out;
}

nlohmann::json cells_to_json(const BasedRing& ring, const CellPartition& cells) {
  return {{"left", order_to_json(ring, cells.left)},
          {"right", order_to_json(ring, cells.right)},
          {"two_sided", order_to_json(ring, cells.two_sided)}};
}

nlohmann::json candidates_to_json(const ClassificationReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : report.candidates) {
    nlohmann::json matrices = nlohmann::json::object();
    for (int b = 0; b < report.ring.size(); ++b) {
      std::vector<std::int64_t> flat;
      for (int i = 0; i < c.module.rank; ++i)
        for (int j = 0; j < c.module.rank; ++j) flat.push_back(c.module.matrices[b](i, j));
      matrices[report.ring.labels[b]] = flat;
    }
    out.push_back({{"rank", c.module.rank},
                   {"matrices", matrices},
                   {"multiplicities", c.decomposition.multiplicities},
                   {"faithful", c.faithful},
                   {"status", to_string(c.status)},
                   {"citation", c.citation}});
  }
  return out;
}

}  // namespace klc
