#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "klc/basedring.hpp"
#include "klc/characters.hpp"
#include "klc/classifier.hpp"

namespace klc {

inline constexpr const char* kToolVersion = "1.0.0";

/// x * y written as "2s+2sts"; "0" for the zero product.
std::string format_product(const BasedRing& ring, int x, int y);

/// Rows x, columns y, entries x * y.
std::string render_multiplication_table(const BasedRing& ring);

/// Rows are basis elements, columns the characters V_1..V_k.
std::string render_character_table(const CharacterTable& table);

std::string render_cells(const BasedRing& ring, const CellPartition& cells);

std::string render_classification(const ClassificationReport& report);

nlohmann::json value_to_json(const QuadNum& value);
nlohmann::json characters_to_json(const CharacterTable& table);
nlohmann::json cells_to_json(const BasedRing& ring, const CellPartition& cells);
nlohmann::json candidates_to_json(const ClassificationReport& report);

}  // namespace klc
