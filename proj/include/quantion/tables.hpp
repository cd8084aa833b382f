#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "quantion/quantion.hpp"

namespace quantion {

enum class Basis { tetrad, quaternion, null_tetrad };

std::string_view basis_name(Basis basis);
/// Accepts "tetrad", "quaternion" and "null" (or "null_tetrad").
std::optional<Basis> parse_basis(std::string_view name);

/// 4x4 product table; entries[r][c] = row_element * col_element.
/// Quaternion tables carry quaternion products mapped through quaternion_embed.
struct BasisTable {
  Basis name;
  std::array<std::string, 4> labels;
  std::array<Quantion, 4> elements;
  std::array<std::array<Quantion, 4>, 4> entries;
};

/// Computes the table: beta_mul for tetrad and null tetrad, Hamilton product for quaternions.
BasisTable basis_table(Basis basis);

/// The table as printed in the literature, expanded from symbolic entries.
BasisTable golden_table(Basis basis);

struct TableMismatch {
  int row, col;
  std::string expected, actual;
};

/// First cell whose value differs from the golden table (exact comparison).
std::optional<TableMismatch> diff_against_golden(const BasisTable& computed);

/// Renders an entry as a coefficient times one element of the table's basis
/// ("i e3", "-1", "m", "0"). Falls back to the raw components otherwise.
std::string entry_label(const BasisTable& table, const Quantion& entry);

}  // namespace quantion
