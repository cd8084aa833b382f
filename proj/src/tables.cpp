#include "quantion/tables.hpp"

#include <sstream>

namespace quantion {

namespace {

constexpr Complex kI{0.0, 1.0};

// One symbolic cell of a printed table: coefficient * element[index], or 0 when index < 0.
struct Cell {
  Complex coef;
  int index;
};

using SymbolicTable = std::array<std::array<Cell, 4>, 4>;

constexpr Cell zero{0.0, -1};

// Rows and columns: Omega, e1, e2, e3.
const SymbolicTable kTetradGolden{{
    {{{1.0, 0}, {1.0, 1}, {1.0, 2}, {1.0, 3}}},
    {{{1.0, 1}, {1.0, 0}, {kI, 3}, {-kI, 2}}},
    {{{1.0, 2}, {-kI, 3}, {1.0, 0}, {kI, 1}}},
    {{{1.0, 3}, {kI, 2}, {-kI, 1}, {1.0, 0}}},
}};

// Rows and columns: 1, i, j, k.
const SymbolicTable kQuaternionGolden{{
    {{{1.0, 0}, {1.0, 1}, {1.0, 2}, {1.0, 3}}},
    {{{1.0, 1}, {-1.0, 0}, {1.0, 3}, {-1.0, 2}}},
    {{{1.0, 2}, {-1.0, 3}, {-1.0, 0}, {1.0, 1}}},
    {{{1.0, 3}, {1.0, 2}, {-1.0, 1}, {-1.0, 0}}},
}};

// Rows and columns: l, mbar, m, n (the order of the printed g4 table).
const SymbolicTable kNullGolden{{
    {{{1.0, 0}, zero, {1.0, 2}, zero}},
    {{{1.0, 1}, zero, {1.0, 3}, zero}},
    {{zero, {1.0, 0}, zero, {1.0, 2}}},
    {{zero, {1.0, 1}, zero, {1.0, 3}}},
}};

struct BasisSetup {
  std::array<std::string, 4> labels;
  std::array<Quantion, 4> elements;
};

std::array<Eigen::Quaterniond, 4> quaternion_units() {
  return {Eigen::Quaterniond(1, 0, 0, 0), Eigen::Quaterniond(0, 1, 0, 0), Eigen::Quaterniond(0, 0, 1, 0),
          Eigen::Quaterniond(0, 0, 0, 1)};
}

BasisSetup setup(Basis basis) {
  switch (basis) {
    case Basis::tetrad:
      return {{"Omega", "e1", "e2", "e3"}, tetrad()};
    case Basis::quaternion: {
      const auto units = quaternion_units();
      return {{"1", "i", "j", "k"},
              {quaternion_embed(units[0]), quaternion_embed(units[1]), quaternion_embed(units[2]),
               quaternion_embed(units[3])}};
    }
    case Basis::null_tetrad: {
      const NullTetrad nt = null_tetrad();
      return {{"l", "mbar", "m", "n"}, {nt.l, nt.m_bar, nt.m, nt.n}};
    }
  }
  throw std::invalid_argument("unknown basis");
}

const SymbolicTable& symbolic(Basis basis) {
  switch (basis) {
    case Basis::tetrad:
      return kTetradGolden;
    case Basis::quaternion:
      return kQuaternionGolden;
    case Basis::null_tetrad:
      return kNullGolden;
  }
  throw std::invalid_argument("unknown basis");
}

std::string coefficient_prefix(Complex s) {
  if (s == Complex(1.0)) return "";
  if (s == Complex(-1.0)) return "-";
  if (s == kI) return "i ";
  if (s == -kI) return "-i ";
  std::ostringstream os;
  os << s << ' ';
  return os.str();
}

}  // namespace

std::string_view basis_name(Basis basis) {
  switch (basis) {
    case Basis::tetrad:
      return "tetrad";
    case Basis::quaternion:
      return "quaternion";
    case Basis::null_tetrad:
      return "null";
  }
  return "?";
}

std::optional<Basis> parse_basis(std::string_view name) {
  if (name == "tetrad") return Basis::tetrad;
  if (name == "quaternion") return Basis::quaternion;
  if (name == "null" || name == "null_tetrad") return Basis::null_tetrad;
  return std::nullopt;
}

BasisTable basis_table(Basis basis) {
  BasisSetup s = setup(basis);
  BasisTable table{basis, s.labels, s.elements, {}};
  if (basis == Basis::quaternion) {
    const auto units = quaternion_units();
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) table.entries[r][c] = quaternion_embed(units[r] * units[c]);
    return table;
  }
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) table.entries[r][c] = beta_mul(s.elements[r], s.elements[c]);
  return table;
}

BasisTable golden_table(Basis basis) {
  BasisSetup s = setup(basis);
  BasisTable table{basis, s.labels, s.elements, {}};
  const SymbolicTable& sym = symbolic(basis);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const Cell& cell = sym[r][c];
      table.entries[r][c] = cell.index < 0 ? Quantion::zero() : cell.coef * s.elements[cell.index];
    }
  return table;
}

std::optional<TableMismatch> diff_against_golden(const BasisTable& computed) {
  const BasisTable golden = golden_table(computed.name);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!(computed.entries[r][c] == golden.entries[r][c]))
        return TableMismatch{r, c, entry_label(golden, golden.entries[r][c]),
                             entry_label(computed, computed.entries[r][c])};
  return std::nullopt;
}

std::string entry_label(const BasisTable& table, const Quantion& entry) {
  if (entry == Quantion::zero()) return "0";
  const auto comps = [](const Quantion& q) { return std::array<Complex, 4>{q.a, q.b, q.c, q.d}; };
  const auto x = comps(entry);
  for (int k = 0; k < 4; ++k) {
    const auto e = comps(table.elements[k]);
    int pivot = 0;
    while (pivot < 4 && e[pivot] == Complex(0.0)) ++pivot;
    const Complex s = x[pivot] / e[pivot];
    if (!(s * table.elements[k] == entry)) continue;
    if (table.labels[k] == "1") {
      if (s == Complex(1.0)) return "1";
      if (s == Complex(-1.0)) return "-1";
    }
    return coefficient_prefix(s) + table.labels[k];
  }
  return to_string(entry);
}

}  // namespace quantion
