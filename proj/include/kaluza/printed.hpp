#pragma once

// Reference data as typeset in the original derivation of the fast algorithm,
// typos included. Used only as comparison fixtures.

#include <array>
#include <cstdint>
#include <utility>

#include "kaluza/cayley.hpp"

namespace kaluza::printed {

using DiagonalTables = std::array<std::array<SignedIndex, kDim>, 16>;

/// Multiplication table exactly as typeset (row-major, 1024 entries).
const std::array<SignedIndex, kTableSize>& cayley_table();

/// Multiplication matrix B32, row-major; {s, j} means s * b_j.
const std::array<SignedIndex, kTableSize>& mul_matrix();

/// Row- and column-permuted matrix, row-major; {s, j} means s * b_j.
const std::array<SignedIndex, kTableSize>& permuted_mul_matrix();

/// The sixteen diagonal blocks; [k][m] = {s, n} means s_m^(k) = s * c_n.
const DiagonalTables& diagonal_tables();

/// c_{2p} = (b_first + b_second)/2, c_{2p+1} = (b_first - b_second)/2.
const std::array<std::pair<std::uint8_t, std::uint8_t>, 16>& c_pairs();

}  // namespace kaluza::printed
