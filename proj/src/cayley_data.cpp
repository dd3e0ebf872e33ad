// Signed products e_i * e_j of the Kaluza basis, row i = left factor,
// column j = right factor, index 0 = the real unit. Entries are {sign, index}.
#include "kaluza/cayley.hpp"

namespace kaluza::detail {

const std::array<BasisProduct, kTableSize> kKaluzaTableEntries = {{
    // 1
    { 1,  0}, { 1,  1}, { 1,  2}, { 1,  3}, { 1,  4}, { 1,  5}, { 1,  6}, { 1,  7}, { 1,  8}, { 1,  9}, { 1, 10}, { 1, 11}, { 1, 12}, { 1, 13}, { 1, 14}, { 1, 15},
    { 1, 16}, { 1, 17}, { 1, 18}, { 1, 19}, { 1, 20}, { 1, 21}, { 1, 22}, { 1, 23}, { 1, 24}, { 1, 25}, { 1, 26}, { 1, 27}, { 1, 28}, { 1, 29}, { 1, 30}, { 1, 31},
    // e1
    { 1,  1}, { 1,  0}, { 1,  6}, { 1,  7}, { 1,  8}, { 1,  9}, { 1,  2}, { 1,  3}, { 1,  4}, { 1,  5}, { 1, 16}, { 1, 17}, { 1, 18}, { 1, 19}, { 1, 20}, { 1, 21},
    { 1, 10}, { 1, 11}, { 1, 12}, { 1, 13}, { 1, 14}, { 1, 15}, { 1, 26}, { 1, 27}, { 1, 28}, { 1, 29}, { 1, 22}, { 1, 23}, { 1, 24}, { 1, 25}, { 1, 31}, { 1, 30},
    // e2 (column e22 is +e13; the typeset table reads -e13, which breaks associativity)
    { 1,  2}, {-1,  6}, { 1,  0}, { 1, 10}, { 1, 11}, { 1, 12}, {-1,  1}, {-1, 16}, {-1, 17}, {-1, 18}, { 1,  3}, { 1,  4}, { 1,  5}, { 1, 22}, { 1, 23}, { 1, 24},
    {-1,  7}, {-1,  8}, {-1,  9}, {-1, 26}, {-1, 27}, {-1, 28}, { 1, 13}, { 1, 14}, { 1, 15}, { 1, 30}, {-1, 19}, {-1, 20}, {-1, 21}, {-1, 31}, { 1, 25}, {-1, 29},
    // e3
    { 1,  3}, {-1,  7}, {-1, 10}, {-1,  0}, { 1, 13}, { 1, 14}, { 1, 16}, { 1,  1}, {-1, 19}, {-1, 20}, { 1,  2}, {-1, 22}, {-1, 23}, {-1,  4}, {-1,  5}, { 1, 25},
    {-1,  6}, { 1, 26}, { 1, 27}, { 1,  8}, { 1,  9}, {-1, 29}, { 1, 11}, { 1, 12}, {-1, 30}, {-1, 15}, {-1, 17}, {-1, 18}, { 1, 31}, { 1, 21}, { 1, 24}, {-1, 28},
    // e4
    { 1,  4}, {-1,  8}, {-1, 11}, {-1, 13}, {-1,  0}, { 1, 15}, { 1, 17}, { 1, 19}, { 1,  1}, {-1, 21}, { 1, 22}, { 1,  2}, {-1, 24}, { 1,  3}, {-1, 25}, {-1,  5},
    {-1, 26}, {-1,  6}, { 1, 28}, {-1,  7}, { 1, 29}, { 1,  9}, {-1, 10}, { 1, 30}, { 1, 12}, { 1, 14}, { 1, 16}, {-1, 31}, {-1, 18}, {-1, 20}, {-1, 23}, { 1, 27},
    // e5
    { 1,  5}, {-1,  9}, {-1, 12}, {-1, 14}, {-1, 15}, {-1,  0}, { 1, 18}, { 1, 20}, { 1, 21}, { 1,  1}, { 1, 23}, { 1, 24}, { 1,  2}, { 1, 25}, { 1,  3}, { 1,  4},
    {-1, 27}, {-1, 28}, {-1,  6}, {-1, 29}, {-1,  7}, {-1,  8}, {-1, 30}, {-1, 10}, {-1, 11}, {-1, 13}, { 1, 31}, { 1, 16}, { 1, 17}, { 1, 19}, { 1, 22}, {-1, 26},
    // e6
    { 1,  6}, {-1,  2}, { 1,  1}, { 1, 16}, { 1, 17}, { 1, 18}, {-1,  0}, {-1, 10}, {-1, 11}, {-1, 12}, { 1,  7}, { 1,  8}, { 1,  9}, { 1, 26}, { 1, 27}, { 1, 28},
    {-1,  3}, {-1,  4}, {-1,  5}, {-1, 22}, {-1, 23}, {-1, 24}, { 1, 19}, { 1, 20}, { 1, 21}, { 1, 31}, {-1, 13}, {-1, 14}, {-1, 15}, {-1, 30}, { 1, 29}, {-1, 25},
    // e7
    { 1,  7}, {-1,  3}, {-1, 16}, {-1,  1}, { 1, 19}, { 1, 20}, { 1, 10}, { 1,  0}, {-1, 13}, {-1, 14}, { 1,  6}, {-1, 26}, {-1, 27}, {-1,  8}, {-1,  9}, { 1, 29},
    {-1,  2}, { 1, 22}, { 1, 23}, { 1,  4}, { 1,  5}, {-1, 25}, { 1, 17}, { 1, 18}, {-1, 31}, {-1, 21}, {-1, 11}, {-1, 12}, { 1, 30}, { 1, 15}, { 1, 28}, {-1, 24},
    // e8
    { 1,  8}, {-1,  4}, {-1, 17}, {-1, 19}, {-1,  1}, { 1, 21}, { 1, 11}, { 1, 13}, { 1,  0}, {-1, 15}, { 1, 26}, { 1,  6}, {-1, 28}, { 1,  7}, {-1, 29}, {-1,  9},
    {-1, 22}, {-1,  2}, { 1, 24}, {-1,  3}, { 1, 25}, { 1,  5}, {-1, 16}, { 1, 31}, { 1, 18}, { 1, 20}, { 1, 10}, {-1, 30}, {-1, 12}, {-1, 14}, {-1, 27}, { 1, 23},
    // e9
    { 1,  9}, {-1,  5}, {-1, 18}, {-1, 20}, {-1, 21}, {-1,  1}, { 1, 12}, { 1, 14}, { 1, 15}, { 1,  0}, { 1, 27}, { 1, 28}, { 1,  6}, { 1, 29}, { 1,  7}, { 1,  8},
    {-1, 23}, {-1, 24}, {-1,  2}, {-1, 25}, {-1,  3}, {-1,  4}, {-1, 31}, {-1, 16}, {-1, 17}, {-1, 19}, { 1, 30}, { 1, 10}, { 1, 11}, { 1, 13}, { 1, 26}, {-1, 22},
    // e10
    { 1, 10}, { 1, 16}, {-1,  3}, {-1,  2}, { 1, 22}, { 1, 23}, {-1,  7}, {-1,  6}, { 1, 26}, { 1, 27}, { 1,  0}, {-1, 13}, {-1, 14}, {-1, 11}, {-1, 12}, { 1, 30},
    { 1,  1}, {-1, 19}, {-1, 20}, {-1, 17}, {-1, 18}, { 1, 31}, { 1,  4}, { 1,  5}, {-1, 25}, {-1, 24}, { 1,  8}, { 1,  9}, {-1, 29}, {-1, 28}, { 1, 15}, { 1, 21},
    // e11
    { 1, 11}, { 1, 17}, {-1,  4}, {-1, 22}, {-1,  2}, { 1, 24}, {-1,  8}, {-1, 26}, {-1,  6}, { 1, 28}, { 1, 13}, { 1,  0}, {-1, 15}, { 1, 10}, {-1, 30}, {-1, 12},
    { 1, 19}, { 1,  1}, {-1, 21}, { 1, 16}, {-1, 31}, {-1, 18}, {-1,  3}, { 1, 25}, { 1,  5}, { 1, 23}, {-1,  7}, { 1, 29}, { 1,  9}, { 1, 27}, {-1, 14}, {-1, 20},
    // e12
    { 1, 12}, { 1, 18}, {-1,  5}, {-1, 23}, {-1, 24}, {-1,  2}, {-1,  9}, {-1, 27}, {-1, 28}, {-1,  6}, { 1, 14}, { 1, 15}, { 1,  0}, { 1, 30}, { 1, 10}, { 1, 11},
    { 1, 20}, { 1, 21}, { 1,  1}, { 1, 31}, { 1, 16}, { 1, 17}, {-1, 25}, {-1,  3}, {-1,  4}, {-1, 22}, {-1, 29}, {-1,  7}, {-1,  8}, {-1, 26}, { 1, 13}, { 1, 19},
    // e13
    { 1, 13}, { 1, 19}, { 1, 22}, { 1,  4}, {-1,  3}, { 1, 25}, { 1, 26}, { 1,  8}, {-1,  7}, { 1, 29}, { 1, 11}, {-1, 10}, { 1, 30}, {-1,  0}, { 1, 15}, {-1, 14},
    { 1, 17}, {-1, 16}, { 1, 31}, {-1,  1}, { 1, 21}, {-1, 20}, {-1,  2}, { 1, 24}, {-1, 23}, {-1,  5}, {-1,  6}, { 1, 28}, {-1, 27}, {-1,  9}, {-1, 12}, {-1, 18},
    // e14
    { 1, 14}, { 1, 20}, { 1, 23}, { 1,  5}, {-1, 25}, {-1,  3}, { 1, 27}, { 1,  9}, {-1, 29}, {-1,  7}, { 1, 12}, {-1, 30}, {-1, 10}, {-1, 15}, {-1,  0}, { 1, 13},
    { 1, 18}, {-1, 31}, {-1, 16}, {-1, 21}, {-1,  1}, { 1, 19}, {-1, 24}, {-1,  2}, { 1, 22}, { 1,  4}, {-1, 28}, {-1,  6}, { 1, 26}, { 1,  8}, { 1, 11}, { 1, 17},
    // e15
    { 1, 15}, { 1, 21}, { 1, 24}, { 1, 25}, { 1,  5}, {-1,  4}, { 1, 28}, { 1, 29}, { 1,  9}, {-1,  8}, { 1, 30}, { 1, 12}, {-1, 11}, { 1, 14}, {-1, 13}, {-1,  0},
    { 1, 31}, { 1, 18}, {-1, 17}, { 1, 20}, {-1, 19}, {-1,  1}, { 1, 23}, {-1, 22}, {-1,  2}, {-1,  3}, { 1, 27}, {-1, 26}, {-1,  6}, {-1,  7}, {-1, 10}, {-1, 16},
    // e16
    { 1, 16}, { 1, 10}, {-1,  7}, {-1,  6}, { 1, 26}, { 1, 27}, {-1,  3}, {-1,  2}, { 1, 22}, { 1, 23}, { 1,  1}, {-1, 19}, {-1, 20}, {-1, 17}, {-1, 18}, { 1, 31},
    { 1,  0}, {-1, 13}, {-1, 14}, {-1, 11}, {-1, 12}, { 1, 30}, { 1,  8}, { 1,  9}, {-1, 29}, {-1, 28}, { 1,  4}, { 1,  5}, {-1, 25}, {-1, 24}, { 1, 21}, { 1, 15},
    // e17
    { 1, 17}, { 1, 11}, {-1,  8}, {-1, 26}, {-1,  6}, { 1, 28}, {-1,  4}, {-1, 22}, {-1,  2}, { 1, 24}, { 1, 19}, { 1,  1}, {-1, 21}, { 1, 16}, {-1, 31}, {-1, 18},
    { 1, 13}, { 1,  0}, {-1, 15}, { 1, 10}, {-1, 30}, {-1, 12}, {-1,  7}, { 1, 29}, { 1,  9}, { 1, 27}, {-1,  3}, { 1, 25}, { 1,  5}, { 1, 23}, {-1, 20}, {-1, 14},
    // e18
    { 1, 18}, { 1, 12}, {-1,  9}, {-1, 27}, {-1, 28}, {-1,  6}, {-1,  5}, {-1, 23}, {-1, 24}, {-1,  2}, { 1, 20}, { 1, 21}, { 1,  1}, { 1, 31}, { 1, 16}, { 1, 17},
    { 1, 14}, { 1, 15}, { 1,  0}, { 1, 30}, { 1, 10}, { 1, 11}, {-1, 29}, {-1,  7}, {-1,  8}, {-1, 26}, {-1, 25}, {-1,  3}, {-1,  4}, {-1, 22}, { 1, 19}, { 1, 13},
    // e19
    { 1, 19}, { 1, 13}, { 1, 26}, { 1,  8}, {-1,  7}, { 1, 29}, { 1, 22}, { 1,  4}, {-1,  3}, { 1, 25}, { 1, 17}, {-1, 16}, { 1, 31}, {-1,  1}, { 1, 21}, {-1, 20},
    { 1, 11}, {-1, 10}, { 1, 30}, {-1,  0}, { 1, 15}, {-1, 14}, {-1,  6}, { 1, 28}, {-1, 27}, {-1,  9}, {-1,  2}, { 1, 24}, {-1, 23}, {-1,  5}, {-1, 18}, {-1, 12},
    // e20
    { 1, 20}, { 1, 14}, { 1, 27}, { 1,  9}, {-1, 29}, {-1,  7}, { 1, 23}, { 1,  5}, {-1, 25}, {-1,  3}, { 1, 18}, {-1, 31}, {-1, 16}, {-1, 21}, {-1,  1}, { 1, 19},
    { 1, 12}, {-1, 30}, {-1, 10}, {-1, 15}, {-1,  0}, { 1, 13}, {-1, 28}, {-1,  6}, { 1, 26}, { 1,  8}, {-1, 24}, {-1,  2}, { 1, 22}, { 1,  4}, { 1, 17}, { 1, 11},
    // e21
    { 1, 21}, { 1, 15}, { 1, 28}, { 1, 29}, { 1,  9}, {-1,  8}, { 1, 24}, { 1, 25}, { 1,  5}, {-1,  4}, { 1, 31}, { 1, 18}, {-1, 17}, { 1, 20}, {-1, 19}, {-1,  1},
    { 1, 30}, { 1, 12}, {-1, 11}, { 1, 14}, {-1, 13}, {-1,  0}, { 1, 27}, {-1, 26}, {-1,  6}, {-1,  7}, { 1, 23}, {-1, 22}, {-1,  2}, {-1,  3}, {-1, 16}, {-1, 10},
    // e22
    { 1, 22}, {-1, 26}, { 1, 13}, { 1, 11}, {-1, 10}, { 1, 30}, {-1, 19}, {-1, 17}, { 1, 16}, {-1, 31}, { 1,  4}, {-1,  3}, { 1, 25}, {-1,  2}, { 1, 24}, {-1, 23},
    {-1,  8}, { 1,  7}, {-1, 29}, { 1,  6}, {-1, 28}, { 1, 27}, {-1,  0}, { 1, 15}, {-1, 14}, {-1, 12}, { 1,  1}, {-1, 21}, { 1, 20}, { 1, 18}, {-1,  5}, { 1,  9},
    // e23
    { 1, 23}, {-1, 27}, { 1, 14}, { 1, 12}, {-1, 30}, {-1, 10}, {-1, 20}, {-1, 18}, { 1, 31}, { 1, 16}, { 1,  5}, {-1, 25}, {-1,  3}, {-1, 24}, {-1,  2}, { 1, 22},
    {-1,  9}, { 1, 29}, { 1,  7}, { 1, 28}, { 1,  6}, {-1, 26}, {-1, 15}, {-1,  0}, { 1, 13}, { 1, 11}, { 1, 21}, { 1,  1}, {-1, 19}, {-1, 17}, { 1,  4}, {-1,  8},
    // e24
    { 1, 24}, {-1, 28}, { 1, 15}, { 1, 30}, { 1, 12}, {-1, 11}, {-1, 21}, {-1, 31}, {-1, 18}, { 1, 17}, { 1, 25}, { 1,  5}, {-1,  4}, { 1, 23}, {-1, 22}, {-1,  2},
    {-1, 29}, {-1,  9}, { 1,  8}, {-1, 27}, { 1, 26}, { 1,  6}, { 1, 14}, {-1, 13}, {-1,  0}, {-1, 10}, {-1, 20}, { 1, 19}, { 1,  1}, { 1, 16}, {-1,  3}, { 1,  7},
    // e25
    { 1, 25}, {-1, 29}, {-1, 30}, {-1, 15}, { 1, 14}, {-1, 13}, { 1, 31}, { 1, 21}, {-1, 20}, { 1, 19}, { 1, 24}, {-1, 23}, { 1, 22}, {-1,  5}, { 1,  4}, {-1,  3},
    {-1, 28}, { 1, 27}, {-1, 26}, { 1,  9}, {-1,  8}, { 1,  7}, { 1, 12}, {-1, 11}, { 1, 10}, { 1,  0}, {-1, 18}, { 1, 17}, {-1, 16}, {-1,  1}, {-1,  2}, { 1,  6},
    // e26
    { 1, 26}, {-1, 22}, { 1, 19}, { 1, 17}, {-1, 16}, { 1, 31}, {-1, 13}, {-1, 11}, { 1, 10}, {-1, 30}, { 1,  8}, {-1,  7}, { 1, 29}, {-1,  6}, { 1, 28}, {-1, 27},
    {-1,  4}, { 1,  3}, {-1, 25}, { 1,  2}, {-1, 24}, { 1, 23}, {-1,  1}, { 1, 21}, {-1, 20}, {-1, 18}, { 1,  0}, {-1, 15}, { 1, 14}, { 1, 12}, {-1,  9}, { 1,  5},
    // e27
    { 1, 27}, {-1, 23}, { 1, 20}, { 1, 18}, {-1, 31}, {-1, 16}, {-1, 14}, {-1, 12}, { 1, 30}, { 1, 10}, { 1,  9}, {-1, 29}, {-1,  7}, {-1, 28}, {-1,  6}, { 1, 26},
    {-1,  5}, { 1, 25}, { 1,  3}, { 1, 24}, { 1,  2}, {-1, 22}, {-1, 21}, {-1,  1}, { 1, 19}, { 1, 17}, { 1, 15}, { 1,  0}, {-1, 13}, {-1, 11}, { 1,  8}, {-1,  4},
    // e28
    { 1, 28}, {-1, 24}, { 1, 21}, { 1, 31}, { 1, 18}, {-1, 17}, {-1, 15}, {-1, 30}, {-1, 12}, { 1, 11}, { 1, 29}, { 1,  9}, {-1,  8}, { 1, 27}, {-1, 26}, {-1,  6},
    {-1, 25}, {-1,  5}, { 1,  4}, {-1, 23}, { 1, 22}, { 1,  2}, { 1, 20}, {-1, 19}, {-1,  1}, {-1, 16}, {-1, 14}, { 1, 13}, { 1,  0}, { 1, 10}, {-1,  7}, { 1,  3},
    // e29
    { 1, 29}, {-1, 25}, {-1, 31}, {-1, 21}, { 1, 20}, {-1, 19}, { 1, 30}, { 1, 15}, {-1, 14}, { 1, 13}, { 1, 28}, {-1, 27}, { 1, 26}, {-1,  9}, { 1,  8}, {-1,  7},
    {-1, 24}, { 1, 23}, {-1, 22}, { 1,  5}, {-1,  4}, { 1,  3}, { 1, 18}, {-1, 17}, { 1, 16}, { 1,  1}, {-1, 12}, { 1, 11}, {-1, 10}, {-1,  0}, {-1,  6}, { 1,  2},
    // e30
    { 1, 30}, { 1, 31}, {-1, 25}, {-1, 24}, { 1, 23}, {-1, 22}, {-1, 29}, {-1, 28}, { 1, 27}, {-1, 26}, { 1, 15}, {-1, 14}, { 1, 13}, {-1, 12}, { 1, 11}, {-1, 10},
    { 1, 21}, {-1, 20}, { 1, 19}, {-1, 18}, { 1, 17}, {-1, 16}, { 1,  5}, {-1,  4}, { 1,  3}, { 1,  2}, { 1,  9}, {-1,  8}, { 1,  7}, { 1,  6}, {-1,  0}, {-1,  1},
    // e31
    { 1, 31}, { 1, 30}, {-1, 29}, {-1, 28}, { 1, 27}, {-1, 26}, {-1, 25}, {-1, 24}, { 1, 23}, {-1, 22}, { 1, 21}, {-1, 20}, { 1, 19}, {-1, 18}, { 1, 17}, {-1, 16},
    { 1, 15}, {-1, 14}, { 1, 13}, {-1, 12}, { 1, 11}, {-1, 10}, { 1,  9}, {-1,  8}, { 1,  7}, { 1,  6}, { 1,  5}, {-1,  4}, { 1,  3}, { 1,  2}, {-1,  1}, {-1,  0},
}};

}  // namespace kaluza::detail
