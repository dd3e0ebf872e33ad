// Typeset reference data, transcribed cell for cell (including the
// typesetting errors). Only fixtures: nothing in the library derives from it.
#include "kaluza/printed.hpp"

namespace kaluza::printed {

namespace {

constexpr std::array<SignedIndex, kTableSize> kTable = {{
    // 1
    { 1,  0}, { 1,  1}, { 1,  2}, { 1,  3}, { 1,  4}, { 1,  5}, { 1,  6}, { 1,  7}, { 1,  8}, { 1,  9}, { 1, 10}, { 1, 11}, { 1, 12}, { 1, 13}, { 1, 14}, { 1, 15},
    { 1, 16}, { 1, 17}, { 1, 18}, { 1, 19}, { 1, 20}, { 1, 21}, { 1, 22}, { 1, 23}, { 1, 24}, { 1, 25}, { 1, 26}, { 1, 27}, { 1, 28}, { 1, 29}, { 1, 30}, { 1, 31},
    // e1
    { 1,  1}, { 1,  0}, { 1,  6}, { 1,  7}, { 1,  8}, { 1,  9}, { 1,  2}, { 1,  3}, { 1,  4}, { 1,  5}, { 1, 16}, { 1, 17}, { 1, 18}, { 1, 19}, { 1, 20}, { 1, 21},
    { 1, 10}, { 1, 11}, { 1, 12}, { 1, 13}, { 1, 14}, { 1, 15}, { 1, 26}, { 1, 27}, { 1, 28}, { 1, 29}, { 1, 22}, { 1, 23}, { 1, 24}, { 1, 25}, { 1, 31}, { 1, 30},
    // e2
    { 1,  2}, {-1,  6}, { 1,  0}, { 1, 10}, { 1, 11}, { 1, 12}, {-1,  1}, {-1, 16}, {-1, 17}, {-1, 18}, { 1,  3}, { 1,  4}, { 1,  5}, { 1, 22}, { 1, 23}, { 1, 24},
    {-1,  7}, {-1,  8}, {-1,  9}, {-1, 26}, {-1, 27}, {-1, 28}, {-1, 13}, { 1, 14}, { 1, 15}, { 1, 30}, {-1, 19}, {-1, 20}, {-1, 21}, {-1, 31}, { 1, 25}, {-1, 29},
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

// Entries are {sign, j} meaning sign * b_j.
constexpr std::array<SignedIndex, kTableSize> kMulMatrix = {{
    // row 0
    { 1,  0}, { 1,  1}, { 1,  2}, {-1,  3}, {-1,  4}, {-1,  5}, {-1,  6}, { 1,  7}, { 1,  8}, { 1,  9}, { 1, 10}, { 1, 11}, { 1, 12}, {-1, 13}, {-1, 14}, {-1, 15},
    { 1, 16}, { 1, 17}, { 1, 18}, {-1, 19}, {-1, 20}, {-1, 21}, {-1, 22}, {-1, 23}, {-1, 24}, { 1, 25}, { 1, 26}, { 1, 27}, { 1, 28}, {-1, 29}, {-1, 30}, {-1, 31},
    // row 1
    { 1,  1}, { 1,  0}, {-1,  6}, { 1,  7}, { 1,  8}, { 1,  9}, { 1,  2}, {-1,  3}, {-1,  4}, {-1,  5}, { 1, 16}, { 1, 17}, { 1, 18}, {-1, 19}, {-1, 20}, {-1, 21},
    { 1, 10}, { 1, 11}, { 1, 12}, {-1, 13}, {-1, 14}, {-1, 15}, { 1, 26}, { 1, 27}, { 1, 28}, {-1, 29}, {-1, 22}, {-1, 23}, {-1, 24}, { 1, 25}, {-1, 31}, {-1, 30},
    // row 2
    { 1,  2}, { 1,  6}, { 1,  0}, { 1, 10}, { 1, 11}, { 1, 12}, {-1,  1}, {-1, 16}, {-1, 17}, {-1, 18}, {-1,  3}, {-1,  4}, {-1,  5}, {-1, 22}, {-1, 23}, {-1, 24},
    {-1,  7}, {-1,  8}, {-1,  9}, {-1, 26}, {-1, 27}, {-1, 28}, {-1, 13}, {-1, 14}, {-1, 15}, {-1, 30}, { 1, 19}, { 1, 20}, { 1, 21}, { 1, 31}, { 1, 25}, { 1, 29},
    // row 3
    { 1,  3}, { 1,  7}, { 1, 10}, { 1,  0}, { 1, 13}, { 1, 14}, {-1, 16}, {-1,  1}, {-1, 19}, {-1, 20}, {-1,  2}, {-1, 22}, {-1, 23}, {-1,  4}, {-1,  5}, {-1, 25},
    {-1,  6}, {-1, 26}, {-1, 27}, {-1,  8}, {-1,  9}, {-1, 29}, {-1, 11}, {-1, 12}, {-1, 30}, {-1, 15}, { 1, 17}, { 1, 18}, { 1, 31}, { 1, 21}, { 1, 24}, { 1, 28},
    // row 4
    { 1,  4}, { 1,  8}, { 1, 11}, {-1, 13}, { 1,  0}, { 1, 15}, {-1, 17}, { 1, 19}, {-1,  1}, {-1, 21}, { 1, 22}, {-1,  2}, {-1, 24}, { 1,  3}, { 1, 25}, {-1,  5},
    { 1, 26}, {-1,  6}, {-1, 28}, { 1,  7}, { 1, 29}, {-1,  9}, { 1, 10}, { 1, 30}, {-1, 12}, { 1, 14}, {-1, 16}, {-1, 31}, { 1, 18}, {-1, 20}, {-1, 23}, {-1, 27},
    // row 5
    { 1,  5}, { 1,  9}, { 1, 12}, {-1, 14}, {-1, 15}, { 1,  0}, {-1, 18}, { 1, 20}, { 1, 21}, {-1,  1}, { 1, 23}, { 1, 24}, {-1,  2}, {-1, 25}, { 1,  3}, { 1,  4},
    { 1, 27}, { 1, 28}, {-1,  6}, {-1, 29}, { 1,  7}, { 1,  8}, {-1, 30}, { 1, 10}, { 1, 11}, {-1, 13}, { 1, 31}, {-1, 16}, {-1, 17}, { 1, 19}, { 1, 22}, { 1, 26},
    // row 6
    { 1,  6}, { 1,  2}, {-1,  1}, {-1, 16}, {-1, 17}, {-1, 18}, { 1,  0}, { 1, 10}, { 1, 11}, { 1, 12}, {-1,  7}, {-1,  8}, {-1,  9}, {-1, 26}, {-1, 27}, {-1, 28},
    {-1,  3}, {-1,  4}, {-1,  5}, {-1, 22}, {-1, 23}, {-1, 24}, { 1, 19}, { 1, 20}, { 1, 21}, { 1, 31}, {-1, 13}, {-1, 14}, {-1, 15}, {-1, 30}, { 1, 29}, { 1, 25},
    // row 7
    { 1,  7}, { 1,  3}, {-1, 16}, {-1,  1}, {-1, 19}, {-1, 20}, { 1, 10}, { 1,  0}, { 1, 13}, { 1, 14}, {-1,  6}, {-1, 26}, {-1, 27}, {-1,  8}, {-1,  9}, {-1, 29},
    {-1,  2}, {-1, 22}, {-1, 23}, {-1,  4}, {-1,  5}, {-1, 25}, { 1, 17}, { 1, 18}, { 1, 31}, { 1, 21}, {-1, 11}, {-1, 12}, {-1, 30}, {-1, 15}, { 1, 28}, { 1, 24},
    // row 8
    { 1,  8}, { 1,  4}, {-1, 17}, { 1, 19}, {-1,  1}, {-1, 21}, { 1, 11}, {-1, 13}, { 1,  0}, { 1, 15}, { 1, 26}, {-1,  6}, {-1, 28}, { 1,  7}, { 1, 29}, {-1,  9},
    { 1, 22}, {-1,  2}, {-1, 24}, { 1,  3}, { 1, 25}, {-1,  5}, {-1, 16}, {-1, 31}, { 1, 18}, {-1, 20}, { 1, 10}, { 1, 30}, {-1, 12}, { 1, 14}, {-1, 27}, {-1, 23},
    // row 9
    { 1,  9}, { 1,  5}, {-1, 18}, { 1, 20}, { 1, 21}, {-1,  1}, { 1, 12}, {-1, 14}, {-1, 15}, { 1,  0}, { 1, 27}, { 1, 28}, {-1,  6}, {-1, 29}, { 1,  7}, { 1,  8},
    { 1, 23}, { 1, 24}, {-1,  2}, {-1, 25}, { 1,  3}, { 1,  4}, { 1, 31}, {-1, 16}, {-1, 17}, { 1, 19}, {-1, 30}, { 1, 10}, { 1, 11}, {-1, 13}, { 1, 26}, { 1, 22},
    // row 10
    { 1, 10}, { 1, 16}, { 1,  3}, {-1,  2}, {-1, 22}, {-1, 23}, {-1,  7}, { 1,  6}, { 1, 26}, { 1, 27}, { 1,  0}, { 1, 13}, { 1, 14}, {-1, 11}, {-1, 12}, {-1, 30},
    { 1,  1}, { 1, 19}, { 1, 20}, {-1, 17}, {-1, 18}, {-1, 31}, {-1,  4}, {-1,  5}, {-1, 25}, { 1, 24}, { 1,  8}, { 1,  9}, { 1, 29}, {-1, 28}, {-1, 15}, {-1, 21},
    // row 11
    { 1, 11}, { 1, 17}, { 1,  4}, { 1, 22}, {-1,  2}, {-1, 24}, {-1,  8}, {-1, 26}, { 1,  6}, { 1, 28}, {-1, 13}, { 1,  0}, { 1, 15}, { 1, 10}, { 1, 30}, {-1, 12},
    {-1, 19}, { 1,  1}, { 1, 21}, { 1, 16}, { 1, 31}, {-1, 18}, { 1,  3}, { 1, 25}, {-1,  5}, {-1, 23}, {-1,  7}, {-1, 29}, { 1,  9}, { 1, 27}, { 1, 14}, { 1, 20},
    // row 12
    { 1, 12}, { 1, 18}, { 1,  5}, { 1, 23}, { 1, 24}, {-1,  2}, {-1,  9}, {-1, 27}, {-1, 28}, { 1,  6}, {-1, 14}, {-1, 15}, { 1,  0}, {-1, 30}, { 1, 10}, { 1, 11},
    {-1, 20}, {-1, 21}, { 1,  1}, {-1, 31}, { 1, 16}, { 1, 17}, {-1, 25}, { 1,  3}, { 1,  4}, { 1, 22}, { 1, 29}, {-1,  7}, {-1,  8}, {-1, 26}, {-1, 13}, {-1, 19},
    // row 13
    { 1, 13}, { 1, 19}, { 1, 22}, { 1,  4}, {-1,  3}, {-1, 25}, {-1, 26}, {-1,  8}, { 1,  7}, { 1, 29}, {-1, 11}, { 1, 10}, { 1, 30}, { 1,  0}, { 1, 15}, {-1, 14},
    {-1, 17}, { 1, 16}, { 1, 31}, { 1,  1}, { 1, 21}, {-1, 20}, { 1,  2}, { 1, 24}, {-1, 23}, {-1,  5}, {-1,  6}, {-1, 28}, { 1, 27}, { 1,  9}, { 1, 12}, { 1, 18},
    // row 14
    { 1, 14}, { 1, 20}, { 1, 23}, { 1,  5}, { 1, 25}, {-1,  3}, {-1, 27}, {-1,  9}, {-1, 29}, { 1,  7}, {-1, 12}, {-1, 30}, { 1, 10}, {-1, 15}, { 1,  0}, { 1, 13},
    {-1, 18}, {-1, 31}, { 1, 16}, {-1, 21}, { 1,  1}, { 1, 19}, {-1, 24}, { 1,  2}, { 1, 22}, { 1,  4}, { 1, 28}, {-1,  6}, {-1, 26}, {-1,  8}, {-1, 11}, {-1, 17},
    // row 15
    { 1, 15}, { 1, 21}, { 1, 24}, {-1, 25}, { 1,  5}, {-1,  4}, {-1, 28}, { 1, 29}, {-1,  9}, { 1,  8}, { 1, 30}, {-1, 12}, { 1, 11}, { 1, 14}, {-1, 13}, { 1,  0},
    { 1, 31}, {-1, 18}, { 1, 17}, { 1, 20}, {-1, 19}, { 1,  1}, { 1, 23}, {-1, 22}, { 1,  2}, {-1,  3}, {-1, 27}, { 1, 26}, {-1,  6}, { 1,  7}, { 1, 10}, { 1, 16},
    // row 16
    { 1, 16}, { 1, 10}, {-1,  7}, { 1,  6}, { 1, 26}, { 1, 27}, { 1,  3}, {-1,  2}, {-1, 22}, {-1, 23}, { 1,  1}, { 1, 19}, { 1, 20}, {-1, 17}, {-1, 18}, {-1, 31},
    { 1,  0}, { 1, 13}, { 1, 14}, {-1, 11}, {-1, 12}, {-1, 30}, { 1,  8}, { 1,  9}, { 1, 29}, {-1, 28}, {-1,  4}, {-1,  5}, {-1, 25}, { 1, 24}, {-1, 21}, {-1, 15},
    // row 17
    { 1, 17}, { 1, 11}, {-1,  8}, {-1, 26}, { 1,  6}, { 1, 28}, { 1,  4}, { 1, 22}, {-1,  2}, {-1, 24}, {-1, 19}, { 1,  1}, { 1, 21}, { 1, 16}, { 1, 31}, {-1, 18},
    {-1, 13}, { 1,  0}, { 1, 15}, { 1, 10}, { 1, 30}, {-1, 12}, {-1,  7}, {-1, 29}, { 1,  9}, { 1, 27}, { 1,  3}, { 1, 25}, {-1,  5}, {-1, 23}, { 1, 20}, { 1, 14},
    // row 18
    { 1, 18}, { 1, 12}, {-1,  9}, {-1, 27}, {-1, 28}, { 1,  6}, { 1,  5}, { 1, 23}, { 1, 24}, {-1,  2}, {-1, 20}, {-1, 21}, { 1,  1}, {-1, 31}, { 1, 16}, { 1, 17},
    {-1, 14}, {-1, 15}, { 1,  0}, {-1, 30}, { 1, 10}, { 1, 11}, { 1, 29}, {-1,  7}, {-1,  8}, {-1, 26}, {-1, 25}, { 1,  3}, { 1,  4}, { 1, 22}, {-1, 19}, {-1, 13},
    // row 19
    { 1, 19}, { 1, 13}, {-1, 26}, {-1,  8}, { 1,  7}, { 1, 29}, { 1, 22}, { 1,  4}, {-1,  3}, {-1, 25}, {-1, 17}, { 1, 16}, { 1, 31}, { 1,  1}, { 1, 21}, {-1, 20},
    {-1, 11}, { 1, 10}, { 1, 30}, { 1,  0}, { 1, 15}, {-1, 14}, {-1,  6}, {-1, 28}, { 1, 27}, { 1,  9}, { 1,  2}, { 1, 24}, {-1, 23}, {-1,  5}, { 1, 18}, { 1, 12},
    // row 20
    { 1, 20}, { 1, 14}, {-1, 27}, {-1,  9}, {-1, 29}, { 1,  7}, { 1, 23}, { 1,  5}, { 1, 25}, {-1,  3}, {-1, 18}, {-1, 31}, { 1, 16}, {-1, 21}, { 1,  1}, { 1, 19},
    {-1, 12}, {-1, 30}, { 1, 10}, {-1, 15}, { 1,  0}, { 1, 13}, { 1, 28}, {-1,  6}, {-1, 26}, {-1,  8}, {-1, 24}, { 1,  2}, { 1, 22}, { 1,  4}, {-1, 17}, {-1, 11},
    // row 21
    { 1, 21}, { 1, 15}, {-1, 28}, { 1, 29}, {-1,  9}, { 1,  8}, { 1, 24}, {-1, 25}, { 1,  5}, {-1,  4}, { 1, 31}, {-1, 18}, { 1, 17}, { 1, 20}, {-1, 19}, { 1,  1},
    { 1, 30}, {-1, 12}, { 1, 11}, { 1, 14}, {-1, 13}, { 1,  0}, {-1, 27}, { 1, 26}, {-1,  6}, { 1,  7}, { 1, 23}, {-1, 22}, { 1,  2}, {-1,  3}, { 1, 16}, { 1, 10},
    // row 22
    { 1, 22}, { 1, 26}, { 1, 13}, {-1, 11}, { 1, 10}, { 1, 30}, {-1, 19}, { 1, 17}, {-1, 16}, {-1, 31}, { 1,  4}, {-1,  3}, {-1, 25}, { 1,  2}, { 1, 24}, {-1, 23},
    { 1,  8}, {-1,  7}, {-1, 29}, { 1,  6}, { 1, 28}, {-1, 27}, { 1,  0}, { 1, 15}, {-1, 14}, { 1, 12}, {-1,  1}, {-1, 21}, { 1, 20}, {-1, 18}, {-1,  5}, {-1,  9},
    // row 23
    { 1, 23}, { 1, 27}, { 1, 14}, {-1, 12}, {-1, 30}, { 1, 10}, {-1, 20}, { 1, 18}, { 1, 31}, {-1, 16}, { 1,  5}, { 1, 25}, {-1,  3}, {-1, 24}, { 1,  2}, { 1, 22},
    { 1,  9}, { 1, 29}, {-1,  7}, {-1, 28}, { 1,  6}, { 1, 26}, {-1, 15}, { 1,  0}, { 1, 13}, {-1, 11}, { 1, 21}, {-1,  1}, {-1, 19}, { 1, 17}, { 1,  4}, { 1,  8},
    // row 24
    { 1, 24}, { 1, 28}, { 1, 15}, { 1, 30}, {-1, 12}, { 1, 11}, {-1, 21}, {-1, 31}, { 1, 18}, {-1, 17}, {-1, 25}, { 1,  5}, {-1,  4}, { 1, 23}, {-1, 22}, { 1,  2},
    {-1, 29}, { 1,  9}, {-1,  8}, { 1, 27}, {-1, 26}, { 1,  6}, { 1, 14}, {-1, 13}, { 1,  0}, { 1, 10}, {-1, 20}, { 1, 19}, {-1,  1}, {-1, 16}, {-1,  3}, {-1,  7},
    // row 25
    { 1, 25}, { 1, 29}, { 1, 30}, { 1, 15}, {-1, 14}, { 1, 13}, {-1, 31}, {-1, 21}, { 1, 20}, {-1, 19}, {-1, 24}, { 1, 23}, {-1, 22}, { 1,  5}, {-1,  4}, { 1,  3},
    {-1, 28}, { 1, 27}, {-1, 26}, { 1,  9}, {-1,  8}, { 1,  7}, { 1, 12}, {-1, 11}, { 1, 10}, { 1,  0}, {-1, 18}, { 1, 17}, {-1, 16}, {-1,  1}, {-1,  2}, {-1,  6},
    // row 26
    { 1, 26}, { 1, 22}, {-1, 19}, { 1, 17}, {-1, 16}, {-1, 31}, { 1, 13}, {-1, 11}, { 1, 10}, { 1, 30}, { 1,  8}, {-1,  7}, {-1, 29}, { 1,  6}, { 1, 28}, {-1, 27},
    { 1,  4}, {-1,  3}, {-1, 25}, { 1,  2}, { 1, 24}, {-1, 23}, {-1,  1}, {-1, 21}, { 1, 20}, {-1, 18}, { 1,  0}, { 1, 15}, {-1, 14}, { 1, 12}, {-1,  9}, {-1,  5},
    // row 27
    { 1, 27}, { 1, 23}, {-1, 20}, { 1, 18}, { 1, 31}, {-1, 16}, { 1, 14}, {-1, 12}, {-1, 30}, { 1, 10}, { 1,  9}, { 1, 29}, {-1,  7}, {-1, 28}, { 1,  6}, { 1, 26},
    { 1,  5}, { 1, 25}, {-1,  3}, {-1, 24}, { 1,  2}, { 1, 22}, { 1, 21}, {-1,  1}, {-1, 19}, { 1, 17}, {-1, 15}, { 1,  0}, { 1, 13}, {-1, 11}, { 1,  8}, { 1,  4},
    // row 28
    { 1, 28}, { 1, 24}, {-1, 21}, {-1, 31}, { 1, 18}, {-1, 17}, { 1, 15}, { 1, 30}, {-1, 12}, { 1, 11}, {-1, 29}, { 1,  9}, {-1,  8}, { 1, 27}, {-1, 26}, { 1,  6},
    {-1, 25}, { 1,  5}, {-1,  4}, { 1, 23}, {-1, 22}, { 1,  2}, {-1, 20}, { 1, 19}, {-1,  1}, {-1, 16}, { 1, 14}, {-1, 13}, { 1,  0}, { 1, 10}, {-1,  7}, {-1,  3},
    // row 29
    { 1, 29}, { 1, 25}, {-1, 31}, {-1, 21}, { 1, 20}, {-1, 19}, { 1, 30}, { 1, 15}, {-1, 14}, { 1, 13}, {-1, 28}, { 1, 27}, {-1, 26}, { 1,  9}, {-1,  8}, { 1,  7},
    {-1, 24}, { 1, 23}, {-1, 22}, { 1,  5}, {-1,  4}, { 1,  3}, {-1, 18}, { 1, 17}, {-1, 16}, {-1,  1}, { 1, 12}, {-1, 11}, { 1, 10}, { 1,  0}, {-1,  6}, {-1,  2},
    // row 30
    { 1, 30}, { 1, 31}, { 1, 25}, {-1, 24}, { 1, 23}, {-1, 22}, {-1, 29}, { 1, 28}, {-1, 27}, { 1, 26}, { 1, 15}, {-1, 14}, { 1, 13}, { 1, 12}, {-1, 11}, { 1, 10},
    { 1, 21}, {-1, 20}, { 1, 19}, { 1, 18}, {-1, 17}, { 1, 16}, { 1,  5}, {-1,  4}, { 1,  3}, {-1,  2}, {-1,  9}, { 1,  8}, {-1,  7}, { 1,  6}, { 1,  0}, { 1,  1},
    // row 31
    { 1, 31}, { 1, 30}, {-1, 29}, { 1, 28}, {-1, 27}, { 1, 26}, { 1, 25}, {-1, 24}, { 1, 23}, {-1, 22}, { 1, 21}, {-1, 20}, { 1, 19}, { 1, 18}, {-1, 17}, { 1, 16},
    { 1, 15}, {-1, 14}, { 1, 13}, { 1, 12}, {-1, 11}, { 1, 10}, {-1,  9}, { 1,  8}, {-1,  7}, { 1,  6}, { 1,  5}, {-1,  4}, { 1,  3}, {-1,  2}, { 1,  1}, { 1,  0},
}};

constexpr std::array<SignedIndex, kTableSize> kPermutedMulMatrix = {{
    // row 0
    { 1,  0}, { 1,  1}, { 1,  2}, {-1,  6}, {-1,  4}, { 1,  8}, {-1,  3}, { 1,  7}, {-1,  5}, { 1,  9}, { 1, 10}, { 1, 16}, { 1, 12}, { 1, 18}, {-1, 14}, {-1, 20},
    { 1, 11}, { 1, 17}, {-1, 13}, {-1, 19}, {-1, 15}, {-1, 21}, {-1, 22}, { 1, 26}, {-1, 24}, { 1, 28}, {-1, 23}, { 1, 27}, { 1, 25}, {-1, 29}, {-1, 30}, {-1, 31},
    // row 1
    { 1,  1}, { 1,  0}, {-1,  6}, { 1,  2}, { 1,  8}, {-1,  4}, { 1,  7}, {-1,  3}, { 1,  9}, {-1,  5}, { 1, 16}, { 1, 10}, { 1, 18}, { 1, 12}, {-1, 20}, {-1, 14},
    { 1, 17}, { 1, 11}, {-1, 19}, {-1, 13}, {-1, 21}, {-1, 15}, { 1, 26}, {-1, 22}, { 1, 28}, {-1, 24}, { 1, 27}, {-1, 23}, {-1, 29}, { 1, 25}, {-1, 31}, {-1, 30},
    // row 2
    { 1,  2}, { 1,  6}, { 1,  0}, {-1,  1}, { 1, 11}, {-1, 17}, { 1, 10}, {-1, 16}, { 1, 12}, {-1, 18}, {-1,  3}, {-1,  7}, {-1,  5}, {-1,  9}, {-1, 23}, {-1, 27},
    {-1,  4}, {-1,  8}, {-1, 22}, {-1, 26}, {-1, 24}, {-1, 28}, {-1, 13}, { 1, 19}, {-1, 15}, { 1, 21}, {-1, 14}, { 1, 20}, {-1, 30}, { 1, 31}, { 1, 25}, { 1, 29},
    // row 3
    { 1,  6}, { 1,  2}, {-1,  1}, { 1,  0}, {-1, 17}, { 1, 11}, {-1, 16}, { 1, 10}, {-1, 18}, { 1, 12}, {-1,  7}, {-1,  3}, {-1,  9}, {-1,  5}, {-1, 27}, {-1, 23},
    {-1,  8}, {-1,  4}, {-1, 26}, {-1, 22}, {-1, 28}, {-1, 24}, { 1, 19}, {-1, 13}, { 1, 21}, {-1, 15}, { 1, 20}, {-1, 14}, { 1, 31}, {-1, 30}, { 1, 29}, { 1, 25},
    // row 4
    { 1,  4}, { 1,  8}, { 1, 11}, {-1, 17}, { 1,  0}, {-1,  1}, {-1, 13}, { 1, 19}, { 1, 15}, {-1, 21}, { 1, 22}, { 1, 26}, {-1, 24}, {-1, 28}, { 1, 25}, { 1, 29},
    {-1,  2}, {-1,  6}, { 1,  3}, { 1,  7}, {-1,  5}, {-1,  9}, { 1, 10}, {-1, 16}, {-1, 12}, { 1, 18}, { 1, 30}, {-1, 31}, { 1, 14}, {-1, 20}, {-1, 23}, {-1, 27},
    // row 5
    { 1,  8}, { 1,  4}, {-1, 17}, { 1, 11}, {-1,  1}, { 1,  0}, { 1, 19}, {-1, 13}, {-1, 21}, { 1, 15}, { 1, 26}, { 1, 22}, {-1, 28}, {-1, 24}, { 1, 29}, { 1, 25},
    {-1,  6}, {-1,  2}, { 1,  7}, { 1,  3}, {-1,  9}, {-1,  5}, {-1, 16}, { 1, 10}, { 1, 18}, {-1, 12}, {-1, 31}, { 1, 30}, {-1, 20}, { 1, 14}, {-1, 27}, {-1, 23},
    // row 6
    { 1,  3}, { 1,  7}, { 1, 10}, {-1, 16}, { 1, 13}, {-1, 19}, { 1,  0}, {-1,  1}, { 1, 14}, {-1, 20}, {-1,  2}, {-1,  6}, {-1, 23}, {-1, 27}, {-1,  5}, {-1,  9},
    {-1, 22}, {-1, 26}, {-1,  4}, {-1,  8}, {-1, 25}, {-1, 29}, {-1, 11}, { 1, 17}, {-1, 30}, { 1, 31}, {-1, 12}, { 1, 18}, {-1, 15}, { 1, 21}, { 1, 24}, { 1, 28},
    // row 7
    { 1,  7}, { 1,  3}, {-1, 16}, { 1, 10}, {-1, 19}, { 1, 13}, {-1,  1}, { 1,  0}, {-1, 20}, { 1, 14}, {-1,  6}, {-1,  2}, {-1, 27}, {-1, 23}, {-1,  9}, {-1,  5},
    {-1, 26}, {-1, 22}, {-1,  8}, {-1,  4}, {-1, 29}, {-1, 25}, { 1, 17}, {-1, 11}, { 1, 31}, {-1, 30}, { 1, 18}, {-1, 12}, { 1, 21}, {-1, 15}, { 1, 28}, { 1, 24},
    // row 8
    { 1,  5}, { 1,  9}, { 1, 12}, {-1, 18}, {-1, 15}, { 1, 21}, {-1, 14}, { 1, 20}, { 1,  0}, {-1,  1}, { 1, 23}, { 1, 27}, {-1,  2}, {-1,  6}, { 1,  3}, { 1,  7},
    { 1, 24}, { 1, 28}, {-1, 25}, {-1, 29}, { 1,  4}, { 1,  8}, {-1, 30}, { 1, 31}, { 1, 11}, {-1, 17}, { 1, 10}, {-1, 16}, {-1, 13}, { 1, 19}, { 1, 22}, { 1, 26},
    // row 9
    { 1,  9}, { 1,  5}, {-1, 18}, { 1, 12}, { 1, 21}, {-1, 15}, { 1, 20}, {-1, 14}, {-1,  1}, { 1,  0}, { 1, 27}, { 1, 23}, {-1,  6}, {-1,  2}, { 1,  7}, { 1,  3},
    { 1, 28}, { 1, 24}, {-1, 29}, {-1, 25}, { 1,  8}, { 1,  4}, { 1, 31}, {-1, 30}, {-1, 17}, { 1, 11}, {-1, 16}, { 1, 10}, { 1, 19}, {-1, 13}, { 1, 26}, { 1, 22},
    // row 10
    { 1, 10}, { 1, 16}, { 1,  3}, {-1,  7}, {-1, 22}, { 1, 26}, {-1,  2}, { 1,  6}, {-1, 23}, { 1, 27}, { 1,  0}, { 1,  1}, { 1, 14}, { 1, 20}, {-1, 12}, {-1, 18},
    { 1, 13}, { 1, 19}, {-1, 11}, {-1, 17}, {-1, 30}, {-1, 31}, {-1,  4}, { 1,  8}, {-1, 25}, { 1, 29}, {-1,  5}, { 1,  9}, { 1, 24}, {-1, 28}, {-1, 15}, {-1, 21},
    // row 11
    { 1, 16}, { 1, 10}, {-1,  7}, { 1,  3}, { 1, 26}, {-1, 22}, { 1,  6}, {-1,  2}, { 1, 27}, {-1, 23}, { 1,  1}, { 1,  0}, { 1, 20}, { 1, 14}, {-1, 18}, {-1, 12},
    { 1, 19}, { 1, 13}, {-1, 17}, {-1, 11}, {-1, 31}, {-1, 30}, { 1,  8}, {-1,  4}, { 1, 29}, {-1, 25}, { 1,  9}, {-1,  5}, {-1, 28}, { 1, 24}, {-1, 21}, {-1, 15},
    // row 12
    { 1, 12}, { 1, 18}, { 1,  5}, {-1,  9}, { 1, 24}, {-1, 28}, { 1, 23}, {-1, 27}, {-1,  2}, { 1,  6}, {-1, 14}, {-1, 20}, { 1,  0}, { 1,  1}, { 1, 10}, { 1, 16},
    {-1, 15}, {-1, 21}, {-1, 30}, {-1, 31}, { 1, 11}, { 1, 17}, {-1, 25}, { 1, 29}, { 1,  4}, {-1,  8}, { 1,  3}, {-1,  7}, { 1, 22}, {-1, 26}, {-1, 13}, {-1, 19},
    // row 13
    { 1, 18}, { 1, 12}, {-1,  9}, { 1,  5}, {-1, 28}, { 1, 24}, {-1, 27}, { 1, 23}, { 1,  6}, {-1,  2}, {-1, 20}, {-1, 14}, { 1,  1}, { 1,  0}, { 1, 16}, { 1, 10},
    {-1, 21}, {-1, 15}, {-1, 31}, {-1, 30}, { 1, 17}, { 1, 11}, { 1, 29}, {-1, 25}, {-1,  8}, { 1,  4}, {-1,  7}, { 1,  3}, {-1, 26}, { 1, 22}, {-1, 19}, {-1, 13},
    // row 14
    { 1, 14}, { 1, 20}, { 1, 23}, {-1, 27}, { 1, 25}, {-1, 29}, { 1,  5}, {-1,  9}, {-1,  3}, { 1,  7}, {-1, 12}, {-1, 18}, { 1, 10}, { 1, 16}, { 1,  0}, { 1,  1},
    {-1, 30}, {-1, 31}, {-1, 15}, {-1, 21}, { 1, 13}, { 1, 19}, {-1, 24}, { 1, 28}, { 1, 22}, {-1, 26}, { 1,  2}, {-1,  6}, { 1,  4}, {-1,  8}, {-1, 11}, {-1, 17},
    // row 15
    { 1, 20}, { 1, 14}, {-1, 27}, { 1, 23}, {-1, 29}, { 1, 25}, {-1,  9}, { 1,  5}, { 1,  7}, {-1,  3}, {-1, 18}, {-1, 12}, { 1, 16}, { 1, 10}, { 1,  1}, { 1,  0},
    {-1, 31}, {-1, 30}, {-1, 21}, {-1, 15}, { 1, 19}, { 1, 13}, { 1, 28}, {-1, 24}, {-1, 26}, { 1, 22}, {-1,  6}, { 1,  2}, {-1,  8}, { 1,  4}, {-1, 17}, {-1, 11},
    // row 16
    { 1, 11}, { 1, 17}, { 1,  4}, {-1,  8}, {-1,  2}, { 1,  6}, { 1, 22}, {-1, 26}, {-1, 24}, { 1, 28}, {-1, 13}, {-1, 19}, { 1, 15}, { 1, 21}, { 1, 30}, { 1, 31},
    { 1,  0}, { 1,  1}, { 1, 10}, { 1, 16}, {-1, 12}, {-1, 18}, { 1,  3}, {-1,  7}, {-1,  5}, { 1,  9}, { 1, 25}, {-1, 29}, {-1, 23}, { 1, 27}, { 1, 14}, { 1, 20},
    // row 17
    { 1, 17}, { 1, 11}, {-1,  8}, { 1,  4}, { 1,  6}, {-1,  2}, {-1, 26}, { 1, 22}, { 1, 28}, {-1, 24}, {-1, 19}, {-1, 13}, { 1, 21}, { 1, 15}, { 1, 31}, { 1, 30},
    { 1,  1}, { 1,  0}, { 1, 16}, { 1, 10}, {-1, 18}, {-1, 12}, {-1,  7}, { 1,  3}, { 1,  9}, {-1,  5}, {-1, 29}, { 1, 25}, { 1, 27}, {-1, 23}, { 1, 20}, { 1, 14},
    // row 18
    { 1, 13}, { 1, 19}, { 1, 22}, {-1, 26}, {-1,  3}, { 1,  7}, { 1,  4}, {-1,  8}, {-1, 25}, { 1, 29}, {-1, 11}, {-1, 17}, { 1, 30}, { 1, 31}, { 1, 15}, { 1, 21},
    { 1, 10}, { 1, 16}, { 1,  0}, { 1,  1}, {-1, 14}, {-1, 20}, { 1,  2}, {-1,  6}, {-1, 23}, { 1, 27}, { 1, 24}, {-1, 28}, {-1,  5}, { 1,  9}, { 1, 12}, { 1, 18},
    // row 19
    { 1, 19}, { 1, 13}, {-1, 26}, { 1, 22}, { 1,  7}, {-1,  3}, {-1,  8}, { 1,  4}, { 1, 29}, {-1, 25}, {-1, 17}, {-1, 11}, { 1, 31}, { 1, 30}, { 1, 21}, { 1, 15},
    { 1, 16}, { 1, 10}, { 1,  1}, { 1,  0}, {-1, 20}, {-1, 14}, {-1,  6}, { 1,  2}, { 1, 27}, {-1, 23}, {-1, 28}, { 1, 24}, { 1,  9}, {-1,  5}, { 1, 18}, { 1, 12},
    // row 20
    { 1, 15}, { 1, 21}, { 1, 24}, {-1, 28}, { 1,  5}, {-1,  9}, {-1, 25}, { 1, 29}, {-1,  4}, { 1,  8}, { 1, 30}, { 1, 31}, { 1, 11}, { 1, 17}, {-1, 13}, {-1, 19},
    {-1, 12}, {-1, 18}, { 1, 14}, { 1, 20}, { 1,  0}, { 1,  1}, { 1, 23}, {-1, 27}, { 1,  2}, {-1,  6}, {-1, 22}, { 1, 26}, {-1,  3}, { 1,  7}, { 1, 10}, { 1, 16},
    // row 21
    { 1, 21}, { 1, 15}, {-1, 28}, { 1, 24}, {-1,  9}, { 1,  5}, { 1, 29}, {-1, 25}, { 1,  8}, {-1,  4}, { 1, 31}, { 1, 30}, { 1, 17}, { 1, 11}, {-1, 19}, {-1, 13},
    {-1, 18}, {-1, 12}, { 1, 20}, { 1, 14}, { 1,  1}, { 1,  0}, {-1, 27}, { 1, 23}, {-1,  6}, { 1,  2}, { 1, 26}, {-1, 22}, { 1,  7}, {-1,  3}, { 1, 16}, { 1, 10},
    // row 22
    { 1, 22}, { 1, 26}, { 1, 13}, {-1, 19}, { 1, 10}, {-1, 16}, {-1, 11}, { 1, 17}, { 1, 30}, {-1, 31}, { 1,  4}, { 1,  8}, {-1, 25}, {-1, 29}, { 1, 24}, { 1, 28},
    {-1,  3}, {-1,  7}, { 1,  2}, { 1,  6}, {-1, 23}, {-1, 27}, { 1,  0}, {-1,  1}, {-1, 14}, { 1, 20}, { 1, 15}, {-1, 21}, { 1, 12}, {-1, 18}, {-1,  5}, {-1,  9},
    // row 23
    { 1, 26}, { 1, 22}, {-1, 19}, { 1, 13}, {-1, 16}, { 1, 10}, { 1, 17}, {-1, 11}, {-1, 31}, { 1, 30}, { 1,  8}, { 1,  4}, {-1, 29}, {-1, 25}, { 1, 28}, { 1, 24},
    {-1,  7}, {-1,  3}, { 1,  6}, { 1,  2}, {-1, 27}, {-1, 23}, {-1,  1}, { 1,  0}, { 1, 20}, {-1, 14}, {-1, 21}, { 1, 15}, {-1, 18}, { 1, 12}, {-1,  9}, {-1,  5},
    // row 24
    { 1, 24}, { 1, 28}, { 1, 15}, {-1, 21}, {-1, 12}, { 1, 18}, { 1, 30}, {-1, 31}, { 1, 11}, {-1, 17}, {-1, 25}, {-1, 29}, {-1,  4}, {-1,  8}, {-1, 22}, {-1, 26},
    { 1,  5}, { 1,  9}, { 1, 23}, { 1, 27}, { 1,  2}, { 1,  6}, { 1, 14}, {-1, 20}, { 1,  0}, {-1,  1}, {-1, 13}, { 1, 19}, { 1, 10}, {-1, 16}, {-1,  3}, {-1,  7},
    // row 25
    { 1, 28}, { 1, 24}, {-1, 21}, { 1, 15}, { 1, 18}, {-1, 12}, {-1, 31}, { 1, 30}, {-1, 17}, { 1, 11}, {-1, 29}, {-1, 25}, {-1,  8}, {-1,  4}, {-1, 26}, {-1, 22},
    { 1,  9}, { 1,  5}, { 1, 27}, { 1, 23}, { 1,  6}, { 1,  2}, {-1, 20}, { 1, 14}, {-1,  1}, { 1,  0}, { 1, 19}, {-1, 13}, {-1, 16}, { 1, 10}, {-1,  7}, {-1,  3},
    // row 26
    { 1, 23}, { 1, 27}, { 1, 14}, {-1, 20}, {-1, 30}, { 1, 31}, {-1, 12}, { 1, 18}, { 1, 10}, {-1, 16}, { 1,  5}, { 1,  9}, {-1,  3}, {-1,  7}, { 1,  2}, { 1,  6},
    { 1, 25}, { 1, 29}, {-1, 24}, {-1, 28}, { 1, 22}, { 1, 26}, {-1, 15}, { 1, 21}, { 1, 13}, {-1, 19}, { 1,  0}, {-1,  1}, {-1, 11}, { 1, 17}, { 1,  4}, { 1,  8},
    // row 27
    { 1, 27}, { 1, 23}, {-1, 20}, { 1, 14}, { 1, 31}, {-1, 30}, { 1, 18}, {-1, 12}, {-1, 16}, { 1, 10}, { 1,  9}, { 1,  5}, {-1,  7}, {-1,  3}, { 1,  6}, { 1,  2},
    { 1, 29}, { 1, 25}, {-1, 28}, {-1, 24}, { 1, 26}, { 1, 22}, { 1, 21}, {-1, 15}, {-1, 19}, { 1, 13}, {-1,  1}, { 1,  0}, { 1, 17}, {-1, 11}, { 1,  8}, { 1,  4},
    // row 28
    { 1, 25}, { 1, 29}, { 1, 30}, {-1, 31}, {-1, 14}, { 1, 20}, { 1, 15}, {-1, 21}, { 1, 13}, {-1, 19}, {-1, 24}, {-1, 28}, {-1, 22}, {-1, 26}, {-1,  4}, {-1,  8},
    { 1, 23}, { 1, 27}, { 1,  5}, { 1,  9}, { 1,  3}, { 1,  7}, { 1, 12}, {-1, 18}, { 1, 10}, {-1, 16}, {-1, 11}, { 1, 17}, { 1,  0}, {-1,  1}, {-1,  2}, {-1,  6},
    // row 29
    { 1, 29}, { 1, 25}, {-1, 31}, { 1, 30}, { 1, 20}, {-1, 14}, {-1, 21}, { 1, 15}, {-1, 19}, { 1, 13}, {-1, 28}, {-1, 24}, {-1, 26}, {-1, 22}, {-1,  8}, {-1,  4},
    { 1, 27}, { 1, 23}, { 1,  9}, { 1,  5}, { 1,  7}, { 1,  3}, {-1, 18}, { 1, 12}, { 1, 16}, { 1, 10}, { 1, 17}, {-1, 11}, {-1,  1}, { 1,  0}, {-1,  6}, {-1,  2},
    // row 30
    { 1, 30}, { 1, 31}, { 1, 25}, {-1, 29}, { 1, 23}, {-1, 27}, {-1, 24}, { 1, 28}, {-1, 22}, { 1, 26}, { 1, 15}, { 1, 21}, { 1, 13}, { 1, 19}, {-1, 11}, {-1, 17},
    {-1, 14}, {-1, 20}, { 1, 12}, { 1, 18}, { 1, 10}, { 1, 16}, { 1,  5}, {-1,  9}, { 1,  3}, {-1,  7}, {-1,  4}, { 1,  8}, {-1,  2}, { 1,  6}, { 1,  0}, { 1,  1},
    // row 31
    { 1, 31}, { 1, 30}, {-1, 29}, { 1, 25}, {-1, 27}, { 1, 23}, { 1, 28}, {-1, 24}, { 1, 26}, {-1, 22}, { 1, 21}, { 1, 15}, { 1, 19}, { 1, 13}, {-1, 17}, {-1, 11},
    {-1, 20}, {-1, 14}, { 1, 18}, { 1, 12}, { 1, 16}, { 1, 10}, {-1,  9}, { 1,  5}, {-1,  7}, { 1,  3}, { 1,  8}, {-1,  4}, { 1,  6}, {-1,  2}, { 1,  1}, { 1,  0},
}};

// Entries are {sign, m} meaning sign * c_m.
constexpr DiagonalTables kDiagonal = {{
    {{ // block 0
        { 1,  0}, { 1,  1}, { 1,  2}, { 1,  3}, { 1,  4}, { 1,  5}, { 1,  6}, { 1,  7},
        { 1,  8}, { 1,  9}, { 1, 10}, { 1, 11}, { 1, 12}, { 1, 13}, { 1, 14}, { 1, 15},
        { 1, 16}, { 1, 17}, { 1, 18}, { 1, 19}, { 1, 20}, { 1, 21}, { 1, 22}, { 1, 23},
        { 1, 24}, { 1, 25}, { 1, 26}, { 1, 27}, { 1, 28}, { 1, 29}, { 1, 30}, { 1, 31},
    }},
    {{ // block 1
        { 1,  3}, { 1,  2}, { 1,  1}, { 1,  0}, { 1, 17}, { 1, 16}, { 1, 11}, { 1, 10},
        { 1, 13}, { 1, 12}, { 1,  7}, { 1,  6}, { 1,  9}, { 1,  8}, { 1, 27}, { 1, 26},
        { 1,  5}, { 1,  4}, {-1, 22}, {-1, 23}, { 1, 25}, { 1, 24}, { 1, 19}, { 1, 18},
        { 1, 21}, { 1, 20}, { 1, 15}, { 1, 14}, { 1, 31}, { 1, 30}, { 1, 29}, { 1, 28},
    }},
    {{ // block 2
        {-1,  5}, {-1,  4}, { 1, 17}, { 1, 16}, { 1,  1}, { 1,  0}, { 1, 19}, { 1, 18},
        {-1, 21}, {-1, 20}, {-1, 23}, {-1, 22}, { 1, 25}, { 1, 24}, { 1, 29}, { 1, 28},
        {-1,  3}, {-1,  2}, {-1,  7}, {-1,  6}, { 1,  9}, { 1,  8}, { 1, 11}, { 1, 10},
        {-1, 13}, {-1, 12}, {-1, 31}, {-1, 30}, {-1, 15}, {-1, 14}, { 1, 27}, { 1, 26},
    }},
    {{ // block 3
        {-1,  7}, {-1,  6}, { 1, 11}, { 1, 10}, {-1, 19}, {-1, 18}, { 1,  1}, { 1,  0},
        {-1, 15}, {-1, 14}, {-1,  3}, {-1,  2}, { 1, 27}, { 1, 26}, { 1,  9}, { 1,  8},
        { 1, 23}, { 1, 22}, { 1,  5}, { 1,  4}, {-1, 29}, {-1, 28}, {-1, 17}, {-1, 16},
        { 1, 31}, { 1, 30}, {-1, 13}, {-1, 12}, { 1, 21}, { 1, 20}, {-1, 25}, {-1, 24},
    }},
    {{ // block 4
        {-1,  9}, {-1,  8}, { 1, 13}, { 1, 12}, { 1, 21}, { 1, 20}, { 1, 15}, { 1, 14},
        { 1,  1}, { 1,  0}, {-1, 27}, {-1, 26}, {-1,  3}, {-1,  2}, {-1,  7}, {-1,  6},
        {-1, 25}, {-1, 24}, {-1, 29}, {-1, 28}, {-1,  5}, {-1,  4}, { 1, 31}, { 1, 30},
        { 1, 17}, { 1, 16}, { 1, 11}, { 1, 10}, { 1, 19}, { 1, 18}, {-1, 23}, {-1, 22},
    }},
    {{ // block 5
        { 1, 10}, { 1, 11}, {-1,  6}, {-1,  7}, { 1, 22}, { 1, 23}, {-1,  2}, {-1,  3},
        { 1, 26}, { 1, 27}, { 1,  0}, { 1,  1}, {-1, 14}, {-1, 15}, {-1, 12}, {-1, 13},
        {-1, 18}, {-1, 19}, {-1, 16}, {-1, 17}, { 1, 30}, { 1, 31}, { 1,  4}, { 1,  5},
        {-1, 28}, {-1, 29}, { 1,  8}, { 1,  9}, {-1, 24}, {-1, 25}, { 1, 20}, { 1, 21},
    }},
    {{ // block 6
        { 1, 12}, { 1, 13}, {-1,  8}, {-1,  9}, {-1, 24}, {-1, 25}, {-1, 26}, {-1, 27},
        {-1,  2}, {-1,  3}, { 1, 14}, { 1, 15}, { 1,  0}, { 1,  1}, { 1, 10}, { 1, 11},
        { 1, 20}, { 1, 21}, { 1, 30}, { 1, 31}, { 1, 16}, { 1, 17}, {-1, 28}, {-1, 29},
        {-1,  4}, {-1,  5}, {-1,  6}, {-1,  7}, {-1, 22}, {-1, 23}, { 1, 18}, { 1, 19},
    }},
    {{ // block 7
        {-1, 14}, {-1, 15}, {-1, 26}, {-1, 27}, { 1, 28}, { 1, 29}, {-1,  8}, {-1,  9},
        { 1,  6}, { 1,  7}, {-1, 12}, {-1, 13}, { 1, 10}, { 1, 11}, { 1,  0}, { 1,  1},
        { 1, 30}, { 1, 31}, { 1, 20}, { 1, 21}, {-1, 18}, {-1, 19}, { 1, 24}, { 1, 25},
        {-1, 22}, {-1, 23}, { 1,  2}, { 1,  3}, {-1,  4}, {-1,  5}, {-1, 16}, {-1, 17},
    }},
    {{ // block 8
        { 1, 16}, { 1, 17}, {-1,  4}, {-1,  5}, {-1,  2}, {-1,  3}, {-1, 22}, {-1, 23},
        { 1, 24}, { 1, 25}, { 1, 18}, { 1, 19}, {-1, 20}, {-1, 21}, {-1, 30}, {-1, 31},
        { 1,  0}, { 1,  1}, { 1, 10}, { 1, 11}, {-1, 12}, {-1, 13}, {-1,  6}, {-1,  7},
        { 1,  8}, { 1,  9}, { 1, 28}, { 1, 29}, { 1, 26}, { 1, 27}, {-1, 14}, {-1, 15},
    }},
    {{ // block 9
        {-1, 18}, {-1, 19}, {-1, 22}, {-1, 23}, { 1,  6}, { 1,  7}, {-1,  4}, {-1,  5},
        {-1, 28}, {-1, 29}, {-1, 16}, {-1, 17}, {-1, 30}, {-1, 31}, {-1, 20}, {-1, 21},
        { 1, 10}, { 1, 11}, { 1,  0}, { 1,  1}, { 1, 14}, { 1, 15}, { 1,  2}, { 1,  3},
        { 1, 26}, { 1, 27}, {-1, 24}, {-1, 25}, { 1,  8}, { 1,  9}, { 1, 12}, { 1, 13},
    }},
    {{ // block 10
        {-1, 20}, {-1, 21}, {-1, 24}, {-1, 25}, {-1,  8}, {-1,  9}, {-1, 28}, {-1, 29},
        { 1,  4}, { 1,  5}, {-1, 30}, {-1, 31}, { 1, 16}, { 1, 17}, { 1, 18}, { 1, 19},
        {-1, 12}, {-1, 13}, {-1, 14}, {-1, 15}, { 1,  0}, { 1,  1}, {-1, 26}, {-1, 27},
        { 1,  2}, { 1,  3}, { 1, 22}, { 1, 23}, { 1,  6}, { 1,  7}, { 1, 10}, { 1, 11},
    }},
    {{ // block 11
        {-1, 23}, {-1, 22}, {-1, 19}, {-1, 18}, { 1, 11}, { 1, 10}, {-1, 17}, {-1, 16},
        {-1, 31}, {-1, 30}, {-1,  5}, {-1,  4}, {-1, 29}, {-1, 28}, {-1, 25}, {-1, 24},
        { 1,  7}, { 1,  6}, { 1,  3}, { 1,  2}, { 1, 27}, { 1, 26}, { 1,  1}, { 1,  0},
        { 1, 15}, { 1, 14}, {-1, 21}, {-1, 20}, { 1, 13}, { 1, 12}, { 1,  9}, { 1,  8},
    }},
    {{ // block 12
        {-1, 25}, {-1, 24}, {-1, 21}, {-1, 20}, {-1, 13}, {-1, 12}, {-1, 31}, {-1, 30},
        { 1, 17}, { 1, 16}, {-1, 29}, {-1, 28}, { 1,  5}, { 1,  4}, { 1, 23}, { 1, 22},
        {-1,  9}, {-1,  8}, {-1, 27}, {-1, 26}, { 1,  3}, { 1,  2}, {-1, 15}, {-1, 14},
        { 1,  1}, { 1,  0}, { 1, 19}, { 1, 18}, { 1, 10}, { 1, 11}, { 1,  7}, { 1,  6},
    }},
    {{ // block 13
        {-1, 27}, {-1, 26}, {-1, 15}, {-1, 14}, { 1, 31}, { 1, 30}, {-1, 13}, {-1, 12},
        { 1, 11}, { 1, 10}, {-1,  9}, {-1,  8}, { 1,  7}, { 1,  6}, { 1,  3}, { 1,  2},
        { 1, 29}, { 1, 28}, { 1, 25}, { 1, 24}, {-1, 23}, {-1, 22}, { 1, 21}, { 1, 20},
        {-1, 19}, {-1, 18}, { 1,  1}, { 1,  0}, {-1, 17}, {-1, 16}, {-1,  5}, {-1,  4},
    }},
    {{ // block 14
        { 1, 29}, { 1, 28}, {-1, 31}, {-1, 30}, { 1, 15}, { 1, 14}, {-1, 21}, {-1, 20},
        {-1, 19}, {-1, 18}, { 1, 25}, { 1, 24}, { 1, 23}, { 1, 22}, { 1,  5}, { 1,  4},
        {-1, 27}, {-1, 26}, {-1,  9}, {-1,  8}, {-1,  7}, {-1,  6}, { 1, 13}, { 1, 12},
        { 1, 11}, { 1, 10}, {-1, 17}, {-1, 16}, { 1,  1}, { 1,  0}, {-1,  3}, {-1,  2},
    }},
    {{ // block 15
        {-1, 30}, {-1, 31}, { 1, 28}, { 1, 29}, {-1, 26}, {-1, 27}, { 1, 24}, { 1, 25},
        { 1, 22}, { 1, 23}, {-1, 20}, {-1, 21}, {-1, 18}, {-1, 19}, {-1, 16}, {-1, 17},
        { 1, 14}, { 1, 15}, { 1, 12}, { 1, 13}, { 1, 10}, { 1, 11}, {-1,  8}, {-1,  9},
        {-1,  6}, {-1,  7}, { 1,  4}, { 1,  5}, {-1,  2}, {-1,  3}, { 1,  0}, { 1,  1},
    }},
}};

constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, 16> kCPairs = {{
    {0, 1}, {2, 6}, {4, 8}, {3, 7}, {5, 9}, {10, 16}, {12, 18}, {14, 20}, {11, 17}, {13, 19}, {15, 21}, {22, 26}, {24, 28}, {23, 27}, {25, 29}, {30, 31},
}};

}  // namespace

const std::array<SignedIndex, kTableSize>& cayley_table() { return kTable; }
const std::array<SignedIndex, kTableSize>& mul_matrix() { return kMulMatrix; }
const std::array<SignedIndex, kTableSize>& permuted_mul_matrix() { return kPermutedMulMatrix; }
const DiagonalTables& diagonal_tables() { return kDiagonal; }
const std::array<std::pair<std::uint8_t, std::uint8_t>, 16>& c_pairs() { return kCPairs; }

}  // namespace kaluza::printed
