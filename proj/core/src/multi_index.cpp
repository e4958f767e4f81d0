#include "shfkit/multi_index.hpp"

#include <bit>

#include "shfkit/errors.hpp"

namespace shfkit {

namespace {

void enumerate(int degree, int start, std::uint8_t acc,
               std::vector<std::uint8_t>& out) {
  if (degree == 0) {
    out.push_back(acc);
    return;
  }
  for (int i = start; i <= kDim; ++i) {
    enumerate(degree - 1, i + 1, static_cast<std::uint8_t>(acc | (1u << (i - 1))), out);
  }
}

}  // namespace

MultiIndexTable::MultiIndexTable() {
  for (int k = 0; k <= kDim; ++k) {
    enumerate(k, 1, 0, masks_[k]);
    position_[k].fill(-1);
    for (int p = 0; p < static_cast<int>(masks_[k].size()); ++p) {
      position_[k][masks_[k][p]] = p;
    }
  }
}

const MultiIndexTable& MultiIndexTable::get() {
  static const MultiIndexTable table;
  return table;
}

std::vector<int> MultiIndexTable::indices(std::uint8_t mask) {
  std::vector<int> out;
  for (int i = 1; i <= kDim; ++i) {
    if (mask & (1u << (i - 1))) out.push_back(i);
  }
  return out;
}

std::uint8_t MultiIndexTable::mask_of(const std::vector<int>& indices_1based) {
  std::uint8_t m = 0;
  for (int i : indices_1based) {
    if (i < 1 || i > kDim) throw DegreeError("basis index out of range 1..6");
    std::uint8_t bit = static_cast<std::uint8_t>(1u << (i - 1));
    if (m & bit) throw DegreeError("repeated basis index in multi-index");
    m |= bit;
  }
  return m;
}

std::string MultiIndexTable::key(std::uint8_t mask) {
  std::string s;
  for (int i = 1; i <= kDim; ++i) {
    if (mask & (1u << (i - 1))) s.push_back(static_cast<char>('0' + i));
  }
  return s;
}

std::uint8_t MultiIndexTable::mask_of_key(const std::string& key) {
  std::uint8_t m = 0;
  int prev = 0;
  for (char c : key) {
    int i = c - '0';
    if (i < 1 || i > kDim) throw ParseError("multi-index key digit out of range: \"" + key + "\"");
    if (i <= prev) throw ParseError("multi-index key not strictly ascending: \"" + key + "\"");
    prev = i;
    m |= static_cast<std::uint8_t>(1u << (i - 1));
  }
  return m;
}

int merge_sign(std::uint8_t a, std::uint8_t b) {
  int crossings = 0;
  for (int j = 0; j < kDim; ++j) {
    if (b & (1u << j)) {
      crossings += std::popcount(static_cast<unsigned>(a >> (j + 1)));
    }
  }
  return (crossings % 2 == 0) ? 1 : -1;
}

int rank_in_mask(std::uint8_t m, int bit) {
  return std::popcount(static_cast<unsigned>(m & ((1u << bit) - 1u)));
}

}  // namespace shfkit
