#ifndef SHFKIT_MULTI_INDEX_HPP
#define SHFKIT_MULTI_INDEX_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace shfkit {

inline constexpr int kDim = 6;

/// Strictly increasing multi-indices over {1..6}, one table per degree,
/// stored as 6-bit masks (bit i-1 <-> basis covector e^i) and listed in
/// lexicographic order of the index tuples. This order fixes the coefficient
/// layout of every k-form in the library and of the JSON serialization.
class MultiIndexTable {
 public:
  static const MultiIndexTable& get();

  int count(int degree) const { return static_cast<int>(masks_[degree].size()); }
  const std::vector<std::uint8_t>& masks(int degree) const { return masks_[degree]; }
  std::uint8_t mask(int degree, int position) const { return masks_[degree][position]; }

  /// Position of a mask within its degree table, -1 if popcount mismatches.
  int position(int degree, std::uint8_t mask) const { return position_[degree][mask]; }

  /// Indices (1-based, ascending) of a mask.
  static std::vector<int> indices(std::uint8_t mask);
  static std::uint8_t mask_of(const std::vector<int>& indices_1based);

  /// "135"-style key used by the JSON schema; degree 0 maps to "".
  static std::string key(std::uint8_t mask);
  static std::uint8_t mask_of_key(const std::string& key);

 private:
  MultiIndexTable();
  std::array<std::vector<std::uint8_t>, kDim + 1> masks_;
  std::array<std::array<int, 64>, kDim + 1> position_;
};

/// Sign of merging two disjoint ascending index blocks into ascending order:
/// (-1)^{#\{(i,j) : i in a, j in b, i > j\}}.
int merge_sign(std::uint8_t a, std::uint8_t b);

/// Position of index i within ascending mask m (number of set bits below i).
int rank_in_mask(std::uint8_t m, int bit);

}  // namespace shfkit

#endif
