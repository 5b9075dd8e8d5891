#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mothernet/rational.hpp"

namespace mothernet {

/// Alphabet sizes m_0, m_1, ... of a spherically symmetric tree.
///
/// Only a finite list of entries is stored. Levels past the list are filled
/// either by repeating the list cyclically or by repeating its last entry.
class TreeShape {
 public:
  enum class Extension { repeat, pad_last };

  static TreeShape constant(int m);
  static TreeShape repeating(std::vector<int> pattern);
  static TreeShape padded(std::vector<int> entries);

  int operator[](std::size_t level) const;
  int bound() const { return bound_; }
  /// 1 / (m_i - 1).
  Rational beta(std::size_t level) const;

  const std::vector<int>& entries() const { return entries_; }
  Extension extension() const { return extension_; }
  bool is_constant() const;
  bool is_binary() const { return bound_ == 2; }
  std::vector<int> prefix(std::size_t n) const;
  /// prod_{i<n} m_i, saturating at UINT64_MAX.
  std::uint64_t level_size(std::size_t n) const;
  /// "2", "3,2,4" (repeating) or "list:3,2,4" (padded).
  std::string describe() const;

  bool operator==(const TreeShape&) const = default;

 private:
  TreeShape(std::vector<int> entries, Extension extension);

  std::vector<int> entries_;
  Extension extension_ = Extension::repeat;
  int bound_ = 2;
};

/// A finite digit string x_{n-1} ... x_0, stored with index 0 = rightmost.
/// Digits past the stored length read as 0.
class DigitWord {
 public:
  DigitWord() = default;
  explicit DigitWord(std::vector<std::uint8_t> little_endian);

  static DigitWord zeros(std::size_t n);
  /// Parses the printed (big-endian) form, e.g. "0340020". Digits above 9 use a-z.
  static DigitWord parse(std::string_view big_endian);
  /// Bit i of `bits` becomes digit i.
  static DigitWord from_bits(std::uint64_t bits, std::size_t n);

  std::size_t size() const { return digits_.size(); }
  std::uint8_t digit(std::size_t i) const { return i < digits_.size() ? digits_[i] : 0; }
  std::span<const std::uint8_t> digits() const { return digits_; }
  DigitWord with_digit(std::size_t i, std::uint8_t value) const;

  int hamming_weight() const;
  bool is_binary() const;
  bool fits(const TreeShape& shape) const;
  /// Binary words only; throws std::domain_error otherwise.
  std::uint64_t to_bits() const;
  std::string to_string() const;

  auto operator<=>(const DigitWord&) const = default;

 private:
  std::vector<std::uint8_t> digits_;
};

struct LinearPosition {
  std::uint64_t value = 0;
  auto operator<=>(const LinearPosition&) const = default;
};

/// Position of the (t+1)-th nonzero digit from the right; -1 for t = -1 and
/// nullopt (+infinity) when the word has fewer than t+1 nonzero digits.
std::optional<int> nonzero_position(const DigitWord& x, int t);

/// Digit i of the result is 1 iff x_i != 0.
DigitWord project_binary(const DigitWord& x);

/// Cumulative parity from the most significant digit, read as a binary integer.
LinearPosition linear_position(const DigitWord& binary);
DigitWord inverse_linear_position(LinearPosition p, std::size_t n);

/// Bitmask forms of the same transform.
constexpr std::uint64_t linear_position_bits(std::uint64_t bits) {
  for (int shift = 1; shift < 64; shift <<= 1) bits ^= bits >> shift;
  return bits;
}
constexpr std::uint64_t inverse_linear_position_bits(std::uint64_t position) {
  return position ^ (position >> 1);
}

/// prod_{i : a_i = 1} 1/(m_i - 1).
Rational beta_weight(const DigitWord& a, const TreeShape& shape);
/// prod_{i : a_i = 1} (m_i - 1).
Rational inverse_beta_weight(const DigitWord& a, const TreeShape& shape);

/// Mixed-radix index of a word of length n (digit 0 least significant).
std::uint64_t mixed_radix_index(const DigitWord& x, const TreeShape& shape);
DigitWord word_at_index(std::uint64_t index, const TreeShape& shape, std::size_t n);

}  // namespace mothernet
