#include "mothernet/words.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mothernet {

namespace {

char digit_char(std::uint8_t d) {
  return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}

std::uint8_t char_digit(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<std::uint8_t>(c - 'a' + 10);
  throw std::invalid_argument(std::string("invalid digit '") + c + "'");
}

}  // namespace

TreeShape::TreeShape(std::vector<int> entries, Extension extension)
    : entries_(std::move(entries)), extension_(extension) {
  if (entries_.empty()) throw std::invalid_argument("tree shape needs at least one entry");
  for (int m : entries_) {
    if (m < 2) throw std::invalid_argument("alphabet sizes must be >= 2");
    if (m > 36) throw std::invalid_argument("alphabet sizes above 36 are not supported");
  }
  bound_ = *std::max_element(entries_.begin(), entries_.end());
}

TreeShape TreeShape::constant(int m) { return TreeShape({m}, Extension::repeat); }

TreeShape TreeShape::repeating(std::vector<int> pattern) {
  return TreeShape(std::move(pattern), Extension::repeat);
}

TreeShape TreeShape::padded(std::vector<int> entries) {
  return TreeShape(std::move(entries), Extension::pad_last);
}

int TreeShape::operator[](std::size_t level) const {
  if (level < entries_.size()) return entries_[level];
  if (extension_ == Extension::repeat) return entries_[level % entries_.size()];
  return entries_.back();
}

Rational TreeShape::beta(std::size_t level) const { return Rational(1, (*this)[level] - 1); }

bool TreeShape::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(), [&](int m) { return m == entries_[0]; });
}

std::vector<int> TreeShape::prefix(std::size_t n) const {
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (*this)[i];
  return out;
}

std::uint64_t TreeShape::level_size(std::size_t n) const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto m = static_cast<std::uint64_t>((*this)[i]);
    if (size > kMax / m) return kMax;
    size *= m;
  }
  return size;
}

std::string TreeShape::describe() const {
  std::ostringstream out;
  if (extension_ == Extension::pad_last && entries_.size() > 1) out << "list:";
  for (std::size_t i = 0; i < entries_.size(); ++i) out << (i ? "," : "") << entries_[i];
  return out.str();
}

DigitWord::DigitWord(std::vector<std::uint8_t> little_endian) : digits_(std::move(little_endian)) {}

DigitWord DigitWord::zeros(std::size_t n) { return DigitWord(std::vector<std::uint8_t>(n, 0)); }

DigitWord DigitWord::parse(std::string_view big_endian) {
  std::vector<std::uint8_t> digits(big_endian.size());
  for (std::size_t i = 0; i < big_endian.size(); ++i) {
    digits[big_endian.size() - 1 - i] = char_digit(big_endian[i]);
  }
  return DigitWord(std::move(digits));
}

DigitWord DigitWord::from_bits(std::uint64_t bits, std::size_t n) {
  std::vector<std::uint8_t> digits(n);
  for (std::size_t i = 0; i < n; ++i) digits[i] = static_cast<std::uint8_t>((bits >> i) & 1U);
  return DigitWord(std::move(digits));
}

DigitWord DigitWord::with_digit(std::size_t i, std::uint8_t value) const {
  if (i >= digits_.size()) throw std::out_of_range("digit index past word length");
  DigitWord copy = *this;
  copy.digits_[i] = value;
  return copy;
}

int DigitWord::hamming_weight() const {
  return static_cast<int>(std::count_if(digits_.begin(), digits_.end(), [](auto d) { return d != 0; }));
}

bool DigitWord::is_binary() const {
  return std::all_of(digits_.begin(), digits_.end(), [](auto d) { return d <= 1; });
}

bool DigitWord::fits(const TreeShape& shape) const {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= shape[i]) return false;
  }
  return true;
}

std::uint64_t DigitWord::to_bits() const {
  if (digits_.size() > 64) throw std::domain_error("word too long for a 64-bit mask");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] > 1) throw std::domain_error("word is not binary: " + to_string());
    bits |= static_cast<std::uint64_t>(digits_[i]) << i;
  }
  return bits;
}

std::string DigitWord::to_string() const {
  std::string out(digits_.size(), '0');
  for (std::size_t i = 0; i < digits_.size(); ++i) out[digits_.size() - 1 - i] = digit_char(digits_[i]);
  return out;
}

std::optional<int> nonzero_position(const DigitWord& x, int t) {
  if (t < -1) throw std::invalid_argument("nonzero_position needs t >= -1");
  if (t == -1) return -1;
  int seen = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.digit(i) != 0 && seen++ == t) return static_cast<int>(i);
  }
  return std::nullopt;
}

DigitWord project_binary(const DigitWord& x) {
  std::vector<std::uint8_t> bits(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) bits[i] = x.digit(i) != 0 ? 1 : 0;
  return DigitWord(std::move(bits));
}

LinearPosition linear_position(const DigitWord& binary) {
  if (binary.size() > 63) throw std::domain_error("linear position needs length <= 63");
  std::uint64_t value = 0;
  unsigned parity = 0;
  for (std::size_t i = binary.size(); i-- > 0;) {
    const auto d = binary.digit(i);
    if (d > 1) throw std::domain_error("linear position of a non-binary word");
    parity ^= d;
    value |= static_cast<std::uint64_t>(parity) << i;
  }
  return {value};
}

DigitWord inverse_linear_position(LinearPosition p, std::size_t n) {
  if (n > 63) throw std::domain_error("linear position needs length <= 63");
  if (p.value >> n != 0) {
    throw std::out_of_range("linear position " + std::to_string(p.value) + " needs more than " +
                            std::to_string(n) + " digits");
  }
  std::vector<std::uint8_t> digits(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto here = (p.value >> k) & 1U;
    const auto above = k + 1 < n ? (p.value >> (k + 1)) & 1U : 0U;
    digits[k] = static_cast<std::uint8_t>(here ^ above);
  }
  return DigitWord(std::move(digits));
}

Rational beta_weight(const DigitWord& a, const TreeShape& shape) {
  Rational w = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.digit(i) > 1) throw std::domain_error("beta weight of a non-binary word");
    if (a.digit(i) == 1) w /= shape[i] - 1;
  }
  return w;
}

Rational inverse_beta_weight(const DigitWord& a, const TreeShape& shape) {
  Rational w = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.digit(i) > 1) throw std::domain_error("beta weight of a non-binary word");
    if (a.digit(i) == 1) w *= shape[i] - 1;
  }
  return w;
}

std::uint64_t mixed_radix_index(const DigitWord& x, const TreeShape& shape) {
  std::uint64_t index = 0;
  for (std::size_t i = x.size(); i-- > 0;) {
    index = index * static_cast<std::uint64_t>(shape[i]) + x.digit(i);
  }
  return index;
}

DigitWord word_at_index(std::uint64_t index, const TreeShape& shape, std::size_t n) {
  std::vector<std::uint8_t> digits(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto m = static_cast<std::uint64_t>(shape[i]);
    digits[i] = static_cast<std::uint8_t>(index % m);
    index /= m;
  }
  return DigitWord(std::move(digits));
}

}  // namespace mothernet
