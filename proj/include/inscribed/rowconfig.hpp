#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace inscribed {

// Largest supported rectangle width. Row words and labelled words are stored
// in fixed-capacity arrays of this size.
inline constexpr int kMaxWidth = 16;

// One nonempty row of a b-wide rectangle. Cells are packed into the low
// `width` bits of `bits`; the leftmost cell is the most significant of them.
class RowConfig {
 public:
  // Throws InvalidArgument unless 1 <= width <= kMaxWidth and bits is a
  // nonzero value that fits in `width` bits.
  RowConfig(int width, std::uint32_t bits);

  // Parses a 0/1 string, leftmost cell first ("10111").
  static RowConfig parse(std::string_view text);

  int width() const noexcept { return width_; }
  std::uint32_t bits() const noexcept { return bits_; }

  // Cell i counted from the left, 0-based.
  bool cell(int i) const noexcept { return ((bits_ >> (width_ - 1 - i)) & 1u) != 0; }

  bool touches_left() const noexcept { return cell(0); }
  bool touches_right() const noexcept { return (bits_ & 1u) != 0; }
  int filled_count() const noexcept;

  // Position in enumerate_alphabet(width).
  std::size_t rank() const noexcept { return bits_ - 1; }

  std::string to_string() const;

  friend bool operator==(const RowConfig&, const RowConfig&) = default;

 private:
  int width_;
  std::uint32_t bits_;
};

// All 2^b - 1 nonempty rows of width b in ascending numeric order.
std::vector<RowConfig> enumerate_alphabet(int b);

// Throws InvalidArgument unless 1 <= b <= kMaxWidth.
void check_width(int b);

}  // namespace inscribed
