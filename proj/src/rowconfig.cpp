#include "inscribed/rowconfig.hpp"

#include <bit>

#include "inscribed/errors.hpp"

namespace inscribed {

void check_width(int b) {
  if (b < 1 || b > kMaxWidth) {
    throw InvalidArgument("width must be in [1, " + std::to_string(kMaxWidth) +
                          "], got " + std::to_string(b));
  }
}

RowConfig::RowConfig(int width, std::uint32_t bits) : width_(width), bits_(bits) {
  check_width(width);
  if (bits == 0) throw InvalidArgument("row configuration must have a filled cell");
  if ((bits >> width) != 0) {
    throw InvalidArgument("row configuration does not fit in width " + std::to_string(width));
  }
}

RowConfig RowConfig::parse(std::string_view text) {
  const int width = static_cast<int>(text.size());
  check_width(width);
  std::uint32_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("row configuration must be a 0/1 string: '" + std::string(text) + "'");
    }
    bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return RowConfig(width, bits);
}

int RowConfig::filled_count() const noexcept { return std::popcount(bits_); }

std::string RowConfig::to_string() const {
  std::string out(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i) {
    if (cell(i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::vector<RowConfig> enumerate_alphabet(int b) {
  check_width(b);
  std::vector<RowConfig> out;
  const std::uint32_t count = (std::uint32_t{1} << b) - 1;
  out.reserve(count);
  for (std::uint32_t bits = 1; bits <= count; ++bits) out.emplace_back(b, bits);
  return out;
}

}  // namespace inscribed
