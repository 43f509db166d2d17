#include <gtest/gtest.h>

#include "inscribed/errors.hpp"
#include "inscribed/rowconfig.hpp"

using inscribed::RowConfig;

TEST(RowConfig, ParsesLeftmostCellFirst) {
  const RowConfig u = RowConfig::parse("10111");
  EXPECT_EQ(u.width(), 5);
  EXPECT_EQ(u.bits(), 0b10111u);
  EXPECT_TRUE(u.cell(0));
  EXPECT_FALSE(u.cell(1));
  EXPECT_TRUE(u.touches_left());
  EXPECT_TRUE(u.touches_right());
  EXPECT_EQ(u.filled_count(), 4);
  EXPECT_EQ(u.to_string(), "10111");
}

TEST(RowConfig, SideFlags) {
  const RowConfig u = RowConfig::parse("01110");
  EXPECT_FALSE(u.touches_left());
  EXPECT_FALSE(u.touches_right());
  EXPECT_TRUE(RowConfig::parse("00001").touches_right());
  EXPECT_FALSE(RowConfig::parse("00001").touches_left());
}

TEST(RowConfig, RejectsEmptyAndMalformedRows) {
  EXPECT_THROW(RowConfig::parse("000"), inscribed::InvalidArgument);
  EXPECT_THROW(RowConfig::parse(""), inscribed::InvalidArgument);
  EXPECT_THROW(RowConfig::parse("10a"), inscribed::InvalidArgument);
  EXPECT_THROW(RowConfig(3, 0b1000), inscribed::InvalidArgument);
  EXPECT_THROW(RowConfig(17, 1), inscribed::InvalidArgument);
  EXPECT_THROW(RowConfig(0, 1), inscribed::InvalidArgument);
}

TEST(Alphabet, SizeOrderAndRank) {
  for (int b = 1; b <= 10; ++b) {
    const auto sigma = inscribed::enumerate_alphabet(b);
    ASSERT_EQ(sigma.size(), (std::size_t{1} << b) - 1);
    long filled = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      EXPECT_EQ(sigma[i].rank(), i);
      EXPECT_EQ(sigma[i].width(), b);
      if (i > 0) EXPECT_LT(sigma[i - 1].bits(), sigma[i].bits());
      filled += sigma[i].filled_count();
    }
    EXPECT_EQ(filled, static_cast<long>(b) << (b - 1));
  }
}

TEST(Alphabet, RoundTripsThroughText) {
  for (const RowConfig& u : inscribed::enumerate_alphabet(6)) {
    EXPECT_EQ(RowConfig::parse(u.to_string()), u);
  }
}

TEST(Alphabet, WidthBounds) {
  EXPECT_THROW(inscribed::check_width(0), inscribed::InvalidArgument);
  EXPECT_THROW(inscribed::check_width(17), inscribed::InvalidArgument);
  EXPECT_NO_THROW(inscribed::check_width(16));
}
