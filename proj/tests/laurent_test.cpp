#include <gtest/gtest.h>

#include "print.hpp"
#include "dckl/laurent.hpp"

using namespace dckl;

namespace {

LaurentPoly v(int e) { return LaurentPoly::monomial(1, e); }

}  // namespace

TEST(Laurent, Arithmetic) {
  const LaurentPoly p = v(1) + 2 - v(-3);
  EXPECT_EQ(p[1], 1);
  EXPECT_EQ(p[0], 2);
  EXPECT_EQ(p[-3], -1);
  EXPECT_EQ(p[5], 0);
  EXPECT_EQ(p.min_degree(), -3);
  EXPECT_EQ(p.max_degree(), 1);
  EXPECT_EQ((v(1) - v(-1)) * (v(1) + v(-1)), v(2) - v(-2));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.shift(2), v(3) + LaurentPoly::monomial(2, 2) - v(-1));
  EXPECT_EQ(LaurentPoly::symmetric(0), LaurentPoly(2));
  EXPECT_EQ(LaurentPoly::symmetric(2), v(2) + v(-2));
  EXPECT_EQ(-p + p, LaurentPoly());
}

TEST(Laurent, BarAndParts) {
  const LaurentPoly p = LaurentPoly::monomial(3, 2) + 1 - v(-1);
  EXPECT_EQ(p.bar(), LaurentPoly::monomial(3, -2) + 1 - v(1));
  EXPECT_EQ(p.bar().bar(), p);
  EXPECT_EQ(p.negative_part(), -v(-1));
  EXPECT_EQ(p.nonnegative_part(), LaurentPoly::monomial(3, 2) + 1);
  EXPECT_EQ(p.positive_part(), LaurentPoly::monomial(3, 2));
  EXPECT_TRUE(p.negative_part().in_negative_span());
  EXPECT_FALSE(p.in_negative_span());
  EXPECT_TRUE(LaurentPoly().in_negative_span());
  EXPECT_EQ(p.slice(-1, 0), 1 - v(-1));
}

TEST(Laurent, ToString) {
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ((v(-3) + 2 - v(1)).to_string(), "v^-3 + 2 - v");
  EXPECT_EQ(LaurentPoly::monomial(-2, 4).to_string(), "-2v^4");
}

TEST(Laurent, EncodeDecodeRoundTrip) {
  for (const LaurentPoly& p : {LaurentPoly(), LaurentPoly(1), v(-3) + LaurentPoly::monomial(-7, 2), v(-5) - v(-1)}) {
    EXPECT_EQ(LaurentPoly::decode(p.encode()), p) << p.encode();
  }
  EXPECT_EQ((v(-1) + LaurentPoly::monomial(2, 3)).encode(), "1:-1,2:3");
  EXPECT_EQ(LaurentPoly().encode(), "0");
}

TEST(Laurent, DecodeErrorsCarryOffsets) {
  auto offset_of = [](const std::string& s, std::size_t base = 0) -> std::size_t {
    try {
      (void)LaurentPoly::decode(s, base);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  EXPECT_EQ(offset_of("1:2,x:3"), 4u);
  EXPECT_EQ(offset_of("12"), 2u);
  EXPECT_EQ(offset_of("1:3,1:2"), 7u);
  EXPECT_EQ(offset_of("1:2,"), 4u);
  EXPECT_EQ(offset_of("0:1"), 3u);
  EXPECT_EQ(offset_of("1:2;", 10), 13u);
  EXPECT_EQ(offset_of(""), 0u);
}
