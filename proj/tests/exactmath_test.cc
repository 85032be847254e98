// Copyright 2026 The oddmtc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "oddmtc/exactmath.h"

#include <gtest/gtest.h>

namespace oddmtc {
namespace {

TEST(IsqrtExact, PerfectSquare) {
  IsqrtResult r = isqrt_exact(441);
  EXPECT_EQ(r.root, 21);
  EXPECT_TRUE(r.is_perfect_square);
}

TEST(IsqrtExact, Zero) {
  IsqrtResult r = isqrt_exact(0);
  EXPECT_EQ(r.root, 0);
  EXPECT_TRUE(r.is_perfect_square);
}

TEST(IsqrtExact, FloorOfNonSquare) {
  IsqrtResult r = isqrt_exact(2475);
  EXPECT_EQ(r.root, 49);
  EXPECT_FALSE(r.is_perfect_square);
}

TEST(IsqrtExact, RejectsNegative) { EXPECT_THROW(isqrt_exact(-1), InputError); }

TEST(IsqrtExact, BeyondSixtyFourBits) {
  BigInt r("123456789012345678901234567891");
  IsqrtResult out = isqrt_exact(r * r);
  EXPECT_EQ(out.root, r);
  EXPECT_TRUE(out.is_perfect_square);
  out = isqrt_exact(r * r - 1);
  EXPECT_EQ(out.root, r - 1);
  EXPECT_FALSE(out.is_perfect_square);
}

TEST(IsqrtNative, Boundaries) {
  EXPECT_EQ(isqrt_u64(0), 0u);
  EXPECT_EQ(isqrt_u64(3), 1u);
  EXPECT_EQ(isqrt_u64(4), 2u);
  EXPECT_EQ(isqrt_u64(UINT64_MAX), 4294967295u);
  unsigned __int128 big = static_cast<unsigned __int128>(UINT64_MAX) * UINT64_MAX;
  EXPECT_EQ(isqrt_u128(big), static_cast<unsigned __int128>(UINT64_MAX));
}

TEST(SquarefreeSplit, Examples) {
  SquarefreeSplit a = squarefree_split(9);
  EXPECT_EQ(a.u, 3);
  EXPECT_EQ(a.w, 1);
  SquarefreeSplit b = squarefree_split(2475);
  EXPECT_EQ(b.u, 15);
  EXPECT_EQ(b.w, 11);
  SquarefreeSplit c = squarefree_split(17);
  EXPECT_EQ(c.u, 1);
  EXPECT_EQ(c.w, 17);
}

TEST(SquarefreeSplit, RejectsNonPositive) {
  EXPECT_THROW(squarefree_split(0), InputError);
  EXPECT_THROW(squarefree_split(-9), InputError);
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(441), (Factorization{{3, 2}, {7, 2}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(1089), (Factorization{{3, 2}, {11, 2}}));
}

TEST(Factorize, LargePrimeCofactor) {
  // 2^61 - 1 is prime.
  BigInt m61 = (BigInt(1) << 61) - 1;
  EXPECT_EQ(factorize(9 * m61), (Factorization{{3, 2}, {m61, 1}}));
}

TEST(IsPrimePower, Examples) {
  EXPECT_TRUE(is_prime_power(9));
  EXPECT_FALSE(is_prime_power(15));
  EXPECT_FALSE(is_prime_power(1));
  EXPECT_TRUE(is_prime_power(19));
}

TEST(Factored, RoundTrip) {
  BigInt n = 18275625;
  std::string text = format_factorization(factorize(n));
  EXPECT_EQ(text, "3^4 \\cdot 5^4 \\cdot 19^2");
  EXPECT_EQ(parse_factored(text), n);
  EXPECT_EQ(parse_factored("3^{2} \\cdot 7^2"), 441);
  EXPECT_THROW(parse_factored(""), InputError);
  EXPECT_THROW(parse_factored("3^x"), InputError);
}

TEST(ParseBigint, Validation) {
  EXPECT_EQ(parse_bigint("1000000000000000000000"), BigInt("1000000000000000000000"));
  EXPECT_THROW(parse_bigint("12a"), InputError);
  EXPECT_THROW(parse_bigint("-"), InputError);
}

}  // namespace
}  // namespace oddmtc
