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

#ifndef ODDMTC_EXACTMATH_H_
#define ODDMTC_EXACTMATH_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddmtc {

using BigInt = boost::multiprecision::cpp_int;

// Raised for caller mistakes: bad arguments, out-of-range parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IsqrtResult {
  BigInt root;
  bool is_perfect_square = false;
};

struct SquarefreeSplit {
  BigInt u;  // n = u^2 * w
  BigInt w;  // squarefree
};

struct PrimePower {
  BigInt prime;
  int exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

// Primes strictly increasing, exponents >= 1. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

IsqrtResult isqrt_exact(const BigInt& n);
SquarefreeSplit squarefree_split(const BigInt& n);
Factorization factorize(const BigInt& n);
bool is_prime_power(const BigInt& n);
bool is_prime(const BigInt& n);

BigInt multiply_out(const Factorization& f);

// "3^2 \cdot 5^2 \cdot 19", the notation used by the printed tables.
std::string format_factorization(const Factorization& f);

// Inverse of format_factorization; tolerant of whitespace and exponent 1.
BigInt parse_factored(const std::string& text);

// Hot-path helpers on native integers.
uint64_t isqrt_u64(uint64_t n);
unsigned __int128 isqrt_u128(unsigned __int128 n);

std::string to_string(const BigInt& n);
BigInt parse_bigint(const std::string& text);

}  // namespace oddmtc

#endif  // ODDMTC_EXACTMATH_H_
