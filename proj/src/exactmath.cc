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

#include <cctype>
#include <limits>
#include <sstream>

namespace oddmtc {
namespace {

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    constexpr uint32_t kLimit = 1 << 16;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i <= kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t{i} * i; j <= kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

Factorization factorize_u64(uint64_t n) {
  Factorization out;
  auto take = [&](uint64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({BigInt(p), e});
  };
  for (uint32_t p : small_primes()) {
    if (uint64_t{p} * p > n) break;
    take(p);
  }
  // Past the table, fall back to odd trial divisors.
  uint64_t d = small_primes().back() + 2;
  while (d <= n / d) {
    take(d);
    d += 2;
  }
  if (n > 1) out.push_back({BigInt(n), 1});
  return out;
}

Factorization factorize_big(BigInt n) {
  Factorization out;
  auto take = [&](const BigInt& p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  for (uint32_t p : small_primes()) {
    if (BigInt(p) * p > n) break;
    take(BigInt(p));
    if (n <= std::numeric_limits<uint64_t>::max()) break;
  }
  if (n <= std::numeric_limits<uint64_t>::max()) {
    // The remaining cofactor has no prime below the last one tried.
    Factorization rest = factorize_u64(static_cast<uint64_t>(n));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  BigInt d = small_primes().back() + 2;
  while (d * d <= n) {
    take(d);
    d += 2;
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

void require_positive(const BigInt& n, const char* op) {
  if (n <= 0) throw InputError(std::string(op) + ": argument must be positive");
}

}  // namespace

uint64_t isqrt_u64(uint64_t n) {
  if (n < 2) return n;
  // Newton from an over-estimate; the sequence decreases to floor(sqrt(n)).
  int bits = 64 - __builtin_clzll(n);
  uint64_t x = uint64_t{1} << ((bits + 1) / 2);
  while (true) {
    uint64_t y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

unsigned __int128 isqrt_u128(unsigned __int128 n) {
  if ((n >> 64) == 0) return isqrt_u64(static_cast<uint64_t>(n));
  int bits = 128 - __builtin_clzll(static_cast<uint64_t>(n >> 64));
  unsigned __int128 x = static_cast<unsigned __int128>(1) << ((bits + 1) / 2);
  while (true) {
    unsigned __int128 y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

IsqrtResult isqrt_exact(const BigInt& n) {
  if (n < 0) throw InputError("isqrt_exact: negative argument");
  IsqrtResult r;
  r.root = boost::multiprecision::sqrt(n);
  r.is_perfect_square = (r.root * r.root == n);
  return r;
}

Factorization factorize(const BigInt& n) {
  require_positive(n, "factorize");
  if (n <= std::numeric_limits<uint64_t>::max()) {
    return factorize_u64(static_cast<uint64_t>(n));
  }
  return factorize_big(n);
}

SquarefreeSplit squarefree_split(const BigInt& n) {
  require_positive(n, "squarefree_split");
  SquarefreeSplit s{1, 1};
  for (const PrimePower& pp : factorize(n)) {
    for (int i = 0; i < pp.exponent / 2; ++i) s.u *= pp.prime;
    if (pp.exponent % 2 == 1) s.w *= pp.prime;
  }
  return s;
}

bool is_prime_power(const BigInt& n) {
  require_positive(n, "is_prime_power");
  return factorize(n).size() == 1;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  Factorization f = factorize(n);
  return f.size() == 1 && f[0].exponent == 1;
}

BigInt multiply_out(const Factorization& f) {
  BigInt out = 1;
  for (const PrimePower& pp : f) out *= boost::multiprecision::pow(pp.prime, pp.exponent);
  return out;
}

std::string format_factorization(const Factorization& f) {
  if (f.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i > 0) os << " \\cdot ";
    os << f[i].prime;
    if (f[i].exponent > 1) os << '^' << f[i].exponent;
  }
  return os.str();
}

BigInt parse_factored(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw InputError("parse_factored: empty input");
  BigInt out = 1;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find("\\cdot", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = (end == std::string::npos) ? s.size() : end + 5;
    size_t caret = term.find('^');
    BigInt base = parse_bigint(term.substr(0, caret));
    int exponent = 1;
    if (caret != std::string::npos) {
      std::string e = term.substr(caret + 1);
      if (!e.empty() && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
      exponent = static_cast<int>(parse_bigint(e));
    }
    out *= boost::multiprecision::pow(base, exponent);
  }
  return out;
}

std::string to_string(const BigInt& n) { return n.str(); }

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw InputError("expected an integer, got an empty string");
  size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw InputError("expected an integer, got '" + text + "'");
  for (size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InputError("expected an integer, got '" + text + "'");
    }
  }
  return BigInt(text);
}

}  // namespace oddmtc
