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

#include "oddmtc/dimsearch.h"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <limits>
#include <sstream>
#include <thread>

namespace oddmtc {
namespace {

// Thrown by the native-integer path; the branch is redone with BigInt.
struct Overflow {};

struct NativeOps {
  using T = __int128;
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T isqrt(T n) { return static_cast<T>(isqrt_u128(static_cast<unsigned __int128>(n))); }
  // Operands are non-negative; 64-bit division is much cheaper when it fits.
  static bool narrow(T a, T b) { return ((a | b) >> 63) == 0; }
  static T div(T a, T b) {
    return narrow(a, b) ? T(uint64_t(a) / uint64_t(b)) : a / b;
  }
  static T mod(T a, T b) {
    return narrow(a, b) ? T(uint64_t(a) % uint64_t(b)) : a % b;
  }
  static T gcd(T a, T b) {
    while (!narrow(a, b) && b != 0) {
      T t = a % b;
      a = b;
      b = t;
    }
    uint64_t x = uint64_t(a), y = uint64_t(b);
    if (x == 0 || y == 0) return T(x | y);
    int shift = __builtin_ctzll(x | y);
    x >>= __builtin_ctzll(x);
    while (y != 0) {
      y >>= __builtin_ctzll(y);
      if (x > y) std::swap(x, y);
      y -= x;
    }
    return T(x << shift);
  }
  static T from(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<int64_t>::max())) throw Overflow{};
    return static_cast<T>(static_cast<int64_t>(v));
  }
  static BigInt to_big(T v) {
    // Values reaching solutions are positive.
    unsigned __int128 u = static_cast<unsigned __int128>(v);
    BigInt hi = static_cast<uint64_t>(u >> 64);
    BigInt lo = static_cast<uint64_t>(u);
    return (hi << 64) | lo;
  }
};

struct BigOps {
  using T = BigInt;
  static T mul(const T& a, const T& b) { return a * b; }
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T isqrt(const T& n) { return boost::multiprecision::sqrt(n); }
  static T gcd(const T& a, const T& b) { return boost::multiprecision::gcd(a, b); }
  static T div(const T& a, const T& b) { return a / b; }
  static T mod(const T& a, const T& b) { return a % b; }
  static T from(const BigInt& v) { return v; }
  static BigInt to_big(const T& v) { return v; }
};

// Constants of one search, shared by all branches.
struct Context {
  int64_t k = 0;
  int64_t s = 0;      // invertibles of the searched layer
  int64_t t = 9;      // 225 in the perfect case
  int64_t dmin2 = 9;  // smallest admissible d^2
  int64_t group = 1;
  bool perfect = false;
  std::optional<int64_t> coprime;
  std::optional<BigInt> bound;
  int64_t min_run = 1;
  uint64_t budget = 0;
  std::atomic<uint64_t>* spent = nullptr;  // shared by all branches when budgeted
};

struct BudgetHit {};

Context make_context(const SearchParams& p) {
  Context c;
  c.k = p.pairs();
  c.s = p.layer_invertibles();
  c.perfect = p.perfect();
  c.t = c.perfect ? 225 : 9;
  c.dmin2 = c.perfect ? 225 : 9;
  c.group = p.group_order();
  c.coprime = p.mi_coprime;
  c.bound = p.fpdim_bound;
  c.min_run = p.min_run;
  return c;
}

// Depth-first search below one m1. The normalized state q = c_i / u_i^2 is
// kept as a / (|G| l^2) with l = lcm(u_1, ..., u_i), so no fraction is ever
// reduced; the next step uses q - 2/u^2.
template <typename Ops>
class Branch {
 public:
  using T = typename Ops::T;

  Branch(const Context& ctx, int64_t m1, std::vector<DimSolution>* out, uint64_t* nodes)
      : ctx_(ctx), m1_(m1), out_(out), nodes_(nodes) {}

  void run() {
    SquarefreeSplit split = squarefree_split(BigInt(m1_));
    w_ = Ops::from(split.w);
    T u1 = Ops::from(split.u);
    if (ctx_.coprime && (m1_ % *ctx_.coprime == 0)) return;
    // c_1 = m1 / |G| - 2 must be positive.
    if (m1_ <= 2 * ctx_.group) return;
    us_.assign(1, u1);
    if (ctx_.bound) {
      BigInt cap = *ctx_.bound / (BigInt(ctx_.dmin2) * split.w);
      // A looser cap only weakens pruning.
      bound_u2_ = Ops::from(std::min(cap, BigInt(std::numeric_limits<int64_t>::max())));
      if (Ops::mul(u1, u1) > *bound_u2_) return;
      // Every u_i^2 w divides FPdim, hence so does lcm(u_i)^2 w.
      BigInt lcap = isqrt_exact(BigInt(*ctx_.bound / split.w)).root;
      lcm_cap_ = Ops::from(std::min(lcap, BigInt(std::numeric_limits<int64_t>::max())));
    }
    descend(T(m1_ - 2 * ctx_.group), u1);
  }

  // How many copies of the next u the tail must hold: `same` when it repeats
  // u_prev, `fresh` otherwise; 0 rules the choice out.
  struct Copies {
    int64_t same = 1;
    int64_t fresh = 1;
  };

  // Emits every admissible (u, a', l') below state (a, l) with u >= u_prev.
  template <typename F>
  static void expand(const Context& ctx, const T& a, const T& l, const T u_prev,
                     int64_t remaining, const std::optional<T>& bound_u2, Copies copies,
                     F&& visit) {
    const T t(ctx.t);
    const T g2 = T(2 * ctx.group);
    const T b = Ops::mul(T(ctx.group), Ops::mul(l, l));
    T hi2 = Ops::mul(T(ctx.s + 2 * ctx.t * remaining), b);
    hi2 = Ops::div(hi2, Ops::mul(t, a));
    if (bound_u2 && *bound_u2 < hi2) hi2 = *bound_u2;
    T u_max = Ops::isqrt(hi2);
    // c copies of u in the tail need q > 2c/u^2, i.e. u^2 >= floor(2cb/a) + 1.
    auto lowest = [&](int64_t c) { return Ops::isqrt(Ops::div(Ops::mul(T(2 * c), b), a)) + 1; };
    auto emit = [&](const T& u) {
      if (ctx.coprime && Ops::mod(u, T(*ctx.coprime)) == 0) return;
      // l' = l f with f = u / gcd(l, u); then a' = a f^2 - 2|G| (l / gcd)^2.
      T r = Ops::mod(l, u);
      T na, nl;
      if (r == 0) {
        T h = Ops::div(l, u);
        na = Ops::sub(a, Ops::mul(g2, Ops::mul(h, h)));
        nl = l;
      } else {
        T g = Ops::gcd(u, r);
        T f = Ops::div(u, g);
        T h = Ops::div(l, g);
        na = Ops::sub(Ops::mul(a, Ops::mul(f, f)), Ops::mul(g2, Ops::mul(h, h)));
        nl = Ops::mul(l, f);
      }
      if (na > 0) visit(u, na, nl);
    };
    if (copies.same > 0 && u_prev <= u_max && lowest(copies.same) <= u_prev) emit(u_prev);
    if (copies.fresh == 0) return;
    T u = std::max<T>(u_prev + 2, lowest(copies.fresh));
    if (u % 2 == 0) u = u + 1;
    for (; u <= u_max; u = u + 2) emit(u);
  }

 private:
  void descend(const T& a, const T& l) {
    if ((++*nodes_ & 1023) == 0 && ctx_.spent &&
        ctx_.spent->fetch_add(1024, std::memory_order_relaxed) + 1024 > ctx_.budget) {
      throw BudgetHit{};
    }
    const int64_t depth = static_cast<int64_t>(us_.size());
    if (depth == ctx_.k) {
      finish(a, l);
      return;
    }
    // Equal u's are equal dims. Once too few positions are left for a fresh
    // run, the next u must belong to the run that reaches min_run.
    Copies copies;
    const int64_t after = ctx_.k - depth - 1;
    if (best_run_ < ctx_.min_run && after < ctx_.min_run) {
      copies.same = (ctx_.min_run - run_ <= after + 1) ? ctx_.min_run - run_ : 0;
      copies.fresh = (ctx_.min_run <= after + 1) ? ctx_.min_run : 0;
      if (copies.same == 0 && copies.fresh == 0) return;
    }
    expand(ctx_, a, l, us_.back(), ctx_.k - depth, bound_u2_, copies,
           [&](const T& u, const T& na, const T& nl) {
      if (lcm_cap_ && nl > *lcm_cap_) return;
      const int64_t saved_run = run_, saved_best = best_run_;
      run_ = (u == us_.back()) ? run_ + 1 : 1;
      best_run_ = std::max(best_run_, run_);
      us_.push_back(u);
      descend(na, nl);
      us_.pop_back();
      run_ = saved_run;
      best_run_ = saved_best;
    });
  }

  // c_k = s / d_k^2, so d_k^2 = s |G| (l / u_k)^2 / a; then d_i^2 = d_k^2 u_k^2 / u_i^2.
  void finish(const T& a, const T& l) {
    const T& uk = us_.back();
    T h = Ops::div(l, uk);
    T num = Ops::mul(T(ctx_.s * ctx_.group), Ops::mul(h, h));
    if (Ops::mod(num, a) != 0) return;
    T dk2 = Ops::div(num, a);
    if (dk2 < T(ctx_.dmin2)) return;
    T fpdim = Ops::mul(Ops::mul(dk2, Ops::mul(uk, uk)), w_);
    if (ctx_.bound && Ops::to_big(fpdim) > *ctx_.bound) return;
    std::vector<BigInt> dims;
    dims.reserve(us_.size());
    for (const T& u : us_) {
      T m = Ops::mul(Ops::mul(u, u), w_);
      if (Ops::mod(fpdim, m) != 0) return;
      T d2 = Ops::div(fpdim, m);
      T d = Ops::isqrt(d2);
      if (d * d != d2 || d % 2 == 0) return;
      dims.push_back(Ops::to_big(d));
    }
    if (ctx_.perfect) {
      for (const BigInt& d : dims) {
        if (d < 15 || is_prime_power(d)) return;
      }
    }
    if (!has_equal_run(dims, ctx_.min_run)) return;
    out_->push_back(make_solution(Ops::to_big(fpdim), ctx_.s, std::move(dims)));
  }

  const Context& ctx_;
  int64_t m1_;
  std::vector<DimSolution>* out_;
  uint64_t* nodes_;
  T w_{1};
  std::vector<T> us_;
  std::optional<T> bound_u2_;
  std::optional<T> lcm_cap_;
  int64_t run_ = 1;
  int64_t best_run_ = 1;
};

bool exceeds_rational(int64_t m1, const SearchParams& p, int64_t t) {
  // m1 <= (2kt + s) * |G| / t, compared without division.
  BigInt lhs = BigInt(m1) * t;
  BigInt rhs = (BigInt(2) * p.pairs() * t + p.layer_invertibles()) * p.group_order();
  return lhs > rhs;
}

}  // namespace

void SearchParams::validate() const {
  auto odd_positive = [](int64_t v) { return v > 0 && v % 2 == 1; };
  if (!odd_positive(rank)) throw InputError("rank must be an odd positive integer");
  if (!odd_positive(invertibles)) throw InputError("invertibles must be an odd positive integer");
  if (mode == Mode::kBasic) {
    if (rank <= invertibles) {
      throw InputError("rank must exceed the invertible count (no non-invertible simples to search)");
    }
  } else {
    if (!odd_positive(adjoint_rank)) throw InputError("adjoint rank must be an odd positive integer");
    if (!odd_positive(adjoint_invertibles)) {
      throw InputError("adjoint invertibles must be an odd positive integer");
    }
    if (adjoint_rank <= adjoint_invertibles) {
      throw InputError("adjoint rank must exceed the adjoint invertible count");
    }
    if (invertibles % adjoint_invertibles != 0) {
      throw InputError("adjoint invertibles must divide the invertible count");
    }
  }
  if (min_m1 < 1) throw InputError("min_m1 must be positive");
  if (min_run < 1) throw InputError("min_run must be positive");
  if (mi_coprime && !is_prime(BigInt(*mi_coprime))) throw InputError("mi_coprime must be a prime");
  if (fpdim_bound && *fpdim_bound < 1) throw InputError("fpdim bound must be positive");
  if (jobs < 0) throw InputError("jobs must be non-negative");
}

int64_t SearchParams::layer_invertibles() const {
  return mode == Mode::kBasic ? invertibles : adjoint_invertibles;
}

int64_t SearchParams::group_order() const { return mode == Mode::kBasic ? 1 : invertibles; }

int64_t SearchParams::pairs() const {
  return mode == Mode::kBasic ? (rank - invertibles) / 2 : (adjoint_rank - adjoint_invertibles) / 2;
}

bool SearchParams::perfect() const { return invertibles == 1; }

bool canonical_less(const DimSolution& a, const DimSolution& b) {
  if (a.fpdim != b.fpdim) return a.fpdim > b.fpdim;
  return std::lexicographical_compare(b.dims.begin(), b.dims.end(), a.dims.begin(), a.dims.end());
}

void canonical_sort(std::vector<DimSolution>& v) { std::sort(v.begin(), v.end(), canonical_less); }

DimSolution make_solution(const BigInt& fpdim, int64_t invertibles, std::vector<BigInt> dims) {
  DimSolution s;
  s.fpdim = fpdim;
  s.invertibles = invertibles;
  s.quotients.reserve(dims.size());
  for (const BigInt& d : dims) s.quotients.push_back(fpdim / (d * d));
  s.dims = std::move(dims);
  return s;
}

bool has_equal_run(const std::vector<BigInt>& dims, int64_t length) {
  if (length <= 1) return true;
  int64_t run = 0;
  for (size_t i = 0; i < dims.size(); ++i) {
    run = (i > 0 && dims[i] == dims[i - 1]) ? run + 1 : 1;
    if (run >= length) return true;
  }
  return false;
}

std::vector<int64_t> m1_candidates(const SearchParams& params) {
  params.validate();
  const int64_t t = params.perfect() ? 225 : 9;
  int64_t start = std::max(params.invertibles, params.min_m1);
  const int64_t residue = params.rank % 8;
  while (start % 8 != residue) ++start;
  std::vector<int64_t> out;
  for (int64_t m1 = start; !exceeds_rational(m1, params, t); m1 += 8) {
    if (params.m1_excluded.count(m1)) continue;
    if (params.m1_square && !isqrt_exact(BigInt(m1)).is_perfect_square) continue;
    out.push_back(m1);
  }
  return out;
}

std::vector<LevelStep> next_level(const Rational& c_prev, const BigInt& u_prev, int64_t remaining,
                                  const SearchParams& params) {
  if (c_prev.num <= 0 || c_prev.den <= 0) throw InputError("next_level: c_prev must be positive");
  if (remaining < 1) throw InputError("next_level: remaining must be at least 1");
  Context ctx = make_context(params);
  // q = num / (den u_prev^2) = a / (|G| l^2) with l = den u_prev.
  BigInt l = c_prev.den * u_prev;
  BigInt a = c_prev.num * ctx.group * c_prev.den;
  std::vector<LevelStep> out;
  Branch<BigOps>::expand(ctx, a, l, u_prev, remaining, std::nullopt, {},
                         [&](const BigInt& u, const BigInt& na, const BigInt& nl) {
                           // c_next = q u^2 - 2 = na u^2 / (|G| nl^2)
                           BigInt num = na * u * u;
                           BigInt den = BigInt(ctx.group) * nl * nl;
                           BigInt g = boost::multiprecision::gcd(num, den);
                           out.push_back({u, Rational{num / g, den / g}});
                         });
  return out;
}

std::vector<DimSolution> enumerate(const SearchParams& params, SearchStats* stats) {
  params.validate();
  Context ctx = make_context(params);
  std::atomic<uint64_t> spent{0};
  std::atomic<bool> exhausted{false};
  if (params.node_budget) {
    ctx.budget = *params.node_budget;
    ctx.spent = &spent;
  }
  std::vector<int64_t> seeds = m1_candidates(params);
  if (ctx.bound) {
    std::erase_if(seeds, [&](int64_t m1) { return BigInt(m1) * ctx.dmin2 > *ctx.bound; });
  }

  std::vector<std::vector<DimSolution>> per_seed(seeds.size());
  std::vector<uint64_t> nodes(seeds.size(), 0);
  std::vector<uint8_t> retried(seeds.size(), 0);
  auto work = [&](size_t i) {
    if (exhausted) return;
    try {
      try {
        Branch<NativeOps>(ctx, seeds[i], &per_seed[i], &nodes[i]).run();
      } catch (const Overflow&) {
        per_seed[i].clear();
        nodes[i] = 0;
        retried[i] = 1;
        Branch<BigOps>(ctx, seeds[i], &per_seed[i], &nodes[i]).run();
      }
    } catch (const BudgetHit&) {
      exhausted = true;
    }
  };

  const size_t workers = std::min<size_t>(std::max(params.jobs, 1), seeds.size());
  if (workers <= 1) {
    for (size_t i = 0; i < seeds.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (size_t i = next++; i < seeds.size(); i = next++) work(i);
      });
    }
    for (std::thread& th : pool) th.join();
  }
  if (exhausted) {
    throw SearchBudgetExceeded(describe(params) + ": node budget of " +
                               std::to_string(ctx.budget) + " exhausted");
  }

  std::vector<DimSolution> out;
  for (auto& v : per_seed) {
    for (auto& s : v) out.push_back(std::move(s));
  }
  canonical_sort(out);
  assert(std::adjacent_find(out.begin(), out.end()) == out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (stats) {
    for (size_t i = 0; i < seeds.size(); ++i) {
      stats->nodes += nodes[i];
      stats->overflow_retries += retried[i];
    }
  }
  return out;
}

std::string invariant_violation(const DimSolution& solution, const SearchParams& params) {
  const BigInt& f = solution.fpdim;
  if (f <= 0 || f % 2 == 0) return "fpdim must be odd and positive";
  if (solution.invertibles != params.layer_invertibles()) return "invertible count differs from the layer";
  if (static_cast<int64_t>(solution.dims.size()) != params.pairs()) return "wrong number of dims";
  if (solution.quotients.size() != solution.dims.size()) return "quotients do not match dims";
  if (f % 8 != params.rank % 8) return "fpdim not congruent to the rank mod 8";
  BigInt layer = solution.invertibles;
  for (size_t i = 0; i < solution.dims.size(); ++i) {
    const BigInt& d = solution.dims[i];
    if (d < 3 || d % 2 == 0) return "dims must be odd and at least 3";
    if (i > 0 && d > solution.dims[i - 1]) return "dims must be non-increasing";
    if (f % (d * d) != 0) return "d_i^2 does not divide fpdim";
    if (solution.quotients[i] != f / (d * d)) return "quotient differs from fpdim / d_i^2";
    if (solution.quotients[i] % 2 == 0) return "m_i must be odd";
    layer += 2 * d * d;
  }
  if (layer * params.group_order() != f) return "layer equation fails";
  return {};
}

std::string describe(const SearchParams& p) {
  std::ostringstream os;
  if (p.mode == Mode::kBasic) {
    os << "basic rank=" << p.rank << " invertibles=" << p.invertibles;
  } else {
    os << "adjoint rank=" << p.rank << " gc=" << p.invertibles << " adjoint_rank=" << p.adjoint_rank
       << " adjoint_invertibles=" << p.adjoint_invertibles;
  }
  if (p.min_m1 > 1) os << " min_m1=" << p.min_m1;
  if (p.m1_square) os << " m1_square";
  if (!p.m1_excluded.empty()) {
    os << " m1_exclude=";
    bool first = true;
    for (int64_t v : p.m1_excluded) {
      os << (first ? "" : ",") << v;
      first = false;
    }
  }
  if (p.mi_coprime) os << " mi_coprime=" << *p.mi_coprime;
  if (p.min_run > 1) os << " min_run=" << p.min_run;
  if (p.fpdim_bound) os << " fpdim_bound=" << *p.fpdim_bound;
  return os.str();
}

}  // namespace oddmtc
