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

#include "oddmtc/filters.h"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace oddmtc {
namespace {

// Value -> object count, values descending.
std::map<BigInt, int64_t, std::greater<>> tally(const std::vector<BigInt>& objects) {
  std::map<BigInt, int64_t, std::greater<>> out;
  for (const BigInt& d : objects) ++out[d];
  return out;
}

// Exact bin filling for the packing check. Bins are filled in order; a bin's
// contents are a count vector over the distinct dims.
class Packer {
 public:
  Packer(std::vector<BigInt> values, std::vector<int64_t> counts, std::vector<int64_t> bins,
         BigInt target)
      : values_(std::move(values)), squares_(values_.size()), bins_(std::move(bins)),
        target_(std::move(target)), counts_(std::move(counts)) {
    for (size_t i = 0; i < values_.size(); ++i) squares_[i] = values_[i] * values_[i];
  }

  bool solve() { return fill_bin(0); }

 private:
  bool fill_bin(size_t bin) {
    if (bin == bins_.size()) return true;
    std::pair<size_t, std::vector<int64_t>> key{bin, counts_};
    if (dead_.count(key)) return false;
    bool ok = choose(bin, 0, bins_[bin], target_);
    if (!ok) dead_.insert(std::move(key));
    return ok;
  }

  bool choose(size_t bin, size_t idx, int64_t slots, const BigInt& rest) {
    if (slots == 0) return rest == 0 && fill_bin(bin + 1);
    if (idx == values_.size() || rest <= 0) return false;
    // The remaining slots each hold at least the smallest dim left.
    if (squares_.back() * slots > rest) return false;
    if (squares_[idx] * slots < rest) return false;
    int64_t most = std::min<int64_t>(counts_[idx], slots);
    BigInt fit = rest / squares_[idx];
    if (fit < most) most = static_cast<int64_t>(fit);
    for (int64_t x = most; x >= 0; --x) {
      counts_[idx] -= x;
      bool ok = choose(bin, idx + 1, slots - x, rest - squares_[idx] * x);
      counts_[idx] += x;
      if (ok) return true;
    }
    return false;
  }

  std::vector<BigInt> values_;
  std::vector<BigInt> squares_;
  std::vector<int64_t> bins_;
  BigInt target_;
  std::vector<int64_t> counts_;
  std::set<std::pair<size_t, std::vector<int64_t>>> dead_;
};

// Whether target is a non-negative combination of coins (all positive).
bool representable(const BigInt& target, std::vector<BigInt> coins) {
  if (target == 0) return true;
  if (coins.empty()) return false;
  std::sort(coins.begin(), coins.end());
  const BigInt& base = coins.front();
  if (base <= (1 << 20)) {
    // Shortest paths over residues mod the smallest coin: dist[r] is the least
    // representable value congruent to r.
    const auto n = static_cast<size_t>(base);
    std::vector<BigInt> dist(n, BigInt(-1));
    using Item = std::pair<BigInt, size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[0] = 0;
    heap.push({BigInt(0), 0});
    while (!heap.empty()) {
      auto [d, r] = heap.top();
      heap.pop();
      if (d != dist[r] || d > target) continue;
      for (size_t i = 1; i < coins.size(); ++i) {
        BigInt nd = d + coins[i];
        auto nr = static_cast<size_t>(nd % base);
        if (dist[nr] < 0 || nd < dist[nr]) {
          dist[nr] = nd;
          heap.push({nd, nr});
        }
      }
    }
    const BigInt& best = dist[static_cast<size_t>(target % base)];
    return best >= 0 && best <= target;
  }
  std::function<bool(size_t, const BigInt&)> go = [&](size_t i, const BigInt& rest) {
    if (rest == 0) return true;
    if (i == coins.size()) return false;
    for (BigInt used = 0; used <= rest; used += coins[i]) {
      if (go(i + 1, rest - used)) return true;
    }
    return false;
  };
  return go(0, target);
}

}  // namespace

std::vector<BigInt> full_multiset(const std::vector<BigInt>& pair_dims) {
  std::vector<BigInt> out;
  out.reserve(2 * pair_dims.size());
  for (const BigInt& d : pair_dims) {
    out.push_back(d);
    out.push_back(d);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

FilterVerdict fixed_dim_multiplicity_filter(const std::vector<BigInt>& pair_dims, int64_t p) {
  for (const auto& [value, n] : tally(full_multiset(pair_dims))) {
    if (n % (2 * p) != 0 && value % p != 0) {
      return FilterVerdict::discard("multiplicity_not_2pk",
                                    std::string(kLemmaFixedDims) + "; " + kRemarkFixedDivisible);
    }
  }
  return FilterVerdict::pass();
}

FilterVerdict fixed_dim_multiplicity_filter(const DimSolution& solution, int64_t p) {
  return fixed_dim_multiplicity_filter(solution.dims, p);
}

std::vector<DeequivProfile> deequiv_profiles(const std::vector<BigInt>& adjoint_dims, int64_t p,
                                             const BigInt& adjoint_fpdim) {
  if (p < 3 || !is_prime(BigInt(p))) throw InputError("deequiv_profiles: p must be an odd prime");
  if (adjoint_fpdim <= 0 || adjoint_fpdim % p != 0) {
    throw InputError("deequiv_profiles: p must divide FPdim(C_ad)");
  }
  struct Slot {
    BigInt value;
    int64_t objects;
    std::vector<int64_t> nonfixed_options;
  };
  std::vector<Slot> slots;
  for (const auto& [value, n] : tally(full_multiset(adjoint_dims))) {
    Slot slot{value, n, {}};
    if (value % p != 0) {
      if (n % (2 * p) != 0) return {};
      slot.nonfixed_options.push_back(n);
    } else {
      for (int64_t r = 0; r <= n; r += 2 * p) slot.nonfixed_options.push_back(r);
    }
    slots.push_back(std::move(slot));
  }

  std::vector<DeequivProfile> out;
  std::vector<int64_t> choice(slots.size(), 0);
  std::function<void(size_t)> build = [&](size_t i) {
    if (i < slots.size()) {
      for (int64_t r : slots[i].nonfixed_options) {
        choice[i] = r;
        build(i + 1);
      }
      return;
    }
    DeequivProfile prof;
    prof.prime = p;
    prof.deequiv_fpdim = adjoint_fpdim / p;
    prof.invertible_count = 1;
    prof.result_dims.push_back(1);  // the orbit of the invertibles
    for (size_t j = 0; j < slots.size(); ++j) {
      const Slot& s = slots[j];
      int64_t fixed = s.objects - choice[j];
      for (int64_t f = 0; f < fixed; ++f) {
        prof.fixed_dims.push_back(s.value);
        for (int64_t c = 0; c < p; ++c) prof.result_dims.push_back(s.value / p);
      }
      if (s.value == p) prof.invertible_count += BigInt(p) * fixed;
      for (int64_t o = 0; o < choice[j] / p; ++o) {
        prof.nonfixed_orbit_dims.push_back(s.value);
        prof.result_dims.push_back(s.value);
      }
    }
    std::sort(prof.result_dims.begin(), prof.result_dims.end(), std::greater<>());
    prof.result_rank = static_cast<int64_t>(prof.result_dims.size());
    out.push_back(std::move(prof));
  };
  build(0);
  return out;
}

FilterVerdict deequiv_consistency_filter(const DeequivProfile& profile) {
  if (profile.deequiv_fpdim % profile.invertible_count != 0) {
    return FilterVerdict::discard("invertible_count_not_dividing", kLemmaDeequiv);
  }
  for (const BigInt& d : profile.result_dims) {
    if (profile.deequiv_fpdim % (d * d) != 0) {
      return FilterVerdict::discard("result_dim_not_dividing",
                                    std::string(kLemmaDeequiv) + "; [ENO2, Theorem 2.11]");
    }
  }
  return FilterVerdict::pass();
}

FilterVerdict outside_dim_uniformity(const DimSolution& solution, const GradingCase& grading) {
  const int64_t p = grading.invertibles;
  if (!is_prime(BigInt(p))) return FilterVerdict::not_applicable("invertible_count_not_prime");
  std::optional<int64_t> adjoint = grading.odd_multiplicity_rank();
  if (!adjoint) return FilterVerdict::not_applicable("adjoint_rank_undetermined");
  std::vector<int64_t> outside = grading.component_ranks;
  outside.erase(std::find(outside.begin(), outside.end(), *adjoint));
  if (std::any_of(outside.begin(), outside.end(), [p](int64_t r) { return r != p; })) {
    return FilterVerdict::not_applicable("outside_ranks_not_p");
  }
  const BigInt p2 = BigInt(p) * p;
  if (solution.fpdim % p2 != 0) {
    return FilterVerdict::discard("no_integral_outside_dim", kCorollarySameDim);
  }
  IsqrtResult root = isqrt_exact(solution.fpdim / p2);
  if (!root.is_perfect_square) {
    return FilterVerdict::discard("no_integral_outside_dim", kCorollarySameDim);
  }
  std::vector<BigInt> objects = full_multiset(solution.dims);
  int64_t have = std::count(objects.begin(), objects.end(), root.root);
  if (have < p * (p - 1)) {
    return FilterVerdict::discard("too_few_outside_objects", kCorollarySameDim);
  }
  return FilterVerdict::pass();
}

FilterVerdict component_packing_feasible(const DimSolution& solution, const GradingCase& grading) {
  const int64_t s = grading.invertibles;
  if (s == 1) return FilterVerdict::pass("single_component");
  if (solution.fpdim % s != 0) {
    return FilterVerdict::discard("fpdim_not_divisible", kPackingCitation);
  }
  std::vector<BigInt> objects = full_multiset(solution.dims);
  for (int64_t i = 0; i < solution.invertibles; ++i) objects.push_back(1);
  if (static_cast<int64_t>(objects.size()) != grading.rank) {
    return FilterVerdict::not_applicable("solution_is_not_the_whole_category");
  }
  std::vector<BigInt> values;
  std::vector<int64_t> counts;
  for (const auto& [v, n] : tally(objects)) {
    values.push_back(v);
    counts.push_back(n);
  }
  Packer packer(values, counts, grading.component_ranks, solution.fpdim / s);
  if (!packer.solve()) return FilterVerdict::discard("no_component_packing", kPackingCitation);
  return FilterVerdict::pass();
}

FilterVerdict dual_product_feasible(const std::vector<BigInt>& available_dims, const BigInt& d) {
  if (d < 3 || d % 2 == 0) throw InputError("dual_product_feasible: d must be odd and at least 3");
  const BigInt target = (d * d - 1) / 2;
  std::set<BigInt> coins;
  for (const BigInt& e : available_dims) {
    if (e >= 1 && e <= target) coins.insert(e);
  }
  if (representable(target, {coins.begin(), coins.end()})) return FilterVerdict::pass();
  return FilterVerdict::discard("dual_product_infeasible", kDualProductCitation);
}

bool forced_pointed(const BigInt& fpdim) {
  if (fpdim < 1) throw InputError("forced_pointed: fpdim must be positive");
  int squared = 0;
  for (const PrimePower& pp : factorize(fpdim)) {
    if (pp.exponent == 1) continue;
    if (pp.exponent > 4 || ++squared > 1) return false;
  }
  return true;
}

FilterVerdict solvable_needs_invertible(const BigInt& fpdim, const std::vector<BigInt>& dims) {
  if (factorize(fpdim).size() > 2) return FilterVerdict::not_applicable("three_or_more_primes");
  int64_t ones = std::count(dims.begin(), dims.end(), BigInt(1));
  if (ones >= 2 || ones == static_cast<int64_t>(dims.size())) return FilterVerdict::pass();
  return FilterVerdict::discard("solvable_without_invertible", kSolvableCitation);
}

bool semidirect_condition(int64_t p, int64_t q, int a) {
  if (p == q || p < 3 || q < 3 || !is_prime(BigInt(p)) || !is_prime(BigInt(q))) {
    throw InputError("semidirect_condition: p and q must be distinct odd primes");
  }
  if (a < 1 || a > 4) throw InputError("semidirect_condition: exponent must lie in [1, 4]");
  return (q - 1) % p == 0 || (p - 1) % q == 0;
}

}  // namespace oddmtc
