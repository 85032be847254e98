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

#include "oddmtc/classify.h"

#include <algorithm>
#include <map>
#include <set>

#include "oddmtc/goldens.h"

namespace oddmtc {
namespace {

constexpr char kDimGeneration[] = "Algorithm \"dim generation\"";
constexpr char kCadDimGeneration[] = "Algorithm \"Cad dim generation\"";
constexpr char kOpenNote[] = "left open by the classification theorem";

// Cases whose treatment is fixed by hand rather than derived from the shape.
struct Recipe {
  enum class Action { kOpen, kRun };
  int64_t rank;
  int64_t invertibles;
  std::vector<int64_t> components;
  Action action;
  LayerKind kind;
  std::vector<std::string> tables;  // golden ids whose parameters are searched
  std::string note;
};

const std::vector<Recipe>& recipes() {
  using A = Recipe::Action;
  static const std::vector<Recipe> table = {
      {25, 3, {19, 3, 3}, A::kRun, LayerKind::kWholeUniform, {"T1"}, ""},
      {27, 3, {9, 9, 9}, A::kRun, LayerKind::kWhole, {}, ""},
      {33, 3, {27, 3, 3}, A::kOpen, LayerKind::kWholeUniform, {}, kOpenNote},
      {35, 3, {17, 9, 9}, A::kRun, LayerKind::kAdjoint, {"T2"}, ""},
      {41, 3, {35, 3, 3}, A::kOpen, LayerKind::kWholeUniform, {}, kOpenNote},
      {41, 5, {21, 5, 5, 5, 5}, A::kRun, LayerKind::kWholeUniform, {"T3"}, ""},
      {43, 9, {19, 3, 3, 3, 3, 3, 3, 3, 3}, A::kRun, LayerKind::kAdjoint, {"T4"}, ""},
      {43, 3, {25, 9, 9}, A::kRun, LayerKind::kAdjoint, {"T5"}, ""},
      {45, 3, {15, 15, 15}, A::kRun, LayerKind::kAdjoint, {"T6"}, ""},
      {47, 15, {17, 9, 9, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, A::kRun, LayerKind::kWhole, {}, ""},
      {49, 3, {43, 3, 3}, A::kOpen, LayerKind::kWholeUniform, {}, kOpenNote},
      {49, 5, {29, 5, 5, 5, 5}, A::kOpen, LayerKind::kAdjoint, {"T7", "T8"},
       std::string(kOpenNote) + " when 7 divides FPdim(C); the searched sub-hypotheses are "
                                "reported below"},
  };
  return table;
}

const Recipe* find_recipe(const GradingCase& c) {
  for (const Recipe& r : recipes()) {
    if (r.rank == c.rank && r.invertibles == c.invertibles && r.components == c.component_ranks) {
      return &r;
    }
  }
  return nullptr;
}

bool whole_uniform_shape(const GradingCase& c) {
  if (!is_prime(BigInt(c.invertibles))) return false;
  std::optional<int64_t> adjoint = c.odd_multiplicity_rank();
  if (!adjoint) return false;
  int64_t outside = 0;
  for (int64_t r : c.component_ranks) {
    if (r == c.invertibles) ++outside;
  }
  int64_t expected = c.invertibles - 1 + (*adjoint == c.invertibles ? 1 : 0);
  return outside == expected;
}

int64_t smallest_odd_square_above(int64_t x) {
  int64_t n = 1;
  while (n * n <= x) n += 2;
  return n * n;
}

// Both factors are primes; alpha is the exponent of q.
struct TwoPrimeShape {
  int64_t q;
  int alpha;
};

std::optional<TwoPrimeShape> p2_q_alpha(const BigInt& fpdim, int64_t p) {
  Factorization f = factorize(fpdim);
  if (f.size() != 2) return std::nullopt;
  const PrimePower* at_p = nullptr;
  const PrimePower* other = nullptr;
  for (const PrimePower& pp : f) (pp.prime == p ? at_p : other) = &pp;
  if (!at_p || !other || at_p->exponent != 2) return std::nullopt;
  if (other->exponent < 1 || other->exponent > 4) return std::nullopt;
  return TwoPrimeShape{static_cast<int64_t>(other->prime), other->exponent};
}

FilterVerdict semidirect_step(const DimSolution& solution, int64_t p) {
  std::optional<TwoPrimeShape> shape = p2_q_alpha(solution.fpdim, p);
  if (!shape) return FilterVerdict::not_applicable("fpdim_not_p2_q_alpha");
  if (semidirect_condition(p, shape->q, shape->alpha)) {
    return FilterVerdict::pass("realized_by_semidirect_product");
  }
  return FilterVerdict::discard("no_semidirect_product", kSemidirectCitation);
}

FilterVerdict deequiv_layer_step(const std::vector<DeequivProfile>& profiles) {
  int consistent = 0;
  for (const DeequivProfile& prof : profiles) {
    if (deequiv_consistency_filter(prof).discarded()) continue;
    ++consistent;
    bool nontrivial = std::any_of(prof.result_dims.begin(), prof.result_dims.end(),
                                  [](const BigInt& d) { return d > 1; });
    if (forced_pointed(prof.deequiv_fpdim) && nontrivial) continue;
    if (solvable_needs_invertible(prof.deequiv_fpdim, prof.result_dims).discarded()) continue;
    return FilterVerdict::pass();
  }
  if (consistent == 0) return FilterVerdict::not_applicable("no_consistent_profile");
  return FilterVerdict::discard("every_deequivariantization_fails",
                                std::string(kPointedCitation) + "; " + kSolvableCitation);
}

FilterVerdict dual_product_step(const AdjointPart& part, int64_t a) {
  std::set<BigInt> seen;
  for (const BigInt& d : part.dims) {
    if (!seen.insert(d).second || boost::multiprecision::gcd(d, BigInt(a)) != 1) continue;
    FilterVerdict v = dual_product_feasible(part.dims, d);
    if (v.discarded()) {
      v.reason += " (d=" + d.str() + ")";
      return v;
    }
  }
  return FilterVerdict::pass();
}

ItemStatus item_status(const std::vector<FilterStep>& trail) {
  for (const FilterStep& s : trail) {
    if (s.verdict.discarded()) return ItemStatus::kDiscarded;
  }
  for (const FilterStep& s : trail) {
    if (s.filter == "semidirect" && s.verdict.verdict == Verdict::kPass) {
      return ItemStatus::kSurvives;
    }
  }
  return ItemStatus::kNeedsManualAnalysis;
}

ItemStatus aggregate(const std::vector<ItemStatus>& statuses) {
  if (statuses.empty()) return ItemStatus::kDiscarded;
  if (std::count(statuses.begin(), statuses.end(), ItemStatus::kSurvives)) {
    return ItemStatus::kSurvives;
  }
  if (std::count(statuses.begin(), statuses.end(), ItemStatus::kNeedsManualAnalysis)) {
    return ItemStatus::kNeedsManualAnalysis;
  }
  return ItemStatus::kDiscarded;
}

SearchRun run_search(std::string label, SearchParams params, const LayerContext& layer, int jobs) {
  SearchRun run;
  run.label = std::move(label);
  params.jobs = jobs;
  run.params = params;
  std::vector<DimSolution> found;
  try {
    found = enumerate(params);
  } catch (const SearchBudgetExceeded&) {
    run.outcome = FilterVerdict::not_applicable("node_budget_exhausted");
    return run;
  }
  if (found.empty()) {
    run.outcome = FilterVerdict::discard(
        "no_potential_solutions", params.mode == Mode::kBasic ? kDimGeneration : kCadDimGeneration);
    return run;
  }
  run.outcome = FilterVerdict::pass();
  for (DimSolution& s : found) {
    SolutionItem item;
    item.trail = run_filter_chain(s, layer);
    item.status = item_status(item.trail);
    item.solution = std::move(s);
    run.items.push_back(std::move(item));
  }
  return run;
}

ItemStatus search_status(const SearchRun& run) {
  if (run.outcome.discarded()) return ItemStatus::kDiscarded;
  if (run.outcome.verdict == Verdict::kNotApplicable) return ItemStatus::kNeedsManualAnalysis;
  std::vector<ItemStatus> s;
  for (const SolutionItem& item : run.items) s.push_back(item.status);
  return aggregate(s);
}

LayerContext layer_for(LayerKind kind, const GradingCase& c, int64_t a) {
  LayerContext layer;
  layer.kind = kind;
  layer.grading = c;
  layer.group_order = c.invertibles;
  layer.adjoint_invertibles = a;
  return layer;
}

CaseReport classify_case(const GradingCase& c, const ClassifyOptions& options,
                         std::vector<std::string>& assumptions) {
  CaseReport report;
  report.grading = apply_grading_filters(c);
  if (!report.grading.survives()) {
    report.status = ItemStatus::kDiscarded;
    return report;
  }
  const int64_t rank = c.rank;
  const int64_t s = c.invertibles;
  const int64_t adjoint_rank = *c.odd_multiplicity_rank();
  const std::string where = "rank " + std::to_string(rank) + ", " + std::to_string(s) +
                            " invertibles, case " + c.to_string();
  std::vector<ItemStatus> statuses;

  if (const Recipe* r = find_recipe(c)) {
    report.note = r->note;
    std::vector<GoldenTable> goldens;
    if (!r->tables.empty()) goldens = load_goldens();
    int64_t a = r->kind == LayerKind::kAdjoint ? 0 : s;
    for (const std::string& id : r->tables) {
      const GoldenTable& t = find_table(goldens, id);
      int64_t table_a = t.params.mode == Mode::kAdjoint ? t.params.adjoint_invertibles : a;
      report.searches.push_back(
          run_search(id, t.params, layer_for(r->kind, c, table_a), options.jobs));
    }
    if (r->rank == 27 && r->invertibles == 3) {
      SearchParams p;
      p.rank = rank;
      p.invertibles = s;
      p.min_m1 = 5;
      assumptions.push_back(where +
                            ": m1 = 3 excluded, since a component of FPdim d1^2 cannot hold "
                            "X1 and eight further simples ([ENO1, Proposition 8.20])");
      report.searches.push_back(run_search("", p, layer_for(r->kind, c, s), options.jobs));
    }
    if (r->rank == 47 && r->invertibles == 15) {
      SearchParams p;
      p.rank = rank;
      p.invertibles = s;
      report.searches.push_back(run_search("", p, layer_for(r->kind, c, s), options.jobs));
    }
    for (const SearchRun& run : report.searches) statuses.push_back(search_status(run));
    report.status = r->action == Recipe::Action::kOpen ? ItemStatus::kSurvives
                                                       : aggregate(statuses);
    return report;
  }

  if (whole_uniform_shape(c)) {
    SearchParams p;
    p.rank = rank;
    p.invertibles = s;
    p.m1_square = true;
    p.min_m1 = smallest_odd_square_above(2 * s);
    p.node_budget = options.node_budget;
    assumptions.push_back(where + ": m1 restricted to odd perfect squares >= " +
                          std::to_string(p.min_m1) + " (" + kCorollarySameDim + ")");
    report.searches.push_back(
        run_search("", p, layer_for(LayerKind::kWholeUniform, c, s), options.jobs));
  } else {
    for (int64_t a : feasible_adjoint_orders(c)) {
      SearchParams p;
      p.mode = Mode::kAdjoint;
      p.rank = rank;
      p.invertibles = s;
      p.adjoint_rank = adjoint_rank;
      p.adjoint_invertibles = a;
      p.node_budget = options.node_budget;
      report.searches.push_back(
          run_search("", p, layer_for(LayerKind::kAdjoint, c, a), options.jobs));
    }
  }
  for (const SearchRun& run : report.searches) {
    statuses.push_back(search_status(run));
    if (run.outcome.verdict == Verdict::kNotApplicable) {
      report.note = "a search exhausted its node budget; the case needs an argument outside "
                    "the mechanized filters";
    }
  }
  report.status = aggregate(statuses);
  return report;
}

}  // namespace

const char* status_name(ItemStatus s) {
  switch (s) {
    case ItemStatus::kSurvives:
      return "SURVIVES";
    case ItemStatus::kDiscarded:
      return "DISCARDED";
    case ItemStatus::kNeedsManualAnalysis:
      return "NEEDS_MANUAL_ANALYSIS";
  }
  return "?";
}

std::optional<AdjointPart> adjoint_part(const DimSolution& solution, const LayerContext& layer) {
  switch (layer.kind) {
    case LayerKind::kAdjoint:
      return AdjointPart{solution.dims, solution.fpdim / layer.group_order};
    case LayerKind::kWhole:
      return std::nullopt;
    case LayerKind::kWholeUniform:
      break;
  }
  const int64_t p = layer.group_order;
  const BigInt p2 = BigInt(p) * p;
  if (solution.fpdim % p2 != 0) return std::nullopt;
  IsqrtResult root = isqrt_exact(solution.fpdim / p2);
  if (!root.is_perfect_square) return std::nullopt;
  AdjointPart part;
  part.fpdim = solution.fpdim / p;
  int64_t to_remove = p * (p - 1) / 2;
  for (const BigInt& d : solution.dims) {
    if (d == root.root && to_remove > 0) {
      --to_remove;
      continue;
    }
    part.dims.push_back(d);
  }
  if (to_remove > 0) return std::nullopt;
  return part;
}

std::vector<FilterStep> run_filter_chain(const DimSolution& solution, const LayerContext& layer) {
  std::vector<FilterStep> trail;
  auto add = [&](const char* name, FilterVerdict v) {
    trail.push_back({name, std::move(v)});
    return trail.back().verdict.discarded();
  };
  const int64_t g = layer.group_order;
  const int64_t a = layer.adjoint_invertibles;
  const bool g_prime = is_prime(BigInt(g));

  if (layer.kind == LayerKind::kWhole) {
    if (add("component_packing", component_packing_feasible(solution, layer.grading))) return trail;
    if (forced_pointed(solution.fpdim)) {
      add("forced_pointed", FilterVerdict::discard("fpdim_forces_pointed", kPointedCitation));
      return trail;
    }
    add("forced_pointed", FilterVerdict::pass());
    if (g_prime) add("semidirect", semidirect_step(solution, g));
    return trail;
  }

  if (layer.kind == LayerKind::kWholeUniform) {
    if (add("outside_dim_uniformity", outside_dim_uniformity(solution, layer.grading))) {
      return trail;
    }
  }
  std::optional<AdjointPart> part = adjoint_part(solution, layer);
  if (!part) {
    add("outside_dim_uniformity",
        FilterVerdict::discard("no_integral_outside_dim", kCorollarySameDim));
    return trail;
  }
  const bool a_prime = is_prime(BigInt(a));
  std::vector<DeequivProfile> profiles;
  if (a_prime) {
    if (add("fixed_dim_multiplicity", fixed_dim_multiplicity_filter(part->dims, a))) return trail;
    if (part->fpdim % a != 0) {
      add("deequiv_consistency",
          FilterVerdict::discard("order_not_dividing_adjoint_fpdim", kLemmaDeequiv));
      return trail;
    }
    profiles = deequiv_profiles(part->dims, a, part->fpdim);
    FilterVerdict v = FilterVerdict::discard("no_consistent_profile", kLemmaDeequiv);
    for (const DeequivProfile& prof : profiles) {
      FilterVerdict pv = deequiv_consistency_filter(prof);
      if (!pv.discarded()) {
        v = FilterVerdict::pass();
        break;
      }
      v = pv;
    }
    if (add("deequiv_consistency", v)) return trail;
  }
  if (add("dual_product", dual_product_step(*part, a))) return trail;
  if (layer.kind == LayerKind::kWholeUniform) {
    if (add("component_packing", component_packing_feasible(solution, layer.grading))) return trail;
  }
  if (a_prime) {
    if (add("deequiv_layer", deequiv_layer_step(profiles))) return trail;
  }
  if (forced_pointed(solution.fpdim)) {
    add("forced_pointed", FilterVerdict::discard("fpdim_forces_pointed", kPointedCitation));
    return trail;
  }
  add("forced_pointed", FilterVerdict::pass());
  if (g_prime && a == g) add("semidirect", semidirect_step(solution, g));
  return trail;
}

ClassificationReport classify(int64_t rank, const ClassifyOptions& options) {
  if (rank % 2 == 0 || rank < 17 || rank > 49) {
    throw InputError("classify: rank must be odd and lie in [17, 49]");
  }
  ClassificationReport report;
  report.rank = rank;
  report.candidates = invertible_count_candidates(rank);
  report.assumptions.push_back(
      "Lemma \"trivial\": for more than one invertible object under the non-pointed "
      "hypothesis, (C_ad)_pt is taken non-trivial");

  for (int64_t s : report.candidates) {
    HypothesisReport h;
    h.invertibles = s;
    if (s == rank) {
      h.kind = "pointed";
      h.status = ItemStatus::kSurvives;
      h.note = "pointed categories exist";
    } else if (s == 1) {
      h.kind = "perfect";
      if (rank <= 23) {
        SearchParams p;
        p.rank = rank;
        p.invertibles = 1;
        p.jobs = options.jobs;
        SearchRun run;
        run.params = p;
        std::vector<DimSolution> found = enumerate(p);
        if (found.empty()) {
          run.outcome = FilterVerdict::discard("no_potential_solutions", kDimGeneration);
          h.status = ItemStatus::kDiscarded;
        } else {
          run.outcome = FilterVerdict::pass();
          for (DimSolution& sol : found) {
            run.items.push_back({std::move(sol), {}, ItemStatus::kNeedsManualAnalysis});
          }
          h.status = ItemStatus::kNeedsManualAnalysis;
        }
        h.trail.push_back({"dim_generation", run.outcome});
        h.search = std::move(run);
      } else {
        h.status = ItemStatus::kSurvives;
        h.note = "perfect hypothesis not searched at this rank";
      }
    } else {
      h.kind = "graded";
      std::vector<ItemStatus> statuses;
      for (const GradingCase& c : enumerate_cases(rank, s)) {
        h.cases.push_back(classify_case(c, options, report.assumptions));
        statuses.push_back(h.cases.back().status);
      }
      if (h.cases.empty()) {
        h.note = "no grading case satisfies the component congruences";
        h.trail.push_back(
            {"grading_cases", FilterVerdict::discard("no_grading_case", "[CP, Lemma 5.4]")});
      }
      h.status = aggregate(statuses);
    }
    report.hypotheses.push_back(std::move(h));
  }
  return report;
}

}  // namespace oddmtc
