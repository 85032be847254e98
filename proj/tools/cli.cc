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


#include "cli.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "oddmtc/classify.h"
#include "oddmtc/dimsearch.h"
#include "oddmtc/filters.h"
#include "oddmtc/goldens.h"
#include "oddmtc/gradings.h"
#include "oddmtc/oracle.h"
#include "oddmtc/report.h"

namespace oddmtc::cli {
namespace {

struct Options {
  int64_t rank = 0;
  int64_t invertibles = 0;
  int64_t adjoint_rank = 0;
  int64_t adjoint_invertibles = 0;
  int64_t min_m1 = 1;
  bool m1_square = false;
  std::vector<int64_t> m1_exclude;
  int64_t mi_coprime = 0;
  int64_t min_run = 1;
  std::string fpdim_bound;
  std::string format = "md";
  bool apply_filters = false;
  int jobs = 1;
  std::string out;
};

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"md", "json", "csv"}));
  sub->add_option("--jobs", o.jobs, "Worker thread cap")->check(CLI::PositiveNumber);
  sub->add_option("--out", o.out, "Write the report to this file");
}

void add_predicate_flags(CLI::App* sub, Options& o) {
  sub->add_option("--min-m1", o.min_m1, "Smallest m1 to consider");
  sub->add_flag("--m1-square", o.m1_square, "Only perfect-square m1");
  sub->add_option("--m1-exclude", o.m1_exclude, "m1 values to skip")->delimiter(',');
  sub->add_option("--mi-coprime", o.mi_coprime, "Prime P; every m_i coprime to P");
  sub->add_option("--min-run", o.min_run, "Require a run of at least L equal dims");
  sub->add_option("--fpdim-bound", o.fpdim_bound, "Only FPdim(C) <= B");
}

// Adjoint mode takes |G(C)| from --gc, or from --invertibles as a synonym.
void add_layer_flags(CLI::App* sub, Options& o, bool adjoint) {
  sub->add_option("--rank", o.rank, "Rank of C")->required();
  if (adjoint) {
    auto* gc = sub->add_option("--gc", o.invertibles, "|G(C)|");
    auto* inv = sub->add_option("--invertibles", o.invertibles, "Synonym of --gc");
    gc->excludes(inv);
    sub->add_option("--adjoint-rank", o.adjoint_rank, "Rank of C_ad")->required();
    sub->add_option("--adjoint-invertibles", o.adjoint_invertibles, "|G(C_ad)|")->required();
  } else {
    sub->add_option("--invertibles", o.invertibles, "|G(C)|")->required();
  }
}

SearchParams params_from(const Options& o, bool adjoint) {
  SearchParams p;
  p.mode = adjoint ? Mode::kAdjoint : Mode::kBasic;
  p.rank = o.rank;
  p.invertibles = o.invertibles;
  if (adjoint) {
    if (o.invertibles == 0) throw InputError("adjoint-dims needs --gc");
    p.adjoint_rank = o.adjoint_rank;
    p.adjoint_invertibles = o.adjoint_invertibles;
  }
  p.min_m1 = o.min_m1;
  p.m1_square = o.m1_square;
  p.m1_excluded.insert(o.m1_exclude.begin(), o.m1_exclude.end());
  if (o.mi_coprime != 0) p.mi_coprime = o.mi_coprime;
  p.min_run = o.min_run;
  if (!o.fpdim_bound.empty()) p.fpdim_bound = parse_bigint(o.fpdim_bound);
  p.jobs = o.jobs;
  p.validate();
  return p;
}

int emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError("cannot open --out file '" + o.out + "'");
  f << text;
  return kExitOk;
}

int run_dims(const Options& o, bool adjoint, std::ostream& out) {
  SearchParams p = params_from(o, adjoint);
  std::vector<DimSolution> rows = enumerate(p);
  if (o.apply_filters) {
    const int64_t prime = p.layer_invertibles();
    if (is_prime(BigInt(prime))) {
      std::erase_if(rows, [&](const DimSolution& s) {
        return fixed_dim_multiplicity_filter(s, prime).discarded();
      });
    }
  }
  return emit(o, render_solutions(rows, p, parse_format(o.format)), out);
}

int run_gradings(const Options& o, std::ostream& out) {
  std::vector<int64_t> counts;
  if (o.invertibles != 0) {
    counts.push_back(o.invertibles);
  } else {
    for (int64_t s : invertible_count_candidates(o.rank)) {
      if (s != 1 && s != o.rank) counts.push_back(s);
    }
  }
  std::string text;
  for (int64_t s : counts) {
    std::vector<CaseVerdicts> cases;
    for (const GradingCase& c : enumerate_cases(o.rank, s)) {
      if (o.apply_filters) {
        cases.push_back(apply_grading_filters(c));
      } else {
        cases.push_back(CaseVerdicts{c, {}});
      }
    }
    text += render_gradings(cases, o.apply_filters, parse_format(o.format));
  }
  return emit(o, text, out);
}

int run_classify(const Options& o, std::ostream& out) {
  ClassifyOptions co;
  co.jobs = o.jobs;
  ClassificationReport report = classify(o.rank, co);
  return emit(o, render_classification(report, parse_format(o.format)), out);
}

int run_verify(const Options& o, std::ostream& out) {
  std::vector<GoldenTable> tables = load_goldens();
  std::ostringstream os;
  size_t ok = 0;
  for (const GoldenTable& t : tables) {
    DiffReport diff = verify(t, o.jobs);
    if (diff.empty()) {
      ++ok;
      os << t.table_id << ": match, " << t.rows.size() << " rows\n";
    } else {
      os << t.table_id << ": MISMATCH\n" << render_diff(diff, t.params, Format::kMarkdown);
    }
  }
  os << ok << "/" << tables.size() << " tables match\n";
  emit(o, os.str(), out);
  return ok == tables.size() ? kExitOk : kExitMismatch;
}

// Without --invertibles every candidate below the rank is checked; without
// --rank, every odd rank in [17, 49].
int run_oracle(const Options& o, bool adjoint_given, std::ostream& out) {
  const BigInt bound = o.fpdim_bound.empty() ? BigInt(1000000) : parse_bigint(o.fpdim_bound);
  std::vector<std::pair<int64_t, int64_t>> pairs;
  std::vector<int64_t> ranks;
  if (o.rank != 0) {
    ranks.push_back(o.rank);
  } else {
    for (int64_t r = 17; r <= 49; r += 2) ranks.push_back(r);
  }
  for (int64_t r : ranks) {
    if (o.invertibles != 0) {
      pairs.push_back({r, o.invertibles});
      continue;
    }
    for (int64_t s : invertible_count_candidates(r)) {
      if (s != r) pairs.push_back({r, s});
    }
  }
  std::ostringstream os;
  size_t ok = 0;
  for (auto [r, s] : pairs) {
    Options one = o;
    one.rank = r;
    one.invertibles = s;
    one.fpdim_bound = bound.str();
    SearchParams p = params_from(one, adjoint_given);
    std::vector<DimSolution> search = enumerate(p);
    std::vector<DimSolution> oracle = oracle_enumerate(p, bound);
    DiffReport diff = compare(search, oracle, bound);
    if (diff.empty()) ++ok;
    os << describe(p) << ": search " << search.size() << ", oracle " << oracle.size() << ", "
       << (diff.empty() ? "match" : "MISMATCH") << "\n";
    if (!diff.empty()) os << render_diff(diff, p, Format::kMarkdown);
  }
  os << ok << "/" << pairs.size() << " pairs match below " << bound << "\n";
  emit(o, os.str(), out);
  return ok == pairs.size() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimension searches and case analysis for odd-dimensional MTCs", "oddmtc"};
  app.require_subcommand(1);
  Options o;

  CLI::App* dims = app.add_subcommand("dims", "Dimension arrays of the whole category");
  add_layer_flags(dims, o, false);
  add_predicate_flags(dims, o);
  add_output_flags(dims, o);
  dims->add_flag("--apply-filters", o.apply_filters,
                 "Drop rows failing the fixed-dim multiplicity rule for a prime invertible count");

  CLI::App* adims = app.add_subcommand("adjoint-dims", "Dimension arrays of C_ad");
  add_layer_flags(adims, o, true);
  add_predicate_flags(adims, o);
  add_output_flags(adims, o);
  adims->add_flag("--apply-filters", o.apply_filters,
                  "Drop rows failing the fixed-dim multiplicity rule for a prime |G(C_ad)|");

  CLI::App* grad = app.add_subcommand("gradings", "Universal grading cases");
  grad->add_option("--rank", o.rank, "Rank of C")->required();
  grad->add_option("--invertibles", o.invertibles, "|G(C)|; all graded counts when omitted");
  grad->add_flag("--apply-filters", o.apply_filters, "Apply the grading lemmas");
  add_output_flags(grad, o);

  CLI::App* cls = app.add_subcommand("classify", "Full case analysis of one rank");
  cls->add_option("--rank", o.rank, "Odd rank in [17, 49]")->required();
  add_output_flags(cls, o);

  CLI::App* ver = app.add_subcommand("verify-goldens", "Re-run every golden table");
  ver->add_option("--jobs", o.jobs, "Worker thread cap")->check(CLI::PositiveNumber);
  ver->add_option("--out", o.out, "Write the report to this file");

  CLI::App* ora = app.add_subcommand("oracle-check", "Search against brute force below a bound");
  ora->add_option("--rank", o.rank, "Rank of C; every odd rank in [17, 49] when omitted");
  auto* gc = ora->add_option("--gc", o.invertibles, "|G(C)|");
  ora->add_option("--invertibles", o.invertibles, "|G(C)|; every candidate when omitted")
      ->excludes(gc);
  auto* ar = ora->add_option("--adjoint-rank", o.adjoint_rank, "Rank of C_ad (adjoint mode)");
  ora->add_option("--adjoint-invertibles", o.adjoint_invertibles, "|G(C_ad)|")->needs(ar);
  add_predicate_flags(ora, o);
  ora->add_option("--jobs", o.jobs, "Worker thread cap")->check(CLI::PositiveNumber);
  ora->add_option("--out", o.out, "Write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (dims->parsed()) return run_dims(o, false, out);
    if (adims->parsed()) return run_dims(o, true, out);
    if (grad->parsed()) return run_gradings(o, out);
    if (cls->parsed()) return run_classify(o, out);
    if (ver->parsed()) return run_verify(o, out);
    if (ora->parsed()) return run_oracle(o, ar->count() > 0, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const GoldenIntegrityError& e) {
    err << "golden data corrupt: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitInputError;
}

}  // namespace oddmtc::cli
