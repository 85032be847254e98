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


#include "oddmtc/report.h"

#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>
#include "oddmtc/goldens.h"

namespace oddmtc {
namespace {

using Json = nlohmann::ordered_json;

Json big(const BigInt& n) {
  if (n >= std::numeric_limits<int64_t>::min() && n <= std::numeric_limits<int64_t>::max()) {
    return static_cast<int64_t>(n);
  }
  return n.str();
}

Json big_list(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const BigInt& x : v) out.push_back(big(x));
  return out;
}

std::string spaced(const std::vector<BigInt>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

// RFC 4180 quoting, only when needed.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json verdict_json(const FilterVerdict& v) {
  Json j;
  j["verdict"] = verdict_name(v.verdict);
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.citation.empty()) j["citation"] = v.citation;
  return j;
}

std::string verdict_text(const FilterVerdict& v) {
  std::string out = verdict_name(v.verdict);
  if (!v.reason.empty()) out += " " + v.reason;
  if (!v.citation.empty()) out += " [" + v.citation + "]";
  return out;
}

Json solution_json(const DimSolution& s) {
  Json j;
  j["fpdim"] = big(s.fpdim);
  j["factored"] = format_factorization(factorize(s.fpdim));
  j["invertibles"] = s.invertibles;
  j["dims"] = big_list(s.dims);
  j["m"] = big_list(s.quotients);
  return j;
}

// The verdict that decided an item: its discard if any, else the last step.
const FilterStep* decisive(const std::vector<FilterStep>& trail) {
  for (const FilterStep& s : trail) {
    if (s.verdict.discarded()) return &s;
  }
  return trail.empty() ? nullptr : &trail.back();
}

Json trail_json(const std::vector<FilterStep>& trail) {
  Json out = Json::array();
  for (const FilterStep& s : trail) {
    Json j = verdict_json(s.verdict);
    j["filter"] = s.filter;
    out.push_back(std::move(j));
  }
  return out;
}

Json search_json(const SearchRun& run) {
  Json j;
  if (!run.label.empty()) j["table"] = run.label;
  j["params"] = describe(run.params);
  j["outcome"] = verdict_json(run.outcome);
  Json items = Json::array();
  for (const SolutionItem& item : run.items) {
    Json i = solution_json(item.solution);
    i["status"] = status_name(item.status);
    i["trail"] = trail_json(item.trail);
    items.push_back(std::move(i));
  }
  j["items"] = std::move(items);
  return j;
}

Json grading_trail_json(const CaseVerdicts& c) {
  Json out = Json::array();
  for (const auto& [name, v] : c.trail) {
    Json j = verdict_json(v);
    j["filter"] = name;
    out.push_back(std::move(j));
  }
  return out;
}

void search_markdown(std::ostringstream& os, const SearchRun& run) {
  os << "- search `" << describe(run.params) << "`";
  if (!run.label.empty()) os << " (golden " << run.label << ")";
  os << ": " << verdict_text(run.outcome) << ", " << run.items.size() << " rows\n";
  for (const SolutionItem& item : run.items) {
    os << "  - `" << format_row(item.solution) << "` " << status_name(item.status);
    if (const FilterStep* d = decisive(item.trail)) {
      os << " (" << d->filter << ": " << verdict_text(d->verdict) << ")";
    }
    os << "\n";
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "md") return Format::kMarkdown;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw InputError("unknown format '" + std::string(name) + "' (expected md, json or csv)");
}

std::string render_solutions(const std::vector<DimSolution>& rows, const SearchParams& params,
                             Format format) {
  if (format == Format::kCsv) return solutions_csv(rows);
  if (format == Format::kJson) {
    Json j;
    j["params"] = describe(params);
    j["count"] = rows.size();
    Json arr = Json::array();
    for (const DimSolution& s : rows) arr.push_back(solution_json(s));
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# " << describe(params) << "\n\n" << rows.size() << " rows\n";
  if (rows.empty()) return os.str();
  os << "\n| # | FPdim | factored | dims |\n|---|---|---|---|\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    os << "| " << i + 1 << " | " << rows[i].fpdim << " | $"
       << format_factorization(factorize(rows[i].fpdim)) << "$ | " << spaced(rows[i].dims)
       << " |\n";
  }
  return os.str();
}

std::string render_gradings(const std::vector<CaseVerdicts>& cases, bool filtered, Format format) {
  if (format == Format::kCsv) {
    std::ostringstream os;
    os << "rank,invertibles,components";
    if (filtered) os << ",verdict,filter,reason,citation";
    os << "\n";
    for (const CaseVerdicts& c : cases) {
      os << c.grading.rank << "," << c.grading.invertibles << ","
         << csv_field(c.grading.to_string());
      if (filtered) {
        const std::pair<std::string, FilterVerdict>* hit = nullptr;
        for (const auto& step : c.trail) {
          if (step.second.discarded()) {
            hit = &step;
            break;
          }
        }
        if (hit) {
          os << ",DISCARD," << hit->first << "," << csv_field(hit->second.reason) << ","
             << csv_field(hit->second.citation);
        } else {
          os << ",SURVIVES,,,";
        }
      }
      os << "\n";
    }
    return os.str();
  }
  if (format == Format::kJson) {
    Json arr = Json::array();
    for (const CaseVerdicts& c : cases) {
      Json j;
      j["rank"] = c.grading.rank;
      j["invertibles"] = c.grading.invertibles;
      j["components"] = c.grading.component_ranks;
      if (filtered) {
        j["survives"] = c.survives();
        j["trail"] = grading_trail_json(c);
      }
      arr.push_back(std::move(j));
    }
    Json j;
    j["cases"] = std::move(arr);
    if (filtered) {
      Json surv = Json::array();
      for (const CaseVerdicts& c : cases) {
        if (c.survives()) surv.push_back(c.grading.to_string());
      }
      j["survivors"] = std::move(surv);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (!cases.empty()) {
    os << "# gradings rank=" << cases.front().grading.rank
       << " invertibles=" << cases.front().grading.invertibles << "\n\n";
  }
  os << cases.size() << " cases\n\n";
  for (const CaseVerdicts& c : cases) {
    os << "- " << c.grading.to_string();
    if (filtered) {
      os << (c.survives() ? " SURVIVES" : " DISCARDED");
      for (const auto& [name, v] : c.trail) {
        if (v.discarded()) os << "\n  - " << name << ": " << verdict_text(v);
      }
    }
    os << "\n";
  }
  if (filtered) {
    os << "\nSurvivors:";
    for (const CaseVerdicts& c : cases) {
      if (c.survives()) os << " " << c.grading.to_string();
    }
    os << "\n";
  }
  return os.str();
}

std::string render_classification(const ClassificationReport& report, Format format) {
  if (format == Format::kJson) {
    Json j;
    j["rank"] = report.rank;
    j["candidates"] = report.candidates;
    j["assumptions"] = report.assumptions;
    Json hyps = Json::array();
    for (const HypothesisReport& h : report.hypotheses) {
      Json hj;
      hj["invertibles"] = h.invertibles;
      hj["kind"] = h.kind;
      hj["status"] = status_name(h.status);
      if (!h.note.empty()) hj["note"] = h.note;
      if (!h.trail.empty()) hj["trail"] = trail_json(h.trail);
      if (h.search) hj["search"] = search_json(*h.search);
      Json cases = Json::array();
      for (const CaseReport& c : h.cases) {
        Json cj;
        cj["components"] = c.grading.grading.component_ranks;
        cj["status"] = status_name(c.status);
        if (!c.note.empty()) cj["note"] = c.note;
        cj["grading_trail"] = grading_trail_json(c.grading);
        Json searches = Json::array();
        for (const SearchRun& run : c.searches) searches.push_back(search_json(run));
        cj["searches"] = std::move(searches);
        cases.push_back(std::move(cj));
      }
      hj["cases"] = std::move(cases);
      hyps.push_back(std::move(hj));
    }
    j["hypotheses"] = std::move(hyps);
    return j.dump(2) + "\n";
  }

  if (format == Format::kCsv) {
    std::ostringstream os;
    os << "rank,invertibles,level,case,search,fpdim,dims,status,filter,reason,citation\n";
    auto line = [&](int64_t s, const char* level, const std::string& c, const std::string& search,
                    const std::string& fpdim, const std::string& dims, ItemStatus status,
                    const std::string& filter, const FilterVerdict* v) {
      os << report.rank << "," << s << "," << level << "," << csv_field(c) << ","
         << csv_field(search) << "," << fpdim << "," << dims << "," << status_name(status) << ","
         << filter << "," << csv_field(v ? v->reason : "") << ","
         << csv_field(v ? v->citation : "") << "\n";
    };
    for (const HypothesisReport& h : report.hypotheses) {
      const FilterStep* hd = decisive(h.trail);
      const FilterVerdict every_case =
          FilterVerdict::discard("every_case_discarded", "see case rows");
      if (!hd && h.status == ItemStatus::kDiscarded) {
        line(h.invertibles, "hypothesis", h.kind, "", "", "", h.status, "cases", &every_case);
      } else {
        line(h.invertibles, "hypothesis", h.kind, "", "", "", h.status, hd ? hd->filter : "",
             hd ? &hd->verdict : nullptr);
      }
      for (const CaseReport& c : h.cases) {
        const std::pair<std::string, FilterVerdict>* hit = nullptr;
        for (const auto& step : c.grading.trail) {
          if (step.second.discarded()) {
            hit = &step;
            break;
          }
        }
        const FilterVerdict every_item =
            FilterVerdict::discard("every_search_discarded", "see search and item rows");
        if (!hit && c.status == ItemStatus::kDiscarded) {
          line(h.invertibles, "case", c.grading.grading.to_string(), "", "", "", c.status,
               "searches", &every_item);
        } else {
          line(h.invertibles, "case", c.grading.grading.to_string(), "", "", "", c.status,
               hit ? hit->first : "", hit ? &hit->second : nullptr);
        }
        for (const SearchRun& run : c.searches) {
          std::string label = run.label.empty() ? describe(run.params) : run.label;
          if (run.outcome.discarded()) {
            line(h.invertibles, "search", c.grading.grading.to_string(), label, "", "",
                 ItemStatus::kDiscarded, "dim_generation", &run.outcome);
          }
          for (const SolutionItem& item : run.items) {
            const FilterStep* d = decisive(item.trail);
            line(h.invertibles, "item", c.grading.grading.to_string(), label,
                 item.solution.fpdim.str(), spaced(item.solution.dims), item.status,
                 d ? d->filter : "", d ? &d->verdict : nullptr);
          }
        }
      }
    }
    return os.str();
  }

  std::ostringstream os;
  os << "# Classification of rank " << report.rank << "\n\n";
  os << "Invertible-count candidates:";
  for (int64_t s : report.candidates) os << " " << s;
  os << "\n\n## Assumptions\n\n";
  for (const std::string& a : report.assumptions) os << "- " << a << "\n";
  for (const HypothesisReport& h : report.hypotheses) {
    os << "\n## |G(C)| = " << h.invertibles << " (" << h.kind << "): " << status_name(h.status)
       << "\n\n";
    if (!h.note.empty()) os << h.note << "\n\n";
    for (const FilterStep& s : h.trail) {
      os << "- " << s.filter << ": " << verdict_text(s.verdict) << "\n";
    }
    for (const CaseReport& c : h.cases) {
      os << "### " << c.grading.grading.to_string() << ": " << status_name(c.status) << "\n\n";
      if (!c.note.empty()) os << c.note << "\n\n";
      for (const auto& [name, v] : c.grading.trail) {
        if (v.discarded()) os << "- " << name << ": " << verdict_text(v) << "\n";
      }
      for (const SearchRun& run : c.searches) search_markdown(os, run);
      os << "\n";
    }
  }
  return os.str();
}

std::string render_diff(const DiffReport& diff, const SearchParams& params, Format format) {
  if (format == Format::kJson) {
    Json j;
    j["params"] = describe(params);
    j["missing"] = diff.missing();
    j["extra"] = diff.extra();
    Json arr = Json::array();
    for (const SolutionDiff& e : diff.entries) {
      Json ej = solution_json(e.solution);
      ej["kind"] = e.kind == SolutionDiff::Kind::kMissing ? "MISSING" : "EXTRA";
      arr.push_back(std::move(ej));
    }
    j["entries"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  if (format == Format::kCsv) {
    std::ostringstream os;
    os << "kind,fpdim,dims\n";
    for (const SolutionDiff& e : diff.entries) {
      os << (e.kind == SolutionDiff::Kind::kMissing ? "MISSING" : "EXTRA") << ","
         << e.solution.fpdim << "," << spaced(e.solution.dims) << "\n";
    }
    return os.str();
  }
  std::ostringstream os;
  os << describe(params) << ": " << diff.missing() << " missing, " << diff.extra() << " extra\n";
  for (const SolutionDiff& e : diff.entries) {
    os << (e.kind == SolutionDiff::Kind::kMissing ? "MISSING " : "EXTRA ")
       << format_row(e.solution) << "\n";
  }
  return os.str();
}

}  // namespace oddmtc
