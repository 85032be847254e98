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

#include "oddmtc/goldens.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include <nlohmann/json.hpp>
#include "oddmtc/filters.h"

namespace oddmtc {
namespace {

using nlohmann::json;

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t end = text.find(sep, start);
    out.emplace_back(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  for (std::string& line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(std::move(line));
  }
  return out;
}

SearchParams params_from_json(const json& j) {
  SearchParams p;
  p.mode = j.at("mode").get<std::string>() == "adjoint" ? Mode::kAdjoint : Mode::kBasic;
  p.rank = j.at("rank").get<int64_t>();
  p.invertibles = j.at("invertibles").get<int64_t>();
  p.adjoint_rank = j.value("adjoint_rank", int64_t{0});
  p.adjoint_invertibles = j.value("adjoint_invertibles", int64_t{0});
  p.min_m1 = j.value("min_m1", int64_t{1});
  p.m1_square = j.value("m1_square", false);
  if (j.contains("m1_exclude")) {
    for (int64_t v : j.at("m1_exclude")) p.m1_excluded.insert(v);
  }
  if (j.contains("mi_coprime")) p.mi_coprime = j.at("mi_coprime").get<int64_t>();
  p.min_run = j.value("min_run", int64_t{1});
  p.validate();
  return p;
}

GoldenTable parse_table(const GoldenFile& file, int64_t expected_rows, const std::string& sha) {
  const std::string& id = file.table_id;
  if (sha256_hex(file.csv) != sha) throw GoldenIntegrityError(id + ": checksum mismatch");
  GoldenTable t;
  t.table_id = id;
  try {
    json meta = json::parse(file.meta);
    if (meta.at("table_id").get<std::string>() != id) {
      throw GoldenIntegrityError(id + ": metadata belongs to another table");
    }
    t.caption = meta.at("caption").get<std::string>();
    t.note = meta.value("note", std::string{});
    t.params = params_from_json(meta.at("params"));
    if (!meta.at("post_filter_prime").is_null()) {
      t.post_filter_prime = meta.at("post_filter_prime").get<int64_t>();
    }
    t.printed_rows = meta.at("printed_rows").get<std::vector<int>>();
    for (const auto& [key, value] : meta.at("factored").items()) {
      t.factored[parse_bigint(key)] = value.get<std::string>();
    }
    t.rows = parse_solutions_csv(file.csv);
  } catch (const GoldenIntegrityError&) {
    throw;
  } catch (const std::exception& e) {
    throw GoldenIntegrityError(id + ": " + e.what());
  }
  if (static_cast<int64_t>(t.rows.size()) != expected_rows ||
      t.printed_rows.size() != t.rows.size()) {
    throw GoldenIntegrityError(id + ": row count differs from the manifest");
  }
  for (size_t i = 0; i < t.rows.size(); ++i) {
    std::string why = invariant_violation(t.rows[i], t.params);
    if (!why.empty()) throw GoldenIntegrityError(id + " row " + std::to_string(i + 1) + ": " + why);
    if (i > 0 && !canonical_less(t.rows[i - 1], t.rows[i])) {
      throw GoldenIntegrityError(id + ": rows are not in canonical order");
    }
    auto f = t.factored.find(t.rows[i].fpdim);
    if (f == t.factored.end() || parse_factored(f->second) != t.rows[i].fpdim) {
      throw GoldenIntegrityError(id + ": factored fpdim does not match row " + std::to_string(i + 1));
    }
  }
  return t;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GoldenIntegrityError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

const DimSolution& GoldenTable::printed_row(int number) const {
  auto it = std::find(printed_rows.begin(), printed_rows.end(), number);
  if (it == printed_rows.end()) {
    throw std::out_of_range(table_id + " has no row " + std::to_string(number));
  }
  return rows[it - printed_rows.begin()];
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &size, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < size; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

GoldenFiles read_golden_dir(const std::filesystem::path& dir) {
  GoldenFiles files;
  files.manifest = slurp(dir / "MANIFEST.csv");
  std::vector<std::string> lines = lines_of(files.manifest);
  for (size_t i = 1; i < lines.size(); ++i) {
    std::string id = split(lines[i], ',').front();
    files.tables.push_back({id, slurp(dir / (id + ".csv")), slurp(dir / (id + ".meta.json"))});
  }
  return files;
}

std::vector<GoldenTable> load_goldens() { return load_goldens(embedded_golden_files()); }

std::vector<GoldenTable> load_goldens(const GoldenFiles& files) {
  std::vector<std::string> lines = lines_of(files.manifest);
  if (lines.empty() || lines.front() != "table_id,rows,sha256") {
    throw GoldenIntegrityError("manifest header missing");
  }
  if (lines.size() - 1 != files.tables.size()) {
    throw GoldenIntegrityError("manifest and table files disagree");
  }
  std::vector<GoldenTable> out;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> cols = split(lines[i], ',');
    if (cols.size() != 3) throw GoldenIntegrityError("malformed manifest line " + lines[i]);
    auto file = std::find_if(files.tables.begin(), files.tables.end(),
                             [&](const GoldenFile& f) { return f.table_id == cols[0]; });
    if (file == files.tables.end()) throw GoldenIntegrityError("missing table " + cols[0]);
    int64_t rows = 0;
    try {
      rows = static_cast<int64_t>(parse_bigint(cols[1]));
    } catch (const InputError& e) {
      throw GoldenIntegrityError("manifest row count: " + std::string(e.what()));
    }
    out.push_back(parse_table(*file, rows, cols[2]));
  }
  return out;
}

const GoldenTable& find_table(const std::vector<GoldenTable>& tables, std::string_view id) {
  for (const GoldenTable& t : tables) {
    if (t.table_id == id) return t;
  }
  throw InputError("unknown golden table " + std::string(id));
}

std::string solutions_csv(const std::vector<DimSolution>& rows) {
  std::ostringstream os;
  size_t k = rows.empty() ? 0 : rows.front().dims.size();
  os << "fpdim,s";
  for (size_t i = 1; i <= k; ++i) os << ",d" << i;
  os << '\n';
  for (const DimSolution& r : rows) {
    os << r.fpdim << ',' << r.invertibles;
    for (const BigInt& d : r.dims) os << ',' << d;
    os << '\n';
  }
  return os.str();
}

std::vector<DimSolution> parse_solutions_csv(std::string_view csv) {
  std::vector<std::string> lines = lines_of(csv);
  if (lines.empty() || lines.front().rfind("fpdim,s", 0) != 0) {
    throw InputError("CSV header must start with fpdim,s");
  }
  const size_t width = split(lines.front(), ',').size();
  std::vector<DimSolution> out;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> cols = split(lines[i], ',');
    if (cols.size() != width) throw InputError("CSV line " + std::to_string(i + 1) + " has the wrong width");
    std::vector<BigInt> dims;
    for (size_t c = 2; c < cols.size(); ++c) dims.push_back(parse_bigint(cols[c]));
    out.push_back(make_solution(parse_bigint(cols[0]),
                                static_cast<int64_t>(parse_bigint(cols[1])), std::move(dims)));
  }
  return out;
}

std::vector<DimSolution> reproduce(const GoldenTable& table, int jobs) {
  SearchParams params = table.params;
  params.jobs = jobs;
  std::vector<DimSolution> rows = enumerate(params);
  if (table.post_filter_prime) {
    std::erase_if(rows, [&](const DimSolution& s) {
      return fixed_dim_multiplicity_filter(s, *table.post_filter_prime).discarded();
    });
  }
  return rows;
}

DiffReport verify(const GoldenTable& table, int jobs) {
  return diff_solutions(reproduce(table, jobs), table.rows);
}

}  // namespace oddmtc
