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

#ifndef ODDMTC_GOLDENS_H_
#define ODDMTC_GOLDENS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oddmtc/dimsearch.h"
#include "oddmtc/oracle.h"

namespace oddmtc {

// Raised when embedded or on-disk golden data fails its checksum or re-validation.
class GoldenIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GoldenFile {
  std::string table_id;
  std::string csv;   // fpdim,s,d1..dk
  std::string meta;  // JSON: caption, params, post filter, printed row numbers
};

struct GoldenFiles {
  std::string manifest;  // table_id,rows,sha256
  std::vector<GoldenFile> tables;
};

struct GoldenTable {
  std::string table_id;
  std::string caption;
  std::string note;
  SearchParams params;
  // The printed rows passed the fixed-dimension multiplicity filter with this prime.
  std::optional<int64_t> post_filter_prime;
  std::vector<DimSolution> rows;  // canonical order
  std::vector<int> printed_rows;    // printed row number of each entry of `rows`
  std::map<BigInt, std::string> factored;

  // Row with the given printed number; throws std::out_of_range.
  const DimSolution& printed_row(int number) const;
};

const GoldenFiles& embedded_golden_files();
GoldenFiles read_golden_dir(const std::filesystem::path& dir);

std::vector<GoldenTable> load_goldens();
std::vector<GoldenTable> load_goldens(const GoldenFiles& files);
const GoldenTable& find_table(const std::vector<GoldenTable>& tables, std::string_view id);

std::string sha256_hex(std::string_view data);

std::string solutions_csv(const std::vector<DimSolution>& rows);
std::vector<DimSolution> parse_solutions_csv(std::string_view csv);

// The search with the table's parameters, then its post filter if any.
std::vector<DimSolution> reproduce(const GoldenTable& table, int jobs = 1);

// MISSING: golden rows the search does not produce. EXTRA: the converse.
DiffReport verify(const GoldenTable& table, int jobs = 1);

}  // namespace oddmtc

#endif  // ODDMTC_GOLDENS_H_
