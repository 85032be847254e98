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


#ifndef ODDMTC_REPORT_H_
#define ODDMTC_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "oddmtc/classify.h"
#include "oddmtc/dimsearch.h"
#include "oddmtc/gradings.h"
#include "oddmtc/oracle.h"

namespace oddmtc {

enum class Format { kMarkdown, kJson, kCsv };

// Accepts "md", "json", "csv".
Format parse_format(std::string_view name);

// Every renderer is a pure function of its input; no timestamps.
std::string render_solutions(const std::vector<DimSolution>& rows, const SearchParams& params,
                             Format format);
std::string render_gradings(const std::vector<CaseVerdicts>& cases, bool filtered, Format format);
std::string render_classification(const ClassificationReport& report, Format format);
std::string render_diff(const DiffReport& diff, const SearchParams& params, Format format);

}  // namespace oddmtc

#endif  // ODDMTC_REPORT_H_
