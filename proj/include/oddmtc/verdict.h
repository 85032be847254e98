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

#ifndef ODDMTC_VERDICT_H_
#define ODDMTC_VERDICT_H_

#include <string>
#include <utility>

namespace oddmtc {

enum class Verdict { kPass, kDiscard, kNotApplicable };

struct FilterVerdict {
  Verdict verdict = Verdict::kPass;
  std::string reason;    // short machine-readable code
  std::string citation;  // lemma or table anchor

  static FilterVerdict pass(std::string reason = {}) {
    return {Verdict::kPass, std::move(reason), {}};
  }
  static FilterVerdict discard(std::string reason, std::string citation) {
    return {Verdict::kDiscard, std::move(reason), std::move(citation)};
  }
  static FilterVerdict not_applicable(std::string reason) {
    return {Verdict::kNotApplicable, std::move(reason), {}};
  }

  bool discarded() const { return verdict == Verdict::kDiscard; }
};

// "PASS", "DISCARD", "NOT_APPLICABLE".
const char* verdict_name(Verdict v);

}  // namespace oddmtc

#endif  // ODDMTC_VERDICT_H_
