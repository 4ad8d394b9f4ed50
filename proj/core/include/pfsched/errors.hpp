// Copyright 2026 The pfsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace pfsched {

// Error categories. The command line tool maps these onto process exit codes,
// so additions here need a corresponding entry in tools/.
enum class Errc {
  kInvalidArgument,
  kUnknownJob,
  kIncompleteSchedule,
  kInfeasibleInput,
  kMalformedLp,
  kUnsupportedCriterion,
  kNotAgreeable,
  kTooLarge,
  kInfeasibleLpSolution,
  kOrderHypothesisViolated,
  kPreconditionViolated,
  kIoError,
  kInternalError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

  // Set for kNotAgreeable: the pair of job ids witnessing the failure.
  const std::optional<std::pair<int, int>>& job_pair() const {
    return job_pair_;
  }

  static Error not_agreeable(int job_a, int job_b, const std::string& reason) {
    Error e(Errc::kNotAgreeable, "jobs (" + std::to_string(job_a) + ", " +
                                     std::to_string(job_b) + "): " + reason);
    e.job_pair_ = {job_a, job_b};
    return e;
  }

 private:
  Errc code_;
  std::optional<std::pair<int, int>> job_pair_;
};

}  // namespace pfsched
