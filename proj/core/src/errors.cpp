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

#include "pfsched/errors.hpp"

namespace pfsched {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "invalid argument";
    case Errc::kUnknownJob: return "unknown job";
    case Errc::kIncompleteSchedule: return "incomplete schedule";
    case Errc::kInfeasibleInput: return "infeasible input";
    case Errc::kMalformedLp: return "malformed LP";
    case Errc::kUnsupportedCriterion: return "unsupported criterion";
    case Errc::kNotAgreeable: return "not agreeable";
    case Errc::kTooLarge: return "too large";
    case Errc::kInfeasibleLpSolution: return "infeasible LP solution";
    case Errc::kOrderHypothesisViolated: return "order hypothesis violated";
    case Errc::kPreconditionViolated: return "precondition violated";
    case Errc::kIoError: return "I/O error";
    case Errc::kInternalError: return "internal error";
  }
  return "unknown error";
}

}  // namespace pfsched
