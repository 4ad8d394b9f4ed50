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

#include "pfsched/rational.hpp"

#include <cctype>
#include <ostream>

namespace pfsched {

Rat::Rat(long long n) : v_(mpq_class(std::to_string(n))) {}

Rat::Rat(long long num, long long den) {
  if (den == 0) throw Error(Errc::kInvalidArgument, "zero denominator");
  v_ = mpq_class(std::to_string(num)) / mpq_class(std::to_string(den));
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

// GMP does not accept a leading '+'.
std::string strip_plus(const std::string& s) {
  return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
}

}  // namespace

Rat Rat::parse(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw Error(Errc::kInvalidArgument, "cannot parse rational '" + text + "'");
  }
  num = strip_plus(num);
  den = strip_plus(den);
  mpq_class d(den);
  if (d == 0) {
    throw Error(Errc::kInvalidArgument,
                "zero denominator in rational '" + text + "'");
  }
  Rat r;
  r.v_ = mpq_class(num) / d;
  return r;
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long long Rat::to_ll() const {
  if (!is_integer()) {
    throw Error(Errc::kInvalidArgument, "not an integer: " + str());
  }
  if (!v_.get_num().fits_slong_p()) {
    throw Error(Errc::kInvalidArgument, "integer out of range: " + str());
  }
  return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace pfsched
