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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "pfsched/rational.hpp"

using pfsched::Errc;
using pfsched::Error;
using pfsched::Rat;

TEST_CASE("parsing and printing") {
  CHECK(Rat::parse("3").str() == "3");
  CHECK(Rat::parse("-7/2").str() == "-7/2");
  CHECK(Rat::parse("+5").str() == "5");
  CHECK(Rat::parse("4/6").str() == "2/3");   // reduced to lowest terms
  CHECK(Rat::parse("3/-6").str() == "-1/2"); // positive denominator
  CHECK(Rat::parse("0/9").str() == "0");
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"", "/", "1/", "/2", "1.5", "abc", "1/2/3", "1e3"}) {
    CHECK_THROWS_AS(Rat::parse(bad), Error);
  }
  try {
    Rat::parse("1/0");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kInvalidArgument);
  }
}

TEST_CASE("arithmetic is exact") {
  Rat third(1, 3);
  Rat sum = third + third + third;
  CHECK(sum == Rat(1));
  CHECK(Rat(1, 3) * Rat(3, 7) == Rat(1, 7));
  CHECK(Rat(1) / Rat(7) == Rat(1, 7));
  CHECK(Rat(2, 10) == Rat(1, 5));
  CHECK((Rat(1, 10) + Rat(2, 10)) == Rat(3, 10));
  CHECK(-Rat(5, 2) == Rat(-5, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
}

TEST_CASE("large values do not overflow") {
  Rat big = Rat::parse("1000000000000");
  Rat prod = big * big * big;
  CHECK(prod.str() == "1000000000000000000000000000000000000");
  CHECK(prod / big / big == big);
}

TEST_CASE("comparisons and helpers") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1) < Rat(0));
  CHECK(Rat(7, 7) == Rat(1));
  CHECK(rat_min(Rat(2), Rat(3)) == Rat(2));
  CHECK(rat_max(Rat(2), Rat(3)) == Rat(3));
  CHECK(rat_abs(Rat(-5, 3)) == Rat(5, 3));
  CHECK(Rat(3).sign() == 1);
  CHECK(Rat(0).sign() == 0);
  CHECK(Rat(-2, 5).sign() == -1);
}

TEST_CASE("integer conversions") {
  CHECK(Rat(42).is_integer());
  CHECK(Rat(42).to_ll() == 42);
  CHECK(Rat(-6, 3).to_ll() == -2);
  CHECK_FALSE(Rat(1, 2).is_integer());
  CHECK_THROWS_AS(Rat(1, 2).to_ll(), Error);
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << Rat(-3, 4);
  CHECK(os.str() == "-3/4");
}
