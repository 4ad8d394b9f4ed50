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

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "pfsched/errors.hpp"

namespace pfsched {

// Exact rational number. Always stored canonically: lowest terms, positive
// denominator. Backed by GMP so intermediate values in the simplex never
// overflow.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}          // NOLINT(google-explicit-constructor)
  Rat(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rat(long long n);              // NOLINT(google-explicit-constructor)
  Rat(long long num, long long den);

  // Parses "a", "-a", or "a/b". Throws kInvalidArgument on malformed input
  // or zero denominator.
  static Rat parse(const std::string& text);

  // "a" when the denominator is 1, otherwise "a/b" with b > 0.
  std::string str() const;

  bool is_integer() const { return mpz_cmp_ui(v_.get_den_mpz_t(), 1) == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

  // Integer value when is_integer() and it fits in long long.
  long long to_ll() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.sign() == 0) throw Error(Errc::kInvalidArgument, "division by zero");
    return Rat(a.v_ / b.v_);
  }
  Rat operator-() const { return Rat(-v_); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  double to_double() const { return v_.get_d(); }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat rat_abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

}  // namespace pfsched
