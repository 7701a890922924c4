// Copyright 2026 The ncglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ncg {

__extension__ typedef __int128 WideInt;

// Exact rational number over 64-bit integers. Intermediate products use
// 128-bit arithmetic; a result that does not fit back into 64 bits throws
// std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  // Largest integer <= value.
  std::int64_t floor() const;
  // Smallest integer >= value.
  std::int64_t ceil() const;
  double to_double() const;

  // Always "p/q" (q may be 1), as used by the canonical file format.
  std::string to_string() const;
  // "p" for integers, "p/q" otherwise.
  std::string to_short_string() const;

  // Accepts "p", "p/q", "-p/q"; q must be positive. Throws ValidationError.
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  static Rational from_wide(WideInt num, WideInt den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// A rational extended with +infinity and -infinity. Costs of disconnected
// players are +infinity; a deviation that reconnects a player has delta
// -infinity. Arithmetic saturates; inf - inf is defined as 0 so that two
// equally disconnected states compare as "no change".
class ExtRational {
 public:
  enum class Kind : std::uint8_t { kNegInf, kFinite, kPosInf };

  constexpr ExtRational() = default;
  ExtRational(Rational value);  // NOLINT(google-explicit-constructor)
  ExtRational(std::int64_t value);  // NOLINT(google-explicit-constructor)

  static ExtRational infinity();
  static ExtRational neg_infinity();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  // Precondition: is_finite().
  const Rational& value() const;

  int sign() const;
  std::string to_string() const;

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator-(const ExtRational& a, const ExtRational& b);
  ExtRational operator-() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a,
                                          const ExtRational& b);

 private:
  Kind kind_ = Kind::kFinite;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

}  // namespace ncg
