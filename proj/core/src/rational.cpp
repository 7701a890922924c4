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

#include "ncg/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "ncg/error.hpp"

namespace ncg {
namespace {

using Wide = WideInt;

constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr Wide kMin = std::numeric_limits<std::int64_t>::min();

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ValidationError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < kMin || den > kMax) {
    throw std::overflow_error("rational overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(num == 0 ? 1 : den);
  return r;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_short_string() const {
  if (den_ == 1) return std::to_string(num_);
  return to_string();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ValidationError("denominator must be an unsigned integer: '" +
                          std::string(text) + "'");
  }
  std::int64_t den = parse_int(den_text);
  if (den <= 0) {
    throw ValidationError("denominator must be positive: '" +
                          std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<Wide>(num_), den_);
}

Rational& Rational::operator+=(const Rational& o) {
  *this = from_wide(static_cast<Wide>(num_) * o.den_ +
                        static_cast<Wide>(o.num_) * den_,
                    static_cast<Wide>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = from_wide(static_cast<Wide>(num_) * o.den_ -
                        static_cast<Wide>(o.num_) * den_,
                    static_cast<Wide>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = from_wide(static_cast<Wide>(num_) * o.num_,
                    static_cast<Wide>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  *this = from_wide(static_cast<Wide>(num_) * o.den_,
                    static_cast<Wide>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_short_string();
}

ExtRational::ExtRational(Rational value) : value_(value) {}
ExtRational::ExtRational(std::int64_t value) : value_(value) {}

ExtRational ExtRational::infinity() {
  ExtRational r;
  r.kind_ = Kind::kPosInf;
  return r;
}

ExtRational ExtRational::neg_infinity() {
  ExtRational r;
  r.kind_ = Kind::kNegInf;
  return r;
}

const Rational& ExtRational::value() const {
  if (kind_ != Kind::kFinite) {
    throw std::logic_error("value() on an infinite ExtRational");
  }
  return value_;
}

int ExtRational::sign() const {
  switch (kind_) {
    case Kind::kNegInf:
      return -1;
    case Kind::kPosInf:
      return 1;
    case Kind::kFinite:
      break;
  }
  return value_.sign();
}

std::string ExtRational::to_string() const {
  switch (kind_) {
    case Kind::kNegInf:
      return "-inf";
    case Kind::kPosInf:
      return "inf";
    case Kind::kFinite:
      break;
  }
  return value_.to_short_string();
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  using K = ExtRational::Kind;
  if (a.kind_ == K::kFinite && b.kind_ == K::kFinite) {
    return ExtRational(a.value_ + b.value_);
  }
  // Opposite infinities cancel to zero, matching inf - inf = 0.
  if ((a.kind_ == K::kPosInf && b.kind_ == K::kNegInf) ||
      (a.kind_ == K::kNegInf && b.kind_ == K::kPosInf)) {
    return ExtRational(0);
  }
  if (a.kind_ == K::kPosInf || b.kind_ == K::kPosInf) {
    return ExtRational::infinity();
  }
  return ExtRational::neg_infinity();
}

ExtRational ExtRational::operator-() const {
  switch (kind_) {
    case Kind::kNegInf:
      return infinity();
    case Kind::kPosInf:
      return neg_infinity();
    case Kind::kFinite:
      break;
  }
  return ExtRational(-value_);
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) {
  return a + (-b);
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtRational::Kind::kFinite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  if (a.kind_ != ExtRational::Kind::kFinite) {
    return std::strong_ordering::equal;
  }
  return a.value_ <=> b.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtRational& r) {
  return os << r.to_string();
}

}  // namespace ncg
