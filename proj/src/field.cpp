// Copyright 2026 The Authors.
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

#include "detgb/field.hpp"

#include <charconv>
#include <limits>

#include "detgb/error.hpp"

namespace detgb {

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::int64_t p) {
  if (p <= 2 || p >= (std::int64_t{1} << 31) || !is_prime_number(p)) {
    throw Error(ErrorKind::kInvalidArgument,
                "prime field characteristic must be an odd prime below 2^31, got " +
                    std::to_string(p));
  }
  return Field(Kind::kPrime, p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.substr(0, 3) == "fp:") {
    std::int64_t p = 0;
    auto digits = spec.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "bad field specification '" + std::string(spec) + "'");
    }
    return prime(p);
  }
  throw Error(ErrorKind::kInvalidArgument,
              "bad field specification '" + std::string(spec) + "' (expected q or fp:<p>)");
}

std::string Field::spec() const {
  if (kind_ == Kind::kRationals) return "q";
  return "fp:" + std::to_string(characteristic_);
}

std::int64_t Field::reduce(std::int64_t v) const {
  v %= characteristic_;
  return v < 0 ? v + characteristic_ : v;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (kind_ == Kind::kPrime) return Scalar(reduce(v));
  return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (kind_ == Kind::kPrime) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(),
                  static_cast<unsigned long>(characteristic_));
    return Scalar(static_cast<std::int64_t>(r.get_si()));
  }
  return Scalar(mpq_class(v));
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (kind_ == Kind::kPrime) {
    Scalar num = from_integer(v.get_num());
    Scalar den = from_integer(v.get_den());
    if (is_zero(den)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "denominator vanishes in " + spec());
    }
    return div(num, den);
  }
  return Scalar(v);
}

bool Field::is_zero(const Scalar& a) const {
  if (kind_ == Kind::kPrime) return a.residue() == 0;
  return sgn(a.rational()) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (kind_ == Kind::kPrime) return a.residue() == 1;
  return a.rational() == 1;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::kPrime) {
    std::int64_t s = a.residue() + b.residue();
    return Scalar(s >= characteristic_ ? s - characteristic_ : s);
  }
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::kPrime) {
    std::int64_t s = a.residue() - b.residue();
    return Scalar(s < 0 ? s + characteristic_ : s);
  }
  return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::kPrime) {
    return Scalar((a.residue() * b.residue()) % characteristic_);
  }
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::kPrime) {
    return Scalar(a.residue() == 0 ? 0 : characteristic_ - a.residue());
  }
  return Scalar(mpq_class(-a.rational()));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) {
    throw Error(ErrorKind::kInvalidArgument, "division by zero");
  }
  if (kind_ == Kind::kRationals) {
    return Scalar(mpq_class(1 / a.rational()));
  }
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = characteristic_, new_r = a.residue();
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return Scalar(reduce(t));
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == Kind::kPrime) {
    std::int64_t v = a.residue();
    if (v > characteristic_ / 2) v -= characteristic_;
    return std::to_string(v);
  }
  return a.rational().get_str();
}

bool Field::is_negative(const Scalar& a) const {
  if (kind_ == Kind::kPrime) return a.residue() > characteristic_ / 2;
  return sgn(a.rational()) < 0;
}

}  // namespace detgb
